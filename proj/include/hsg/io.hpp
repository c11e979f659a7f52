#ifndef HSG_IO_HPP_
#define HSG_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "hsg/hypergroupoid.hpp"

namespace hsg {

// Structure files are JSON objects
//   {"order":2,"table":[[[0],[0]],[[1],[1]]]}
// with an n x n table whose cells are nonempty, strictly ascending lists of
// 0-based element indices below the order.

// Parses and validates one structure. Throws parse_error (with byte offset)
// on malformed JSON and validation_error (naming the offending cell) on a
// structurally invalid table.
Hypergroupoid structure_from_json(std::string_view text);

// The canonical one-line encoding: compact JSON, cells ascending. Stable
// byte-for-byte for a fixed structure.
std::string structure_to_json(const Hypergroupoid& h);

// File variants; load rejects unreadable files, save reports filesystem
// errors. save writes structure_to_json plus a trailing newline.
Hypergroupoid load_structure(const std::filesystem::path& path);
void save_structure(const Hypergroupoid& h,
                    const std::filesystem::path& path);

}  // namespace hsg

#endif  // HSG_IO_HPP_
