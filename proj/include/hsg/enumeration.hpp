#ifndef HSG_ENUMERATION_HPP_
#define HSG_ENUMERATION_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "hsg/hypergroupoid.hpp"

namespace hsg {

enum class EnumerationFilter { all, associative_only };

// What to enumerate. An empty cell_alphabet means every nonempty subset of
// the carrier. The full alphabet is limited to order <= 4 (the search space
// is (2^n - 1)^(n^2)); restricted alphabets are allowed up to order_cap.
// Canonicalization relabels through all n! permutations, so it is likewise
// limited to order <= 4.
struct EnumerationSpec {
  int order = 1;
  EnumerationFilter filter = EnumerationFilter::all;
  bool canonicalize = false;
  std::vector<Subset> cell_alphabet;
};

// Counts over the visited complete tables. With filter == associative_only,
// pruning means only associative tables complete, so total_tables equals
// associative_count. With canonicalize, only canonical representatives are
// counted and visited.
struct EnumerationStats {
  std::uint64_t total_tables = 0;
  std::uint64_t associative_count = 0;
  std::uint64_t regular_count = 0;  // associative and regular
  std::chrono::duration<double> elapsed{0};

  EnumerationStats& merge(const EnumerationStats& o) {
    total_tables += o.total_tables;
    associative_count += o.associative_count;
    regular_count += o.regular_count;
    elapsed += o.elapsed;
    return *this;
  }
};

// Return false to stop the enumeration early.
using StructureVisitor = std::function<bool(const Hypergroupoid&)>;

// Receives the structure and the index of the search partition it came from
// (partitions are contiguous ranges of the serial visitation order).
using PartitionedVisitor =
    std::function<bool(const Hypergroupoid&, std::size_t)>;

// Visits every complete table matching the spec exactly once, in
// lexicographic cell-filling order (row-major cells, alphabet ascending by
// bit mask). Deterministic: two runs of the same spec visit the same
// sequence. Throws validation_error on an out-of-bounds spec before any
// work.
EnumerationStats enumerate(const EnumerationSpec& spec,
                           const StructureVisitor& visit);

// Same set of structures, fanned out over `workers` threads. The search tree
// is partitioned by the first filled cells; partitions are independent tasks
// and stats merge associatively. The visitor must be safe to call
// concurrently. When a visitor returns false, partitions later in visitation
// order are abandoned while earlier ones complete, so "first hit in
// visitation order" can be recovered from the partition indices.
EnumerationStats enumerate_parallel(const EnumerationSpec& spec,
                                    const PartitionedVisitor& visit,
                                    int workers);

// Incremental associativity filter for tables filled in row-major order:
// cells[0..newly_filled] are filled. Returns false iff some associativity
// instance whose cells are all filled, and which involves the newly filled
// cell, is violated. Never cuts a table that still extends to an associative
// completion.
bool prune_check(const std::vector<Subset>& cells, int order,
                 int newly_filled);

// The lexicographically least relabeling of the table (all n! permutations
// of the carrier, applied to both coordinates and cell contents). Idempotent,
// and constant on isomorphism classes. Requires order <= 4.
Hypergroupoid canonical_form(const Hypergroupoid& h);

}  // namespace hsg

#endif  // HSG_ENUMERATION_HPP_
