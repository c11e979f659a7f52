#ifndef HSG_ERRORS_HPP_
#define HSG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hsg {

// Operand outside an operation's domain, e.g. the empty set passed where a
// nonempty subset is required.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// A structural precondition does not hold, e.g. a non-associative table passed
// to an operation defined only on hypersemigroups.
struct precondition_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Malformed input text. `line` and `column` are 1-based; for byte-oriented
// inputs `column` carries the byte offset and `line` is 0.
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, int line_, int column_)
      : std::runtime_error(what), line(line_), column(column_) {}
  int line;
  int column;
};

// Structurally invalid data: bad cells in a structure file, out-of-bounds
// enumeration specs, unbound or ill-sorted conjecture variables.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hsg

#endif  // HSG_ERRORS_HPP_
