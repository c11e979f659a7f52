#ifndef HSG_CONJECTURE_HPP_
#define HSG_CONJECTURE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsg/enumeration.hpp"
#include "hsg/hypergroupoid.hpp"
#include "hsg/ideals.hpp"

namespace hsg {

// A set-valued expression over quantified variables, the full carrier H, the
// induced product, union, intersection, and the generated-ideal operators
// R, L, I.
struct Term {
  enum class Kind {
    variable,
    full_carrier,
    product,
    set_union,
    set_intersection,
    gen_right,
    gen_left,
    gen_two_sided,
  };

  Kind kind{};
  std::string name;            // for variable
  std::vector<Term> children;  // 2 for binary operators, 1 for R/L/I

  friend bool operator==(const Term&, const Term&) = default;
};

// Relations and connectives over terms. Atoms carry their two terms;
// conjunction/disjunction have two children, negation one.
struct Formula {
  enum class Kind {
    subset_atom,  // lhs <= rhs
    equal_atom,   // lhs = rhs
    conjunction,
    disjunction,
    negation,
  };

  Kind kind{};
  std::vector<Term> terms;
  std::vector<Formula> children;

  friend bool operator==(const Formula&, const Formula&) = default;
};

// A universally quantified statement: every variable ranges over the nonempty
// subsets of the structure satisfying its sort predicate.
struct Conjecture {
  std::vector<std::pair<std::string, IdealClass>> variables;
  Formula body;

  friend bool operator==(const Conjecture&, const Conjecture&) = default;
};

// Concrete syntax:
//   forall <v>:<sort>{, <v>:<sort>} : <formula>
// with sorts subset, left, right, ideal, bi, quasi; formula atoms
// `term <= term` and `term = term`; connectives !, &, | (tightest first);
// term operators *, &cap, &cup (tightest first, left-associative); H the
// full-carrier constant; R(t), L(t), I(t) the generated-ideal operators.
// Parentheses group both formulas and terms. Throws parse_error with
// line/column on malformed input, including unbound variables.
Conjecture parse_conjecture(std::string_view text);

// Minimal-parenthesis rendering; parses back to an identical AST.
std::string pretty_print(const Term& t);
std::string pretty_print(const Formula& f);
std::string pretty_print(const Conjecture& c);

// The DSL spelling of a quantifier sort.
const char* sort_name(IdealClass c);

// One relation of the body evaluated under a failing assignment.
struct AtomEvaluation {
  std::string lhs_text;
  std::string rhs_text;
  Subset lhs_value;
  Subset rhs_value;
  bool subset_relation;  // true for <=, false for =
  bool holds;
};

struct Counterexample {
  Hypergroupoid structure;
  std::vector<std::pair<std::string, Subset>> assignment;  // prefix order
  std::vector<AtomEvaluation> atoms;
};

// Checks the conjecture on one structure. Assignments are enumerated in
// lexicographic order (variables left to right, candidate subsets ascending
// by bit mask); the first failing assignment is returned, nullopt if none.
// Requires an associative structure when the body uses R/L/I, chains
// products, or quantifies over the bi sort. Evaluation errors (for instance
// an empty operand reaching *) carry the offending term's text.
std::optional<Counterexample> evaluate(const Hypergroupoid& h,
                                       const Conjecture& c);

struct HuntOptions {
  bool canonicalize = false;
  // Evaluate only on regular structures (for claims stated under a
  // regularity hypothesis).
  bool regular_only = false;
  int workers = 1;
  // Cell alphabet per order; null means every nonempty subset.
  std::function<std::vector<Subset>(int)> alphabet;
};

struct HuntResult {
  std::optional<Counterexample> counterexample;
  EnumerationStats stats;  // merged over all orders searched
};

// Streams the associative-only enumeration over orders 1..max_order and
// returns the first counterexample in visitation order, or exhaustion.
HuntResult hunt(const Conjecture& c, int max_order,
                const HuntOptions& options = {});

}  // namespace hsg

#endif  // HSG_CONJECTURE_HPP_
