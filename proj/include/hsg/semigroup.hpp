#ifndef HSG_SEMIGROUP_HPP_
#define HSG_SEMIGROUP_HPP_

#include <optional>
#include <vector>

#include "hsg/hypergroupoid.hpp"

namespace hsg {

// A plain finite magma/semigroup given by an element-valued multiplication
// table. Every predicate here is computed element-wise from the classical
// definitions, deliberately not routing through the power-set product, so the
// class can serve as an independent cross-check for singleton-celled
// hypergroupoids.
class ClassicalSemigroup {
 public:
  // table is row-major, table[a * order + b] = a . b.
  ClassicalSemigroup(int order, std::vector<int> table);

  int order() const { return order_; }
  int times(int a, int b) const { return table_[a * order_ + b]; }

  bool associative() const;

  // {a . b : a in A, b in B}, computed from the element table.
  Subset set_product(Subset a, Subset b) const;

  // Classical definitions: S A in A, A S in A, B S B in B elementwise,
  // (Q S) n (S Q) in Q, A A = A.
  bool is_left_ideal(Subset a) const;
  bool is_right_ideal(Subset a) const;
  bool is_ideal(Subset a) const;
  bool is_bi_ideal(Subset b) const;
  bool is_quasi_ideal(Subset q) const;
  bool is_idempotent(Subset a) const;

  // Von Neumann regularity: every a has some x with a = a.x.a.
  bool is_regular() const;

  // A u AS and A u SA.
  Subset right_generated(Subset a) const;
  Subset left_generated(Subset a) const;

 private:
  int order_;
  std::vector<int> table_;
};

// The classical multiplication table of a singleton-celled hypergroupoid, or
// nullopt if some cell has more than one element.
std::optional<ClassicalSemigroup> as_semigroup(const Hypergroupoid& h);

}  // namespace hsg

#endif  // HSG_SEMIGROUP_HPP_
