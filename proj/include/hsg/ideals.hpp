#ifndef HSG_IDEALS_HPP_
#define HSG_IDEALS_HPP_

#include <vector>

#include "hsg/hypergroupoid.hpp"

namespace hsg {

// The subset classes the toolkit can quantify over. `two_sided` is an ideal in
// the plain sense (left and right); `arbitrary_subset` is any nonempty subset.
enum class IdealClass { left, right, two_sided, bi, quasi, arbitrary_subset };

const char* to_string(IdealClass c);

// H * A is contained in A. Defined on any hypergroupoid; A must be nonempty.
bool is_left_ideal(const Hypergroupoid& h, Subset a);

// A * H is contained in A.
bool is_right_ideal(const Hypergroupoid& h, Subset a);

// Both a left and a right ideal.
bool is_ideal(const Hypergroupoid& h, Subset a);

// B * H * B is contained in B. Requires a hypersemigroup, since the chain
// product is only canonical under associativity.
bool is_bi_ideal(const Hypergroupoid& h, Subset b);

// (Q * H) n (H * Q) is contained in Q.
bool is_quasi_ideal(const Hypergroupoid& h, Subset q);

// A * A equals A.
bool is_idempotent(const Hypergroupoid& h, Subset a);

// Whether `a` belongs to the class, for sort-filtered quantification.
bool satisfies(const Hypergroupoid& h, IdealClass c, Subset a);

// All nonempty subsets of the carrier in ascending bit-mask order that
// satisfy the class predicate.
std::vector<Subset> subsets_of_sort(const Hypergroupoid& h, IdealClass c);

// The right ideal, left ideal and ideal generated by a seed subset, from the
// closed formulas R(A) = A u (A*H), L(A) = A u (H*A),
// I(A) = A u (H*A) u (A*H) u (H*A*H).
struct GeneratedIdeals {
  Subset seed;
  Subset right;
  Subset left;
  Subset two_sided;
};

// Requires a hypersemigroup (the closed formulas presuppose one) and a
// nonempty seed. Each result satisfies its ideal predicate.
GeneratedIdeals generated_ideals(const Hypergroupoid& h, Subset seed);

// A n B for a right ideal A and a left ideal B. Every cell (a, b) with a in
// A, b in B lands inside A n B, and cells are nonempty, so the intersection
// never is. Throws precondition_error if the ideal preconditions fail.
Subset nonempty_intersection_witness(const Hypergroupoid& h, Subset right_a,
                                     Subset left_b);

// Which operand of bi_ideal_from_product carries the ideal hypothesis.
enum class ProductSide { left, right };

// C * D, which is a bi-ideal when C is a right ideal (side == right) or D is
// a left ideal (side == left). Requires a hypersemigroup.
Subset bi_ideal_from_product(const Hypergroupoid& h, Subset c, Subset d,
                             ProductSide side);

namespace detail {

inline bool left_ideal_unchecked(const Hypergroupoid& h, Subset a) {
  return product_unchecked(h, h.full_set(), a).subset_of(a);
}

inline bool right_ideal_unchecked(const Hypergroupoid& h, Subset a) {
  return product_unchecked(h, a, h.full_set()).subset_of(a);
}

inline bool bi_ideal_unchecked(const Hypergroupoid& h, Subset b) {
  Subset bh = product_unchecked(h, b, h.full_set());
  return product_unchecked(h, bh, b).subset_of(b);
}

inline bool quasi_ideal_unchecked(const Hypergroupoid& h, Subset q) {
  Subset qh = product_unchecked(h, q, h.full_set());
  Subset hq = product_unchecked(h, h.full_set(), q);
  return (qh & hq).subset_of(q);
}

inline bool idempotent_unchecked(const Hypergroupoid& h, Subset a) {
  return product_unchecked(h, a, a) == a;
}

bool satisfies_unchecked(const Hypergroupoid& h, IdealClass c, Subset a);

GeneratedIdeals generated_ideals_unchecked(const Hypergroupoid& h,
                                           Subset seed);

}  // namespace detail

}  // namespace hsg

#endif  // HSG_IDEALS_HPP_
