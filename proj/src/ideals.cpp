#include "hsg/ideals.hpp"

namespace hsg {

const char* to_string(IdealClass c) {
  switch (c) {
    case IdealClass::left: return "left";
    case IdealClass::right: return "right";
    case IdealClass::two_sided: return "ideal";
    case IdealClass::bi: return "bi";
    case IdealClass::quasi: return "quasi";
    case IdealClass::arbitrary_subset: return "subset";
  }
  return "?";
}

namespace {

void check_operand(const Hypergroupoid& h, Subset a, const char* what) {
  detail::require_nonempty(a, what);
  detail::require_in_range(h, a, what);
}

}  // namespace

bool is_left_ideal(const Hypergroupoid& h, Subset a) {
  check_operand(h, a, "is_left_ideal");
  return detail::left_ideal_unchecked(h, a);
}

bool is_right_ideal(const Hypergroupoid& h, Subset a) {
  check_operand(h, a, "is_right_ideal");
  return detail::right_ideal_unchecked(h, a);
}

bool is_ideal(const Hypergroupoid& h, Subset a) {
  check_operand(h, a, "is_ideal");
  return detail::left_ideal_unchecked(h, a) &&
         detail::right_ideal_unchecked(h, a);
}

bool is_bi_ideal(const Hypergroupoid& h, Subset b) {
  check_operand(h, b, "is_bi_ideal");
  detail::require_associative(h, "is_bi_ideal");
  return detail::bi_ideal_unchecked(h, b);
}

bool is_quasi_ideal(const Hypergroupoid& h, Subset q) {
  check_operand(h, q, "is_quasi_ideal");
  return detail::quasi_ideal_unchecked(h, q);
}

bool is_idempotent(const Hypergroupoid& h, Subset a) {
  check_operand(h, a, "is_idempotent");
  return detail::idempotent_unchecked(h, a);
}

namespace detail {

bool satisfies_unchecked(const Hypergroupoid& h, IdealClass c, Subset a) {
  switch (c) {
    case IdealClass::left: return left_ideal_unchecked(h, a);
    case IdealClass::right: return right_ideal_unchecked(h, a);
    case IdealClass::two_sided:
      return left_ideal_unchecked(h, a) && right_ideal_unchecked(h, a);
    case IdealClass::bi: return bi_ideal_unchecked(h, a);
    case IdealClass::quasi: return quasi_ideal_unchecked(h, a);
    case IdealClass::arbitrary_subset: return true;
  }
  return false;
}

GeneratedIdeals generated_ideals_unchecked(const Hypergroupoid& h,
                                           Subset seed) {
  Subset full = h.full_set();
  Subset ah = product_unchecked(h, seed, full);
  Subset ha = product_unchecked(h, full, seed);
  Subset hah = product_unchecked(h, ha, full);
  return GeneratedIdeals{seed, seed | ah, seed | ha, seed | ha | ah | hah};
}

}  // namespace detail

bool satisfies(const Hypergroupoid& h, IdealClass c, Subset a) {
  check_operand(h, a, "satisfies");
  if (c == IdealClass::bi) {
    detail::require_associative(h, "satisfies(bi)");
  }
  return detail::satisfies_unchecked(h, c, a);
}

std::vector<Subset> subsets_of_sort(const Hypergroupoid& h, IdealClass c) {
  if (c == IdealClass::bi) {
    detail::require_associative(h, "subsets_of_sort(bi)");
  }
  std::vector<Subset> out;
  const std::uint16_t all = h.full_set().bits();
  for (std::uint16_t m = 1; m <= all; ++m) {
    Subset s = Subset::from_bits(m);
    if (detail::satisfies_unchecked(h, c, s)) {
      out.push_back(s);
    }
  }
  return out;
}

GeneratedIdeals generated_ideals(const Hypergroupoid& h, Subset seed) {
  check_operand(h, seed, "generated_ideals");
  detail::require_associative(h, "generated_ideals");
  return detail::generated_ideals_unchecked(h, seed);
}

Subset nonempty_intersection_witness(const Hypergroupoid& h, Subset right_a,
                                     Subset left_b) {
  check_operand(h, right_a, "nonempty_intersection_witness");
  check_operand(h, left_b, "nonempty_intersection_witness");
  if (!detail::right_ideal_unchecked(h, right_a)) {
    throw precondition_error(
        "nonempty_intersection_witness: first operand is not a right ideal");
  }
  if (!detail::left_ideal_unchecked(h, left_b)) {
    throw precondition_error(
        "nonempty_intersection_witness: second operand is not a left ideal");
  }
  return right_a & left_b;
}

Subset bi_ideal_from_product(const Hypergroupoid& h, Subset c, Subset d,
                             ProductSide side) {
  check_operand(h, c, "bi_ideal_from_product");
  check_operand(h, d, "bi_ideal_from_product");
  detail::require_associative(h, "bi_ideal_from_product");
  if (side == ProductSide::right && !detail::right_ideal_unchecked(h, c)) {
    throw precondition_error(
        "bi_ideal_from_product: side=right requires C to be a right ideal");
  }
  if (side == ProductSide::left && !detail::left_ideal_unchecked(h, d)) {
    throw precondition_error(
        "bi_ideal_from_product: side=left requires D to be a left ideal");
  }
  return detail::product_unchecked(h, c, d);
}

}  // namespace hsg
