#include "hsg/hypergroupoid.hpp"

#include <string>

namespace hsg {

Hypergroupoid::Hypergroupoid(int order, std::vector<Subset> table)
    : order_(order), table_(std::move(table)) {
  if (order < 1 || order > order_cap) {
    throw validation_error("order must be between 1 and " +
                           std::to_string(order_cap) + ", got " +
                           std::to_string(order));
  }
  if (table_.size() != static_cast<std::size_t>(order) * order) {
    throw validation_error("table has " + std::to_string(table_.size()) +
                           " cells, expected " +
                           std::to_string(order * order));
  }
  Subset carrier = Subset::full(order);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      Subset c = table_[a * order + b];
      if (c.empty()) {
        throw validation_error("empty cell (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
      }
      if (!c.subset_of(carrier)) {
        throw validation_error("cell (" + std::to_string(a) + "," +
                               std::to_string(b) +
                               ") contains elements outside the carrier");
      }
    }
  }
}

namespace detail {

void require_nonempty(Subset s, const char* what) {
  if (s.empty()) {
    throw domain_error(std::string(what) +
                       ": operand is empty, but the operation is defined "
                       "only on nonempty subsets");
  }
}

void require_in_range(const Hypergroupoid& h, Subset s, const char* what) {
  if (!s.subset_of(h.full_set())) {
    throw domain_error(std::string(what) +
                       ": operand contains elements outside the carrier");
  }
}

void require_associative(const Hypergroupoid& h, const char* what) {
  if (auto w = associativity_witness(h)) {
    throw precondition_error(
        std::string(what) + ": table is not a hypersemigroup, condition "
        "fails at (x,y,z)=(" + std::to_string(w->x) + "," +
        std::to_string(w->y) + "," + std::to_string(w->z) + ")");
  }
}

}  // namespace detail

Subset subset_product(const Hypergroupoid& h, Subset a, Subset b) {
  detail::require_nonempty(a, "subset_product");
  detail::require_nonempty(b, "subset_product");
  detail::require_in_range(h, a, "subset_product");
  detail::require_in_range(h, b, "subset_product");
  return detail::product_unchecked(h, a, b);
}

std::optional<AssociativityWitness> associativity_witness(
    const Hypergroupoid& h) {
  const int n = h.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        Subset lhs = detail::product_unchecked(h, Subset::single(x),
                                               h.cell(y, z));
        Subset rhs = detail::product_unchecked(h, h.cell(x, y),
                                               Subset::single(z));
        if (lhs != rhs) {
          return AssociativityWitness{x, y, z, lhs, rhs};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_associative(const Hypergroupoid& h) {
  return !associativity_witness(h).has_value();
}

Subset product_chain(const Hypergroupoid& h, std::span<const Subset> subsets) {
  if (subsets.empty()) {
    throw domain_error("product_chain: list must not be empty");
  }
  for (Subset s : subsets) {
    detail::require_nonempty(s, "product_chain");
    detail::require_in_range(h, s, "product_chain");
  }
  detail::require_associative(h, "product_chain");
  return detail::chain_unchecked(h, subsets);
}

Subset product_chain(const Hypergroupoid& h,
                     std::initializer_list<Subset> subsets) {
  return product_chain(h, std::span<const Subset>(subsets.begin(),
                                                  subsets.size()));
}

}  // namespace hsg
