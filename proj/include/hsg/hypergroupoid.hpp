#ifndef HSG_HYPERGROUPOID_HPP_
#define HSG_HYPERGROUPOID_HPP_

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "hsg/errors.hpp"
#include "hsg/subset.hpp"

namespace hsg {

// A finite hypergroupoid: a carrier {0, ..., n-1} with an n x n table of
// nonempty subsets. Cell (a, b) is the hyperoperation value of a and b.
// Immutable after construction; all operations on it are pure functions.
class Hypergroupoid {
 public:
  // Table is row-major: cell (a, b) at index a * order + b. Throws
  // validation_error on empty cells, out-of-range cell contents, or a table
  // whose size does not match the order.
  Hypergroupoid(int order, std::vector<Subset> table);

  int order() const { return order_; }
  Subset cell(int a, int b) const { return table_[a * order_ + b]; }
  Subset full_set() const { return Subset::full(order_); }
  const std::vector<Subset>& cells() const { return table_; }

  friend bool operator==(const Hypergroupoid&, const Hypergroupoid&) = default;

 private:
  int order_;
  std::vector<Subset> table_;
};

// A violated instance of the hypersemigroup condition:
// {x} * (y o z) != (x o y) * {z}.
struct AssociativityWitness {
  int x;
  int y;
  int z;
  Subset lhs;
  Subset rhs;
};

// The induced product on nonempty subsets: the union of cell (a, b) over all
// a in A, b in B. Throws domain_error if either operand is empty.
Subset subset_product(const Hypergroupoid& h, Subset a, Subset b);

// First violated instance in lexicographic (x, y, z) order, or nullopt if the
// table is a hypersemigroup.
std::optional<AssociativityWitness> associativity_witness(
    const Hypergroupoid& h);

bool is_associative(const Hypergroupoid& h);

// Left fold of subset_product over the list. Association order is immaterial
// on hypersemigroups, so the chain value is well-defined. Throws
// precondition_error on non-associative tables, domain_error on an empty list
// or empty entries.
Subset product_chain(const Hypergroupoid& h, std::span<const Subset> subsets);
Subset product_chain(const Hypergroupoid& h,
                     std::initializer_list<Subset> subsets);

namespace detail {

// Product without the nonempty checks; empty operands yield the empty set.
inline Subset product_unchecked(const Hypergroupoid& h, Subset a, Subset b) {
  Subset acc;
  for (int x : a) {
    for (int y : b) {
      acc |= h.cell(x, y);
    }
  }
  return acc;
}

inline Subset chain_unchecked(const Hypergroupoid& h,
                              std::span<const Subset> subsets) {
  Subset acc = subsets.front();
  for (std::size_t i = 1; i < subsets.size(); ++i) {
    acc = product_unchecked(h, acc, subsets[i]);
  }
  return acc;
}

// {x} * H * {x} for a single element, the workhorse of regularity checks.
inline Subset element_chain(const Hypergroupoid& h, int x) {
  Subset mid = product_unchecked(h, Subset::single(x), h.full_set());
  return product_unchecked(h, mid, Subset::single(x));
}

void require_nonempty(Subset s, const char* what);
void require_in_range(const Hypergroupoid& h, Subset s, const char* what);
void require_associative(const Hypergroupoid& h, const char* what);

}  // namespace detail

}  // namespace hsg

#endif  // HSG_HYPERGROUPOID_HPP_
