#include "hsg/semigroup.hpp"

#include <string>

namespace hsg {

ClassicalSemigroup::ClassicalSemigroup(int order, std::vector<int> table)
    : order_(order), table_(std::move(table)) {
  if (order < 1 || order > order_cap) {
    throw validation_error("semigroup order must be between 1 and " +
                           std::to_string(order_cap));
  }
  if (table_.size() != static_cast<std::size_t>(order) * order) {
    throw validation_error("semigroup table size does not match order");
  }
  for (int v : table_) {
    if (v < 0 || v >= order) {
      throw validation_error("semigroup table entry out of range");
    }
  }
}

bool ClassicalSemigroup::associative() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      for (int c = 0; c < order_; ++c) {
        if (times(times(a, b), c) != times(a, times(b, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

Subset ClassicalSemigroup::set_product(Subset a, Subset b) const {
  Subset out;
  for (int x : a) {
    for (int y : b) {
      out |= Subset::single(times(x, y));
    }
  }
  return out;
}

bool ClassicalSemigroup::is_left_ideal(Subset a) const {
  for (int s = 0; s < order_; ++s) {
    for (int x : a) {
      if (!a.contains(times(s, x))) return false;
    }
  }
  return true;
}

bool ClassicalSemigroup::is_right_ideal(Subset a) const {
  for (int x : a) {
    for (int s = 0; s < order_; ++s) {
      if (!a.contains(times(x, s))) return false;
    }
  }
  return true;
}

bool ClassicalSemigroup::is_ideal(Subset a) const {
  return is_left_ideal(a) && is_right_ideal(a);
}

bool ClassicalSemigroup::is_bi_ideal(Subset b) const {
  for (int x : b) {
    for (int s = 0; s < order_; ++s) {
      for (int y : b) {
        if (!b.contains(times(times(x, s), y))) return false;
      }
    }
  }
  return true;
}

bool ClassicalSemigroup::is_quasi_ideal(Subset q) const {
  Subset qs = set_product(q, Subset::full(order_));
  Subset sq = set_product(Subset::full(order_), q);
  return (qs & sq).subset_of(q);
}

bool ClassicalSemigroup::is_idempotent(Subset a) const {
  return set_product(a, a) == a;
}

bool ClassicalSemigroup::is_regular() const {
  for (int a = 0; a < order_; ++a) {
    bool found = false;
    for (int x = 0; x < order_ && !found; ++x) {
      found = times(times(a, x), a) == a;
    }
    if (!found) return false;
  }
  return true;
}

Subset ClassicalSemigroup::right_generated(Subset a) const {
  return a | set_product(a, Subset::full(order_));
}

Subset ClassicalSemigroup::left_generated(Subset a) const {
  return a | set_product(Subset::full(order_), a);
}

std::optional<ClassicalSemigroup> as_semigroup(const Hypergroupoid& h) {
  const int n = h.order();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Subset c = h.cell(a, b);
      if (c.count() != 1) return std::nullopt;
      table[a * n + b] = c.min_element();
    }
  }
  return ClassicalSemigroup(n, std::move(table));
}

}  // namespace hsg
