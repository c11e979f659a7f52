#ifndef HSG_SUBSET_HPP_
#define HSG_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace hsg {

// Largest supported carrier. Every subset fits one 16-bit word, so union,
// intersection and containment are single instructions.
inline constexpr int order_cap = 16;

// A subset of the carrier {0, ..., n-1}, stored as a bit mask: bit i is set
// iff element i is present. Empty and nonempty subsets are both representable;
// operations defined only on nonempty sets check for themselves.
class Subset {
 public:
  constexpr Subset() = default;

  constexpr Subset(std::initializer_list<int> elems) {
    for (int e : elems) {
      bits_ = static_cast<std::uint16_t>(bits_ | (1u << e));
    }
  }

  static constexpr Subset from_bits(std::uint16_t bits) {
    Subset s;
    s.bits_ = bits;
    return s;
  }

  static constexpr Subset single(int element) {
    return from_bits(static_cast<std::uint16_t>(1u << element));
  }

  // The full carrier {0, ..., order-1}.
  static constexpr Subset full(int order) {
    return from_bits(static_cast<std::uint16_t>((1u << order) - 1u));
  }

  constexpr std::uint16_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int element) const {
    return (bits_ >> element) & 1u;
  }
  constexpr bool subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  // Least element; only meaningful on nonempty subsets.
  constexpr int min_element() const { return std::countr_zero(bits_); }

  constexpr Subset operator|(Subset o) const {
    return from_bits(bits_ | o.bits_);
  }
  constexpr Subset operator&(Subset o) const {
    return from_bits(bits_ & o.bits_);
  }
  constexpr Subset& operator|=(Subset o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr Subset& operator&=(Subset o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend constexpr bool operator==(Subset, Subset) = default;

  // Iterates the elements in ascending order.
  class const_iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    constexpr const_iterator() = default;
    constexpr explicit const_iterator(std::uint16_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr const_iterator& operator++() {
      rest_ &= static_cast<std::uint16_t>(rest_ - 1);
      return *this;
    }
    constexpr const_iterator operator++(int) {
      const_iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(const_iterator, const_iterator) = default;

   private:
    std::uint16_t rest_ = 0;
  };

  constexpr const_iterator begin() const { return const_iterator(bits_); }
  constexpr const_iterator end() const { return const_iterator(0); }

  // Renders as "{0,2}"; the empty set as "{}".
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : *this) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    out += '}';
    return out;
  }

 private:
  std::uint16_t bits_ = 0;
};

}  // namespace hsg

#endif  // HSG_SUBSET_HPP_
