#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace avgconn {

/// Largest order for which a VertexSet (one 64-bit word) can hold every vertex.
inline constexpr int kMaxMaskOrder = 64;

/// A subset of {0, ..., 63}, stored as a bitmask. Ordered by its raw bits so
/// it can serve directly as a canonical key.
class VertexSet {
public:
  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  /// The set with the listed members.
  static constexpr VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  static constexpr VertexSet singleton(int v) { return VertexSet{bit(v)}; }

  /// {0, ..., n-1}
  static constexpr VertexSet first(int n) {
    assert(n >= 0 && n <= kMaxMaskOrder);
    return VertexSet{n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }

  /// Lowest member; undefined on the empty set.
  constexpr int lowest() const {
    assert(!empty());
    return std::countr_zero(bits_);
  }
  /// Highest member; undefined on the empty set.
  constexpr int highest() const {
    assert(!empty());
    return 63 - std::countl_zero(bits_);
  }

  constexpr void insert(int v) { bits_ |= bit(v); }
  constexpr void erase(int v) { bits_ &= ~bit(v); }
  constexpr VertexSet with(int v) const { return VertexSet{bits_ | bit(v)}; }
  constexpr VertexSet without(int v) const { return VertexSet{bits_ & ~bit(v)}; }

  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits_ | o.bits_}; }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits_ & o.bits_}; }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet{bits_ & ~o.bits_}; }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const VertexSet&) const = default;

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{}; }

private:
  static constexpr std::uint64_t bit(int v) {
    assert(v >= 0 && v < kMaxMaskOrder);
    return std::uint64_t{1} << v;
  }

  std::uint64_t bits_ = 0;
};

}  // namespace avgconn
