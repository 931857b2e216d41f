#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace exlen {

/// A set of indecomposables standing for the additive, summand-closed
/// subcategory add(members). Bit i is the i-th declared indecomposable.
class Subcat {
 public:
  static constexpr std::size_t kMaxIndecs = 64;

  constexpr Subcat() = default;
  constexpr explicit Subcat(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subcat single(std::size_t i) { return Subcat{std::uint64_t{1} << i}; }
  static constexpr Subcat full(std::size_t n) {
    return Subcat{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(Subcat o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(Subcat o) const { return subset_of(o) && bits_ != o.bits_; }
  constexpr bool intersects(Subcat o) const { return (bits_ & o.bits_) != 0; }

  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr Subcat operator|(Subcat o) const { return Subcat{bits_ | o.bits_}; }
  constexpr Subcat operator&(Subcat o) const { return Subcat{bits_ & o.bits_}; }
  constexpr Subcat operator-(Subcat o) const { return Subcat{bits_ & ~o.bits_}; }
  constexpr Subcat& operator|=(Subcat o) { bits_ |= o.bits_; return *this; }
  constexpr Subcat& operator&=(Subcat o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const Subcat&) const = default;

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(static_cast<std::size_t>(std::countr_zero(b)));
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order: by size, then lexicographically on the member index list
/// (declaration order). Deterministic across runs and implementations.
inline bool canonical_less(Subcat x, Subcat y) {
  if (x.size() != y.size()) return x.size() < y.size();
  std::uint64_t a = x.bits(), b = y.bits();
  while (a != 0 && b != 0) {
    int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

struct SubcatHash {
  std::size_t operator()(Subcat s) const noexcept {
    std::uint64_t x = s.bits();
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

}  // namespace exlen
