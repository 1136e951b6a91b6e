#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hilbtan {

inline constexpr std::size_t kMaxVariables = 24;
static_assert(kMaxVariables <= 32, "support mask is 32 bits");

struct Bidegree {
  int x = 0;
  int y = 0;

  int total() const { return x + y; }
  Bidegree operator+(Bidegree o) const { return {x + o.x, y + o.y}; }
  Bidegree operator-(Bidegree o) const { return {x - o.x, y - o.y}; }
  Bidegree operator-() const { return {-x, -y}; }
  bool nonnegative() const { return x >= 0 && y >= 0; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  std::string to_string() const;
};

/// Exponent vector with a fixed inline capacity. Exponents are 16-bit;
/// multiplication throws std::overflow_error instead of wrapping.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  static Monomial from_exponents(std::span<const int> exps);
  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return n_; }
  int operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, int e);
  int degree() const { return static_cast<int>(degree_); }
  /// Bit i set iff variable i occurs.
  std::uint32_t support_mask() const { return mask_; }
  std::vector<int> exponents() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }
  Monomial operator*(const Monomial& other) const;
  /// Precondition: divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const;

 private:
  void refresh();

  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
  std::uint32_t mask_ = 0;
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace hilbtan
