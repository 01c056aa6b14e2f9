#pragma once

// Exact angles measured in units of pi, sine folding, and the exact
// decision procedure for sin(x1) sin(x2) = sin(x3) sin(x4).

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace a3b {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::mpfr_float_50;
using VarReal = boost::multiprecision::mpfr_float;

inline constexpr int kWorkingDigits = 50;

// A reduced fraction n/d (d >= 1). Angle values are n/d * pi.
class RationalAngle {
 public:
  RationalAngle() = default;
  RationalAngle(long long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  RationalAngle(const BigInt& n, const BigInt& d);
  explicit RationalAngle(const BigRational& v) : v_(v) {}

  // Accepts "n", "n/d" and "-n/d".
  static RationalAngle parse(std::string_view text);

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }
  const BigRational& value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return den() == 1; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }
  BigInt floor() const;
  RationalAngle abs() const { return v_ < 0 ? RationalAngle(BigRational(-v_)) : *this; }

  double to_double() const;
  Real to_real() const;
  std::string str() const;

  RationalAngle operator-() const { return RationalAngle(BigRational(-v_)); }
  RationalAngle& operator+=(const RationalAngle& o) { v_ += o.v_; return *this; }
  RationalAngle& operator-=(const RationalAngle& o) { v_ -= o.v_; return *this; }
  RationalAngle& operator*=(const RationalAngle& o) { v_ *= o.v_; return *this; }
  RationalAngle& operator/=(const RationalAngle& o);

  friend RationalAngle operator+(RationalAngle a, const RationalAngle& b) { return a += b; }
  friend RationalAngle operator-(RationalAngle a, const RationalAngle& b) { return a -= b; }
  friend RationalAngle operator*(RationalAngle a, const RationalAngle& b) { return a *= b; }
  friend RationalAngle operator/(RationalAngle a, const RationalAngle& b) { return a /= b; }

  friend bool operator==(const RationalAngle& a, const RationalAngle& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const RationalAngle& a, const RationalAngle& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const RationalAngle& a) { return os << a.str(); }

 private:
  BigRational v_;
};

using Rat = RationalAngle;

inline Rat frac(long long n, long long d) { return Rat(BigInt(n), BigInt(d)); }

BigInt lcm_big(const BigInt& a, const BigInt& b);

struct FoldedSine {
  RationalAngle folded;  // in [0, 1/2]
  int sign = 0;          // sin(x) = sign * sin(folded)
};

FoldedSine fold_sine(const RationalAngle& x);

// x * pi to the requested number of decimal digits.
VarReal numeric_value(const RationalAngle& x, int precision_digits);

// sin(x * pi) at working precision.
Real sin_pi(const RationalAngle& x);
Real cos_pi(const RationalAngle& x);

// Which solution class of the sine-product identity a tuple belongs to.
struct SineMatch {
  int solution_class = 0;   // 1 zero factors, 2 equal pairs, 3 theta family, 4 table
  int table_row = -1;       // row of the sporadic table for class 4
  std::optional<RationalAngle> theta;  // parameter for class 3
};

// The 15 sporadic rows (x1, x2, x3, x4) with sin x1 sin x2 = sin x3 sin x4.
const std::array<std::array<RationalAngle, 4>, 15>& sporadic_sine_table();

// Exact classification of sin(x1)sin(x2) = sin(x3)sin(x4), inputs in [0, 1/2].
// Throws std::domain_error for inputs outside [0, 1/2].
std::optional<SineMatch> match_sine_product(const RationalAngle& x1, const RationalAngle& x2,
                                            const RationalAngle& x3, const RationalAngle& x4);

// Exact decision; every positive answer is re-checked numerically and a
// disagreement throws std::logic_error.
bool sine_product_equal(const RationalAngle& x1, const RationalAngle& x2,
                        const RationalAngle& x3, const RationalAngle& x4);

// |sin x1 sin x2 - sin x3 sin x4| at the given precision.
VarReal sine_product_gap(const RationalAngle& x1, const RationalAngle& x2,
                         const RationalAngle& x3, const RationalAngle& x4, int precision_digits);

struct SineSweepReport {
  int den_max = 0;
  int digits = 0;
  std::uint64_t equal_tuples = 0;    // numerically equal, all confirmed exactly
  std::uint64_t unequal_tuples = 0;  // sampled numerically unequal tuples
  std::vector<std::string> mismatches;
  bool pass() const { return mismatches.empty(); }
};

// For each common denominator d <= den_max: every tuple of numerators in
// [0, d/2] with exact denominator d whose two sine products agree to `digits`
// digits must be accepted by sine_product_equal; `samples_per_den` tuples whose
// products differ must be rejected.
SineSweepReport sweep_sine_products(int den_max, int digits = kWorkingDigits, int samples_per_den = 16,
                                    std::uint64_t seed = 1);

}  // namespace a3b

template <>
struct std::hash<a3b::RationalAngle> {
  std::size_t operator()(const a3b::RationalAngle& a) const noexcept;
};
