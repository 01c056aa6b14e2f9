#include "a3b/angle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

namespace a3b {

namespace {

const Rat kHalf = frac(1, 2);
const Rat kSixth = frac(1, 6);

// Scoped change of the default precision of VarReal.
class DigitsGuard {
 public:
  explicit DigitsGuard(int digits) : saved_(VarReal::default_precision()) {
    VarReal::default_precision(digits);
  }
  ~DigitsGuard() { VarReal::default_precision(saved_); }
  DigitsGuard(const DigitsGuard&) = delete;
  DigitsGuard& operator=(const DigitsGuard&) = delete;

 private:
  unsigned saved_;
};

void require_folded(const Rat& x) {
  if (x < 0 || x > kHalf) {
    throw std::domain_error("sine_product_equal: argument " + x.str() + " outside [0, 1/2]");
  }
}

std::pair<Rat, Rat> sorted_pair(const Rat& a, const Rat& b) {
  return a <= b ? std::pair{a, b} : std::pair{b, a};
}

// {p1, p2} = {1/6, theta} and {q1, q2} = {theta/2, 1/2 - theta/2}, 0 < theta <= 1/2.
std::optional<Rat> theta_family(const std::pair<Rat, Rat>& p, const std::pair<Rat, Rat>& q) {
  for (int pick = 0; pick < 2; ++pick) {
    const Rat& sixth = pick == 0 ? p.first : p.second;
    const Rat& theta = pick == 0 ? p.second : p.first;
    if (sixth != kSixth || theta <= 0 || theta > kHalf) continue;
    if (sorted_pair(theta / 2, kHalf - theta / 2) == q) return theta;
  }
  return std::nullopt;
}

}  // namespace

RationalAngle::RationalAngle(const BigInt& n, const BigInt& d) {
  if (d == 0) throw std::domain_error("RationalAngle: zero denominator");
  v_ = BigRational(n, d);
}

RationalAngle RationalAngle::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("RationalAngle::parse: empty integer");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("RationalAngle::parse: bad integer");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("RationalAngle::parse: bad integer '" + std::string(s) + "'");
      }
    }
    return BigInt(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return RationalAngle(parse_int(text), BigInt(1));
  return RationalAngle(parse_int(trim(text.substr(0, slash))), parse_int(trim(text.substr(slash + 1))));
}

RationalAngle& RationalAngle::operator/=(const RationalAngle& o) {
  if (o.v_ == 0) throw std::domain_error("RationalAngle: division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt RationalAngle::floor() const {
  BigInt n = num();
  BigInt d = den();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

double RationalAngle::to_double() const { return static_cast<double>(to_real()); }

Real RationalAngle::to_real() const { return Real(num()) / Real(den()); }

std::string RationalAngle::str() const {
  if (den() == 1) return num().str();
  return num().str() + "/" + den().str();
}

BigInt lcm_big(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt g = boost::multiprecision::gcd(a, b);
  BigInt l = a / g * b;
  return l < 0 ? BigInt(-l) : l;
}

FoldedSine fold_sine(const RationalAngle& x) {
  Rat r = x - Rat((x / 2).floor(), BigInt(1)) * 2;  // in [0, 2)
  FoldedSine out;
  if (r <= kHalf) {
    out.folded = r;
    out.sign = 1;
  } else if (r <= 1) {
    out.folded = Rat(1) - r;
    out.sign = 1;
  } else if (r <= frac(3, 2)) {
    out.folded = r - 1;
    out.sign = -1;
  } else {
    out.folded = Rat(2) - r;
    out.sign = -1;
  }
  if (out.folded.is_zero()) out.sign = 0;
  return out;
}

VarReal numeric_value(const RationalAngle& x, int precision_digits) {
  if (precision_digits < 15) throw std::domain_error("numeric_value: precision below 15 digits");
  DigitsGuard guard(precision_digits + 5);
  VarReal pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  VarReal out = pi * VarReal(x.num()) / VarReal(x.den());
  return out;
}

Real sin_pi(const RationalAngle& x) {
  FoldedSine fs = fold_sine(x);
  if (fs.sign == 0) return Real(0);
  Real v = boost::multiprecision::sin(boost::math::constants::pi<Real>() * fs.folded.to_real());
  return fs.sign < 0 ? Real(-v) : v;
}

Real cos_pi(const RationalAngle& x) { return sin_pi(frac(1, 2) - x); }

const std::array<std::array<RationalAngle, 4>, 15>& sporadic_sine_table() {
  static const std::array<std::array<RationalAngle, 4>, 15> table = {{
      {frac(1, 21), frac(8, 21), frac(1, 14), frac(3, 14)},
      {frac(1, 14), frac(5, 14), frac(2, 21), frac(5, 21)},
      {frac(4, 21), frac(10, 21), frac(3, 14), frac(5, 14)},
      {frac(1, 20), frac(9, 20), frac(1, 15), frac(4, 15)},
      {frac(2, 15), frac(7, 15), frac(3, 20), frac(7, 20)},
      {frac(1, 30), frac(3, 10), frac(1, 15), frac(2, 15)},
      {frac(1, 15), frac(7, 15), frac(1, 10), frac(7, 30)},
      {frac(1, 10), frac(13, 30), frac(2, 15), frac(4, 15)},
      {frac(4, 15), frac(7, 15), frac(3, 10), frac(11, 30)},
      {frac(1, 30), frac(11, 30), frac(1, 10), frac(1, 10)},
      {frac(7, 30), frac(13, 30), frac(3, 10), frac(3, 10)},
      {frac(1, 15), frac(4, 15), frac(1, 10), frac(1, 6)},
      {frac(2, 15), frac(7, 15), frac(1, 6), frac(3, 10)},
      {frac(1, 12), frac(5, 12), frac(1, 10), frac(3, 10)},
      {frac(1, 10), frac(3, 10), frac(1, 6), frac(1, 6)},
  }};
  return table;
}

std::optional<SineMatch> match_sine_product(const RationalAngle& x1, const RationalAngle& x2,
                                            const RationalAngle& x3, const RationalAngle& x4) {
  require_folded(x1);
  require_folded(x2);
  require_folded(x3);
  require_folded(x4);
  const bool left_zero = x1.is_zero() || x2.is_zero();
  const bool right_zero = x3.is_zero() || x4.is_zero();
  if (left_zero || right_zero) {
    if (left_zero && right_zero) return SineMatch{1, -1, std::nullopt};
    return std::nullopt;
  }
  auto p = sorted_pair(x1, x2);
  auto q = sorted_pair(x3, x4);
  if (p == q) return SineMatch{2, -1, std::nullopt};
  if (auto t = theta_family(p, q)) return SineMatch{3, -1, *t};
  if (auto t = theta_family(q, p)) return SineMatch{3, -1, *t};
  const auto& table = sporadic_sine_table();
  for (int row = 0; row < static_cast<int>(table.size()); ++row) {
    auto lhs = sorted_pair(table[row][0], table[row][1]);
    auto rhs = sorted_pair(table[row][2], table[row][3]);
    if ((p == lhs && q == rhs) || (p == rhs && q == lhs)) return SineMatch{4, row, std::nullopt};
  }
  return std::nullopt;
}

VarReal sine_product_gap(const RationalAngle& x1, const RationalAngle& x2,
                         const RationalAngle& x3, const RationalAngle& x4, int precision_digits) {
  DigitsGuard guard(precision_digits + 5);
  auto s = [&](const Rat& x) { return VarReal(boost::multiprecision::sin(numeric_value(x, precision_digits))); };
  return VarReal(boost::multiprecision::abs(s(x1) * s(x2) - s(x3) * s(x4)));
}

bool sine_product_equal(const RationalAngle& x1, const RationalAngle& x2,
                        const RationalAngle& x3, const RationalAngle& x4) {
  if (!match_sine_product(x1, x2, x3, x4)) return false;
  if (sine_product_gap(x1, x2, x3, x4, kWorkingDigits) >= VarReal("1e-30")) {
    throw std::logic_error("sine_product_equal: exact match not confirmed numerically");
  }
  return true;
}

SineSweepReport sweep_sine_products(int den_max, int digits, int samples_per_den, std::uint64_t seed) {
  if (den_max < 1) throw std::invalid_argument("sweep_sine_products: den_max must be positive");
  if (digits < 20) throw std::invalid_argument("sweep_sine_products: need at least 20 digits");
  SineSweepReport rep;
  rep.den_max = den_max;
  rep.digits = digits;
  std::mt19937_64 rng(seed);
  DigitsGuard guard(digits + 10);
  VarReal pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  const VarReal eps = boost::multiprecision::pow(VarReal(10), -(digits - 5));

  struct Pair {
    int i, j;
    VarReal prod;
  };
  auto check = [&](int d, const Pair& p, const Pair& q, bool expect) {
    if (std::gcd(std::gcd(std::gcd(std::gcd(p.i, p.j), q.i), q.j), d) != 1) return;
    bool got = false;
    std::string err;
    try {
      got = sine_product_equal(frac(p.i, d), frac(p.j, d), frac(q.i, d), frac(q.j, d));
    } catch (const std::logic_error& e) {
      err = e.what();
    }
    (expect ? rep.equal_tuples : rep.unequal_tuples) += 1;
    if (got != expect || !err.empty()) {
      rep.mismatches.push_back("(" + std::to_string(p.i) + "," + std::to_string(p.j) + "," + std::to_string(q.i) +
                               "," + std::to_string(q.j) + ")/" + std::to_string(d) +
                               (expect ? " numerically equal" : " numerically unequal") +
                               (err.empty() ? "" : ": " + err));
    }
  };

  for (int d = 1; d <= den_max; ++d) {
    const int top = d / 2;
    std::vector<VarReal> s(top + 1);
    for (int k = 0; k <= top; ++k) s[k] = VarReal(boost::multiprecision::sin(pi * k / d));
    std::vector<Pair> pairs;
    for (int i = 0; i <= top; ++i)
      for (int j = i; j <= top; ++j) pairs.push_back({i, j, VarReal(s[i] * s[j])});
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.prod < y.prod; });
    std::vector<std::size_t> group(pairs.size(), 0);
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      group[k] = group[k - 1] + (pairs[k].prod - pairs[k - 1].prod > eps ? 1 : 0);
    }
    for (std::size_t lo = 0; lo < pairs.size();) {
      std::size_t hi = lo;
      while (hi < pairs.size() && group[hi] == group[lo]) ++hi;
      for (std::size_t x = lo; x < hi; ++x)
        for (std::size_t y = lo; y < hi; ++y) {
          check(d, pairs[x], pairs[y], true);
          // Swapped order inside each pair.
          check(d, {pairs[x].j, pairs[x].i, pairs[x].prod}, pairs[y], true);
        }
      lo = hi;
    }
    if (group.back() == 0) continue;
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    for (int n = 0; n < samples_per_den;) {
      std::size_t x = pick(rng), y = pick(rng);
      if (group[x] == group[y]) continue;
      check(d, pairs[x], pairs[y], false);
      ++n;
    }
  }
  return rep;
}

}  // namespace a3b

std::size_t std::hash<a3b::RationalAngle>::operator()(const a3b::RationalAngle& a) const noexcept {
  return std::hash<std::string>()(a.str());
}
