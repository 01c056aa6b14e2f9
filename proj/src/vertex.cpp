#include "a3b/vertex.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace a3b {

namespace {

const char* const kGreek[4] = {"α", "β", "γ", "δ"};
const char kAscii[4] = {'a', 'b', 'c', 'd'};

struct BalanceSearch {
  const std::vector<VertexType>& types;
  const BalanceOptions& opts;
  std::vector<BalanceSolution>& out;
  std::vector<int> counts;
  std::vector<std::array<bool, 4>> covers;  // suffix: some type at index >= i uses the angle
  std::vector<int> min_deg;
  std::vector<int> max_deg;

  bool full() const { return opts.limit && out.size() >= *opts.limit; }

  void run(std::size_t idx, std::array<int, 4> rem, int vrem) {
    if (full()) return;
    int angles_left = rem[0] + rem[1] + rem[2] + rem[3];
    if (angles_left == 0 && vrem == 0) {
      BalanceSolution s;
      for (std::size_t i = 0; i < types.size(); ++i) {
        if (counts[i] > 0) s.multiplicities.emplace_back(types[i], counts[i]);
      }
      out.push_back(std::move(s));
      return;
    }
    if (idx == types.size() || vrem <= 0) return;
    for (int a = 0; a < 4; ++a) {
      if (rem[a] > 0 && !covers[idx][a]) return;
    }
    if (angles_left < vrem * min_deg[idx] || angles_left > vrem * max_deg[idx]) return;
    const VertexType& t = types[idx];
    int cap = vrem;
    for (int a = 0; a < 4; ++a) {
      if (t.e[a] > 0) cap = std::min(cap, rem[a] / t.e[a]);
    }
    for (int n = cap; n >= 0; --n) {
      std::array<int, 4> next = rem;
      for (int a = 0; a < 4; ++a) next[a] -= n * t.e[a];
      counts[idx] = n;
      run(idx + 1, next, vrem - n);
      if (full()) break;
    }
    counts[idx] = 0;
  }
};

}  // namespace

RationalAngle VertexType::sum(const QuadAngles& q) const {
  Rat s(0);
  for (int a = 0; a < 4; ++a) s += q[a] * Rat(e[a]);
  return s;
}

std::string VertexType::str() const {
  std::string s;
  for (int a = 0; a < 4; ++a) {
    if (e[a] == 0) continue;
    s += kGreek[a];
    if (e[a] > 1) s += "^" + std::to_string(e[a]);
  }
  return s.empty() ? "·" : s;
}

std::string VertexType::ascii() const {
  std::string s;
  for (int a = 0; a < 4; ++a) {
    if (e[a] == 0) continue;
    s += kAscii[a];
    if (e[a] > 1) s += std::to_string(e[a]);
  }
  return s;
}

VertexType VertexType::parse(const std::string& text) {
  VertexType v;
  std::size_t i = 0;
  while (i < text.size()) {
    int angle = -1;
    for (int a = 0; a < 4; ++a) {
      std::string g = kGreek[a];
      if (text.compare(i, g.size(), g) == 0) {
        angle = a;
        i += g.size();
        break;
      }
      if (text[i] == kAscii[a]) {
        angle = a;
        ++i;
        break;
      }
    }
    if (angle < 0) throw std::invalid_argument("bad vertex type '" + text + "'");
    if (i < text.size() && text[i] == '^') ++i;
    int n = 0;
    bool digits = false;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      n = n * 10 + (text[i] - '0');
      digits = true;
      ++i;
    }
    v.e[angle] += digits ? n : 1;
  }
  return v;
}

std::vector<VertexType> enumerate_vertex_types(const QuadAngles& q) {
  BigInt d = 1;
  for (const auto& x : q) d = lcm_big(d, x.den());
  std::array<long long, 4> u{};
  for (int a = 0; a < 4; ++a) {
    if (q[a].sign() <= 0) throw std::invalid_argument("enumerate_vertex_types: nonpositive angle");
    u[a] = static_cast<long long>(BigInt(q[a].num() * (d / q[a].den())));
  }
  const long long target = static_cast<long long>(BigInt(2 * d));
  std::vector<VertexType> out;
  for (long long i = 0; i * u[0] <= target; ++i) {
    for (long long j = 0; i * u[0] + j * u[1] <= target; ++j) {
      for (long long k = 0; i * u[0] + j * u[1] + k * u[2] <= target; ++k) {
        long long rest = target - i * u[0] - j * u[1] - k * u[2];
        if (rest % u[3] != 0) continue;
        long long l = rest / u[3];
        if (i + j + k + l < 3 || (i + l) % 2 != 0) continue;
        out.push_back(VertexType{{static_cast<int>(i), static_cast<int>(j), static_cast<int>(k), static_cast<int>(l)}});
      }
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int BalanceSolution::vertex_count() const {
  int n = 0;
  for (const auto& [t, m] : multiplicities) n += m;
  return n;
}

std::array<int, 4> BalanceSolution::angle_counts() const {
  std::array<int, 4> c{};
  for (const auto& [t, m] : multiplicities) {
    for (int a = 0; a < 4; ++a) c[a] += m * t.e[a];
  }
  return c;
}

std::string BalanceSolution::str() const {
  std::string s;
  for (const auto& [t, m] : multiplicities) {
    if (!s.empty()) s += ",";
    s += std::to_string(m) + t.str();
  }
  return s;
}

std::vector<BalanceSolution> solve_balance(int f, const std::vector<VertexType>& types_in, BalanceOptions opts) {
  std::vector<VertexType> types = types_in;
  std::sort(types.begin(), types.end(), std::greater<>());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  bool alpha_sq = std::any_of(types.begin(), types.end(), [](const VertexType& t) { return t.e[0] >= 2; });
  bool delta_sq = std::any_of(types.begin(), types.end(), [](const VertexType& t) { return t.e[3] >= 2; });
  if (!alpha_sq || !delta_sq) {
    // Without alpha^2... or delta^2... every vertex carries alpha and delta as a single pair or not at all.
    std::erase_if(types, [](const VertexType& t) {
      return !((t.e[0] == 0 && t.e[3] == 0) || (t.e[0] == 1 && t.e[3] == 1));
    });
  }
  std::vector<BalanceSolution> out;
  BalanceSearch s{types, opts, out, std::vector<int>(types.size(), 0), {}, {}, {}};
  const std::size_t n = types.size();
  s.covers.assign(n + 1, {false, false, false, false});
  s.min_deg.assign(n + 1, 1 << 29);
  s.max_deg.assign(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    for (int a = 0; a < 4; ++a) s.covers[i][a] = s.covers[i + 1][a] || types[i].e[a] > 0;
    s.min_deg[i] = std::min(s.min_deg[i + 1], types[i].degree());
    s.max_deg[i] = std::max(s.max_deg[i + 1], types[i].degree());
  }
  s.run(0, {f, f, f, f}, f + 2);
  return out;
}

BalanceSolution census_to_solution(const Census& c) {
  BalanceSolution s;
  s.multiplicities = c;
  std::sort(s.multiplicities.begin(), s.multiplicities.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  return s;
}

Census parse_census(const std::string& text) {
  Census c;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    std::size_t i = 0;
    while (i < item.size() && item[i] == ' ') ++i;
    std::size_t start = i;
    while (i < item.size() && item[i] >= '0' && item[i] <= '9') ++i;
    int m = i > start ? std::stoi(item.substr(start, i - start)) : 1;
    c.emplace_back(VertexType::parse(item.substr(i)), m);
  }
  return census_to_solution(c).multiplicities;
}

bool census_within(const Census& partial, const std::vector<BalanceSolution>& solutions) {
  for (const auto& s : solutions) {
    bool ok = true;
    for (const auto& [t, m] : partial) {
      auto it = std::find_if(s.multiplicities.begin(), s.multiplicities.end(),
                             [&](const auto& p) { return p.first == t; });
      if (it == s.multiplicities.end() || it->second < m) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace a3b
