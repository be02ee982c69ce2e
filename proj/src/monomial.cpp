#include "g2crystal/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <limits>
#include <vector>

namespace g2 {

Monomial Monomial::variable(int i, int m, int exponent) {
  Monomial out;
  out.mul_var(i, m, exponent);
  return out;
}

int Monomial::exponent(int i, int m) const {
  auto it = exp_.find({i, m});
  return it == exp_.end() ? 0 : it->second;
}

Monomial& Monomial::mul_var(int i, int m, int exponent) {
  check_index(i);
  if (exponent == 0) return *this;
  auto [it, inserted] = exp_.try_emplace({i, m}, exponent);
  if (!inserted) {
    it->second += exponent;
    if (it->second == 0) exp_.erase(it);
  }
  return *this;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out = *this;
  for (const auto& [key, e] : rhs.exp_) out.mul_var(key.first, key.second, e);
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out;
  for (const auto& [key, e] : exp_) out.exp_.emplace(key, -e);
  return out;
}

Monomial u_factor(int i, int m) {
  check_index(i);
  Monomial out;
  if (i == 1) {
    out.mul_var(1, m, 1).mul_var(1, m + 1, 1).mul_var(2, m, -1);
  } else {
    out.mul_var(2, m, 1).mul_var(2, m + 1, 1).mul_var(1, m + 1, -3);
  }
  return out;
}

Weight weight(const Monomial& n) {
  Weight w;
  for (const auto& [key, e] : n.exponents()) {
    (key.first == 1 ? w.h1 : w.h2) += e;
  }
  return w;
}

namespace {

// The i-exponents of a monomial, as (level, exponent) in ascending level.
std::vector<std::pair<int, int>> support(const Monomial& n, int i) {
  std::vector<std::pair<int, int>> out;
  auto lo = n.exponents().lower_bound({i, std::numeric_limits<int>::min()});
  auto hi = n.exponents().upper_bound({i, std::numeric_limits<int>::max()});
  for (auto it = lo; it != hi; ++it) out.emplace_back(it->first.second, it->second);
  return out;
}

// Prefix sums of the i-exponents form a step function of the level m; this
// walks its segments once and extracts the maximum, the first level
// attaining it, the suffix maximum eps = max - total, and the last level
// attaining the maximum (absent when the maximum persists to +infinity,
// which happens exactly when eps = 0). When `floor` is set, levels below it
// are excluded from the running instead of contributing an empty prefix.
struct ScanResult {
  int best = 0;
  std::optional<int> first_at;  // least m with prefix(m) = best
  int total = 0;
  int eps = 0;
  std::optional<int> m_e;  // greatest m with prefix(m) = best, if finite
};

ScanResult scan(const std::vector<std::pair<int, int>>& sup,
                std::optional<int> floor) {
  // Segments of the step function: (start level, value). Without a floor
  // the initial segment is the empty prefix on (-inf, first level), value 0
  // and no finite start; with a floor it starts at the floor itself.
  ScanResult r;
  struct Seg {
    std::optional<int> start;
    int value;
  };
  std::vector<Seg> segs;
  if (floor) {
    segs.push_back({*floor, 0});
  } else {
    segs.push_back({std::nullopt, 0});
  }
  int run = 0;
  for (auto [m, e] : sup) {
    assert(!floor || m >= *floor);
    run += e;
    if (floor && m == *floor) segs.pop_back();  // no room for an empty prefix
    segs.push_back({m, run});
  }
  r.total = run;

  r.best = segs.front().value;
  for (const Seg& s : segs) r.best = std::max(r.best, s.value);
  r.eps = r.best - r.total;

  std::size_t first = segs.size(), last = 0;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    if (segs[k].value == r.best) {
      if (first == segs.size()) first = k;
      last = k;
    }
  }
  r.first_at = segs[first].start;  // nullopt only for the empty prefix
  if (last + 1 < segs.size()) {
    // The maximum is left before the next segment begins.
    r.m_e = *segs[last + 1].start - 1;
  }
  return r;
}

constexpr int binf_floor(int i) { return i == 1 ? 1 : 0; }

}  // namespace

StringData string_data(const Monomial& n, int i) {
  check_index(i);
  ScanResult r = scan(support(n, i), std::nullopt);
  StringData d;
  d.phi = r.best;  // >= 0: the empty prefix is among the candidates
  d.eps = r.eps;
  if (d.phi > 0) d.m_f = r.first_at;
  if (d.eps > 0) d.m_e = r.m_e;
  return d;
}

std::optional<Monomial> lower(const Monomial& n, int i) {
  StringData d = string_data(n, i);
  if (d.phi == 0) return std::nullopt;
  return u_factor(i, *d.m_f).inverse() * n;
}

std::optional<Monomial> raise(const Monomial& n, int i) {
  StringData d = string_data(n, i);
  if (d.eps == 0) return std::nullopt;
  return u_factor(i, *d.m_e) * n;
}

BInfData binf_data(const Monomial& n, int i) {
  check_index(i);
  ScanResult r = scan(support(n, i), binf_floor(i));
  BInfData d;
  d.select_max = r.best;
  d.m_f = *r.first_at;
  d.eps = r.eps;
  if (d.eps > 0) d.m_e = r.m_e;
  return d;
}

Monomial binf_lower(const Monomial& n, int i) {
  BInfData d = binf_data(n, i);
  return u_factor(i, d.m_f).inverse() * n;
}

std::optional<Monomial> binf_raise(const Monomial& n, int i) {
  BInfData d = binf_data(n, i);
  if (d.eps == 0) return std::nullopt;
  return u_factor(i, *d.m_e) * n;
}

}  // namespace g2
