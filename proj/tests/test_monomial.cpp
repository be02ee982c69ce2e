#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g2crystal/monomial.hpp"

using namespace g2;

namespace {

Monomial mono(std::initializer_list<std::tuple<int, int, int>> entries) {
  Monomial n;
  for (auto [i, m, e] : entries) n.mul_var(i, m, e);
  return n;
}

Monomial random_monomial(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 6);
  std::uniform_int_distribution<int> index(1, 2);
  std::uniform_int_distribution<int> level(-2, 5);
  std::uniform_int_distribution<int> expo(-4, 4);
  Monomial n;
  const int k = terms(rng);
  for (int t = 0; t < k; ++t) n.mul_var(index(rng), level(rng), expo(rng));
  return n;
}

}  // namespace

TEST_CASE("u_factor expansions") {
  CHECK(u_factor(1, 0) == mono({{1, 0, 1}, {1, 1, 1}, {2, 0, -1}}));
  CHECK(u_factor(2, 1) == mono({{2, 1, 1}, {2, 2, 1}, {1, 2, -3}}));
  CHECK((u_factor(1, 0) * u_factor(1, 0).inverse()).is_one());
  CHECK_THROWS_AS(u_factor(3, 0), std::invalid_argument);
}

TEST_CASE("monomial weight") {
  CHECK(weight(mono({{1, 1, 4}, {2, 0, 2}})) == Weight{4, 2});
  CHECK(weight(Monomial{}) == Weight{0, 0});
  CHECK(weight(mono({{1, 2, 2}, {2, 2, -1}})) == Weight{2, -1});
}

TEST_CASE("string data") {
  const auto d1 = string_data(Monomial::variable(1, 1), 1);
  CHECK(d1.phi == 1);
  CHECK(d1.eps == 0);
  CHECK(d1.m_f == 1);
  CHECK_FALSE(d1.m_e.has_value());

  const auto d2 = string_data(Monomial::variable(1, 1), 2);
  CHECK(d2.phi == 0);
  CHECK(d2.eps == 0);
  CHECK_FALSE(d2.m_f.has_value());
  CHECK_FALSE(d2.m_e.has_value());

  const auto d3 = string_data(mono({{1, 2, 2}, {2, 2, -1}}), 2);
  CHECK(d3.phi == 0);
  CHECK(d3.eps == 1);
  CHECK_FALSE(d3.m_f.has_value());
  CHECK(d3.m_e == 1);
}

TEST_CASE("lowering") {
  CHECK(lower(Monomial::variable(1, 1), 1) ==
        mono({{1, 2, -1}, {2, 1, 1}}));
  CHECK(lower(Monomial::variable(2, 0), 2) ==
        mono({{1, 1, 3}, {2, 1, -1}}));
  CHECK_FALSE(lower(Monomial::variable(1, 1), 2).has_value());
}

TEST_CASE("raising") {
  CHECK(raise(mono({{1, 2, -1}, {2, 1, 1}}), 1) == Monomial::variable(1, 1));
  CHECK(raise(mono({{1, 2, 2}, {2, 2, -1}}), 2) ==
        mono({{1, 2, -1}, {2, 1, 1}}));
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      Monomial top = mono({{1, 1, a}, {2, 0, b}});
      CHECK_FALSE(raise(top, 1).has_value());
      CHECK_FALSE(raise(top, 2).has_value());
    }
  }
}

namespace {

// Direct evaluation of the prefix/suffix maxima over an explicit window of
// levels; independent of the segment walk used by the library.
StringData naive_string_data(const Monomial& n, int i) {
  int lo = 100, hi = -100;
  for (const auto& [key, e] : n.exponents()) {
    if (key.first != i || e == 0) continue;
    lo = std::min(lo, key.second);
    hi = std::max(hi, key.second);
  }
  StringData d;
  if (lo > hi) return d;  // no support: phi = eps = 0
  auto prefix = [&](int m) {
    int s = 0;
    for (int k = lo; k <= m; ++k) s += n.exponent(i, k);
    return s;
  };
  for (int m = lo - 1; m <= hi; ++m) d.phi = std::max(d.phi, prefix(m));
  if (d.phi > 0) {
    for (int m = lo - 1; m <= hi; ++m) {
      if (prefix(m) == d.phi) {
        d.m_f = m;
        break;
      }
    }
  }
  const int total = prefix(hi);
  auto minus_suffix = [&](int m) { return prefix(m) - total; };
  for (int m = lo - 1; m <= hi; ++m) d.eps = std::max(d.eps, minus_suffix(m));
  if (d.eps > 0) {
    for (int m = hi; m >= lo - 1; --m) {
      if (minus_suffix(m) == d.eps) {
        d.m_e = m;
        break;
      }
    }
  }
  return d;
}

}  // namespace

TEST_CASE("string data agrees with direct evaluation") {
  std::mt19937 rng(1789);
  for (int trial = 0; trial < 5000; ++trial) {
    const Monomial n = random_monomial(rng);
    for (int i : {1, 2}) {
      const auto fast = string_data(n, i);
      const auto slow = naive_string_data(n, i);
      CHECK(fast.phi == slow.phi);
      CHECK(fast.eps == slow.eps);
      CHECK(fast.m_f == slow.m_f);
      CHECK(fast.m_e == slow.m_e);
    }
  }
}

TEST_CASE("crystal axioms on random monomials") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 5000; ++trial) {
    const Monomial n = random_monomial(rng);
    for (int i : {1, 2}) {
      const auto d = string_data(n, i);
      CHECK(d.phi - d.eps == pairing(weight(n), i));
      CHECK(d.phi >= 0);
      CHECK(d.eps >= 0);

      const auto down = lower(n, i);
      CHECK(down.has_value() == (d.phi > 0));
      if (down) {
        CHECK(weight(*down) == weight(n) - simple_root(i));
        CHECK(raise(*down, i) == n);  // structural equality
      }
      const auto up = raise(n, i);
      CHECK(up.has_value() == (d.eps > 0));
      if (up) {
        CHECK(weight(*up) == weight(n) + simple_root(i));
        CHECK(lower(*up, i) == n);
      }
    }
  }
}

TEST_CASE("infinity-crystal operators on monomials") {
  const Monomial one;
  CHECK(binf_lower(one, 1) == u_factor(1, 1).inverse());
  CHECK(binf_lower(one, 2) == u_factor(2, 0).inverse());
  CHECK_FALSE(binf_raise(one, 1).has_value());
  CHECK_FALSE(binf_raise(one, 2).has_value());

  // Every lowering is inverted by a raising, along random words.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(1, 2);
  for (int trial = 0; trial < 200; ++trial) {
    Monomial m;
    for (int step = 0; step < 12; ++step) {
      const int i = pick(rng);
      const Monomial next = binf_lower(m, i);
      CHECK(weight(next) == weight(m) - simple_root(i));
      CHECK(binf_raise(next, i) == m);
      m = next;
    }
  }
}
