#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "g2crystal/tableau.hpp"
#include "g2crystal/text.hpp"

using namespace g2;

namespace {

constexpr Box k1 = Box::b1, k2 = Box::b2, k3 = Box::b3, k0 = Box::b0,
              k3b = Box::b3bar, k2b = Box::b2bar, k1b = Box::b1bar;

MLTableau tab(std::vector<Box> r1, std::vector<Box> r2) {
  return MLTableau::make(std::move(r1), std::move(r2));
}

// Random box counts satisfying the realizability chain.
UCoords random_counts(std::mt19937& rng) {
  std::uniform_int_distribution<int> small(0, 4);
  const int t11bar = small(rng);
  const int t12bar = t11bar + small(rng);
  const int t10 = 2 * t12bar + small(rng);
  const int t13 = (t10 + 1) / 2 + small(rng);
  const int t12 = t13 + small(rng);
  const int t23 = small(rng);
  return UCoords::from_t(t23, t12, t13, t10, t12bar, t11bar);
}

}  // namespace

TEST_CASE("box crystal tables are a seven-element crystal") {
  const Box all[] = {k1, k2, k3, k0, k3b, k2b, k1b};
  for (Box b : all) {
    for (int i : {1, 2}) {
      CHECK(box_phi(b, i) - box_eps(b, i) == pairing(box_weight(b), i));
      const auto next = box_lower(b, i);
      CHECK(next.has_value() == (box_phi(b, i) > 0));
      if (next) {
        CHECK(box_weight(*next) == box_weight(b) - simple_root(i));
        CHECK(box_raise(*next, i) == b);
      }
    }
  }
  CHECK(box_weight(k1) == Weight{1, 0});
  CHECK(box_weight(k0) == Weight{0, 0});
  CHECK(box_weight(k1b) == Weight{-1, 0});
}

TEST_CASE("validity") {
  CHECK(MLTableau::check(std::vector{k1, k1}, std::vector{k2}) ==
        TableauDefect::none);
  CHECK(MLTableau::check(std::vector{k1, k1, k1, k3, k0, k3b, k1b},
                         std::vector{k2, k3}) == TableauDefect::none);
  CHECK(MLTableau::check(std::vector{k1, k1}, std::vector{k3}) ==
        TableauDefect::basic_column_violation);
  CHECK(MLTableau::check(std::vector{k1, k2, k1}, std::vector{k2}) ==
        TableauDefect::row_not_weakly_increasing);
  CHECK(MLTableau::check(std::vector{k1, k2}, std::vector{k2, k2}) ==
        TableauDefect::column_not_strict);
  CHECK(MLTableau::check(std::vector{k1}, std::vector{k2, k3}) ==
        TableauDefect::column_not_strict);
  CHECK(MLTableau::check(std::vector{k1, k1, k0}, std::vector{k2, k0}) ==
        TableauDefect::forbidden_row2_entry);
  CHECK(MLTableau::check(std::vector{k1, k1, k0, k0}, std::vector{k2}) ==
        TableauDefect::duplicate_zero);
  CHECK(MLTableau::check(std::vector{k1, k2}, std::vector{k2}) ==
        TableauDefect::wrong_one_count);
  CHECK_THROWS_AS(tab({k1, k1}, {k3}), std::invalid_argument);
}

TEST_CASE("far-eastern reading") {
  CHECK(reading(tab({k1, k1, k1, k3, k0, k3b, k1b}, {k2, k3})) ==
        std::vector{k1b, k3b, k0, k3, k1, k1, k3, k1, k2});
  CHECK(reading(highest_tableau()) == std::vector{k1, k1, k2});
  CHECK(reading(tab({k1, k1, k2}, {k2})) == std::vector{k2, k1, k1, k2});
}

TEST_CASE("signature rule") {
  const auto s1 = signature(std::vector{k1, k1, k2}, 2);
  CHECK(s1.f_pos == 2);  // third letter
  CHECK_FALSE(s1.e_pos.has_value());
  CHECK(s1.eps == 0);
  CHECK(s1.phi_raw == 1);

  // One cancellation (positions 4,5 of the word); four pluses survive.
  const auto s2 = signature(std::vector{k1, k1, k3, k1, k2}, 1);
  CHECK(s2.f_pos == 0);
  CHECK_FALSE(s2.e_pos.has_value());
  CHECK(s2.eps == 0);
  CHECK(s2.phi_raw == 4);

  const auto s3 = signature(std::vector{k2}, 1);
  CHECK_FALSE(s3.f_pos.has_value());
  CHECK(s3.e_pos == 0);
  CHECK(s3.eps == 1);
  CHECK(s3.phi_raw == 0);
}

TEST_CASE("lowering reproduces the figures") {
  const MLTableau t1 = lower(highest_tableau(), 2);
  CHECK(t1 == tab({k1, k1, k1}, {k2, k3}));
  const MLTableau t2 = lower(t1, 1);
  CHECK(t2 == tab({k1, k1, k1, k2}, {k2, k3}));
  CHECK(lower(t2, 2) == tab({k1, k1, k1, k1, k2}, {k2, k3, k3}));
}

TEST_CASE("raising") {
  CHECK_FALSE(raise(highest_tableau(), 1).has_value());
  CHECK_FALSE(raise(highest_tableau(), 2).has_value());
  CHECK(raise(tab({k1, k1, k1}, {k2, k3}), 2) == highest_tableau());
  CHECK(raise(tab({k1, k1, k1, k2}, {k2, k3}), 1) ==
        tab({k1, k1, k1}, {k2, k3}));
}

TEST_CASE("stats") {
  const auto s0 = stats(highest_tableau());
  CHECK(s0.wt == Weight{0, 0});
  CHECK(s0.eps == std::array{0, 0});
  CHECK(s0.phi == std::array{0, 0});

  const auto s1 = stats(tab({k1, k1, k1}, {k2, k3}));
  CHECK(s1.wt == Weight{3, -2});
  CHECK(s1.wt == -simple_root(2));
  CHECK(s1.eps == std::array{0, 1});
  CHECK(s1.phi == std::array{3, -1});

  const auto s2 = stats(tab({k1, k1, k1, k2}, {k2, k3}));
  CHECK(s2.wt == Weight{1, -1});
  CHECK(s2.wt == -simple_root(1) - simple_root(2));
}

TEST_CASE("box counts") {
  CHECK(counts(highest_tableau()) == UCoords{});
  CHECK(counts(tab({k1, k1, k1, k3, k0, k3b, k1b}, {k2, k3})) ==
        UCoords::from_t(1, 4, 4, 5, 1, 1));
  CHECK(counts(tab({k1, k1, k1, k0}, {k2, k3})) ==
        UCoords::from_t(1, 1, 1, 1, 0, 0));
}

TEST_CASE("from_counts") {
  CHECK(from_counts(UCoords{}) == highest_tableau());
  CHECK(from_counts(UCoords::from_t(1, 4, 4, 5, 1, 1)) ==
        tab({k1, k1, k1, k3, k0, k3b, k1b}, {k2, k3}));
  CHECK_THROWS_WITH_AS(from_counts(UCoords::from_t(0, 0, 1, 0, 0, 0)),
                       doctest::Contains("t13 <= t12"),
                       std::invalid_argument);
  CHECK(chain_violation(UCoords::from_t(0, 2, 2, 1, 1, 0)) ==
        std::string("t12bar <= t10/2"));
  CHECK_FALSE(chain_violation(UCoords::from_t(1, 4, 4, 5, 1, 1)).has_value());
}

TEST_CASE("counts round trip on random chain tuples") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 3000; ++trial) {
    const UCoords t = random_counts(rng);
    const MLTableau built = from_counts(t);
    CHECK(MLTableau::check(built.row1(), built.row2()) == TableauDefect::none);
    CHECK(counts(built) == t);
    const long zeros =
        std::count(built.row1().begin(), built.row1().end(), k0);
    CHECK(zeros == t.t10() % 2);
  }
}

TEST_CASE("operator words preserve marginal largeness (exhaustive length 8)") {
  std::vector<MLTableau> layer{highest_tableau()};
  for (int depth = 0; depth < 8; ++depth) {
    std::vector<MLTableau> next;
    for (const auto& t : layer) {
      for (int i : {1, 2}) {
        MLTableau down = lower(t, i);
        CHECK(MLTableau::check(down.row1(), down.row2()) ==
              TableauDefect::none);
        CHECK(stats(down).wt == stats(t).wt - simple_root(i));
        CHECK(raise(down, i) == t);
        CHECK(from_counts(counts(down)) == down);
        next.push_back(std::move(down));
      }
    }
    layer = std::move(next);
  }
}

namespace {

// Independent oracle for the signature rule: the two-factor tensor rule
// applied recursively to the word. Returns phi, eps and the positions the
// operators act on.
struct WordData {
  int phi = 0;
  int eps = 0;
  std::optional<int> f_pos;
  std::optional<int> e_pos;
  Weight wt;
};

WordData two_factor(std::span<const Box> word, int i) {
  WordData d;
  if (word.empty()) return d;
  const Box head = word.front();
  const WordData rest = two_factor(word.subspan(1), i);
  const int phi_head = box_phi(head, i);
  const int eps_head = box_eps(head, i);
  d.wt = box_weight(head) + rest.wt;
  d.phi = std::max(rest.phi, phi_head + pairing(rest.wt, i));
  d.eps = std::max(eps_head, rest.eps - pairing(box_weight(head), i));
  if (phi_head > rest.eps) {
    d.f_pos = phi_head > 0 ? std::optional<int>(0) : std::nullopt;
  } else if (rest.f_pos) {
    d.f_pos = *rest.f_pos + 1;
  }
  if (phi_head >= rest.eps) {
    d.e_pos = eps_head > 0 ? std::optional<int>(0) : std::nullopt;
  } else if (rest.e_pos) {
    d.e_pos = *rest.e_pos + 1;
  }
  return d;
}

}  // namespace

TEST_CASE("signature agrees with the iterated two-factor rule") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 2000; ++trial) {
    const MLTableau t = from_counts(random_counts(rng));
    const auto word = reading(t);
    for (int i : {1, 2}) {
      const Signature sig = signature(word, i);
      const WordData oracle = two_factor(word, i);
      CHECK(sig.phi_raw == oracle.phi);
      CHECK(sig.eps == oracle.eps);
      CHECK(sig.f_pos == oracle.f_pos);
      CHECK(sig.e_pos == oracle.e_pos);
    }
  }
  // The frozen example values, through the oracle as well.
  const auto d = two_factor(std::vector{k1, k1, k3, k1, k2}, 1);
  CHECK(d.phi == 4);
  CHECK(d.f_pos == 0);
}

TEST_CASE("crystal axioms on random tableaux") {
  std::mt19937 rng(512);
  for (int trial = 0; trial < 3000; ++trial) {
    const MLTableau t = from_counts(random_counts(rng));
    const auto word = reading(t);
    Weight box_sum;
    for (Box b : word) box_sum += box_weight(b);
    const auto st = stats(t);
    for (int i : {1, 2}) {
      const auto sig = signature(word, i);
      // Raw word statistics obey the tensor-crystal axiom.
      CHECK(sig.phi_raw - sig.eps == pairing(box_sum, i));
      CHECK(st.phi[i - 1] - st.eps[i - 1] == pairing(st.wt, i));

      const MLTableau down = lower(t, i);
      CHECK(stats(down).wt == st.wt - simple_root(i));
      CHECK(raise(down, i) == t);
      const auto up = raise(t, i);
      CHECK(up.has_value() == (st.eps[i - 1] > 0));
      if (up) {
        CHECK(lower(*up, i) == t);
        CHECK(stats(*up).wt == st.wt + simple_root(i));
      }
    }
  }
}
