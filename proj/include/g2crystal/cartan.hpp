#pragma once

#include <compare>

namespace g2 {

// Integral weight in the coroot-pairing basis: the pair (h1, h2) holds the
// values on the coroots h_1 and h_2, i.e. it stands for h1*L1 + h2*L2 in
// terms of the fundamental weights.
struct Weight {
  int h1 = 0;
  int h2 = 0;

  friend constexpr Weight operator+(Weight x, Weight y) {
    return {x.h1 + y.h1, x.h2 + y.h2};
  }
  friend constexpr Weight operator-(Weight x, Weight y) {
    return {x.h1 - y.h1, x.h2 - y.h2};
  }
  friend constexpr Weight operator*(int c, Weight w) {
    return {c * w.h1, c * w.h2};
  }
  constexpr Weight operator-() const { return {-h1, -h2}; }
  Weight& operator+=(Weight o) { h1 += o.h1; h2 += o.h2; return *this; }
  Weight& operator-=(Weight o) { h1 -= o.h1; h2 -= o.h2; return *this; }

  auto operator<=>(const Weight&) const = default;
};

inline constexpr Weight kFundamental1{1, 0};
inline constexpr Weight kFundamental2{0, 1};

constexpr bool is_dominant(Weight w) { return w.h1 >= 0 && w.h2 >= 0; }

// Throws std::invalid_argument unless i is 1 or 2.
void check_index(int i);
// Throws std::invalid_argument unless lambda is dominant.
void check_dominant(Weight lambda);

// alpha_1 = (2, -1), alpha_2 = (-3, 2) in the pairing basis.
Weight simple_root(int i);

// Value of w on the coroot h_i.
int pairing(Weight w, int i);

// Dimension of the irreducible G2 module of highest weight lambda, via the
// closed product over the six positive roots. Exact integer arithmetic; the
// division by 120 never truncates. Throws std::invalid_argument for
// non-dominant lambda, std::overflow_error if the value exceeds long long.
long long weyl_dim(Weight lambda);

}  // namespace g2
