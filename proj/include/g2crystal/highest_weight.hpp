#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "g2crystal/cartan.hpp"
#include "g2crystal/coords.hpp"
#include "g2crystal/monomial.hpp"
#include "g2crystal/tableau.hpp"

namespace g2 {

// A tableau tensored with the one-element crystal of a dominant weight:
// wt(t_lambda) = lambda, eps_i(t_lambda) = -lambda(h_i), phi_i = 0, and
// both operators kill t_lambda.
class TensorElement {
 public:
  TensorElement(MLTableau t, Weight lambda)
      : t_(std::move(t)), lambda_(lambda) {
    check_dominant(lambda_);
  }

  const MLTableau& tableau() const { return t_; }
  Weight lambda() const { return lambda_; }

  auto operator<=>(const TensorElement&) const = default;

 private:
  MLTableau t_;
  Weight lambda_;
};

// Returns the first violated inequality of the exponent conditions cutting
// out the highest weight component, or nullopt when all hold. Fractional
// bounds are compared by cross multiplication.
std::optional<std::string> deficond_violation(const UCoords& u, Weight lambda);
bool satisfies_deficond(const UCoords& u, Weight lambda);

// Solves the triangular Y-exponent system for the six u-values; nullopt
// when no nonnegative solution satisfying the exponent conditions exists.
std::optional<UCoords> in_n_lambda(const Monomial& n, Weight lambda);

// The monomial with Y-exponents determined by (u, lambda); inverse of
// in_n_lambda. Throws std::invalid_argument naming the violated inequality.
Monomial monomial_of_u(const UCoords& u, Weight lambda);

// lambda - (u11+u12+u13) alpha1 - (u20+u21+u22) alpha2.
Weight u_weight(const UCoords& u, Weight lambda);

// All u-tuples satisfying the exponent conditions, in lexicographic order
// of (u20, u11, u21, u12, u22, u13).
std::vector<UCoords> enumerate_n_lambda(Weight lambda);

// Membership of a tableau in the lambda-cut of the infinity crystal: the
// box counts must satisfy the count conditions (exact rational compare).
bool in_t_lambda_set(const MLTableau& t, Weight lambda);

// Tensor product rule against t_lambda: f acts on the left factor iff
// phi_i(T) > -lambda(h_i), else the result is zero; e acts on the left
// factor iff phi_i(T) >= -lambda(h_i), else zero.
std::optional<TensorElement> lower(const TensorElement& x, int i);
std::optional<TensorElement> raise(const TensorElement& x, int i);

struct TensorStats {
  Weight wt;
  std::array<int, 2> eps{0, 0};
  std::array<int, 2> phi{0, 0};
};
TensorStats stats(const TensorElement& x);

// The connecting bijection: reads the u-values of a member of N(lambda) as
// box counts and builds the corresponding tableau, tensored with t_lambda.
// omega_inv goes back through the box counts. Both throw
// std::invalid_argument on membership failure.
TensorElement omega(const Monomial& n, Weight lambda);
Monomial omega_inv(const TensorElement& x);

// (N_lambda, T_inf (x) t_lambda): the two highest weight elements.
std::pair<Monomial, TensorElement> highest_elements(Weight lambda);

}  // namespace g2
