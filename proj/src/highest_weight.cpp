#include "g2crystal/highest_weight.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace g2 {

namespace {

// N_lambda = Y1(1)^lambda(h1) Y2(0)^lambda(h2).
Monomial highest_monomial(Weight lambda) {
  Monomial n;
  n.mul_var(1, 1, lambda.h1);
  n.mul_var(2, 0, lambda.h2);
  return n;
}

}  // namespace

std::optional<std::string> deficond_violation(const UCoords& u, Weight lambda) {
  const int l1 = lambda.h1, l2 = lambda.h2;
  const int vals[] = {u.u20, u.u11, u.u21, u.u12, u.u22, u.u13};
  const char* names[] = {"u20", "u11", "u21", "u12", "u22", "u13"};
  for (int k = 0; k < 6; ++k) {
    if (vals[k] < 0) return std::string(names[k]) + " >= 0";
  }
  if (u.u20 > l2) return std::string("u20 <= lambda(h2)");
  if (u.u11 > 3 * u.u20 + l1) return std::string("u11 <= 3*u20 + lambda(h1)");
  if (3 * u.u21 > 2 * u.u11 + l1)
    return std::string("u21 <= (2*u11 + lambda(h1))/3");
  if (u.u21 > u.u11) return std::string("u21 <= u11");
  if (2 * u.u12 > 3 * u.u21 + l1)
    return std::string("u12 <= (3*u21 + lambda(h1))/2");
  if (u.u12 > 2 * u.u21) return std::string("u12 <= 2*u21");
  if (3 * u.u22 > u.u12 + l1)
    return std::string("u22 <= (u12 + lambda(h1))/3");
  if (2 * u.u22 > u.u12) return std::string("u22 <= u12/2");
  if (u.u13 > l1) return std::string("u13 <= lambda(h1)");
  if (u.u13 > u.u22) return std::string("u13 <= u22");
  return std::nullopt;
}

bool satisfies_deficond(const UCoords& u, Weight lambda) {
  return !deficond_violation(u, lambda).has_value();
}

std::optional<UCoords> in_n_lambda(const Monomial& n, Weight lambda) {
  check_dominant(lambda);
  // Support outside Y1(1..4), Y2(0..3) cannot come from the normal form.
  for (const auto& [key, e] : n.exponents()) {
    const auto [i, m] = key;
    if (i == 1 && (m < 1 || m > 4)) return std::nullopt;
    if (i == 2 && (m < 0 || m > 3)) return std::nullopt;
  }
  UCoords u;
  u.u13 = -n.exponent(1, 4);
  u.u22 = u.u13 - n.exponent(2, 3);
  u.u12 = 3 * u.u22 - u.u13 - n.exponent(1, 3);
  u.u21 = u.u12 - u.u22 - n.exponent(2, 2);
  u.u20 = lambda.h2 - n.exponent(2, 0);
  u.u11 = n.exponent(2, 1) + u.u20 + u.u21;
  // Two remaining equations act as consistency checks.
  if (n.exponent(1, 1) != lambda.h1 + 3 * u.u20 - u.u11) return std::nullopt;
  if (n.exponent(1, 2) != 3 * u.u21 - u.u11 - u.u12) return std::nullopt;
  if (!satisfies_deficond(u, lambda)) return std::nullopt;
  return u;
}

Monomial monomial_of_u(const UCoords& u, Weight lambda) {
  check_dominant(lambda);
  if (auto v = deficond_violation(u, lambda)) {
    throw std::invalid_argument("u-coordinates violate " + *v);
  }
  Monomial n;
  n.mul_var(1, 1, lambda.h1 + 3 * u.u20 - u.u11);
  n.mul_var(1, 2, 3 * u.u21 - u.u11 - u.u12);
  n.mul_var(1, 3, 3 * u.u22 - u.u12 - u.u13);
  n.mul_var(1, 4, -u.u13);
  n.mul_var(2, 0, lambda.h2 - u.u20);
  n.mul_var(2, 1, -u.u20 - u.u21 + u.u11);
  n.mul_var(2, 2, -u.u21 - u.u22 + u.u12);
  n.mul_var(2, 3, -u.u22 + u.u13);
  return n;
}

Weight u_weight(const UCoords& u, Weight lambda) {
  return lambda - (u.u11 + u.u12 + u.u13) * simple_root(1) -
         (u.u20 + u.u21 + u.u22) * simple_root(2);
}

std::vector<UCoords> enumerate_n_lambda(Weight lambda) {
  check_dominant(lambda);
  const int l1 = lambda.h1, l2 = lambda.h2;
  std::vector<UCoords> out;
  for (int u20 = 0; u20 <= l2; ++u20)
    for (int u11 = 0; u11 <= 3 * u20 + l1; ++u11)
      for (int u21 = 0; u21 <= std::min((2 * u11 + l1) / 3, u11); ++u21)
        for (int u12 = 0; u12 <= std::min((3 * u21 + l1) / 2, 2 * u21); ++u12)
          for (int u22 = 0; u22 <= std::min((u12 + l1) / 3, u12 / 2); ++u22)
            for (int u13 = 0; u13 <= std::min(l1, u22); ++u13)
              out.push_back(UCoords{u20, u11, u21, u12, u22, u13});
  return out;
}

bool in_t_lambda_set(const MLTableau& t, Weight lambda) {
  check_dominant(lambda);
  const UCoords c = counts(t);
  const int l1 = lambda.h1, l2 = lambda.h2;
  return c.t23() <= l2 && c.t12() <= l1 + 3 * c.t23() &&
         3 * c.t13() <= l1 + 2 * c.t12() && 2 * c.t10() <= l1 + 3 * c.t13() &&
         3 * c.t12bar() <= l1 + c.t10() && c.t11bar() <= l1;
}

std::optional<TensorElement> lower(const TensorElement& x, int i) {
  check_index(i);
  const TableauStats st = stats(x.tableau());
  if (st.phi[i - 1] <= -pairing(x.lambda(), i)) return std::nullopt;
  return TensorElement(lower(x.tableau(), i), x.lambda());
}

std::optional<TensorElement> raise(const TensorElement& x, int i) {
  check_index(i);
  const TableauStats st = stats(x.tableau());
  if (st.phi[i - 1] < -pairing(x.lambda(), i)) return std::nullopt;
  auto r = raise(x.tableau(), i);
  if (!r) return std::nullopt;
  return TensorElement(std::move(*r), x.lambda());
}

TensorStats stats(const TensorElement& x) {
  const TableauStats st = stats(x.tableau());
  TensorStats out;
  out.wt = st.wt + x.lambda();
  for (int i : {1, 2}) {
    const int li = pairing(x.lambda(), i);
    out.eps[i - 1] = std::max(st.eps[i - 1], -li - pairing(st.wt, i));
    out.phi[i - 1] = std::max(0, st.phi[i - 1] + li);
  }
  return out;
}

TensorElement omega(const Monomial& n, Weight lambda) {
  const auto u = in_n_lambda(n, lambda);
  if (!u) {
    throw std::invalid_argument("monomial does not belong to N(lambda)");
  }
  return TensorElement(from_counts(*u), lambda);
}

Monomial omega_inv(const TensorElement& x) {
  if (!in_t_lambda_set(x.tableau(), x.lambda())) {
    throw std::invalid_argument(
        "tableau does not belong to the lambda-cut of the tableau crystal");
  }
  return monomial_of_u(counts(x.tableau()), x.lambda());
}

std::pair<Monomial, TensorElement> highest_elements(Weight lambda) {
  check_dominant(lambda);
  return {highest_monomial(lambda), TensorElement(highest_tableau(), lambda)};
}

}  // namespace g2
