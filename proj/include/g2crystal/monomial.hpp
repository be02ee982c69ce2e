#pragma once

#include <map>
#include <optional>
#include <utility>

#include "g2crystal/cartan.hpp"

namespace g2 {

// Laurent monomial in the variables Y_i(m), i in {1,2}, m in Z. Exponents
// are stored sparsely and zero entries are dropped on the spot, so two
// monomials are equal iff they are structurally equal.
class Monomial {
 public:
  using Key = std::pair<int, int>;  // (index i, level m)
  using ExponentMap = std::map<Key, int>;

  Monomial() = default;

  static Monomial variable(int i, int m, int exponent = 1);

  int exponent(int i, int m) const;
  const ExponentMap& exponents() const { return exp_; }
  bool is_one() const { return exp_.empty(); }

  // Multiplies in Y_i(m)^exponent, collapsing with any existing entry.
  Monomial& mul_var(int i, int m, int exponent);
  Monomial operator*(const Monomial& rhs) const;
  Monomial inverse() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  ExponentMap exp_;
};

// U_1(m) = Y1(m) Y1(m+1) Y2(m)^-1,  U_2(m) = Y2(m) Y2(m+1) Y1(m+1)^-3.
Monomial u_factor(int i, int m);

// wt(N): per-index exponent totals, read as a Weight.
Weight weight(const Monomial& n);

// phi_i = max over m of the prefix sums of the i-exponents (the empty
// prefix contributes 0), eps_i the matching suffix maximum; m_f is the
// least level attaining phi (absent when phi = 0), m_e the greatest level
// attaining eps (absent when eps = 0).
struct StringData {
  int phi = 0;
  int eps = 0;
  std::optional<int> m_f;
  std::optional<int> m_e;
};
StringData string_data(const Monomial& n, int i);

// f~_i: nullopt iff phi_i = 0, else U_i(m_f)^-1 * n.
std::optional<Monomial> lower(const Monomial& n, int i);
// e~_i: nullopt iff eps_i = 0, else U_i(m_e) * n.
std::optional<Monomial> raise(const Monomial& n, int i);

// Variant crystal structure whose component of the constant monomial
// realizes the infinity crystal: the prefix/suffix maxima run over levels
// m >= 1 for i = 1 and m >= 0 for i = 2 only, and the lowering operator is
// total. This is exactly what the plain structure degenerates to after
// dividing out a dominant shift Y1(1)^a Y2(0)^b with a, b large.
// Precondition: the i-support of n lies at levels >= the floor.
struct BInfData {
  int select_max = 0;  // restricted prefix maximum; locates m_f
  int m_f = 0;
  int eps = 0;
  std::optional<int> m_e;
};
BInfData binf_data(const Monomial& n, int i);
Monomial binf_lower(const Monomial& n, int i);
std::optional<Monomial> binf_raise(const Monomial& n, int i);

}  // namespace g2
