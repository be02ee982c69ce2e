#pragma once

#include <compare>
#include <optional>
#include <string>

namespace g2 {

// The six nonnegative coordinates shared by the two realizations: as
// monomial data they are the exponents u_{2,0}, u_{1,1}, u_{2,1}, u_{1,2},
// u_{2,2}, u_{1,3} of the U-factor normal form; as tableau data the same
// slots hold the box counts t_{2,3}, t_{1,2}, t_{1,3}, t_{1,0},
// t_{1,2bar}, t_{1,1bar}. The identification is slotwise.
struct UCoords {
  int u20 = 0;
  int u11 = 0;
  int u21 = 0;
  int u12 = 0;
  int u22 = 0;
  int u13 = 0;

  // Box-count view.
  int t23() const { return u20; }
  int t12() const { return u11; }
  int t13() const { return u21; }
  int t10() const { return u12; }
  int t12bar() const { return u22; }
  int t11bar() const { return u13; }

  static UCoords from_t(int t23, int t12, int t13, int t10, int t12bar,
                        int t11bar) {
    return UCoords{t23, t12, t13, t10, t12bar, t11bar};
  }

  auto operator<=>(const UCoords&) const = default;
};

// A coordinate tuple is realized by a marginally large tableau iff
//   t11bar <= t12bar <= t10/2 <= t13 <= t12
// with all entries nonnegative; the middle term is compared exactly.
// Returns the first violated inequality, or nullopt when the chain holds.
std::optional<std::string> chain_violation(const UCoords& t);

}  // namespace g2
