#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "g2crystal/cartan.hpp"
#include "g2crystal/coords.hpp"

namespace g2 {

// The seven box letters in their crystal order 1 < 2 < 3 < 0 < 3b < 2b < 1b;
// the enumerator order realizes the order, so raw comparison is the order.
enum class Box : std::uint8_t { b1, b2, b3, b0, b3bar, b2bar, b1bar };

Weight box_weight(Box b);
int box_phi(Box b, int i);
int box_eps(Box b, int i);
std::optional<Box> box_lower(Box b, int i);  // arrow successor
std::optional<Box> box_raise(Box b, int i);  // arrow predecessor

enum class TableauDefect {
  none,
  row_not_weakly_increasing,
  column_not_strict,
  forbidden_row2_entry,
  duplicate_zero,
  wrong_one_count,
  basic_column_violation,
};
const char* to_message(TableauDefect d);

// A marginally large two-row tableau: rows weakly increase, columns strictly
// increase, the second row holds exactly one 2 and otherwise 3s, the first
// row holds at most one 0 and exactly one more 1 than the second row has
// boxes (so there is exactly one basic column of each height).
class MLTableau {
 public:
  static TableauDefect check(std::span<const Box> row1,
                             std::span<const Box> row2);
  // Throws std::invalid_argument carrying the defect message.
  static MLTableau make(std::vector<Box> row1, std::vector<Box> row2);

  const std::vector<Box>& row1() const { return row1_; }
  const std::vector<Box>& row2() const { return row2_; }

  auto operator<=>(const MLTableau&) const = default;

 private:
  MLTableau(std::vector<Box> r1, std::vector<Box> r2)
      : row1_(std::move(r1)), row2_(std::move(r2)) {}
  std::vector<Box> row1_;
  std::vector<Box> row2_;
};

// The two-column highest weight tableau [1 1 / 2].
MLTableau highest_tableau();

// Far-eastern reading: columns right to left, each top to bottom.
std::vector<Box> reading(const MLTableau& t);

// Signature rule on a reading word: each letter contributes eps_i minuses
// then phi_i pluses, adjacent "+-" pairs cancel. f acts on the owner of the
// leftmost surviving plus, e on the owner of the rightmost surviving minus.
// Positions are 0-based indices into the word.
struct Signature {
  std::optional<int> f_pos;
  std::optional<int> e_pos;
  int eps = 0;
  int phi_raw = 0;
};
Signature signature(std::span<const Box> word, int i);

// f~_i: total on marginally large tableaux. When the changed box consumes
// the basic i-column, a fresh basic i-column is inserted directly left of
// it to restore marginal largeness.
MLTableau lower(const MLTableau& t, int i);
// e~_i: nullopt at the top of an i-string; when the change duplicates the
// basic i-column, the changed column is removed.
std::optional<MLTableau> raise(const MLTableau& t, int i);

// Weight and string statistics of a tableau as an element of the infinity
// crystal: the weight is the box-weight sum minus one fundamental weight
// per column (L1 for height 1, L2 for height 2); eps comes from the
// signature of the reading and phi = eps + wt(h_i), which may be negative.
struct TableauStats {
  Weight wt;
  std::array<int, 2> eps{0, 0};
  std::array<int, 2> phi{0, 0};
};
TableauStats stats(const MLTableau& t);

// Box counts t_{v,w}: t23 = number of 3s in row 2; t1w for w in
// {2,3,2b,1b} = number of row-1 boxes with entry >= w; t10 counts row-1
// boxes >= 0 once and boxes >= 3b a second time.
UCoords counts(const MLTableau& t);

// The unique marginally large tableau with the given box counts. Throws
// std::invalid_argument naming the violated chain inequality when none
// exists. Inverse of counts.
MLTableau from_counts(const UCoords& t);

}  // namespace g2
