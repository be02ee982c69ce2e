#include "g2crystal/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace g2 {

namespace {

constexpr int kBoxes = 7;

constexpr Weight kBoxWeight[kBoxes] = {
    {1, 0}, {-1, 1}, {2, -1}, {0, 0}, {-2, 1}, {1, -1}, {-1, 0}};

// Indexed [i-1][box]: string lengths in the seven-element fundamental
// crystal 1 -1-> 2 -2-> 3 -1-> 0 -1-> 3b -2-> 2b -1-> 1b.
constexpr int kBoxPhi[2][kBoxes] = {{1, 0, 2, 1, 0, 1, 0},
                                    {0, 1, 0, 0, 1, 0, 0}};
constexpr int kBoxEps[2][kBoxes] = {{0, 1, 0, 1, 2, 0, 1},
                                    {0, 0, 1, 0, 0, 1, 0}};
constexpr int kBoxNext[2][kBoxes] = {{1, -1, 3, 4, -1, 6, -1},
                                     {-1, 2, -1, -1, 5, -1, -1}};

int idx(Box b) { return static_cast<int>(b); }

}  // namespace

Weight box_weight(Box b) { return kBoxWeight[idx(b)]; }

int box_phi(Box b, int i) {
  check_index(i);
  return kBoxPhi[i - 1][idx(b)];
}

int box_eps(Box b, int i) {
  check_index(i);
  return kBoxEps[i - 1][idx(b)];
}

std::optional<Box> box_lower(Box b, int i) {
  check_index(i);
  int n = kBoxNext[i - 1][idx(b)];
  if (n < 0) return std::nullopt;
  return static_cast<Box>(n);
}

std::optional<Box> box_raise(Box b, int i) {
  check_index(i);
  for (int k = 0; k < kBoxes; ++k) {
    if (kBoxNext[i - 1][k] == idx(b)) return static_cast<Box>(k);
  }
  return std::nullopt;
}

const char* to_message(TableauDefect d) {
  switch (d) {
    case TableauDefect::none:
      return "valid";
    case TableauDefect::row_not_weakly_increasing:
      return "row entries must weakly increase left to right";
    case TableauDefect::column_not_strict:
      return "column entries must strictly increase top to bottom";
    case TableauDefect::forbidden_row2_entry:
      return "second row may only contain 2 and 3";
    case TableauDefect::duplicate_zero:
      return "0 may appear at most once in the first row";
    case TableauDefect::wrong_one_count:
      return "first row must contain exactly one more 1 than the second "
             "row has boxes";
    case TableauDefect::basic_column_violation:
      return "second row must contain exactly one 2 (one basic 2-column)";
  }
  return "unknown defect";
}

TableauDefect MLTableau::check(std::span<const Box> row1,
                               std::span<const Box> row2) {
  if (row2.size() > row1.size()) return TableauDefect::column_not_strict;
  for (auto row : {row1, row2}) {
    for (std::size_t k = 1; k < row.size(); ++k) {
      if (row[k] < row[k - 1]) return TableauDefect::row_not_weakly_increasing;
    }
  }
  for (std::size_t c = 0; c < row2.size(); ++c) {
    if (!(row1[c] < row2[c])) return TableauDefect::column_not_strict;
  }
  for (Box b : row2) {
    if (b != Box::b2 && b != Box::b3) return TableauDefect::forbidden_row2_entry;
  }
  if (std::count(row1.begin(), row1.end(), Box::b0) > 1) {
    return TableauDefect::duplicate_zero;
  }
  if (std::count(row2.begin(), row2.end(), Box::b2) != 1) {
    return TableauDefect::basic_column_violation;
  }
  const auto ones = std::count(row1.begin(), row1.end(), Box::b1);
  if (ones != static_cast<long>(row2.size()) + 1) {
    return TableauDefect::wrong_one_count;
  }
  return TableauDefect::none;
}

MLTableau MLTableau::make(std::vector<Box> row1, std::vector<Box> row2) {
  TableauDefect d = check(row1, row2);
  if (d != TableauDefect::none) {
    throw std::invalid_argument(std::string("not marginally large: ") +
                                to_message(d));
  }
  return MLTableau(std::move(row1), std::move(row2));
}

MLTableau highest_tableau() {
  return MLTableau::make({Box::b1, Box::b1}, {Box::b2});
}

namespace {

// Cells (row, col) in far-eastern reading order.
std::vector<std::pair<int, int>> reading_cells(int n1, int n2) {
  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<std::size_t>(n1) + static_cast<std::size_t>(n2));
  for (int c = n1 - 1; c >= 0; --c) {
    cells.emplace_back(0, c);
    if (c < n2) cells.emplace_back(1, c);
  }
  return cells;
}

Box cell_at(const MLTableau& t, std::pair<int, int> cell) {
  return cell.first == 0 ? t.row1()[cell.second] : t.row2()[cell.second];
}

}  // namespace

std::vector<Box> reading(const MLTableau& t) {
  std::vector<Box> word;
  for (auto cell : reading_cells(static_cast<int>(t.row1().size()),
                                 static_cast<int>(t.row2().size()))) {
    word.push_back(cell_at(t, cell));
  }
  return word;
}

Signature signature(std::span<const Box> word, int i) {
  check_index(i);
  Signature sig;
  std::vector<int> plus_owner;  // surviving pluses, owners ascending
  for (int pos = 0; pos < static_cast<int>(word.size()); ++pos) {
    Box b = word[pos];
    for (int k = 0; k < box_eps(b, i); ++k) {
      if (!plus_owner.empty()) {
        plus_owner.pop_back();  // this minus cancels the nearest plus
      } else {
        ++sig.eps;
        sig.e_pos = pos;  // rightmost surviving minus so far
      }
    }
    for (int k = 0; k < box_phi(b, i); ++k) plus_owner.push_back(pos);
  }
  sig.phi_raw = static_cast<int>(plus_owner.size());
  if (!plus_owner.empty()) sig.f_pos = plus_owner.front();
  return sig;
}

MLTableau lower(const MLTableau& t, int i) {
  check_index(i);
  const auto word = reading(t);
  const auto cells = reading_cells(static_cast<int>(t.row1().size()),
                                   static_cast<int>(t.row2().size()));
  const Signature sig = signature(word, i);
  // The basic i-column always contributes a surviving plus, so f is total.
  if (!sig.f_pos) throw std::logic_error("lowering found no target box");
  const auto [row, col] = cells[*sig.f_pos];

  std::vector<Box> r1 = t.row1();
  std::vector<Box> r2 = t.row2();
  Box& target = row == 0 ? r1[col] : r2[col];
  const auto next = box_lower(target, i);
  if (!next) throw std::logic_error("target box has no i-arrow");
  target = *next;

  if (MLTableau::check(r1, r2) == TableauDefect::none) {
    return MLTableau::make(std::move(r1), std::move(r2));
  }
  // The changed box was the basic i-column; insert a fresh one to its left.
  r1.insert(r1.begin() + col, Box::b1);
  if (i == 2) r2.insert(r2.begin() + col, Box::b2);
  return MLTableau::make(std::move(r1), std::move(r2));
}

std::optional<MLTableau> raise(const MLTableau& t, int i) {
  check_index(i);
  const auto word = reading(t);
  const auto cells = reading_cells(static_cast<int>(t.row1().size()),
                                   static_cast<int>(t.row2().size()));
  const Signature sig = signature(word, i);
  if (!sig.e_pos) return std::nullopt;
  const auto [row, col] = cells[*sig.e_pos];

  std::vector<Box> r1 = t.row1();
  std::vector<Box> r2 = t.row2();
  Box& target = row == 0 ? r1[col] : r2[col];
  const auto prev = box_raise(target, i);
  if (!prev) throw std::logic_error("target box has no incoming i-arrow");
  target = *prev;

  if (MLTableau::check(r1, r2) == TableauDefect::none) {
    return MLTableau::make(std::move(r1), std::move(r2));
  }
  // The change produced a duplicate basic i-column; drop the changed column.
  r1.erase(r1.begin() + col);
  if (col < static_cast<int>(r2.size())) r2.erase(r2.begin() + col);
  return MLTableau::make(std::move(r1), std::move(r2));
}

TableauStats stats(const MLTableau& t) {
  TableauStats st;
  Weight sum;
  for (Box b : t.row1()) sum += box_weight(b);
  for (Box b : t.row2()) sum += box_weight(b);
  const int q = static_cast<int>(t.row2().size());
  const int p = static_cast<int>(t.row1().size()) - q;
  st.wt = sum - Weight{p, q};
  const auto word = reading(t);
  for (int i : {1, 2}) {
    st.eps[i - 1] = signature(word, i).eps;
    st.phi[i - 1] = st.eps[i - 1] + pairing(st.wt, i);
  }
  return st;
}

UCoords counts(const MLTableau& t) {
  const auto& r1 = t.row1();
  auto at_least = [&r1](Box w) {
    return static_cast<int>(
        std::count_if(r1.begin(), r1.end(), [w](Box b) { return b >= w; }));
  };
  const int t23 = static_cast<int>(
      std::count(t.row2().begin(), t.row2().end(), Box::b3));
  return UCoords::from_t(t23, at_least(Box::b2), at_least(Box::b3),
                         at_least(Box::b0) + at_least(Box::b3bar),
                         at_least(Box::b2bar), at_least(Box::b1bar));
}

std::optional<std::string> chain_violation(const UCoords& t) {
  const int vals[] = {t.u20, t.u11, t.u21, t.u12, t.u22, t.u13};
  const char* names[] = {"t23", "t12", "t13", "t10", "t12bar", "t11bar"};
  for (int k = 0; k < 6; ++k) {
    if (vals[k] < 0) return std::string(names[k]) + " >= 0";
  }
  if (t.t11bar() > t.t12bar()) return std::string("t11bar <= t12bar");
  if (2 * t.t12bar() > t.t10()) return std::string("t12bar <= t10/2");
  if (t.t10() > 2 * t.t13()) return std::string("t10/2 <= t13");
  if (t.t13() > t.t12()) return std::string("t13 <= t12");
  return std::nullopt;
}

MLTableau from_counts(const UCoords& t) {
  if (auto v = chain_violation(t)) {
    throw std::invalid_argument("no tableau realizes these counts: " + *v +
                                " fails");
  }
  const int half = t.t10() / 2;
  const int odd = t.t10() % 2;
  std::vector<Box> r1;
  auto put = [&r1](int n, Box b) {
    assert(n >= 0);
    r1.insert(r1.end(), static_cast<std::size_t>(n), b);
  };
  put(t.t23() + 2, Box::b1);
  put(t.t12() - t.t13(), Box::b2);
  put(t.t13() - half - odd, Box::b3);
  put(odd, Box::b0);
  put(half - t.t12bar(), Box::b3bar);
  put(t.t12bar() - t.t11bar(), Box::b2bar);
  put(t.t11bar(), Box::b1bar);
  std::vector<Box> r2{Box::b2};
  r2.insert(r2.end(), t.t23(), Box::b3);
  return MLTableau::make(std::move(r1), std::move(r2));
}

}  // namespace g2
