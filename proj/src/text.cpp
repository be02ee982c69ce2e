#include "g2crystal/text.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace g2 {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  void expect(char c) {
    if (done() || peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  }
  int integer() {
    std::size_t start = pos;
    if (!done() && (peek() == '-' || peek() == '+')) ++pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(s.data() + start, s.data() + pos, value);
    if (ec != std::errc{} || ptr != s.data() + pos || pos == start) {
      throw ParseError("expected an integer", start);
    }
    return value;
  }
};

Box box_from_int(int v, std::size_t pos) {
  switch (v) {
    case 1: return Box::b1;
    case 2: return Box::b2;
    case 3: return Box::b3;
    case 0: return Box::b0;
    case -3: return Box::b3bar;
    case -2: return Box::b2bar;
    case -1: return Box::b1bar;
    default:
      throw ParseError("box entry must be one of 1,2,3,0,-3,-2,-1", pos);
  }
}

std::vector<Box> parse_row(Cursor& c) {
  std::vector<Box> row;
  if (c.done() || c.peek() == '/') return row;
  while (true) {
    std::size_t at = c.pos;
    row.push_back(box_from_int(c.integer(), at));
    if (c.done() || c.peek() != ',') break;
    ++c.pos;
  }
  return row;
}

}  // namespace

Weight parse_weight(std::string_view s) {
  Cursor c{s};
  Weight w;
  w.h1 = c.integer();
  c.expect(',');
  w.h2 = c.integer();
  if (!c.done()) throw ParseError("trailing characters after weight", c.pos);
  return w;
}

Monomial parse_monomial(std::string_view s) {
  Cursor c{s};
  c.skip_ws();
  if (c.done()) throw ParseError("empty monomial", c.pos);
  if (c.peek() == '1') {
    std::size_t at = c.pos;
    ++c.pos;
    c.skip_ws();
    if (!c.done()) {
      throw ParseError("constant monomial '1' admits no further factors", at);
    }
    return Monomial{};
  }
  Monomial n;
  while (!c.done()) {
    c.expect('Y');
    std::size_t at = c.pos;
    int i = c.integer();
    if (i != 1 && i != 2) throw ParseError("variable index must be 1 or 2", at);
    c.expect('(');
    int m = c.integer();
    c.expect(')');
    int e = 1;
    if (!c.done() && c.peek() == '^') {
      ++c.pos;
      e = c.integer();
    }
    n.mul_var(i, m, e);
    c.skip_ws();
  }
  return n;
}

MLTableau parse_tableau(std::string_view s) {
  Cursor c{s};
  auto row1 = parse_row(c);
  c.expect('/');
  auto row2 = parse_row(c);
  if (!c.done()) throw ParseError("trailing characters after tableau", c.pos);
  return MLTableau::make(std::move(row1), std::move(row2));
}

TensorElement parse_tensor(std::string_view s) {
  auto hash = s.find('#');
  if (hash == std::string_view::npos) {
    throw ParseError("expected '#' between tableau and weight", s.size());
  }
  MLTableau t = parse_tableau(s.substr(0, hash));
  Cursor c{s, hash + 1};
  Weight lambda;
  lambda.h1 = c.integer();
  c.expect(',');
  lambda.h2 = c.integer();
  if (!c.done()) throw ParseError("trailing characters after weight", c.pos);
  return TensorElement(std::move(t), lambda);
}

std::string to_string(Weight w) {
  return std::to_string(w.h1) + "," + std::to_string(w.h2);
}

std::string to_string(Box b) {
  switch (b) {
    case Box::b1: return "1";
    case Box::b2: return "2";
    case Box::b3: return "3";
    case Box::b0: return "0";
    case Box::b3bar: return "-3";
    case Box::b2bar: return "-2";
    case Box::b1bar: return "-1";
  }
  return "?";
}

std::string to_string(const Monomial& n) {
  if (n.is_one()) return "1";
  std::string out;
  for (const auto& [key, e] : n.exponents()) {
    if (!out.empty()) out += ' ';
    out += 'Y';
    out += std::to_string(key.first);
    out += '(';
    out += std::to_string(key.second);
    out += ')';
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

std::string to_string(const MLTableau& t) {
  auto row = [](const std::vector<Box>& r) {
    std::string out;
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k > 0) out += ',';
      out += to_string(r[k]);
    }
    return out;
  };
  return row(t.row1()) + "/" + row(t.row2());
}

std::string to_string(const TensorElement& x) {
  return to_string(x.tableau()) + "#" + to_string(x.lambda());
}

}  // namespace g2
