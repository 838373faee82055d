#include "gspec/textio.hpp"

#include <cctype>
#include <sstream>

#include "gspec/errors.hpp"

namespace gspec {

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

struct Line {
  std::vector<Token> tokens;
  std::size_t offset;
};

// Non-empty lines split on blanks; '#' starts a comment.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    Line line{{}, pos};
    std::size_t i = pos;
    while (i < end) {
      const char c = text[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < end && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '#') ++j;
      line.tokens.push_back({text.substr(i, j - i), i});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

bool is_integer_text(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer to_integer(const Token& t) {
  if (!is_integer_text(t.text)) throw ParseError("expected an integer, got '" + std::string(t.text) + "'", t.offset);
  std::string s(t.text);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

Rational to_rational(const Token& t) {
  const auto slash = t.text.find('/');
  if (slash == std::string_view::npos) return Rational(to_integer(t));
  const Token num{t.text.substr(0, slash), t.offset};
  const Token den{t.text.substr(slash + 1), t.offset + slash + 1};
  const Integer d = to_integer(den);
  if (d == 0) throw ParseError("zero denominator", den.offset);
  Rational r(to_integer(num), d);
  r.canonicalize();
  return r;
}

std::size_t to_dimension(const Token& t) {
  const Integer v = to_integer(t);
  if (v < 1 || !v.fits_ulong_p()) throw ParseError("matrix dimension must be a positive count", t.offset);
  return v.get_ui();
}

template <class Cell, class Convert>
std::vector<Cell> parse_grid(std::string_view text, std::size_t& rows, std::size_t& cols, Convert convert) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("matrix: empty input", 0);
  const Line& head = lines.front();
  if (head.tokens.size() != 2) throw ParseError("matrix: first line must be 'rows cols'", head.offset);
  rows = to_dimension(head.tokens[0]);
  cols = to_dimension(head.tokens[1]);
  if (lines.size() != rows + 1) {
    const std::size_t at = lines.size() > rows + 1 ? lines[rows + 1].offset : text.size();
    throw ParseError("matrix: expected " + std::to_string(rows) + " rows, got " +
                         std::to_string(lines.size() - 1),
                     at);
  }
  std::vector<Cell> cells;
  cells.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& line = lines[r + 1];
    if (line.tokens.size() != cols)
      throw ParseError("matrix: row " + std::to_string(r + 1) + " has " + std::to_string(line.tokens.size()) +
                           " entries, expected " + std::to_string(cols),
                       line.offset);
    for (const auto& t : line.tokens) cells.push_back(convert(t));
  }
  return cells;
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  std::size_t rows = 0, cols = 0;
  auto cells = parse_grid<Integer>(text, rows, cols, to_integer);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = std::move(cells[i * cols + j]);
  return m;
}

RationalMatrix parse_rational_matrix(std::string_view text) {
  std::size_t rows = 0, cols = 0;
  auto cells = parse_grid<Rational>(text, rows, cols, to_rational);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, std::move(cells[i * cols + j]));
  return m;
}

IntPoly parse_poly(std::string_view text) {
  std::vector<Integer> coeffs;
  for (const auto& line : split_lines(text))
    for (const auto& t : line.tokens) coeffs.push_back(to_integer(t));
  if (coeffs.empty()) throw ParseError("polynomial: no coefficients", 0);
  return IntPoly(std::move(coeffs));
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

std::string format_rational_matrix(const RationalMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

std::string format_poly(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const auto c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i].get_str();
  return os.str();
}

std::string pretty_poly(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const auto c = f.coefficients();
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const Integer mag = abs(c[k]);
    if (first)
      os << (c[k] < 0 ? "-" : "");
    else
      os << (c[k] < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::vector<Graph> parse_graphs(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("no graph in input", 0);
  if (lines.front().tokens.size() >= 2) return {Graph::from_adjacency(parse_matrix(text))};
  std::vector<Graph> graphs;
  for (const auto& line : lines) {
    if (line.tokens.size() != 1) throw ParseError("graph6: one graph per line", line.offset);
    const Token& t = line.tokens.front();
    try {
      graphs.push_back(parse_graph6(t.text));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), t.offset + e.offset());
    }
  }
  return graphs;
}

}  // namespace gspec
