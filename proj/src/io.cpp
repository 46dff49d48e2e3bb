#include "splitcount/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "splitcount/errors.hpp"

namespace splitcount::io {

namespace {

Integer parse_integer(const std::string &token) {
  Integer x;
  if (token.empty() || x.set_str(token, 10) != 0)
    throw Error(ErrorCode::ParseError, "not an integer: '" + token + "'");
  return x;
}

} // namespace

IntegerMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;)
      tokens.push_back(tok);
    lines.push_back(std::move(tokens));
  }
  if (lines.empty() || lines[0].size() != 1)
    throw Error(ErrorCode::ParseError, "first line must hold the dimension n");
  Integer n_big = parse_integer(lines[0][0]);
  if (n_big < 1 || n_big > 64)
    throw Error(ErrorCode::ParseError, "dimension out of range");
  const auto n = static_cast<std::size_t>(n_big.get_ui());
  if (lines.size() != n + 1)
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) +
                                           " matrix rows, found " +
                                           std::to_string(lines.size() - 1));
  IntegerMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lines[i + 1].size() != n)
      throw Error(ErrorCode::ParseError,
                  "row " + std::to_string(i + 1) + " does not have n entries");
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = parse_integer(lines[i + 1][j]);
  }
  return m;
}

IntegerMatrix read_matrix_file(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw Error(ErrorCode::ParseError, "cannot open matrix file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_matrix(buf.str());
}

std::string format_matrix(const IntegerMatrix &m) {
  std::ostringstream os;
  os << m.rows() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << m(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

namespace {

SplitPolySpec checked_spec(int a, int b, std::optional<int> n) {
  if (n && a + b != *n)
    throw Error(ErrorCode::DimensionMismatch,
                "degree " + std::to_string(a + b) + " does not match n = " +
                    std::to_string(*n));
  return SplitPolySpec(a, b);
}

} // namespace

SplitPolySpec parse_poly(std::string_view text, std::optional<int> n) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s.push_back(ch);
  int a = 0;
  int b = 0;
  std::size_t pos = 0;
  auto fail = [&](const std::string &why) {
    return Error(ErrorCode::ParseError,
                 "bad polynomial '" + std::string(text) + "': " + why);
  };
  if (s.empty())
    throw fail("empty");
  while (pos < s.size()) {
    if (s[pos] == '*' && pos > 0)
      ++pos;
    if (s.compare(pos, 5, "(x-1)") == 0 || s.compare(pos, 5, "(x+1)") == 0) {
      const bool minus = s[pos + 2] == '-';
      pos += 5;
      long e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
          ++pos;
        if (start == pos || pos - start > 3)
          throw fail("bad exponent");
        e = std::stol(s.substr(start, pos - start));
        if (e < 1)
          throw fail("exponent must be positive");
      }
      (minus ? a : b) += static_cast<int>(e);
    } else {
      throw fail("expected (x-1) or (x+1) at position " + std::to_string(pos));
    }
  }
  return checked_spec(a, b, n);
}

SplitPolySpec parse_split(std::string_view text, std::optional<int> n) {
  std::string s(text);
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw Error(ErrorCode::ParseError, "split must be 'a,b'");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    std::string sa = s.substr(0, comma);
    std::string sb = s.substr(comma + 1);
    int a = std::stoi(sa, &used_a);
    int b = std::stoi(sb, &used_b);
    if (used_a != sa.size() || used_b != sb.size())
      throw std::invalid_argument("trailing");
    return checked_spec(a, b, n);
  } catch (const std::logic_error &) {
    throw Error(ErrorCode::ParseError, "split must be 'a,b', got '" + s + "'");
  }
}

} // namespace splitcount::io
