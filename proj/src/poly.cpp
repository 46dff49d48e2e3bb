#include "splitcount/poly.hpp"

#include <sstream>

#include "splitcount/errors.hpp"

namespace splitcount {

IntegerPoly poly_mul(const IntegerPoly &p, const IntegerPoly &q) {
  if (p.coeffs.empty() || q.coeffs.empty())
    return {};
  IntegerPoly r;
  r.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs.size(); ++j)
      r.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
  return r;
}

IntegerMatrix poly_eval(const IntegerPoly &p, const IntegerMatrix &a) {
  if (!a.is_square())
    throw Error(ErrorCode::DimensionMismatch, "poly_eval: not square");
  IntegerMatrix acc(a.rows());
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
    acc = shift_diagonal(mat_mul(acc, a), *it);
  return acc;
}

std::string to_string(const IntegerPoly &p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.coeffs.size(); k-- > 0;) {
    const Integer &c = p.coeffs[k];
    if (c == 0)
      continue;
    Integer mag = abs(c);
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << '-';
    if (mag != 1 || k == 0)
      os << mag.get_str();
    if (k >= 1)
      os << 'x';
    if (k >= 2)
      os << '^' << k;
    first = false;
  }
  if (first)
    os << '0';
  return os.str();
}

SplitPolySpec::SplitPolySpec(int a, int b) : a_(a), b_(b) {
  if (a < 0 || b < 0)
    throw Error(ErrorCode::InvalidArgument, "negative multiplicity");
  if (a + b < 1)
    throw Error(ErrorCode::InvalidArgument, "empty polynomial");
  if (b % 2 != 0)
    throw Error(ErrorCode::OddB,
                "(x+1)^" + std::to_string(b) +
                    " has odd multiplicity; determinant would be -1");
}

IntegerPoly SplitPolySpec::poly() const {
  IntegerPoly p{{1}};
  const IntegerPoly minus{{-1, 1}};
  const IntegerPoly plus{{1, 1}};
  for (int i = 0; i < a_; ++i)
    p = poly_mul(p, minus);
  for (int i = 0; i < b_; ++i)
    p = poly_mul(p, plus);
  return p;
}

std::string SplitPolySpec::to_string() const {
  auto factor = [](const char *base, int e) {
    std::string s = base;
    if (e > 1)
      s += "^" + std::to_string(e);
    return s;
  };
  std::string s;
  if (a_ > 0)
    s += factor("(x-1)", a_);
  if (b_ > 0)
    s += factor("(x+1)", b_);
  return s;
}

namespace {

// Divides p by (x - root) in place; returns false when the remainder is nonzero.
bool divide_linear(std::vector<Integer> &c, long root) {
  if (c.size() < 2)
    return false;
  std::vector<Integer> q(c.size() - 1);
  Integer carry = 0;
  for (std::size_t k = c.size(); k-- > 1;) {
    carry = c[k] + carry * root;
    q[k - 1] = carry;
  }
  Integer rem = c[0] + carry * root;
  if (rem != 0)
    return false;
  c = std::move(q);
  return true;
}

} // namespace

std::optional<std::pair<int, int>> split_multiplicities(const IntegerPoly &p) {
  if (!p.is_monic())
    return std::nullopt;
  std::vector<Integer> c = p.coeffs;
  int a = 0;
  int b = 0;
  while (divide_linear(c, 1))
    ++a;
  while (divide_linear(c, -1))
    ++b;
  if (c.size() != 1 || c[0] != 1)
    return std::nullopt;
  return std::make_pair(a, b);
}

} // namespace splitcount
