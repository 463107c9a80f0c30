#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "strops/coefficients.hpp"

namespace strops {

using Matrix = std::vector<std::vector<Integer>>;
using Vector = std::vector<Integer>;

namespace detail {

using Rational = boost::multiprecision::cpp_rational;

// Field arithmetic used by the elimination kernels. Integers are handled over Q
// and the caller decides what to do with non-integral answers.
struct RationalField {
  using value_type = Rational;
  value_type from(const Integer& v) const { return value_type(v); }
  bool is_zero(const value_type& v) const { return v == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type div(const value_type& a, const value_type& b) const { return a / b; }
};

struct PrimeField {
  std::int64_t p;
  using value_type = std::int64_t;
  value_type from(const Integer& v) const {
    Integer r = v % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
  }
  bool is_zero(value_type v) const { return v == 0; }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type sub(value_type a, value_type b) const { return ((a - b) % p + p) % p; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type inv(value_type a) const {
    value_type result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
};

// Row-reduces `rows` in place to reduced echelon form; returns the pivot columns.
template <class Field>
std::vector<std::size_t> row_reduce(const Field& f,
                                    std::vector<std::vector<typename Field::value_type>>& rows,
                                    std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t pick = r;
    while (pick < rows.size() && f.is_zero(rows[pick][c])) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[r], rows[pick]);
    auto lead = rows[r][c];
    for (auto& v : rows[r]) v = f.div(v, lead);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || f.is_zero(rows[i][c])) continue;
      auto factor = rows[i][c];
      for (std::size_t j = 0; j < columns; ++j) {
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class Field>
std::size_t rank_over(const Field& f, const Matrix& m) {
  if (m.empty()) return 0;
  std::size_t columns = m.front().size();
  std::vector<std::vector<typename Field::value_type>> rows;
  rows.reserve(m.size());
  for (const auto& row : m) {
    auto& out = rows.emplace_back();
    for (const auto& v : row) out.push_back(f.from(v));
  }
  return row_reduce(f, rows, columns).size();
}

template <class Field>
std::optional<std::vector<typename Field::value_type>> solve_over(const Field& f, const Matrix& a,
                                                                  const Vector& b) {
  std::size_t n = a.size();
  std::size_t columns = n == 0 ? 0 : a.front().size();
  std::vector<std::vector<typename Field::value_type>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    auto& out = rows.emplace_back();
    for (const auto& v : a[i]) out.push_back(f.from(v));
    out.push_back(f.from(b[i]));
  }
  auto pivots = row_reduce(f, rows, columns + 1);
  if (pivots.size() != columns) return std::nullopt;  // singular or inconsistent
  std::vector<typename Field::value_type> x(columns);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][columns];
  return x;
}

}  // namespace detail

/// Rank over the coefficient ring (over Q for the integers).
inline std::size_t rank(const Matrix& m, const Coefficients& coeffs) {
  if (coeffs.is_integers()) return detail::rank_over(detail::RationalField{}, m);
  return detail::rank_over(detail::PrimeField{coeffs.characteristic()}, m);
}

/// Unique solution of a·x = b over the coefficient ring, or nullopt when a is
/// not invertible over that ring (over Z: the solution must be integral).
inline std::optional<Vector> solve(const Matrix& a, const Vector& b, const Coefficients& coeffs) {
  if (a.size() != (a.empty() ? 0 : a.front().size())) return std::nullopt;
  if (coeffs.is_integers()) {
    auto x = detail::solve_over(detail::RationalField{}, a, b);
    if (!x) return std::nullopt;
    Vector out;
    for (const auto& q : *x) {
      if (denominator(q) != 1) return std::nullopt;
      out.push_back(numerator(q));
    }
    return out;
  }
  auto x = detail::solve_over(detail::PrimeField{coeffs.characteristic()}, a, b);
  if (!x) return std::nullopt;
  return Vector(x->begin(), x->end());
}

/// Inverse over the coefficient ring; over Z only unimodular matrices invert.
inline std::optional<Matrix> inverse(const Matrix& a, const Coefficients& coeffs) {
  std::size_t n = a.size();
  Matrix inv(n, Vector(n));
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n, 0);
    e[j] = 1;
    auto col = solve(a, e, coeffs);
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = (*col)[i];
  }
  return inv;
}

inline Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m.front().size(), Vector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

}  // namespace strops
