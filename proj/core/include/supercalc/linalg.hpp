#pragma once

// Sparse exact row reduction over a field (Rational or GaussRational).

#include <map>
#include <optional>
#include <vector>

#include "supercalc/scalar.hpp"

namespace supercalc {

template <typename T>
using SparseRow = std::map<int, T>;

namespace detail {
inline bool field_is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool field_is_zero(const GaussRational& v) { return v.is_zero(); }
inline Rational field_inverse(const Rational& v) { return Rational(1) / v; }
inline GaussRational field_inverse(const GaussRational& v) { return v.inverse(); }
}  // namespace detail

/// Reduced row echelon form with leftmost pivots.
template <typename T>
struct Rref {
  int cols = 0;
  std::vector<SparseRow<T>> rows;  // one per pivot, pivot entry 1
  std::vector<int> pivots;         // ascending

  int rank() const { return static_cast<int>(pivots.size()); }
};

template <typename T>
void axpy_row(SparseRow<T>& target, const SparseRow<T>& src, const T& factor) {
  for (const auto& [c, v] : src) {
    auto it = target.find(c);
    if (it == target.end()) {
      T add = v * factor;
      if (!detail::field_is_zero(add)) target.emplace(c, std::move(add));
    } else {
      it->second += v * factor;
      if (detail::field_is_zero(it->second)) target.erase(it);
    }
  }
}

/// Row-reduce; rows may be given in any order. Column order defines the
/// pivot preference (leftmost first).
template <typename T>
Rref<T> row_reduce(std::vector<SparseRow<T>> input, int cols) {
  Rref<T> out;
  out.cols = cols;
  // Incremental elimination: keep a set of echelon rows keyed by pivot.
  std::map<int, SparseRow<T>> echelon;
  for (auto& row : input) {
    // reduce row against existing pivots
    while (!row.empty()) {
      const int lead = row.begin()->first;
      auto it = echelon.find(lead);
      if (it == echelon.end()) break;
      T factor = -row.begin()->second;
      axpy_row(row, it->second, factor);
    }
    if (row.empty()) continue;
    const int lead = row.begin()->first;
    T inv = detail::field_inverse(row.begin()->second);
    for (auto& [c, v] : row) v *= inv;
    echelon.emplace(lead, std::move(row));
  }
  // back substitution, from the rightmost pivot leftwards
  for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
    const int p = it->first;
    for (auto jt = echelon.begin(); jt != echelon.end() && jt->first < p; ++jt) {
      auto hit = jt->second.find(p);
      if (hit == jt->second.end()) continue;
      T factor = -hit->second;
      axpy_row(jt->second, it->second, factor);
    }
  }
  for (auto& [p, row] : echelon) {
    out.pivots.push_back(p);
    out.rows.push_back(std::move(row));
  }
  return out;
}

/// Kernel basis of the linear map whose matrix has the given rows. One
/// vector per free column (ascending), with that free variable set to 1.
template <typename T>
std::vector<SparseRow<T>> kernel_basis(const Rref<T>& r) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(r.cols), false);
  for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<SparseRow<T>> basis;
  for (int f = 0; f < r.cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    SparseRow<T> v;
    v.emplace(f, T(1));
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      auto it = r.rows[i].find(f);
      if (it != r.rows[i].end()) v.emplace(r.pivots[i], -it->second);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solve A z = b where A is given column-wise as rows of the transposed
/// system is awkward; instead A is given by rows and b by a dense vector.
/// Free variables are set to zero. Returns nullopt if inconsistent.
template <typename T>
std::optional<SparseRow<T>> solve(const std::vector<SparseRow<T>>& a, const std::vector<T>& b, int cols) {
  std::vector<SparseRow<T>> aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    SparseRow<T> row = a[i];
    if (!detail::field_is_zero(b[i])) row.emplace(cols, b[i]);
    aug.push_back(std::move(row));
  }
  Rref<T> r = row_reduce(std::move(aug), cols + 1);
  SparseRow<T> z;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (r.pivots[i] == cols) return std::nullopt;
    auto it = r.rows[i].find(cols);
    if (it != r.rows[i].end()) z.emplace(r.pivots[i], it->second);
  }
  return z;
}

template <typename T>
int matrix_rank(std::vector<SparseRow<T>> rows, int cols) {
  return row_reduce(std::move(rows), cols).rank();
}

}  // namespace supercalc
