#pragma once

#include <cstddef>
#include <vector>

#include "halphen/number_field.hpp"
#include "halphen/poly.hpp"
#include "halphen/rational.hpp"

namespace halphen {

/// Row-major dense matrix over a field.
template <class K>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void append_row(const std::vector<K>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
  }
  std::vector<K> row(std::size_t i) const {
    return {a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_)};
  }

  /// In-place reduced row echelon form; returns pivot columns.  Zero rows
  /// are dropped.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && kzero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      const K inv = K(1) / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || kzero((*this)(i, c))) continue;
        const K f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          if (!kzero((*this)(r, j))) (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    rows_ = r;
    a_.resize(rows_ * cols_);
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  /// Basis of the right kernel: one vector per non-pivot column, with a 1 in
  /// that column, in increasing column order.
  std::vector<std::vector<K>> kernel() const {
    Matrix m = *this;
    const auto piv = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<K> v(cols_, K(0));
      v[f] = K(1);
      for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

/// Rational linear conditions on unknowns a_1..a_N (one row per condition).
struct LinearConditionSet {
  std::size_t unknowns = 0;
  std::vector<QVector> rows;

  void add(QVector row) { rows.push_back(std::move(row)); }
  QMatrix matrix() const {
    QMatrix m(0, unknowns);
    for (const auto& r : rows) m.append_row(r);
    return m;
  }
};

/// Split a condition with coefficients in Q(w) of degree e into e rational
/// conditions, one per power-basis coordinate.
std::vector<QVector> split_conditions(const std::vector<NfElem>& row, int extension_degree);

/// Solution space U0 of `conditions` in ambient-basis coordinates, then a
/// complement U of U0 ∩ span(modulus_space) inside U0, returned as
/// polynomials.  Deterministic: kernel vectors come from non-pivot columns of
/// the reduced condition matrix; of those, the ones whose index is a pivot of
/// the reduced intersection are discarded.
std::vector<QMultiPoly> solve_and_complement(const LinearConditionSet& conditions,
                                             const std::vector<QMultiPoly>& ambient_basis,
                                             const std::vector<QMultiPoly>& modulus_space);

/// Coordinates of each polynomial of `polys` with respect to `basis`
/// (which must be linearly independent and span them).  Throws
/// HalphenError(NotInSpan) otherwise.
std::vector<QVector> coordinates_in_basis(const std::vector<QMultiPoly>& polys,
                                          const std::vector<QMultiPoly>& basis);

/// Σ v_i basis_i
QMultiPoly combine(const QVector& v, const std::vector<QMultiPoly>& basis);

/// Basis of the span of the given polynomials (reduced echelon over their
/// monomials, deterministic).
std::vector<QMultiPoly> echelon_basis(const std::vector<QMultiPoly>& polys);

}  // namespace halphen
