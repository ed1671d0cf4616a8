#include "halphen/linalg.hpp"

#include <map>
#include <unordered_map>

#include "halphen/errors.hpp"

namespace halphen {
namespace {

// Column index for every monomial occurring in `polys`, grevlex-decreasing.
std::vector<Monomial> support(const std::vector<QMultiPoly>& polys) {
  std::vector<Monomial> ms;
  std::unordered_map<Monomial, int, MonomialHash> seen;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms())
      if (seen.emplace(m, 0).second) ms.push_back(m);
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    return MonomialOrder::grevlex().compare(a, b, kMaxVars) > 0;
  });
  return ms;
}

}  // namespace

std::vector<QVector> split_conditions(const std::vector<NfElem>& row, int extension_degree) {
  std::vector<QVector> out(static_cast<std::size_t>(extension_degree), QVector(row.size()));
  for (std::size_t j = 0; j < row.size(); ++j)
    for (int k = 0; k < extension_degree; ++k)
      out[static_cast<std::size_t>(k)][j] = row[j].coord(static_cast<std::size_t>(k));
  return out;
}

std::vector<QVector> coordinates_in_basis(const std::vector<QMultiPoly>& polys,
                                          const std::vector<QMultiPoly>& basis) {
  std::vector<QMultiPoly> all = basis;
  all.insert(all.end(), polys.begin(), polys.end());
  const auto ms = support(all);
  std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
  for (std::size_t i = 0; i < ms.size(); ++i) idx[ms[i]] = i;
  // Columns: basis elements then targets; rows: monomials.
  const std::size_t nb = basis.size(), np = polys.size();
  QMatrix m(ms.size(), nb + np);
  for (std::size_t j = 0; j < nb; ++j)
    for (const auto& [mono, c] : basis[j].terms()) m(idx[mono], j) = c;
  for (std::size_t j = 0; j < np; ++j)
    for (const auto& [mono, c] : polys[j].terms()) m(idx[mono], nb + j) = c;
  const auto piv = m.rref();
  for (std::size_t i = 0; i < piv.size(); ++i)
    if (piv[i] >= nb) fail("NotInSpan", "polynomial is not in the span of the basis");
  if (piv.size() != nb) fail("NotInSpan", "basis is linearly dependent");
  std::vector<QVector> out(np, QVector(nb));
  for (std::size_t j = 0; j < np; ++j)
    for (std::size_t i = 0; i < nb; ++i) out[j][i] = m(i, nb + j);
  return out;
}

QMultiPoly combine(const QVector& v, const std::vector<QMultiPoly>& basis) {
  QMultiPoly acc(basis.empty() ? 4 : basis.front().nvars());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) acc += basis[i] * v[i];
  return acc;
}

std::vector<QMultiPoly> echelon_basis(const std::vector<QMultiPoly>& polys) {
  const auto ms = support(polys);
  if (ms.empty()) return {};
  std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
  for (std::size_t i = 0; i < ms.size(); ++i) idx[ms[i]] = i;
  QMatrix m(polys.size(), ms.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& [mono, c] : polys[i].terms()) m(i, idx[mono]) = c;
  m.rref();
  const int nv = polys.front().nvars();
  std::vector<QMultiPoly> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<QMultiPoly::Term> t;
    for (std::size_t j = 0; j < ms.size(); ++j)
      if (!is_zero(m(i, j))) t.emplace_back(ms[j], m(i, j));
    out.emplace_back(nv, std::move(t));
  }
  return out;
}

std::vector<QMultiPoly> solve_and_complement(const LinearConditionSet& conditions,
                                             const std::vector<QMultiPoly>& ambient_basis,
                                             const std::vector<QMultiPoly>& modulus_space) {
  const std::size_t n = ambient_basis.size();
  std::vector<QVector> u0;
  if (conditions.rows.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      QVector v(n);
      v[i] = 1;
      u0.push_back(std::move(v));
    }
  } else {
    u0 = conditions.matrix().kernel();
  }
  if (u0.empty()) return {};

  std::vector<bool> keep(u0.size(), true);
  if (!modulus_space.empty()) {
    const auto mcoords = coordinates_in_basis(modulus_space, ambient_basis);
    // Intersection: kernel of [u_1 .. u_r | -m_1 .. -m_k].
    const std::size_t r = u0.size(), k = mcoords.size();
    QMatrix sys(n, r + k);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < r; ++a) sys(i, a) = u0[a][i];
      for (std::size_t b = 0; b < k; ++b) sys(i, r + b) = -mcoords[b][i];
    }
    QMatrix inter(0, r);
    for (const auto& v : sys.kernel()) inter.append_row(QVector(v.begin(), v.begin() + static_cast<long>(r)));
    if (inter.rows() > 0)
      for (auto p : inter.rref()) keep[p] = false;
  }
  std::vector<QMultiPoly> out;
  for (std::size_t a = 0; a < u0.size(); ++a)
    if (keep[a]) out.push_back(combine(u0[a], ambient_basis));
  return out;
}

}  // namespace halphen
