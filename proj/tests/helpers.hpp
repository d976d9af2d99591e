#pragma once

#include <vector>

#include "lant/core.hpp"
#include "lant/inversion.hpp"
#include "lant/types.hpp"

// Small exact-arithmetic utilities shared by the unit and acceptance
// suites. They intentionally use naive sparse loops so that checks do not
// go through the code paths under test.
namespace lant::testing {

inline bool equal_values(const Int64Vector& a, const Int64Vector& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// Sparse rows of a factorization matrix: row r as (1-based col, value).
inline std::vector<std::vector<std::pair<Index, std::int64_t>>> sparse_rows(
    const FactorizationMatrix& f) {
  std::vector<std::vector<std::pair<Index, std::int64_t>>> rows(f.n + 1);
  for (Index j = 0; j < f.cols(); ++j)
    for (const auto& [r, v] : f.columns[j].entries) rows[r].emplace_back(j + 1, v);
  return rows;
}

// Exact product X * F with X row-sparse and F column-sparse; returns dense
// rows indexed [i][j], 0-based.
inline std::vector<std::vector<BigInt>> multiply(const IntegerTriangularMatrix& x,
                                                 const FactorizationMatrix& f) {
  const auto f_rows = sparse_rows(f);
  std::vector<std::vector<BigInt>> out(x.n, std::vector<BigInt>(f.cols()));
  for (Index i = 0; i < x.n; ++i)
    for (const auto& [k, xv] : x.rows[i])
      for (const auto& [j, fv] : f_rows[k]) out[i][j - 1] += xv * fv;
  return out;
}

// X * F == identity, exactly.
inline bool product_is_identity(const IntegerTriangularMatrix& x, const FactorizationMatrix& f) {
  if (x.n != f.n || f.cols() != x.n) return false;
  const auto prod = multiply(x, f);
  for (Index i = 0; i < x.n; ++i)
    for (Index j = 0; j < x.n; ++j)
      if (prod[i][j] != ((i == j) ? 1 : 0)) return false;
  return true;
}

}  // namespace lant::testing
