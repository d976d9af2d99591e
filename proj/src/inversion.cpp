#include "lant/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lant {

namespace {

using SparseRow = std::vector<std::pair<Index, BigInt>>;

// target -= scale * source, merging by column and dropping zeros.
SparseRow merge_subtract(const SparseRow& target, std::int64_t scale, const SparseRow& source) {
  SparseRow out;
  out.reserve(target.size() + source.size());
  auto it = target.begin();
  auto is = source.begin();
  while (it != target.end() || is != source.end()) {
    if (is == source.end() || (it != target.end() && it->first < is->first)) {
      out.push_back(*it++);
    } else if (it == target.end() || is->first < it->first) {
      out.emplace_back(is->first, -scale * is->second);
      ++is;
    } else {
      BigInt v = it->second - scale * is->second;
      if (v != 0) out.emplace_back(it->first, std::move(v));
      ++it;
      ++is;
    }
  }
  return out;
}

}  // namespace

IntegerTriangularMatrix IntegerTriangularMatrix::identity(Index n) {
  IntegerTriangularMatrix m;
  m.n = n;
  m.rows.resize(n);
  for (Index i = 0; i < n; ++i) m.rows[i].emplace_back(i + 1, 1);
  return m;
}

BigInt IntegerTriangularMatrix::entry(Index row, Index col) const {
  const auto& r = rows[row - 1];
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, Index c) { return e.first < c; });
  if (it != r.end() && it->first == col) return it->second;
  return 0;
}

Index IntegerTriangularMatrix::nonzero_count() const {
  Index count = 0;
  for (const auto& r : rows) count += static_cast<Index>(r.size());
  return count;
}

ExtendedElementary extended_elementary(Index i, Index n) {
  if (n < 1 || i < 1 || i > n)
    throw std::invalid_argument("extended_elementary: need 1 <= i <= n");
  return ExtendedElementary{i, n, factorization_vector(i, n)};
}

Int64Matrix ExtendedElementary::dense() const {
  Int64Matrix m = Int64Matrix::Identity(n, n);
  for (const auto& [row, value] : column.entries) {
    if (row == i)
      m(row - 1, i - 1) = 2 - value;
    else
      m(row - 1, i - 1) = -value;
  }
  return m;
}

void ExtendedElementary::apply(Vector& x) const {
  if (x.size() != n) throw std::invalid_argument("ExtendedElementary::apply: size mismatch");
  const double xi = x[i - 1];
  if (xi == 0.0) return;
  for (const auto& [row, value] : column.entries)
    if (row != i) x[row - 1] -= static_cast<double>(value) * xi;
}

IntegerTriangularMatrix invert_factorization_matrix(Index n) {
  if (n < 1) throw std::invalid_argument("invert_factorization_matrix: n must be >= 1");
  IntegerTriangularMatrix acc = IntegerTriangularMatrix::identity(n);
  // Applying E_i only rewrites rows at the nonzeros of f_{i|n}; row i
  // itself is already final (its diagonal factor is 2 - f_{i|n}[i] = 1).
  for (Index i = 1; i <= n; ++i) {
    const SparseColumn f = factorization_vector(i, n);
    const SparseRow& row_i = acc.rows[i - 1];
    for (const auto& [r, v] : f.entries)
      if (r != i) acc.rows[r - 1] = merge_subtract(acc.rows[r - 1], v, row_i);
  }
  return acc;
}

IntegerTriangularMatrix invert_by_forward_substitution(Index n) {
  if (n < 1) throw std::invalid_argument("invert_by_forward_substitution: n must be >= 1");
  // Sparse rows of F_n(z_n): row r holds (j, F[r,j]) for every j dividing r.
  std::vector<SparseRow> f_rows(n + 1);
  for (Index j = 1; j <= n; ++j) {
    const SparseColumn col = factorization_vector(j, n);
    for (const auto& [r, v] : col.entries) f_rows[r].emplace_back(j, v);
  }
  IntegerTriangularMatrix out;
  out.n = n;
  out.rows.resize(n);
  std::vector<BigInt> x(n + 1);
  for (Index c = 1; c <= n; ++c) {
    for (Index r = c; r <= n; ++r) {
      BigInt s = (r == c) ? 1 : 0;
      for (const auto& [j, v] : f_rows[r]) {
        if (j >= r || j < c) continue;  // diagonal handled by s; x[j] = 0 below c
        if (x[j] != 0) s -= v * x[j];
      }
      x[r] = std::move(s);
      if (x[r] != 0) out.rows[r - 1].emplace_back(c, x[r]);
    }
    for (Index r = c; r <= n; ++r) x[r] = 0;
  }
  return out;
}

Vector lpe_via_inverse(Index n) {
  if (n < 1) throw std::invalid_argument("lpe_via_inverse: n must be >= 1");
  Vector x(n);
  for (Index r = 1; r <= n; ++r) x[r - 1] = std::log(static_cast<double>(r));
  // Successive left-application of E_1 ... E_n, decomposed per power of i:
  // each sweep over the multiples of i^j subtracts x[i] once, totalling
  // f_{i|n}[r] subtractions at row r.
  for (Index i = 1; i <= n; ++i) {
    const double xi = x[i - 1];
    if (i == 1) continue;  // f_{1|n} = 1_n, but x[1] = ln 1 = 0: no-op
    if (xi == 0.0) continue;
    for (Index power = i; power <= n; power = (power <= n / i) ? power * i : n + 1)
      for (Index r = power; r <= n; r += power)
        if (r != i) x[r - 1] -= xi;
  }
  return x;
}

}  // namespace lant
