#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lant/types.hpp"

namespace lant {

/// One column of a factorization matrix, stored as 1-based (row, value)
/// pairs with strictly ascending rows and all values >= 1.
struct SparseColumn {
  Index n = 0;
  std::vector<std::pair<Index, std::int64_t>> entries;

  /// Value at a 1-based row, 0 if the row carries no entry.
  std::int64_t value_at(Index row) const;

  /// Sum of all stored values (the total exponent mass of the column).
  std::int64_t value_sum() const;

  template <typename Scalar = std::int64_t>
  DenseVector<Scalar> dense() const {
    DenseVector<Scalar> v = DenseVector<Scalar>::Zero(n);
    for (const auto& [row, value] : entries) v[row - 1] = static_cast<Scalar>(value);
    return v;
  }
};

/// The integers 1..n in order.
struct NaturalVector {
  Index n = 0;
  Int64Vector values;
};

/// All primes <= n, ascending. `n` is the bound, values.size() is pi(n).
struct PrimeVector {
  Index n = 0;
  Int64Vector values;
};

/// m distinct integers in [1, n], required ascending at construction.
/// 1 is admitted as a candidate; its column is the dense all-ones column.
struct CandidatePrimeVector {
  Index n = 0;
  Int64Vector values;

  CandidatePrimeVector() = default;
  /// Throws std::invalid_argument unless values are strictly ascending and
  /// within [1, n].
  CandidatePrimeVector(Index n, Int64Vector values);

  Index size() const { return values.size(); }
};

/// Column-sparse n x m integer matrix F_n(q): column j records how often
/// q_j would divide each of 1..n if q_j were prime.
struct FactorizationMatrix {
  Index n = 0;
  CandidatePrimeVector q;
  std::vector<SparseColumn> columns;

  Index rows() const { return n; }
  Index cols() const { return static_cast<Index>(columns.size()); }

  /// Entry at 1-based (row, col).
  std::int64_t entry(Index row, Index col) const;

  template <typename Scalar = std::int64_t>
  DenseMatrix<Scalar> dense() const {
    DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(n, cols());
    for (Index j = 0; j < cols(); ++j)
      for (const auto& [row, value] : columns[j].entries)
        m(row - 1, j) = static_cast<Scalar>(value);
    return m;
  }
};

/// Largest e >= 0 with base^e <= limit, by integer power iteration.
/// Exact at base^e == limit boundaries where floating logs misclassify.
Index floor_log(Index base, Index limit);

/// Exact dot product of two row-sorted sparse columns.
std::int64_t column_dot(const SparseColumn& a, const SparseColumn& b);

/// The vector [1, 2, ..., n]. n >= 1.
NaturalVector naturals(Index n);

/// All primes <= n ascending; empty for n = 1.
PrimeVector primes_up_to(Index n);

/// Candidate vector holding the primes <= n.
CandidatePrimeVector prime_candidates(Index n);

/// Candidate vector holding 1..n.
CandidatePrimeVector natural_candidates(Index n);

/// Zero column with ones at rows i, 2i, ..., floor(n/i)*i. 1 <= i <= n.
SparseColumn periodic_elementary(Index i, Index n);

/// Column recording how often i would divide 1..n if i were prime:
/// the sum of the periodic elementary columns of i, i^2, ... up to n.
/// For i = 1 this is the all-ones column. 1 <= i <= n.
SparseColumn factorization_vector(Index i, Index n);

/// F_n(q) with column j = factorization_vector(q_j, n). q must be built
/// for the same n.
FactorizationMatrix candidate_factorization(const CandidatePrimeVector& q, Index n);

/// The n x pi(n) prime factorization matrix; row r holds the prime
/// exponents of r. n >= 2.
FactorizationMatrix prime_factorization_matrix(Index n);

}  // namespace lant
