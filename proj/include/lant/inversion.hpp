#pragma once

#include <utility>
#include <vector>

#include "lant/core.hpp"
#include "lant/types.hpp"

namespace lant {

/// Exact n x n unit-lower-triangular integer matrix, row-sparse. Row i + 1
/// is rows[i], a col-ascending list of 1-based (col, value) pairs with
/// col <= row; the unit diagonal is stored explicitly.
struct IntegerTriangularMatrix {
  Index n = 0;
  std::vector<std::vector<std::pair<Index, BigInt>>> rows;

  static IntegerTriangularMatrix identity(Index n);

  /// Entry at 1-based (row, col); 0 if absent.
  BigInt entry(Index row, Index col) const;

  Index nonzero_count() const;

  bool operator==(const IntegerTriangularMatrix& other) const = default;
};

/// E_i = M_i(2) - f_{i|n} e_{i|n}^T: doubles row i and subtracts the
/// factorization column of i placed into column i, which eliminates
/// f_{i|n} while preserving the unit diagonal.
struct ExtendedElementary {
  Index i = 0;
  Index n = 0;
  SparseColumn column;  ///< f_{i|n}

  /// Dense materialization: identity except column i, whose off-diagonal
  /// entries are -f_{i|n} and whose diagonal is 2 - f_{i|n}[i] = 1.
  Int64Matrix dense() const;

  /// Left-multiplication applied in place to a vector: for every entry
  /// (r, v) of f_{i|n} with r != i, x[r] -= v * x[i] (1-based rows).
  void apply(Vector& x) const;
};

ExtendedElementary extended_elementary(Index i, Index n);

/// Exact inverse of F_n(z_n) as the accumulated product of extended
/// elementary matrices: starting from the identity, E_1, E_2, ..., E_n are
/// successively applied from the left, so the result is E_n ... E_1.
IntegerTriangularMatrix invert_factorization_matrix(Index n);

/// Independent route to the same inverse: column-wise forward substitution
/// solving F_n(z_n) x = e_c for every c. Must equal
/// invert_factorization_matrix(n) entry for entry.
IntegerTriangularMatrix invert_by_forward_substitution(Index n);

/// [F_n(z_n)]^{-1} ln z_n, evaluated by applying the elementary product to
/// the vector directly; never materializes the inverse.
Vector lpe_via_inverse(Index n);

}  // namespace lant
