#pragma once

#include "lant/core.hpp"
#include "lant/types.hpp"

namespace lant {

/// Absolute tolerance on log values for zero/primality decisions. Double
/// logs plus an exactly assembled Gram leave roughly 1e-12; this adds
/// three orders of margin.
inline constexpr double kLogTolerance = 1e-9;

/// Pivots below this fraction of the largest initial pivot are treated as
/// rank deficiency.
inline constexpr double kPivotRelTolerance = 1e-12;

/// Output of the log-prime estimator for a candidate vector q.
struct LpeResult {
  CandidatePrimeVector q;
  Vector ln_q_hat;   ///< estimated log primes
  Vector ln_z_hat;   ///< predicted log integers, F_n(q) * ln_q_hat
  Vector residuals;  ///< ln z_n - ln_z_hat
  double rss = 0.0;
  double prediction_error = 0.0;  ///< squared norm of ln z_n - ln_z_hat
  double estimation_error = 0.0;  ///< squared norm of ln q - ln_q_hat
};

struct ConsistencyReport {
  bool valid = false;     ///< ln q matches ln_q_hat within tolerance
  bool complete = false;  ///< ln z_n matches ln_z_hat within tolerance
  bool consistent = false;
  double max_estimation_deviation = 0.0;
  double max_prediction_deviation = 0.0;
};

/// Solves the m x m system G x = b by Gaussian elimination with partial
/// pivoting. Throws SingularDesignError when a pivot falls below
/// kPivotRelTolerance times the largest initial pivot.
Vector solve_normal_equations(Matrix gram, Vector rhs);

/// Ordinary least squares for ln z_n = F_n(q) ln q + eps. The Gram matrix
/// and the integer weights of the right side are assembled exactly before
/// the double-precision solve.
LpeResult log_prime_estimator(const CandidatePrimeVector& q, Index n);

/// Sparse product F * ln_q_hat.
Vector predict(const FactorizationMatrix& f, const Vector& ln_q_hat);

ConsistencyReport classify(const LpeResult& result, double tol = kLogTolerance);
ConsistencyReport classify(const CandidatePrimeVector& q, Index n, double tol = kLogTolerance);

/// Runs the estimator with q = z_n and reads the primes off the nonzero
/// estimates. n >= 2.
PrimeVector recover_primes(Index n);

}  // namespace lant
