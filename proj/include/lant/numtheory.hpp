#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "lant/types.hpp"

namespace lant {

enum class NtfPath { lant, oracle };

/// Scalar result of a number-theoretic function together with the route
/// that produced it. error_estimate is set for quadrature and
/// series-truncation results.
template <typename T>
struct NtfResult {
  T value{};
  NtfPath path = NtfPath::lant;
  std::optional<double> error_estimate;
};

using NtfValue = NtfResult<double>;
using ZetaValue = NtfResult<std::complex<double>>;

enum class Primality { composite = 0, prime = 1, indeterminate = 2 };

struct ConjectureSample {
  std::int64_t n = 0;
  double ld = 0.0;
  double li = 0.0;
  double ratio = 0.0;
};

/// Rounding tolerance for the estimate/log ratio in is_prime; looser than
/// the regression tolerance because division by ln i amplifies error for
/// small i.
inline constexpr double kIsPrimeTolerance = 1e-6;

/// Primality read off the estimated log primes: ln_q_hat[i] / ln i rounds
/// to 1 for primes and 0 for composites. i = 1 is indeterminate; i = 0 is
/// not defined (invalid-argument). Throws NumericalInconsistencyError when
/// the ratio misses {0, 1} by more than the tolerance.
Primality is_prime(Index i, Index n);
/// Same decision from precomputed estimates (lpe_via_inverse(n)).
Primality is_prime(const Vector& ln_q_hat, Index i);

/// pi(n) as the sum of is_prime over 2..n, one estimator pass.
Index prime_count(Index n);

/// First Chebyshev function as the plain sum of all estimated log primes.
double chebyshev_first(Index n);

/// Second Chebyshev function via theta: sum of chebyshev_first(x^(1/k))
/// truncated at the first k with 2^k > x (all further terms are exactly
/// zero). The truncation index is derived from integer comparisons. x
/// values above n_cap are rejected.
NtfValue chebyshev_second(double x, Index n_cap = 2'000'000);

/// Von Mangoldt function as the estimate-weighted Iverson sum over the
/// row of F_n(z_n): entries j with F[i,j] * ln_q_hat[j] = ln i contribute
/// ln_q_hat[j]. 2 <= i <= n.
double von_mangoldt(Index i, Index n);
/// Same with precomputed estimates.
double von_mangoldt(const Vector& ln_q_hat, Index i);

/// Checks psi(x) = sum of von Mangoldt over 2..floor(x) against
/// chebyshev_second(x) within 1e-8.
bool von_mangoldt_psi_check(double x);

/// Riemann zeta through the Dirichlet eta series, valid for Re(s) > 0 away
/// from the prefactor poles at s = 1 + 2 pi i k / ln 2. error_estimate is
/// the alternating-series bound |prefactor| * (terms+1)^(-Re s).
ZetaValue zeta_eta(std::complex<double> s, std::int64_t terms = 1'000'000);

/// Li(x) = integral from 2 to x of dt/ln t, adaptive Simpson quadrature at
/// absolute tolerance 1e-10. x >= 2.
NtfValue logarithmic_integral(double x);

/// Empirical check of |pi(x) - Li(x)| <= sqrt(x) ln x / (8 pi), with pi
/// from the estimator path and Li from quadrature. Domain x >= 2657.
bool schoenfield_check(double x);

/// ld(n) = ln det(F^T F) for the prime factorization matrix F of n.
/// Exact big-integer determinant when pi(n) <= 200, floating log-det via
/// Cholesky otherwise.
double ld(Index n);
/// The two determinant routes, individually addressable.
double ld_exact(Index n);
double ld_floating(Index n);

/// Samples (n, ld(n), Li(n), ld/Li) over an inclusive range; exploratory
/// output with no pass/fail semantics.
std::vector<ConjectureSample> conjecture_scan(Index n_min, Index n_max, Index step);

}  // namespace lant
