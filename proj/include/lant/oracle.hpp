#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "lant/core.hpp"
#include "lant/types.hpp"

// Classical reference implementations used as test ground truth. These
// deliberately share no computational code with the modules they check;
// only the plain data types are common.
namespace lant::oracle {

/// Canonical prime-power representation of n >= 2.
struct Factorization {
  std::int64_t n = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> factors;  // (prime, exponent), ascending
};

/// Sieve of Eratosthenes (odd-only variant). n >= 1.
PrimeVector sieve(Index n);

/// pi(n) from the sieve.
Index prime_count(Index n);

/// Trial-division factorization. n >= 2.
Factorization factorize(std::int64_t n);

/// Largest e with p^e dividing r (p >= 2, r >= 1).
std::int64_t p_adic_valuation(std::int64_t p, std::int64_t r);

/// First Chebyshev function, definitional: sum of ln p over primes <= n.
double chebyshev_first(Index n);

/// Second Chebyshev function, definitional: sum of ln p over prime powers
/// p^k <= x.
double chebyshev_second(double x);

/// Classical von Mangoldt: ln p when i = p^k, else 0. i >= 1.
double von_mangoldt(std::int64_t i);

/// Direct Dirichlet series for zeta, valid for Re(s) > 1. Returns the
/// partial sum; tail_bound receives the integral tail estimate.
std::complex<double> zeta_direct(std::complex<double> s, std::int64_t terms,
                                 double* tail_bound = nullptr);

/// Euler product over primes <= prime_bound, valid for Re(s) > 1.
std::complex<double> zeta_euler(std::complex<double> s, Index prime_bound);

/// Fixed-order composite Simpson quadrature of 1/ln t on [2, x] at a
/// resolution unrelated to the adaptive main path.
double logarithmic_integral(double x);

/// Normal equations solved at 50 significant digits: exact integer Gram,
/// high-precision logs, elimination with partial pivoting. The design
/// matrix is rebuilt here from repeated division, independent of the
/// column construction used elsewhere.
Vector ols_reference(const CandidatePrimeVector& q, Index n);

}  // namespace lant::oracle
