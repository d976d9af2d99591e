#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace lant {

using Index = Eigen::Index;

// Exact integer scalar for the inversion and determinant paths. Kept out of
// Eigen expressions; exact-arithmetic kernels run on std containers.
using BigInt = boost::multiprecision::cpp_int;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = DenseVector<double>;
using Matrix = DenseMatrix<double>;
using Int64Vector = DenseVector<std::int64_t>;
using Int64Matrix = DenseMatrix<std::int64_t>;

}  // namespace lant
