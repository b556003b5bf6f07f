#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace skeinlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-9;

/// Looser tolerance for sums of many irrational terms that should land on
/// an integer (e.g. genus dimension formulas).
inline constexpr double kIntegerTol = 1e-6;

struct CategoryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when the S-matrix is not invertible (non-modular input).
struct SingularS : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when some normalized S_{0p} vanishes within tolerance.
struct ZeroSEntry : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeGuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace skeinlab
