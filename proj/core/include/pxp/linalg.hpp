#pragma once

#include <complex>

#include <Eigen/Dense>

namespace pxp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using StateVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

// Largest elementwise modulus.
double max_abs(const ComplexMatrix& m);

// max |H - H^dagger| elementwise.
double hermiticity_defect(const ComplexMatrix& h);

// max |U^dagger U - I| elementwise.
double unitarity_defect(const ComplexMatrix& u);

// max |A - B| elementwise; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace pxp
