#pragma once

#include <string>
#include <vector>

#include "pxp/hilbert.hpp"
#include "pxp/linalg.hpp"
#include "pxp/operators.hpp"
#include "pxp/propagator.hpp"
#include "pxp/protocols.hpp"

namespace pxp {

// Integral of exp(-2i (eta1 - eta2) lambda t) over [0, dT].
Complex first_order_integral_block(double lambda, double dT, double eta1, double eta2);

// Coefficient of C in the second-order generator of one random-period block
// at lambda dT = p pi/2: (eta1 - eta2 + eta3 - eta4) w^2 / (2 lambda).
double heff2_coefficient(double w, double lambda, const Etas& eta);
OperatorMatrix heff2_block(double w, double lambda, const Etas& eta, const FockBasis& basis);

// Coefficient of sum_j sigma~+_j in the first-order correction to the
// u4 cycle, for lambda dT = p pi/2 and binary eta (independent of eta).
Complex first_order_A(double lambda, double T);

// Same for the u5 cycle when lambda dT is an odd multiple of pi/2, and its
// dimensionless envelope cos(lambda T / 4).
Complex first_order_B(double lambda, double T);
double first_order_B_envelope(double lambda, double T);

struct SpecialPeriodFamily {
  ProtocolKind protocol = ProtocolKind::U4;
  int p = 0;
  double T_star = 0.0;
};

// u4: T* = 2 pi p / lambda for p = 1..p_max.
// u5: T* = (4 pi / lambda)(p + 1/2) for p = 0..p_max.
std::vector<SpecialPeriodFamily> special_periods(ProtocolKind protocol, double lambda, int p_max);

struct PauliCoeffs {
  double identity = 0.0;
  double z = 0.0;
  double x = 0.0;
  double y = 0.0;

  ComplexMatrix reconstruct() const;
};

PauliCoeffs pauli_decompose(const ComplexMatrix& h);

// Length of the u4 or u5 cycle for the given etas: T + sum_i eta_i dT.
double zigzag_cycle_length(double T, double dT, const Etas& eta);

// Piecewise-linear time seen by the field when only the field acts: it runs
// forward while b = +1 and backward while b = -1.
double zigzag_time(ProtocolKind which, double t, double T, double dT, const Etas& eta);

// exp(-i H_field tau(t)) with H_field = -lambda sum_j sigma^z_j.
Propagator u4_u5_zeroth_order(const FockBasis& basis, double lambda, double t, double T,
                              double dT, const Etas& eta, ProtocolKind which);

// --- L=3 periodic chain reduced to its two zero-momentum states ---

struct L3DipoleUnitaries {
  ComplexMatrix u_plus;
  ComplexMatrix u_minus;
  ComplexMatrix u1;
  ComplexMatrix u2;
};

L3DipoleUnitaries l3_dipole_unitaries(double w, double lambda, double delta_lambda, double T);

enum class L3Block { TMPair, PeriodicPair, SingleU1 };

std::string_view to_string(L3Block block);

// Generator of U1 U2 (time 2T), U1 U1 (time 2T) or U1 (time T).
PauliCoeffs l3_generator(L3Block block, double w, double lambda, double delta_lambda, double T);

// Closed-form small-dl coefficients of the single-U1 generator written with
// x0 = T sqrt(lambda^2 + 3 w^2): z -> A1, x -> A2; identity and y unset.
PauliCoeffs l3_single_u1_series(double w, double lambda, double delta_lambda, double T);

// Exact first-order-in-dl generator of a single U1, from rotating the field
// term through the four pulses.
PauliCoeffs l3_single_u1_first_order(double w, double lambda, double delta_lambda, double T);

// Bisection for a sign change of A2 (series form) in T on [lo, hi].
double l3_series_A2_root(double w, double lambda, double lo, double hi, double tol);

struct CheckRow {
  std::string check;
  std::string quantity;
  double value = 0.0;
  double reference = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct L3Sweep {
  std::vector<double> delta_lambdas;
  std::vector<double> periods;
};

std::vector<CheckRow> l3_series_check(double w, double lambda, L3Block which, const L3Sweep& sweep);

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace pxp
