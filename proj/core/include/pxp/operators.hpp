#pragma once

#include <cstddef>

#include "pxp/hilbert.hpp"
#include "pxp/linalg.hpp"

namespace pxp {

// Dense matrix in a Fock basis, tagged with the chain it belongs to.
struct OperatorMatrix {
  ComplexMatrix entries;
  int length = 0;
  BoundaryCondition bc = BoundaryCondition::Periodic;
  bool zero_momentum_sector = false;  // the 2x2 L=3 model

  Eigen::Index dimension() const { return entries.rows(); }
};

struct PulseParams {
  int a = 1;  // sign of the PXP coupling
  int b = 1;  // sign of the field
  double w = 0.0;
  double lambda = 0.0;
  double delta_w = 0.0;
  double delta_lambda = 0.0;

  double w_eff() const { return a * w + delta_w; }
  double lambda_eff() const { return b * lambda + delta_lambda; }

  friend bool operator==(const PulseParams&, const PulseParams&) = default;
};

// Strict ordering usable as a map key (parameters are never NaN).
bool operator<(const PulseParams& lhs, const PulseParams& rhs);

OperatorMatrix build_pxp_term(const FockBasis& basis);
OperatorMatrix build_sz_total(const FockBasis& basis);

// H = (a w + dw) PXP - (b lambda + dl) Sz.
OperatorMatrix build_hamiltonian(const FockBasis& basis, const PulseParams& p);
OperatorMatrix assemble_hamiltonian(const OperatorMatrix& pxp, const OperatorMatrix& sz,
                                    const PulseParams& p);

// Projected sigma^z on every site whose neighbours are down, plus
// blockade-respecting hops of an excitation to a neighbouring site.
OperatorMatrix build_C_operator(const FockBasis& basis);

// L=3 periodic chain in the zero-momentum pair (vacuum, symmetric single
// excitation); index 0 is the vacuum, tau^z = +1 on it.
OperatorMatrix build_Hr(int a, int b, double w, double lambda, double delta_lambda);

// Rows: basis states; columns: vacuum and normalised symmetric one-up state.
ComplexMatrix l3_zero_momentum_isometry(const FockBasis& basis);

}  // namespace pxp
