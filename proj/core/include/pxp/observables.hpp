#pragma once

#include "pxp/hilbert.hpp"
#include "pxp/linalg.hpp"

namespace pxp {

// (1/L) <psi| sum_j sigma^z_j |psi>.
double magnetization(const FockBasis& basis, const StateVector& state);

// |<initial|state>|^2.
double fidelity(const StateVector& state, const StateVector& initial);

}  // namespace pxp
