#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "pxp/linalg.hpp"
#include "pxp/protocols.hpp"

namespace oracle {

using SparseOp = Eigen::SparseMatrix<pxp::Complex>;

// Every bitstring of length L, kept when no two neighbouring sites are both up.
std::vector<std::uint32_t> filtered_states(int length, bool periodic);

// Fibonacci recurrence (open) or Lucas recurrence (periodic).
std::uint64_t recurrence_dimension(int length, bool periodic);

// Operators on the full 2^L space, built from single-site 2x2 factors.
SparseOp full_pxp(int length, bool periodic);
SparseOp full_sz(int length);
SparseOp full_projected_raise(int length, bool periodic, bool raise);

// <s_i| op |s_j> for the listed constrained states.
pxp::ComplexMatrix restrict_to(const SparseOp& op, const std::vector<std::uint32_t>& states);

// Commutator of the projected raising and lowering sums, restricted.
pxp::ComplexMatrix commutator_C(int length, bool periodic, const std::vector<std::uint32_t>& states);

// exp(-i H t) by scaling-and-squaring Pade.
pxp::ComplexMatrix pade_expm(const pxp::ComplexMatrix& h, double t);

// Complex integral over [a, b] with composite Gauss-Legendre panels.
template <class F>
pxp::Complex integrate(F&& f, double a, double b, int panels = 64);

// Time the field has acted for at time t: +1 rate on b=+1 pulses, -1 on b=-1.
double field_clock(const std::vector<int>& field_signs, const pxp::Etas& eta, double T, double dT,
                   double t);

// Integral of exp(-2 i lambda clock(t)) over one cycle.
pxp::Complex zigzag_integral(const std::vector<int>& field_signs, double lambda, double T,
                             double dT, const pxp::Etas& eta);

// Random Hermitian matrix with entries of order one.
pxp::ComplexMatrix random_hermitian(Eigen::Index d, std::uint64_t seed);

// Generator h of a 2x2 unitary with u = exp(-i h t), from the SU(2) angle.
pxp::ComplexMatrix log_2x2(const pxp::ComplexMatrix& u, double t);

// Reduced length by walking the list: equal neighbours emit one and step
// by one, unequal neighbours are dropped together.
std::size_t reduced_length(std::uint32_t bits, int n);

}  // namespace oracle

#include "oracles_impl.hpp"
