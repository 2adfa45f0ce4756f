#include "pxp/operators.hpp"

#include <cmath>
#include <tuple>

#include "pxp/error.hpp"

namespace pxp {

bool operator<(const PulseParams& lhs, const PulseParams& rhs) {
  return std::tie(lhs.a, lhs.b, lhs.w, lhs.lambda, lhs.delta_w, lhs.delta_lambda) <
         std::tie(rhs.a, rhs.b, rhs.w, rhs.lambda, rhs.delta_w, rhs.delta_lambda);
}

namespace {

OperatorMatrix empty_like(const FockBasis& basis) {
  const auto d = static_cast<Eigen::Index>(basis.dimension());
  return OperatorMatrix{ComplexMatrix::Zero(d, d), basis.length(), basis.boundary(), false};
}

bool is_up(Bitmask m, int site) { return site >= 0 && (m >> site) & 1u; }

bool neighbours_down(const FockBasis& basis, Bitmask m, int site) {
  return !is_up(m, basis.left_of(site)) && !is_up(m, basis.right_of(site));
}

}  // namespace

OperatorMatrix build_pxp_term(const FockBasis& basis) {
  OperatorMatrix out = empty_like(basis);
  const auto& states = basis.states();
  for (std::size_t col = 0; col < states.size(); ++col) {
    const Bitmask s = states[col];
    for (int j = 0; j < basis.length(); ++j) {
      if (!neighbours_down(basis, s, j)) continue;
      const auto row = basis.index_of(s ^ (Bitmask{1} << j));
      out.entries(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) = 1.0;
    }
  }
  return out;
}

OperatorMatrix build_sz_total(const FockBasis& basis) {
  OperatorMatrix out = empty_like(basis);
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    out.entries(k, k) = basis.sz_total(i);
  }
  return out;
}

OperatorMatrix assemble_hamiltonian(const OperatorMatrix& pxp, const OperatorMatrix& sz,
                                    const PulseParams& p) {
  OperatorMatrix out{p.w_eff() * pxp.entries - p.lambda_eff() * sz.entries, pxp.length, pxp.bc,
                     false};
  return out;
}

OperatorMatrix build_hamiltonian(const FockBasis& basis, const PulseParams& p) {
  return assemble_hamiltonian(build_pxp_term(basis), build_sz_total(basis), p);
}

OperatorMatrix build_C_operator(const FockBasis& basis) {
  OperatorMatrix out = empty_like(basis);
  const auto& states = basis.states();
  for (std::size_t col = 0; col < states.size(); ++col) {
    const Bitmask s = states[col];
    const auto c = static_cast<Eigen::Index>(col);
    for (int k = 0; k < basis.length(); ++k) {
      if (!neighbours_down(basis, s, k)) continue;
      out.entries(c, c) += is_up(s, k) ? 1.0 : -1.0;
    }
    for (int k = 0; k < basis.length(); ++k) {
      if (!is_up(s, k)) continue;
      const int l = basis.left_of(k);
      const int r = basis.right_of(k);
      // On the two-site ring both neighbours are the same site.
      const int targets[2] = {l, r == l ? -1 : r};
      for (int j : targets) {
        if (j < 0) continue;
        const Bitmask hopped = (s & ~(Bitmask{1} << k)) | (Bitmask{1} << j);
        if (!is_admissible(hopped, basis.length(), basis.boundary())) continue;
        out.entries(static_cast<Eigen::Index>(*basis.index_of(hopped)), c) += 1.0;
      }
    }
  }
  return out;
}

OperatorMatrix build_Hr(int a, int b, double w, double lambda, double delta_lambda) {
  if ((a != 1 && a != -1) || (b != 1 && b != -1)) {
    throw ValidationError("build_Hr: signs a and b must be +1 or -1");
  }
  const double field = lambda * b + delta_lambda;
  const double hop = std::sqrt(3.0) * a * w;
  ComplexMatrix h(2, 2);
  h << 3.0 * field, hop, hop, field;
  return OperatorMatrix{h, 3, BoundaryCondition::Periodic, true};
}

ComplexMatrix l3_zero_momentum_isometry(const FockBasis& basis) {
  if (basis.length() != 3 || basis.boundary() != BoundaryCondition::Periodic) {
    throw ValidationError("zero-momentum pair is defined for the L=3 periodic chain");
  }
  ComplexMatrix v = ComplexMatrix::Zero(static_cast<Eigen::Index>(basis.dimension()), 2);
  v(static_cast<Eigen::Index>(*basis.index_of(0)), 0) = 1.0;
  const double amp = 1.0 / std::sqrt(3.0);
  for (int j = 0; j < 3; ++j) {
    v(static_cast<Eigen::Index>(*basis.index_of(Bitmask{1} << j)), 1) = amp;
  }
  return v;
}

}  // namespace pxp
