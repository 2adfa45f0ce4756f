#include "pxp/propagator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "pxp/error.hpp"

namespace pxp {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kBranchWindow = 1e-8;

}  // namespace

SpectralDecomposition diagonalize(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) throw ValidationError("diagonalize: matrix is not square");
  const double scale = std::max(1.0, max_abs(h));
  const double defect = hermiticity_defect(h);
  if (defect > kHermitianTolerance * scale) {
    throw ValidationError("diagonalize: matrix is not Hermitian (defect " + std::to_string(defect) +
                          ")");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw RuntimeFailure("diagonalize: eigensolver did not converge");
  }
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

SpectralDecomposition diagonalize(const OperatorMatrix& h) { return diagonalize(h.entries); }

Propagator propagator(const SpectralDecomposition& decomp, double t) {
  if (!std::isfinite(t)) throw ValidationError("propagator: duration must be finite");
  const Eigen::Index d = decomp.energies.size();
  ComplexVector phases(d);
  for (Eigen::Index k = 0; k < d; ++k) phases(k) = std::polar(1.0, -decomp.energies(k) * t);
  Propagator out;
  out.unitary = (decomp.vectors * phases.asDiagonal()) * decomp.vectors.adjoint();
  out.duration = t;
  return out;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t) {
  return propagator(diagonalize(h), t).unitary;
}

StateVector evolve(const StateVector& state, const Propagator& u) {
  if (state.size() != u.dimension()) {
    throw ValidationError("evolve: state dimension " + std::to_string(state.size()) +
                          " does not match propagator dimension " +
                          std::to_string(u.dimension()));
  }
  return u.unitary * state;
}

void evolve_in_place(StateVector& state, const ComplexMatrix& u, StateVector& scratch) {
  if (state.size() != u.cols()) throw ValidationError("evolve: dimension mismatch");
  scratch.resize(state.size());
  scratch.noalias() = u * state;
  state.swap(scratch);
}

void evolve_spectral(StateVector& state, const SpectralDecomposition& decomp, double t,
                     StateVector& scratch) {
  if (state.size() != decomp.vectors.cols()) throw ValidationError("evolve: dimension mismatch");
  scratch.resize(state.size());
  scratch.noalias() = decomp.vectors.adjoint() * state;
  for (Eigen::Index k = 0; k < scratch.size(); ++k) {
    scratch(k) *= std::polar(1.0, -decomp.energies(k) * t);
  }
  state.noalias() = decomp.vectors * scratch;
}

Propagator compose(std::initializer_list<const Propagator*> in_application_order) {
  Propagator out;
  bool first = true;
  for (const Propagator* p : in_application_order) {
    if (first) {
      out.unitary = p->unitary;
      first = false;
    } else {
      if (p->dimension() != out.dimension()) throw ValidationError("compose: dimension mismatch");
      out.unitary = p->unitary * out.unitary;
    }
    out.duration += p->duration;
  }
  if (first) throw ValidationError("compose: empty product");
  return out;
}

EffectiveHamiltonian extract_heff(const ComplexMatrix& u, double total_time) {
  if (!(total_time > 0.0)) throw ValidationError("extract_heff: total_time must be positive");
  if (u.rows() != u.cols()) throw ValidationError("extract_heff: matrix is not square");
  Eigen::ComplexSchur<ComplexMatrix> schur(u);
  const ComplexMatrix& z = schur.matrixU();
  const ComplexMatrix& tri = schur.matrixT();
  const Eigen::Index d = u.rows();
  RealVector phases(d);
  EffectiveHamiltonian out;
  for (Eigen::Index k = 0; k < d; ++k) {
    double phi = std::arg(tri(k, k));
    if (phi <= -std::numbers::pi) phi = std::numbers::pi;
    phases(k) = phi;
    out.max_abs_phase = std::max(out.max_abs_phase, std::abs(phi));
    if (std::numbers::pi - std::abs(phi) < kBranchWindow) out.branch_ambiguous = true;
  }
  // U = Z diag(e^{i phi}) Z^dagger and U = exp(-i H t) give H = -Z diag(phi) Z^dagger / t.
  ComplexMatrix h = -(z * phases.cast<Complex>().asDiagonal() * z.adjoint()) / total_time;
  out.generator = 0.5 * (h + h.adjoint());
  return out;
}

EffectiveHamiltonian extract_heff(const Propagator& u, double total_time) {
  return extract_heff(u.unitary, total_time);
}

PropagatorCache::PropagatorCache(const FockBasis& basis, bool store_propagators)
    : pxp_(build_pxp_term(basis)), sz_(build_sz_total(basis)), store_(store_propagators) {}

const SpectralDecomposition& PropagatorCache::spectrum(const PulseParams& p) {
  auto it = spectra_.find(p);
  if (it == spectra_.end()) {
    it = spectra_.emplace(p, diagonalize(assemble_hamiltonian(pxp_, sz_, p))).first;
  }
  return it->second;
}

const Propagator& PropagatorCache::get(const PulseParams& p, double duration) {
  const auto key = std::make_pair(p, duration);
  auto it = propagators_.find(key);
  if (it != propagators_.end()) {
    ++hits_;
    return it->second;
  }
  ++misses_;
  Propagator u = propagator(spectrum(p), duration);
  u.params = p;
  return propagators_.emplace(key, std::move(u)).first->second;
}

void PropagatorCache::apply(const PulseParams& p, double duration, StateVector& state,
                            StateVector& scratch) {
  if (store_) {
    evolve_in_place(state, get(p, duration).unitary, scratch);
  } else {
    evolve_spectral(state, spectrum(p), duration, scratch);
  }
}

}  // namespace pxp
