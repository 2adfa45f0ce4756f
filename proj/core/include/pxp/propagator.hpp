#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

#include "pxp/hilbert.hpp"
#include "pxp/linalg.hpp"
#include "pxp/operators.hpp"

namespace pxp {

struct SpectralDecomposition {
  RealVector energies;   // ascending
  ComplexMatrix vectors;  // eigenvectors as columns
};

struct Propagator {
  ComplexMatrix unitary;
  std::optional<PulseParams> params;  // absent for composite products
  double duration = 0.0;

  Eigen::Index dimension() const { return unitary.rows(); }
};

SpectralDecomposition diagonalize(const ComplexMatrix& h);
SpectralDecomposition diagonalize(const OperatorMatrix& h);

// U = V diag(exp(-i E t)) V^dagger; t may be negative.
Propagator propagator(const SpectralDecomposition& decomp, double t);

// exp(-i H t) for a Hermitian matrix.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t);

StateVector evolve(const StateVector& state, const Propagator& u);

// Same as evolve without allocation; `scratch` is resized as needed.
void evolve_in_place(StateVector& state, const ComplexMatrix& u, StateVector& scratch);

// V (exp(-i E t) * (V^dagger psi)), for durations that are never reused.
void evolve_spectral(StateVector& state, const SpectralDecomposition& decomp, double t,
                     StateVector& scratch);

// Product of propagators listed in application order (index 0 acts first).
Propagator compose(std::initializer_list<const Propagator*> in_application_order);

struct EffectiveHamiltonian {
  ComplexMatrix generator;
  bool branch_ambiguous = false;  // an eigenphase sits within 1e-8 of +-pi
  double max_abs_phase = 0.0;
};

// H with U = exp(-i H t), eigenphases taken in (-pi, pi].
EffectiveHamiltonian extract_heff(const ComplexMatrix& u, double total_time);
EffectiveHamiltonian extract_heff(const Propagator& u, double total_time);

// Lazily diagonalises each distinct pulse Hamiltonian once and memoises
// propagators by (pulse, duration). Not synchronised: one cache per thread.
class PropagatorCache {
 public:
  explicit PropagatorCache(const FockBasis& basis, bool store_propagators = true);

  const SpectralDecomposition& spectrum(const PulseParams& p);
  const Propagator& get(const PulseParams& p, double duration);

  // Applies exp(-i H(p) duration); goes through get() when storing is on.
  void apply(const PulseParams& p, double duration, StateVector& state, StateVector& scratch);

  bool stores_propagators() const { return store_; }
  std::size_t spectra_size() const { return spectra_.size(); }
  std::size_t size() const { return propagators_.size(); }
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  Eigen::Index dimension() const { return pxp_.dimension(); }

 private:
  OperatorMatrix pxp_;
  OperatorMatrix sz_;
  bool store_;
  std::map<PulseParams, SpectralDecomposition> spectra_;
  std::map<std::pair<PulseParams, double>, Propagator> propagators_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

}  // namespace pxp
