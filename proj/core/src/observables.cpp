#include "pxp/observables.hpp"

#include <string>

#include "pxp/error.hpp"

namespace pxp {

double magnetization(const FockBasis& basis, const StateVector& state) {
  if (static_cast<std::size_t>(state.size()) != basis.dimension()) {
    throw ValidationError("magnetization: state has dimension " + std::to_string(state.size()) +
                          ", basis has " + std::to_string(basis.dimension()));
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    acc += std::norm(state(i)) * basis.sz_total(static_cast<std::size_t>(i));
  }
  return acc / basis.length();
}

double fidelity(const StateVector& state, const StateVector& initial) {
  if (state.size() != initial.size()) throw ValidationError("fidelity: dimension mismatch");
  return std::norm(initial.dot(state));
}

}  // namespace pxp
