#pragma once

#include <array>

namespace oracle {

namespace detail {

// 10-point Gauss-Legendre nodes and weights on [-1, 1].
inline constexpr std::array<double, 5> kNodes{0.1488743389816312, 0.4333953941292472,
                                              0.6794095682990244, 0.8650633666889845,
                                              0.9739065285171717};
inline constexpr std::array<double, 5> kWeights{0.2955242247147529, 0.2692667193099963,
                                                0.2190863625159820, 0.1494513491505806,
                                                0.0666713443086881};

}  // namespace detail

template <class F>
pxp::Complex integrate(F&& f, double a, double b, int panels) {
  pxp::Complex acc{0.0, 0.0};
  if (b <= a) return acc;
  const double h = (b - a) / panels;
  for (int k = 0; k < panels; ++k) {
    const double mid = a + (k + 0.5) * h;
    const double half = 0.5 * h;
    for (std::size_t i = 0; i < detail::kNodes.size(); ++i) {
      acc += detail::kWeights[i] * half * (f(mid - half * detail::kNodes[i]) + f(mid + half * detail::kNodes[i]));
    }
  }
  return acc;
}

}  // namespace oracle
