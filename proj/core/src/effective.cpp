#include "pxp/effective.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pxp/error.hpp"

namespace pxp {

namespace {

constexpr double kPi = std::numbers::pi;

double relative_error(double value, double reference) {
  const double scale = std::abs(reference);
  return scale > 0.0 ? std::abs(value - reference) / scale : std::abs(value);
}

}  // namespace

Complex first_order_integral_block(double lambda, double dT, double eta1, double eta2) {
  const double k = 2.0 * (eta1 - eta2) * lambda;
  if (k == 0.0) return Complex(dT, 0.0);
  const double x = k * dT;
  // (1 - e^{-ix}) / (ik) written without the cancellation in 1 - e^{-ix}.
  return std::polar(2.0 * std::sin(0.5 * x) / k, -0.5 * x);
}

double heff2_coefficient(double w, double lambda, const Etas& eta) {
  if (lambda == 0.0) throw ValidationError("heff2: lambda must be nonzero");
  return (eta[0] - eta[1] + eta[2] - eta[3]) * w * w / (2.0 * lambda);
}

OperatorMatrix heff2_block(double w, double lambda, const Etas& eta, const FockBasis& basis) {
  OperatorMatrix c = build_C_operator(basis);
  c.entries *= heff2_coefficient(w, lambda, eta);
  return c;
}

Complex first_order_A(double lambda, double T) {
  if (!(lambda > 0.0)) throw ValidationError("first_order_A: lambda must be positive");
  return std::polar(2.0 * std::sin(0.5 * lambda * T) / lambda, -0.5 * lambda * T);
}

Complex first_order_B(double lambda, double T) {
  if (!(lambda > 0.0)) throw ValidationError("first_order_B: lambda must be positive");
  // 4 cos(lambda T/4) e^{-i lambda T/4} / (i lambda)
  return std::polar(4.0 * first_order_B_envelope(lambda, T) / lambda, -0.25 * lambda * T - 0.5 * kPi);
}

double first_order_B_envelope(double lambda, double T) {
  if (!(lambda > 0.0)) throw ValidationError("first_order_B_envelope: lambda must be positive");
  return std::cos(0.25 * lambda * T);
}

std::vector<SpecialPeriodFamily> special_periods(ProtocolKind protocol, double lambda, int p_max) {
  if (p_max < 1) throw ValidationError("special_periods: p_max must be at least 1");
  if (!(lambda > 0.0)) throw ValidationError("special_periods: lambda must be positive");
  std::vector<SpecialPeriodFamily> out;
  if (protocol == ProtocolKind::U4) {
    for (int p = 1; p <= p_max; ++p) out.push_back({protocol, p, 2.0 * kPi * p / lambda});
  } else if (protocol == ProtocolKind::U5) {
    for (int p = 0; p <= p_max; ++p) out.push_back({protocol, p, 4.0 * kPi * (p + 0.5) / lambda});
  } else {
    throw ValidationError("special_periods: only u4 and u5 have special periods");
  }
  return out;
}

ComplexMatrix PauliCoeffs::reconstruct() const {
  ComplexMatrix h(2, 2);
  h(0, 0) = identity + z;
  h(1, 1) = identity - z;
  h(0, 1) = Complex(x, -y);
  h(1, 0) = Complex(x, y);
  return h;
}

PauliCoeffs pauli_decompose(const ComplexMatrix& h) {
  if (h.rows() != 2 || h.cols() != 2) throw ValidationError("pauli_decompose: need a 2x2 matrix");
  if (hermiticity_defect(h) > 1e-12 * std::max(1.0, max_abs(h))) {
    throw ValidationError("pauli_decompose: matrix is not Hermitian");
  }
  PauliCoeffs c;
  c.identity = 0.5 * (h(0, 0) + h(1, 1)).real();
  c.z = 0.5 * (h(0, 0) - h(1, 1)).real();
  c.x = 0.5 * (h(0, 1) + h(1, 0)).real();
  c.y = 0.5 * (h(1, 0) - h(0, 1)).imag();
  return c;
}

double zigzag_cycle_length(double T, double dT, const Etas& eta) {
  return T + (eta[0] + eta[1] + eta[2] + eta[3]) * dT;
}

double zigzag_time(ProtocolKind which, double t, double T, double dT, const Etas& eta) {
  const double end = zigzag_cycle_length(T, dT, eta);
  if (!(t >= 0.0 && t <= end)) {
    std::ostringstream os;
    os.precision(17);
    os << "zigzag_time: t=" << t << " outside [0, " << end << "]";
    throw ValidationError(os.str());
  }
  double edge[4];
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) {
    acc += T / 4.0 + eta[i] * dT;
    edge[i] = acc;
  }
  if (which == ProtocolKind::U4) {
    const double t01 = edge[1];
    return t <= t01 ? t : 2.0 * t01 - t;
  }
  if (which == ProtocolKind::U5) {
    const double t1 = edge[0], t2 = edge[1], t3 = edge[2];
    if (t <= t1) return t;
    if (t <= t2) return 2.0 * t1 - t;
    if (t <= t3) return t - 2.0 * t2 + 2.0 * t1;
    return 2.0 * (t3 + t1 - t2) - t;
  }
  throw ValidationError("zigzag_time: only u4 and u5 are supported");
}

Propagator u4_u5_zeroth_order(const FockBasis& basis, double lambda, double t, double T,
                              double dT, const Etas& eta, ProtocolKind which) {
  const double tau = zigzag_time(which, t, T, dT, eta);
  const auto d = static_cast<Eigen::Index>(basis.dimension());
  Propagator out;
  out.unitary = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    out.unitary(i, i) = std::polar(1.0, lambda * basis.sz_total(static_cast<std::size_t>(i)) * tau);
  }
  out.duration = t;
  return out;
}

L3DipoleUnitaries l3_dipole_unitaries(double w, double lambda, double delta_lambda, double T) {
  auto half = [&](int a) {
    const ComplexMatrix first = expm_hermitian(build_Hr(a, 1, w, lambda, delta_lambda).entries, T / 4.0);
    const ComplexMatrix second =
        expm_hermitian(build_Hr(a, -1, w, lambda, delta_lambda).entries, T / 4.0);
    return ComplexMatrix(second * first);
  };
  L3DipoleUnitaries out;
  out.u_plus = half(1);
  out.u_minus = half(-1);
  out.u1 = out.u_plus * out.u_minus;
  out.u2 = out.u_minus * out.u_plus;
  return out;
}

std::string_view to_string(L3Block block) {
  switch (block) {
    case L3Block::TMPair: return "tm-pair";
    case L3Block::PeriodicPair: return "periodic-pair";
    case L3Block::SingleU1: return "single-u1";
  }
  return "?";
}

PauliCoeffs l3_generator(L3Block block, double w, double lambda, double delta_lambda, double T) {
  const L3DipoleUnitaries u = l3_dipole_unitaries(w, lambda, delta_lambda, T);
  switch (block) {
    case L3Block::TMPair:
      return pauli_decompose(extract_heff(ComplexMatrix(u.u1 * u.u2), 2.0 * T).generator);
    case L3Block::PeriodicPair:
      return pauli_decompose(extract_heff(ComplexMatrix(u.u1 * u.u1), 2.0 * T).generator);
    case L3Block::SingleU1:
      return pauli_decompose(extract_heff(u.u1, T).generator);
  }
  throw ValidationError("l3_generator: unknown block");
}

PauliCoeffs l3_single_u1_series(double w, double lambda, double delta_lambda, double T) {
  const double lt = lambda * T;
  const double wt = w * T;
  const double x0 = T * std::sqrt(lambda * lambda + 3.0 * w * w);
  const double x6 = std::pow(x0, 6);
  const double common = lt * lt * std::pow(x0, 4) + 6.0 * wt * wt * x0 * std::sin(0.5 * x0);
  PauliCoeffs c;
  c.z = delta_lambda / x6 * (lt * lt + 3.0 * wt * wt * std::cos(0.5 * x0)) * common;
  c.x = 2.0 * std::sqrt(3.0) * wt * delta_lambda / x6 * std::sin(0.25 * x0) * common *
        (x0 * std::cos(0.25 * x0) + lt * std::sin(0.25 * x0));
  return c;
}

namespace {

using Vec3 = Eigen::Vector3d;

// Integral over [0, s] and end value of the vector v rotated by the Bloch
// precession about n at angular rate 2 omega.
Vec3 rotated_integral(const Vec3& n, const Vec3& v, double omega, double s) {
  const Vec3 along = v.dot(n) * n;
  const Vec3 perp = v - along;
  return s * along + std::sin(2.0 * omega * s) / (2.0 * omega) * perp -
         (1.0 - std::cos(2.0 * omega * s)) / (2.0 * omega) * n.cross(v);
}

Vec3 rotated(const Vec3& n, const Vec3& v, double omega, double s) {
  const Vec3 along = v.dot(n) * n;
  const Vec3 perp = v - along;
  return along + std::cos(2.0 * omega * s) * perp - std::sin(2.0 * omega * s) * n.cross(v);
}

}  // namespace

PauliCoeffs l3_single_u1_first_order(double w, double lambda, double delta_lambda, double T) {
  if (!(T > 0.0)) throw ValidationError("l3_single_u1_first_order: T must be positive");
  const double omega = std::sqrt(lambda * lambda + 3.0 * w * w);
  const double s = T / 4.0;
  const double r3 = std::sqrt(3.0) * w;
  // Bloch axes in (x, y, z) order.
  const Vec3 n_minus = Vec3(-r3, 0.0, lambda) / omega;
  const Vec3 n_plus = Vec3(r3, 0.0, lambda) / omega;
  const Vec3 ez(0.0, 0.0, 1.0);
  const Vec3 v = (2.0 * delta_lambda / T) *
                 (rotated_integral(n_minus, ez, omega, s) +
                  rotated(n_minus, rotated_integral(-n_plus, ez, omega, s), omega, s));
  PauliCoeffs c;
  c.identity = 2.0 * delta_lambda;
  c.x = v.x();
  c.y = v.y();
  c.z = v.z();
  return c;
}

double l3_series_A2_root(double w, double lambda, double lo, double hi, double tol) {
  auto f = [&](double T) { return l3_single_u1_series(w, lambda, 1.0, T).x; };
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw ValidationError("l3_series_A2_root: no sign change");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw ValidationError("loglog_slope: need >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw ValidationError("loglog_slope: values must be positive");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<CheckRow> l3_series_check(double w, double lambda, L3Block which, const L3Sweep& sweep) {
  if (sweep.delta_lambdas.empty() || sweep.periods.empty()) {
    throw ValidationError("l3_series_check: sweep needs delta_lambda and T values");
  }
  std::vector<CheckRow> rows;
  const std::string name(to_string(which));
  auto add = [&](std::string quantity, double value, double reference, double residual,
                 double tolerance) {
    rows.push_back({name, std::move(quantity), value, reference, residual, tolerance,
                    residual <= tolerance});
  };
  const double r3 = std::sqrt(3.0);

  if (which == L3Block::TMPair) {
    const double T = sweep.periods.front();
    std::vector<double> off;
    for (double dl : sweep.delta_lambdas) {
      const PauliCoeffs c = l3_generator(which, w, lambda, dl, T);
      off.push_back(std::hypot(c.x, c.y));
    }
    if (sweep.delta_lambdas.size() >= 2) {
      const double slope = loglog_slope(sweep.delta_lambdas, off);
      add("offdiag_exponent_in_dlambda", slope, 2.0, std::abs(slope - 2.0), 0.1);
    }
    const double dl = sweep.delta_lambdas.front();
    for (double Tp : sweep.periods) {
      const PauliCoeffs c = l3_generator(which, w, lambda, dl, Tp);
      const double ref = dl * (-1.0 + 0.5 * w * w * Tp * Tp);
      add("z_coefficient(T=" + std::to_string(Tp) + ")", c.z, ref, relative_error(c.z, ref), 0.05);
    }
  } else if (which == L3Block::PeriodicPair) {
    for (double Tp : sweep.periods) {
      for (double dl : sweep.delta_lambdas) {
        const PauliCoeffs c = l3_generator(which, w, lambda, dl, Tp);
        const std::string tag = "(T=" + std::to_string(Tp) + ",dl=" + std::to_string(dl) + ")";
        const double ref_y = -r3 * w * Tp * dl / 2.0;
        add("y_coefficient" + tag, c.y, ref_y, relative_error(c.y, ref_y), 0.05);
        const double ref_x = r3 * w * lambda * Tp * Tp * dl / 8.0;
        add("x_coefficient" + tag, c.x, ref_x, relative_error(c.x, ref_x), 0.05);
      }
    }
  } else {
    const double root = l3_series_A2_root(w, lambda, 2.0 * kPi / w - 0.5, 2.0 * kPi / w + 0.5, 1e-12);
    add("series_A2_root_wT", w * root, 2.0 * kPi, std::abs(w * root - 2.0 * kPi), 1e-8);
    const double dl = sweep.delta_lambdas.front();
    for (double Tp : sweep.periods) {
      const PauliCoeffs num = l3_generator(which, w, lambda, dl, Tp);
      const PauliCoeffs series = l3_single_u1_series(w, lambda, dl, Tp);
      const PauliCoeffs first = l3_single_u1_first_order(w, lambda, dl, Tp);
      const std::string tag = "(T=" + std::to_string(Tp) + ")";
      add("series_A1_vs_z" + tag, series.z, num.z, relative_error(series.z, num.z), 1e-2);
      add("series_A2_vs_x" + tag, series.x, num.x, relative_error(series.x, num.x), 1e-2);
      const double scale = std::max({std::abs(num.z), std::abs(num.x), std::abs(num.y)});
      const double dev = std::max({std::abs(first.z - num.z), std::abs(first.x - num.x),
                                   std::abs(first.y - num.y)});
      add("first_order_closed_form" + tag, dev / scale, 0.0, dev / scale, 1e-2);
    }
  }
  return rows;
}

}  // namespace pxp
