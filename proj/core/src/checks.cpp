#include "pxp/checks.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pxp/error.hpp"

namespace pxp {

namespace {

constexpr double kPi = std::numbers::pi;

Complex integrate(const std::function<Complex(double)>& f, double a, double b) {
  using boost::math::quadrature::gauss_kronrod;
  if (b <= a) return {0.0, 0.0};
  auto re = [&](double t) { return f(t).real(); };
  auto im = [&](double t) { return f(t).imag(); };
  return {gauss_kronrod<double, 31>::integrate(re, a, b, 15, 1e-14),
          gauss_kronrod<double, 31>::integrate(im, a, b, 15, 1e-14)};
}

Complex zigzag_integral(ProtocolKind which, double lambda, double T, double dT, const Etas& eta) {
  const double end = zigzag_cycle_length(T, dT, eta);
  auto g = [&](double t) { return std::polar(1.0, -2.0 * lambda * zigzag_time(which, t, T, dT, eta)); };
  // Split at the pulse edges so each piece is smooth.
  double edges[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < 4; ++i) edges[i + 1] = edges[i] + T / 4.0 + eta[i] * dT;
  edges[4] = end;
  Complex acc{0.0, 0.0};
  for (int i = 0; i < 4; ++i) acc += integrate(g, edges[i], edges[i + 1]);
  return acc;
}

CheckRow row(std::string check, std::string quantity, double value, double reference,
             double residual, double tolerance) {
  return {std::move(check), std::move(quantity), value, reference, residual, tolerance,
          residual <= tolerance};
}

std::vector<CheckRow> integrals(const CheckOptions& o) {
  std::vector<CheckRow> rows;
  DriveRng rng(o.seed);
  double worst_block = 0.0, worst_a = 0.0, worst_b = 0.0;
  for (int k = 0; k < o.draws; ++k) {
    const double lambda = 0.5 + 19.5 * rng.unit();
    const double T = 0.5 + 9.5 * rng.unit();
    const double dT_block = 2.0 * rng.unit();
    const Etas eta{static_cast<double>(rng.sign()), static_cast<double>(rng.sign()),
                   static_cast<double>(rng.sign()), static_cast<double>(rng.sign())};
    const double k2 = 2.0 * (eta[0] - eta[1]) * lambda;
    const Complex block_quad =
        integrate([&](double t) { return std::polar(1.0, -k2 * t); }, 0.0, dT_block);
    worst_block = std::max(worst_block,
                           std::abs(block_quad - first_order_integral_block(lambda, dT_block, eta[0], eta[1])));
    const double dT = kPi / (2.0 * lambda);
    if (T < 4.0 * dT) continue;
    worst_a = std::max(worst_a, std::abs(zigzag_integral(ProtocolKind::U4, lambda, T, dT, eta) -
                                         first_order_A(lambda, T)));
    worst_b = std::max(worst_b, std::abs(zigzag_integral(ProtocolKind::U5, lambda, T, dT, eta) -
                                         first_order_B(lambda, T)));
  }
  rows.push_back(row("integrals", "block_vs_quadrature_max_abs", worst_block, 0.0, worst_block, 1e-10));
  rows.push_back(row("integrals", "A_vs_quadrature_max_abs", worst_a, 0.0, worst_a, 1e-10));
  rows.push_back(row("integrals", "B_vs_quadrature_max_abs", worst_b, 0.0, worst_b, 1e-10));
  const Complex zero_block = first_order_integral_block(1.0, kPi / 2.0, 1.0, -1.0);
  rows.push_back(row("integrals", "block_at_lambda_dT_pi_over_2", std::abs(zero_block), 0.0,
                     std::abs(zero_block), 1e-15));
  return rows;
}

std::vector<CheckRow> special(const CheckOptions&) {
  std::vector<CheckRow> rows;
  const double lambda = 4.0 * kPi;
  for (const auto& f : special_periods(ProtocolKind::U4, lambda, 10)) {
    const double a = std::abs(first_order_A(lambda, f.T_star));
    rows.push_back(row("special-periods", "u4_A(p=" + std::to_string(f.p) + ",T*=" +
                                              format_roundtrip(f.T_star) + ")",
                       a, 0.0, a, 1e-13));
  }
  for (const auto& f : special_periods(ProtocolKind::U5, lambda, 10)) {
    const double b = std::abs(first_order_B_envelope(lambda, f.T_star));
    rows.push_back(row("special-periods", "u5_B_envelope(p=" + std::to_string(f.p) + ",T*=" +
                                              format_roundtrip(f.T_star) + ")",
                       b, 0.0, b, 1e-13));
  }
  return rows;
}

std::vector<CheckRow> l3(const CheckOptions&) {
  std::vector<CheckRow> rows;
  std::vector<double> dls;
  for (int k = 0; k <= 8; ++k) dls.push_back(1e-4 * std::pow(10.0, 0.25 * k));
  auto add = [&](std::vector<CheckRow> more) { rows.insert(rows.end(), more.begin(), more.end()); };
  add(l3_series_check(1.0, 1.0, L3Block::TMPair, {dls, {0.05, 0.1}}));
  add(l3_series_check(1.0, 1.0, L3Block::PeriodicPair, {{1e-3}, {0.05}}));
  add(l3_series_check(1.0, 1.0, L3Block::SingleU1, {{1e-4}, {0.3, 1.0, 2.0}}));
  return rows;
}

}  // namespace

Heff2Scaling heff2_scaling(int length, double lambda, const std::vector<double>& lambda_over_w) {
  const FockBasis basis(length, BoundaryCondition::Periodic);
  const OperatorMatrix c = build_C_operator(basis);
  Heff2Scaling out;
  const double dT = kPi / (2.0 * lambda);
  for (double ratio : lambda_over_w) {
    DriveParams p;
    p.w = lambda / ratio;
    p.lambda = lambda;
    p.period = 1.0;
    p.jitter = dT;
    if (p.period < 4.0 * dT) p.period = 4.0 * dT;
    PropagatorCache cache(basis);
    double worst = 0.0;
    for (int bits = 0; bits < 16; ++bits) {
      Etas eta{};
      for (int i = 0; i < 4; ++i) eta[i] = (bits >> i) & 1 ? 1.0 : -1.0;
      const Propagator u = cycle_unitary_u3(p, eta, cache);
      const ComplexMatrix h = extract_heff(u, dT).generator;
      worst = std::max(worst, max_abs(h - heff2_coefficient(p.w, lambda, eta) * c.entries));
    }
    out.w_over_lambda.push_back(1.0 / ratio);
    out.distance.push_back(worst);
  }
  out.slope = loglog_slope(out.w_over_lambda, out.distance);
  return out;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"integrals", "heff2", "special-periods", "l3-series"};
  return names;
}

std::vector<CheckRow> run_check(std::string_view name, const CheckOptions& options) {
  if (name == "integrals") return integrals(options);
  if (name == "special-periods") return special(options);
  if (name == "l3-series") return l3(options);
  if (name == "heff2") {
    const Heff2Scaling s = heff2_scaling(options.length, 10.0, {10.0, 20.0, 40.0});
    std::vector<CheckRow> rows;
    for (std::size_t i = 0; i < s.distance.size(); ++i) {
      rows.push_back(row("heff2", "distance(w/lambda=" + format_roundtrip(s.w_over_lambda[i]) + ")",
                         s.distance[i], 0.0, s.distance[i], INFINITY));
    }
    rows.push_back(row("heff2", "loglog_slope_at_least_2.5", s.slope, 2.5, std::max(0.0, 2.5 - s.slope), 0.0));
    return rows;
  }
  throw ValidationError("unknown check '" + std::string(name) + "'");
}

}  // namespace pxp
