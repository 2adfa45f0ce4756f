#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pxp/config.hpp"
#include "pxp/effective.hpp"

namespace pxp {

struct CheckOptions {
  int length = 10;  // chain length for the heff2 check
  std::uint64_t seed = 1;
  int draws = 100;  // random parameter draws for the integral checks
};

const std::vector<std::string>& check_names();

// Runs one named table: integrals, heff2, special-periods or l3-series.
std::vector<CheckRow> run_check(std::string_view name, const CheckOptions& options = {});

// max over binary etas of |extract_heff(u3 block)/dT - heff2_block| at the
// given ratios, with lambda fixed and lambda dT = pi/2.
struct Heff2Scaling {
  std::vector<double> w_over_lambda;
  std::vector<double> distance;
  double slope = 0.0;
};

Heff2Scaling heff2_scaling(int length, double lambda, const std::vector<double>& lambda_over_w);

}  // namespace pxp
