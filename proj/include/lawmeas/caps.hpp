#ifndef LAWMEAS_CAPS_HPP
#define LAWMEAS_CAPS_HPP

#include <cstdint>

namespace lawmeas {

// Enumeration limits. Everything in this kernel is exhaustive, so every
// entry point that enumerates a combinatorial space checks one of these
// first and throws CapExceeded instead of running away.
//
// The environment variable LAWMEAS_CAP, when set to a positive integer,
// overrides the three item-count caps (family_max, function_space_max,
// model_check_max_states). The dimension caps stay as configured.
struct Caps {
  // all_partitions / all_sigma_algebras: largest carrier swept (Bell(6) = 203).
  int partition_max_carrier = 6;

  // product_topology: largest product carrier, in points.
  std::int64_t product_max_points = 4096;

  // check_model: largest size^var_count environment sweep per equation.
  std::int64_t model_check_max_states = 10'000'000;

  // build_meas_space: largest |Y|^|X| candidate-function space.
  std::int64_t function_space_max = 1'000'000;

  // Largest set family materialized anywhere (topology opens, sigma members).
  std::int64_t family_max = std::int64_t{1} << 20;
};

// Process-wide defaults, with LAWMEAS_CAP applied once at first use.
const Caps& global_caps();

// Replaces the process-wide caps (used by the CLI's --cap override).
void set_global_caps(const Caps& caps);

}  // namespace lawmeas

#endif
