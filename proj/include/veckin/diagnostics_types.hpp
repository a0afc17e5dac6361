#pragma once

#include <array>
#include <vector>

namespace veckin {

struct EntropySample {
  double t = 0.0;
  double eta_mean = 0.0;
  std::array<double, 4> h_mean{};
  double eta_signed = 0.0, eta_abs = 0.0;
  std::array<double, 4> h_signed{}, h_abs{};
};

// Time series of global macroscopic/kinetic entropies and their per-step
// signed/absolute errors. Sum of the kinetic means equals the macroscopic
// mean at every sample.
struct EntropyReport {
  int M = 0;
  std::vector<EntropySample> samples;
};

}  // namespace veckin
