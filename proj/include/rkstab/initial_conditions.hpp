#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rkstab/fields.hpp"
#include "rkstab/spatial.hpp"

namespace rkstab {

/// exp(-width * x^2)
struct GaussianPulse {
  double width = 30.0;
};

/// mean - amplitude * sin(pi x)
struct SineWave {
  double mean = 0.5;
  double amplitude = 0.25;
};

/// `left` for x <= x0, `right` otherwise.
struct ScalarStep {
  double x0 = 0.0;
  double left = 1.0;
  double right = -0.5;
};

/// Riemann data in primitive variables; `left` for x < x0.
struct ShockTube {
  double x0 = 0.5;
  PrimitiveState left{1.0, 0.0, 1.0};
  PrimitiveState right{0.125, 0.0, 0.1};
};

/// A state supplied verbatim, already in the scheme's flat layout.
struct ExplicitState {
  std::vector<double> values;
};

using InitialCondition = std::variant<GaussianPulse, SineWave, ScalarStep, ShockTube, ExplicitState>;

std::string initial_condition_name(const InitialCondition& ic);

/// Samples `ic` on the grid in the flat state layout of `scheme`. Euler
/// data needs a ShockTube or ExplicitState; scalar schemes reject ShockTube.
std::vector<double> initial_state(const InitialCondition& ic, const Grid1D& grid,
                                  const SchemeSpec& scheme);

}  // namespace rkstab
