#include "rkstab/initial_conditions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rkstab {

std::string initial_condition_name(const InitialCondition& ic) {
  struct {
    std::string operator()(const GaussianPulse&) const { return "gaussian"; }
    std::string operator()(const SineWave&) const { return "sine"; }
    std::string operator()(const ScalarStep&) const { return "step"; }
    std::string operator()(const ShockTube&) const { return "shock_tube"; }
    std::string operator()(const ExplicitState&) const { return "explicit"; }
  } visitor;
  return std::visit(visitor, ic);
}

std::vector<double> initial_state(const InitialCondition& ic, const Grid1D& grid,
                                  const SchemeSpec& scheme) {
  const std::size_t n = grid.n_cells();
  const bool euler = is_euler(scheme);

  if (const auto* e = std::get_if<ExplicitState>(&ic)) {
    if (e->values.size() != (euler ? 3 * n : n)) {
      throw std::invalid_argument("explicit initial state has the wrong size");
    }
    return e->values;
  }
  if (const auto* tube = std::get_if<ShockTube>(&ic)) {
    if (!euler) throw std::invalid_argument("shock_tube data needs an Euler scheme");
    const double gamma = std::get<LlfEuler>(scheme).gamma;
    const auto l = primitive_to_conserved(tube->left, gamma);
    const auto r = primitive_to_conserved(tube->right, gamma);
    std::vector<double> q(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = grid.x(i) < tube->x0 ? l : r;
      for (std::size_t c = 0; c < 3; ++c) q[c * n + i] = s[c];
    }
    return q;
  }
  if (euler) throw std::invalid_argument("Euler schemes need shock_tube or explicit data");

  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.x(i);
    if (const auto* g = std::get_if<GaussianPulse>(&ic)) {
      q[i] = std::exp(-g->width * x * x);
    } else if (const auto* s = std::get_if<SineWave>(&ic)) {
      q[i] = s->mean - s->amplitude * std::sin(std::numbers::pi * x);
    } else {
      const auto& st = std::get<ScalarStep>(ic);
      q[i] = x <= st.x0 ? st.left : st.right;
    }
  }
  return q;
}

}  // namespace rkstab
