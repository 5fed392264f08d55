#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rkstab/fields.hpp"

namespace rkstab {

/// Entropy-conservative Burgers flux plus a jump dissipation term:
///   F_{i+1/2} = (q_i^2 + q_i q_{i+1} + q_{i+1}^2) / 6 - mu (q_{i+1} - q_i).
struct DissipativeBurgers {
  double mu = 1e-3;
  /// dt_FE = dt_fe_ratio * dx.
  double dt_fe_ratio = 0.006;
};

/// First-order upwind differencing of q^2/2, dt_FE = dx.
struct UpwindBurgers {};

/// Minmod MUSCL reconstruction with the Godunov flux, dt_FE = dx / (2 max|q|).
struct MusclBurgers {};

enum class LaxFriedrichsVariant { local, global };

/// Lax-Friedrichs flux for the 1D Euler equations, dt_FE = dx / a_max.
struct LlfEuler {
  double gamma = 5.0 / 3.0;
  LaxFriedrichsVariant variant = LaxFriedrichsVariant::local;
};

using SchemeSpec = std::variant<DissipativeBurgers, UpwindBurgers, MusclBurgers, LlfEuler>;

std::string scheme_name(const SchemeSpec& s);
bool is_euler(const SchemeSpec& s);

class UnsupportedBoundary : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Scalar Burgers building blocks.

double minmod(double a, double b);
double godunov_flux_burgers(double q_minus, double q_plus);

ScalarField rhs_dissipative_burgers(const ScalarField& f, double mu);
ScalarField rhs_upwind_burgers(const ScalarField& f);
ScalarField rhs_muscl_burgers(const ScalarField& f);

// Euler.

struct InterfaceFlux {
  Conserved flux;
  double wavespeed;
};

/// Lax-Friedrichs flux between `left` and `right` using their own maximal
/// wavespeed |u| + sqrt(gamma p / rho).
InterfaceFlux lax_friedrichs_flux_euler(const Conserved& left, const Conserved& right,
                                        double gamma);

/// Same flux with a caller-supplied dissipation coefficient.
Conserved lax_friedrichs_flux_euler(const Conserved& left, const Conserved& right, double gamma,
                                    double wavespeed);

struct EulerRhs {
  std::vector<double> rho;
  std::vector<double> m;
  std::vector<double> E;
  double a_max = 0.0;
};

EulerRhs rhs_llf_euler(const EulerField& f,
                       LaxFriedrichsVariant variant = LaxFriedrichsVariant::local);

/// A scheme bound to a grid, acting on flat state vectors. Scalar schemes
/// use one value per cell; Euler states are stored as [rho..., m..., E...].
class Discretization {
 public:
  Discretization(SchemeSpec scheme, Grid1D grid);

  const SchemeSpec& scheme() const { return scheme_; }
  const Grid1D& grid() const { return grid_; }
  bool euler() const { return is_euler(scheme_); }
  std::size_t state_size() const;

  /// Throws NonPhysicalState for inadmissible Euler input.
  void rhs(std::span<const double> q, std::span<double> out) const;
  std::vector<double> rhs(std::span<const double> q) const;

  /// Forward-Euler step bound evaluated on the current state. Returns
  /// +infinity when the state carries no wave motion.
  double dt_fe(std::span<const double> q) const;

 private:
  SchemeSpec scheme_;
  Grid1D grid_;
};

double dt_fe(const SchemeSpec& scheme, const ScalarField& f);
double dt_fe(const SchemeSpec& scheme, const EulerField& f);

std::vector<double> flatten(const EulerField& f);
EulerField unflatten(std::span<const double> q, const Grid1D& grid, double gamma);

}  // namespace rkstab
