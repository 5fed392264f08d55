#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace rkstab {

struct Periodic {};
/// Frozen scalar states for the ghost cells on each side.
struct Dirichlet {
  double left = 0.0;
  double right = 0.0;
};
/// Zero-gradient ghost cells.
struct Outflow {};

using Boundary = std::variant<Periodic, Dirichlet, Outflow>;

std::string boundary_name(const Boundary& b);

/// Where sample points sit inside each cell: x_min + i*dx (finite
/// difference nodes) or x_min + (i + 1/2)*dx (finite volume centers).
enum class Sampling { nodes, cell_centers };

class Grid1D {
 public:
  Grid1D(std::size_t n_cells, double x_min, double x_max, Boundary boundary = Periodic{},
         Sampling sampling = Sampling::cell_centers);

  std::size_t n_cells() const { return n_cells_; }
  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double dx() const { return dx_; }
  const Boundary& boundary() const { return boundary_; }
  Sampling sampling() const { return sampling_; }
  bool periodic() const { return std::holds_alternative<Periodic>(boundary_); }

  double x(std::size_t i) const;

 private:
  std::size_t n_cells_;
  double x_min_;
  double x_max_;
  double dx_;
  Boundary boundary_;
  Sampling sampling_;
};

struct ScalarField {
  Grid1D grid;
  std::vector<double> q;

  ScalarField(Grid1D g, std::vector<double> values);
};

using Conserved = std::array<double, 3>;  // rho, m, E

struct EulerField {
  Grid1D grid;
  std::vector<double> rho;
  std::vector<double> m;
  std::vector<double> E;
  double gamma;

  EulerField(Grid1D g, std::vector<double> rho_, std::vector<double> m_, std::vector<double> E_,
             double gamma_);

  std::size_t size() const { return rho.size(); }
  Conserved cell(std::size_t i) const { return {rho[i], m[i], E[i]}; }
};

struct PrimitiveState {
  double rho;
  double u;
  double p;
};

/// Thrown when a state cannot be evaluated physically (zero or negative
/// density, negative pressure). `cell` is -1 when not tied to a cell.
class NonPhysicalState : public std::runtime_error {
 public:
  NonPhysicalState(const std::string& what, long cell = -1)
      : std::runtime_error(what), cell_(cell) {}
  long cell() const { return cell_; }

 private:
  long cell_;
};

PrimitiveState conserved_to_primitive(double rho, double m, double E, double gamma,
                                      long cell = -1);
Conserved primitive_to_conserved(const PrimitiveState& w, double gamma);

/// Physical Euler flux [m, m^2/rho + p, u (E + p)]. Requires rho > 0.
Conserved euler_flux(const Conserved& q, double gamma);

/// Sum of |q_{i+1} - q_i|. The periodic closure |q_0 - q_{n-1}| is added
/// when `wrap` is set; by default that follows grid periodicity.
double total_variation(const std::vector<double>& q, bool wrap);
double total_variation(const ScalarField& f);
double total_variation(const ScalarField& f, bool wrap);

/// 0.5 * q^T q.
double quadratic_energy(const std::vector<double>& q);
double quadratic_energy(const ScalarField& f);

struct PositivityVerdict {
  enum class Reason { none, density, internal_energy };
  bool pass = true;
  Reason reason = Reason::none;
  double min_rho = 0.0;
  /// Minimum of E - m^2/(2 rho) over cells with positive density.
  double min_rhoe = 0.0;
  std::optional<std::size_t> first_offending_cell;
};

PositivityVerdict positivity_check(const double* rho, const double* m, const double* E,
                                   std::size_t n);
PositivityVerdict positivity_check(const EulerField& f);

/// Coefficients of the internal-energy numerator rho*(rho e) of
/// q + dt * R as a quadratic a dt^2 + b dt + c.
struct QuadraticCoefficients {
  double a;
  double b;
  double c;
};

QuadraticCoefficients energy_numerator_coefficients(const Conserved& state, const Conserved& rhs);

void write_csv(std::ostream& os, const ScalarField& f);
void write_csv(std::ostream& os, const EulerField& f);

}  // namespace rkstab
