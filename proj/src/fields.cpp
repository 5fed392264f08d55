#include "rkstab/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace rkstab {

std::string boundary_name(const Boundary& b) {
  struct {
    std::string operator()(const Periodic&) const { return "periodic"; }
    std::string operator()(const Dirichlet&) const { return "dirichlet"; }
    std::string operator()(const Outflow&) const { return "outflow"; }
  } visitor;
  return std::visit(visitor, b);
}

Grid1D::Grid1D(std::size_t n_cells, double x_min, double x_max, Boundary boundary,
               Sampling sampling)
    : n_cells_(n_cells),
      x_min_(x_min),
      x_max_(x_max),
      dx_(n_cells ? (x_max - x_min) / static_cast<double>(n_cells) : 0.0),
      boundary_(boundary),
      sampling_(sampling) {
  if (n_cells_ < 3) throw std::invalid_argument("Grid1D: need at least 3 cells");
  if (!(dx_ > 0.0)) throw std::invalid_argument("Grid1D: x_max must exceed x_min");
}

double Grid1D::x(std::size_t i) const {
  const double offset = sampling_ == Sampling::nodes ? 0.0 : 0.5;
  return x_min_ + (static_cast<double>(i) + offset) * dx_;
}

ScalarField::ScalarField(Grid1D g, std::vector<double> values)
    : grid(std::move(g)), q(std::move(values)) {
  if (q.size() != grid.n_cells()) throw std::invalid_argument("ScalarField: size mismatch");
}

EulerField::EulerField(Grid1D g, std::vector<double> rho_, std::vector<double> m_,
                       std::vector<double> E_, double gamma_)
    : grid(std::move(g)), rho(std::move(rho_)), m(std::move(m_)), E(std::move(E_)), gamma(gamma_) {
  const auto n = grid.n_cells();
  if (rho.size() != n || m.size() != n || E.size() != n) {
    throw std::invalid_argument("EulerField: component size mismatch");
  }
  if (!(gamma > 1.0)) throw std::invalid_argument("EulerField: gamma must exceed 1");
}

PrimitiveState conserved_to_primitive(double rho, double m, double E, double gamma, long cell) {
  if (rho == 0.0) {
    throw NonPhysicalState(
        "zero density" + (cell >= 0 ? " in cell " + std::to_string(cell) : std::string()), cell);
  }
  const double u = m / rho;
  const double rhoe = E - 0.5 * m * m / rho;
  return {rho, u, (gamma - 1.0) * rhoe};
}

Conserved primitive_to_conserved(const PrimitiveState& w, double gamma) {
  return {w.rho, w.rho * w.u, w.p / (gamma - 1.0) + 0.5 * w.rho * w.u * w.u};
}

Conserved euler_flux(const Conserved& q, double gamma) {
  if (!(q[0] > 0.0)) throw NonPhysicalState("euler_flux: non-positive density");
  const auto w = conserved_to_primitive(q[0], q[1], q[2], gamma);
  return {q[1], q[1] * w.u + w.p, w.u * (q[2] + w.p)};
}

double total_variation(const std::vector<double>& q, bool wrap) {
  double tv = 0.0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) tv += std::abs(q[i + 1] - q[i]);
  if (wrap && q.size() > 1) tv += std::abs(q.front() - q.back());
  return tv;
}

double total_variation(const ScalarField& f) { return total_variation(f.q, f.grid.periodic()); }

double total_variation(const ScalarField& f, bool wrap) { return total_variation(f.q, wrap); }

double quadratic_energy(const std::vector<double>& q) {
  double sum = 0.0;
  for (double v : q) sum += v * v;
  return 0.5 * sum;
}

double quadratic_energy(const ScalarField& f) { return quadratic_energy(f.q); }

PositivityVerdict positivity_check(const double* rho, const double* m, const double* E,
                                   std::size_t n) {
  PositivityVerdict v;
  v.min_rho = std::numeric_limits<double>::infinity();
  v.min_rhoe = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    v.min_rho = std::min(v.min_rho, rho[i]);
    if (!(rho[i] > 0.0)) {
      if (v.pass) {
        v.pass = false;
        v.reason = PositivityVerdict::Reason::density;
        v.first_offending_cell = i;
      }
      continue;
    }
    const double rhoe = E[i] - 0.5 * m[i] * m[i] / rho[i];
    v.min_rhoe = std::min(v.min_rhoe, rhoe);
    if (!(rhoe > 0.0) && v.pass) {
      v.pass = false;
      v.reason = PositivityVerdict::Reason::internal_energy;
      v.first_offending_cell = i;
    }
  }
  // A density failure anywhere takes precedence over an earlier energy one.
  if (!v.pass && !(v.min_rho > 0.0) && v.reason != PositivityVerdict::Reason::density) {
    v.reason = PositivityVerdict::Reason::density;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(rho[i] > 0.0)) {
        v.first_offending_cell = i;
        break;
      }
    }
  }
  return v;
}

PositivityVerdict positivity_check(const EulerField& f) {
  return positivity_check(f.rho.data(), f.m.data(), f.E.data(), f.size());
}

QuadraticCoefficients energy_numerator_coefficients(const Conserved& state, const Conserved& rhs) {
  const auto [rho, m, E] = state;
  const auto [r_rho, r_m, r_E] = rhs;
  return {r_E * r_rho - 0.5 * r_m * r_m, E * r_rho + rho * r_E - m * r_m, E * rho - 0.5 * m * m};
}

void write_csv(std::ostream& os, const ScalarField& f) {
  const auto old = os.precision(17);
  os << "x,q\n";
  for (std::size_t i = 0; i < f.q.size(); ++i) os << f.grid.x(i) << ',' << f.q[i] << '\n';
  os.precision(old);
}

void write_csv(std::ostream& os, const EulerField& f) {
  const auto old = os.precision(17);
  os << "x,rho,m,E,u,p\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    double u = std::numeric_limits<double>::quiet_NaN();
    double p = u;
    if (f.rho[i] != 0.0) {
      const auto w = conserved_to_primitive(f.rho[i], f.m[i], f.E[i], f.gamma);
      u = w.u;
      p = w.p;
    }
    os << f.grid.x(i) << ',' << f.rho[i] << ',' << f.m[i] << ',' << f.E[i] << ',' << u << ','
       << p << '\n';
  }
  os.precision(old);
}

}  // namespace rkstab
