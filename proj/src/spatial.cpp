#include "rkstab/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rkstab {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

int sign(double v) { return (v > 0.0) - (v < 0.0); }

void require_periodic(const Grid1D& g, const char* who) {
  if (!g.periodic()) {
    throw UnsupportedBoundary(std::string(who) + ": requires a periodic grid, got " +
                              boundary_name(g.boundary()));
  }
}

void dissipative_kernel(std::span<const double> q, double dx, double mu, std::span<double> out) {
  const std::size_t n = q.size();
  auto flux = [&](double l, double r) { return (l * l + l * r + r * r) / 6.0 - mu * (r - l); };
  // F_{-1/2} is the periodic image of F_{n-1/2}.
  double left = flux(q[n - 1], q[0]);
  for (std::size_t i = 0; i < n; ++i) {
    const double right = flux(q[i], q[i + 1 == n ? 0 : i + 1]);
    out[i] = -(right - left) / dx;
    left = right;
  }
}

void upwind_kernel(std::span<const double> q, double dx, std::span<double> out) {
  const std::size_t n = q.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double qm = q[i == 0 ? n - 1 : i - 1];
    out[i] = -(0.5 * q[i] * q[i] - 0.5 * qm * qm) / dx;
  }
}

void muscl_kernel(std::span<const double> q, const Grid1D& grid, std::span<double> out) {
  const std::size_t n = q.size();
  // Two ghost cells per side: g[k] holds cell k - 2.
  std::vector<double> g(n + 4);
  std::copy(q.begin(), q.end(), g.begin() + 2);
  if (grid.periodic()) {
    g[0] = q[n - 2];
    g[1] = q[n - 1];
    g[n + 2] = q[0];
    g[n + 3] = q[1];
  } else if (const auto* d = std::get_if<Dirichlet>(&grid.boundary())) {
    g[0] = g[1] = d->left;
    g[n + 2] = g[n + 3] = d->right;
  } else {
    throw UnsupportedBoundary("rhs_muscl_burgers: outflow boundary is not supported");
  }
  // Interface k sits between g[k] and g[k+1]; cells need interfaces 1..n+1.
  auto interface_flux = [&](std::size_t k) {
    const double q_minus = g[k] + 0.5 * minmod(g[k + 1] - g[k], g[k] - g[k - 1]);
    const double q_plus = g[k + 1] - 0.5 * minmod(g[k + 2] - g[k + 1], g[k + 1] - g[k]);
    return godunov_flux_burgers(q_minus, q_plus);
  };
  double left = interface_flux(1);
  for (std::size_t i = 0; i < n; ++i) {
    const double right = interface_flux(i + 2);
    out[i] = -(right - left) / grid.dx();
    left = right;
  }
}

struct EulerView {
  std::span<const double> rho, m, E;
};

EulerView view(std::span<const double> q, std::size_t n) {
  return {q.subspan(0, n), q.subspan(n, n), q.subspan(2 * n, n)};
}

double wavespeed(const Conserved& s, double gamma, const char* side) {
  if (!(s[0] > 0.0)) {
    throw NonPhysicalState(std::string("Lax-Friedrichs flux: non-positive density in ") + side +
                           " state");
  }
  const auto w = conserved_to_primitive(s[0], s[1], s[2], gamma);
  if (w.p < 0.0) {
    throw NonPhysicalState(std::string("Lax-Friedrichs flux: negative pressure in ") + side +
                           " state");
  }
  return std::abs(w.u) + std::sqrt(gamma * w.p / w.rho);
}

void check_admissible(const EulerView& v) {
  const auto verdict = positivity_check(v.rho.data(), v.m.data(), v.E.data(), v.rho.size());
  if (!verdict.pass) {
    const auto cell = static_cast<long>(*verdict.first_offending_cell);
    const char* what = verdict.reason == PositivityVerdict::Reason::density
                           ? "non-positive density"
                           : "non-positive internal energy";
    throw NonPhysicalState(std::string(what) + " in cell " + std::to_string(cell), cell);
  }
}

/// Ghost-extended cell states: index k holds cell k - 1.
std::vector<Conserved> extended_states(const EulerView& v, const Grid1D& grid) {
  const std::size_t n = v.rho.size();
  std::vector<Conserved> cells(n + 2);
  for (std::size_t i = 0; i < n; ++i) cells[i + 1] = {v.rho[i], v.m[i], v.E[i]};
  if (grid.periodic()) {
    cells[0] = cells[n];
    cells[n + 1] = cells[1];
  } else if (std::holds_alternative<Outflow>(grid.boundary())) {
    cells[0] = cells[1];
    cells[n + 1] = cells[n];
  } else {
    throw UnsupportedBoundary("rhs_llf_euler: dirichlet boundary is not supported");
  }
  return cells;
}

double euler_kernel(std::span<const double> q, const Grid1D& grid, double gamma,
                    LaxFriedrichsVariant variant, std::span<double> out) {
  const std::size_t n = grid.n_cells();
  const auto v = view(q, n);
  check_admissible(v);
  const auto cells = extended_states(v, grid);

  std::vector<double> speed(n + 2);
  for (std::size_t k = 0; k < n + 2; ++k) speed[k] = wavespeed(cells[k], gamma, "cell");
  std::vector<double> face_speed(n + 1);
  double a_max = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    face_speed[k] = std::max(speed[k], speed[k + 1]);
    a_max = std::max(a_max, face_speed[k]);
  }

  Conserved left{};
  for (std::size_t k = 0; k <= n; ++k) {
    const double a = variant == LaxFriedrichsVariant::local ? face_speed[k] : a_max;
    const Conserved right = lax_friedrichs_flux_euler(cells[k], cells[k + 1], gamma, a);
    if (k > 0) {
      const std::size_t i = k - 1;
      for (std::size_t c = 0; c < 3; ++c) out[c * n + i] = -(right[c] - left[c]) / grid.dx();
    }
    left = right;
  }
  return a_max;
}

double euler_a_max(std::span<const double> q, const Grid1D& grid, double gamma) {
  const std::size_t n = grid.n_cells();
  const auto v = view(q, n);
  // Only the wavespeed needs to exist here (rho > 0, p >= 0); strict
  // admissibility is enforced by the right-hand side.
  double a_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto cell = static_cast<long>(i);
    if (!(v.rho[i] > 0.0)) {
      throw NonPhysicalState("non-positive density in cell " + std::to_string(i), cell);
    }
    const auto w = conserved_to_primitive(v.rho[i], v.m[i], v.E[i], gamma, cell);
    if (w.p < 0.0) throw NonPhysicalState("negative pressure in cell " + std::to_string(i), cell);
    a_max = std::max(a_max, std::abs(w.u) + std::sqrt(gamma * w.p / w.rho));
  }
  return a_max;
}

double max_abs(std::span<const double> q) {
  double m = 0.0;
  for (double v : q) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

std::string scheme_name(const SchemeSpec& s) {
  struct {
    std::string operator()(const DissipativeBurgers&) const { return "dissipative_burgers"; }
    std::string operator()(const UpwindBurgers&) const { return "upwind_burgers"; }
    std::string operator()(const MusclBurgers&) const { return "muscl2_burgers"; }
    std::string operator()(const LlfEuler&) const { return "llf_euler"; }
  } visitor;
  return std::visit(visitor, s);
}

bool is_euler(const SchemeSpec& s) { return std::holds_alternative<LlfEuler>(s); }

double minmod(double a, double b) {
  return 0.5 * (sign(a) + sign(b)) * std::min(std::abs(a), std::abs(b));
}

double godunov_flux_burgers(double q_minus, double q_plus) {
  const double fl = 0.5 * q_minus * q_minus;
  const double fr = 0.5 * q_plus * q_plus;
  if (q_minus <= q_plus) {
    if (q_minus <= 0.0 && q_plus >= 0.0) return 0.0;  // sonic point inside the fan
    return std::min(fl, fr);
  }
  return std::max(fl, fr);
}

ScalarField rhs_dissipative_burgers(const ScalarField& f, double mu) {
  require_periodic(f.grid, "rhs_dissipative_burgers");
  ScalarField out(f.grid, std::vector<double>(f.q.size()));
  dissipative_kernel(f.q, f.grid.dx(), mu, out.q);
  return out;
}

ScalarField rhs_upwind_burgers(const ScalarField& f) {
  require_periodic(f.grid, "rhs_upwind_burgers");
  ScalarField out(f.grid, std::vector<double>(f.q.size()));
  upwind_kernel(f.q, f.grid.dx(), out.q);
  return out;
}

ScalarField rhs_muscl_burgers(const ScalarField& f) {
  ScalarField out(f.grid, std::vector<double>(f.q.size()));
  muscl_kernel(f.q, f.grid, out.q);
  return out;
}

Conserved lax_friedrichs_flux_euler(const Conserved& left, const Conserved& right, double gamma,
                                    double wavespeed) {
  const auto fl = euler_flux(left, gamma);
  const auto fr = euler_flux(right, gamma);
  Conserved h{};
  for (std::size_t c = 0; c < 3; ++c) {
    h[c] = 0.5 * (fl[c] + fr[c] - wavespeed * (right[c] - left[c]));
  }
  return h;
}

InterfaceFlux lax_friedrichs_flux_euler(const Conserved& left, const Conserved& right,
                                        double gamma) {
  const double a = std::max(wavespeed(left, gamma, "left"), wavespeed(right, gamma, "right"));
  return {lax_friedrichs_flux_euler(left, right, gamma, a), a};
}

EulerRhs rhs_llf_euler(const EulerField& f, LaxFriedrichsVariant variant) {
  const auto flat = flatten(f);
  std::vector<double> out(flat.size());
  const double a_max = euler_kernel(flat, f.grid, f.gamma, variant, out);
  const auto n = f.size();
  EulerRhs r;
  r.rho.assign(out.begin(), out.begin() + n);
  r.m.assign(out.begin() + n, out.begin() + 2 * n);
  r.E.assign(out.begin() + 2 * n, out.end());
  r.a_max = a_max;
  return r;
}

Discretization::Discretization(SchemeSpec scheme, Grid1D grid)
    : scheme_(std::move(scheme)), grid_(std::move(grid)) {
  if (const auto* d = std::get_if<DissipativeBurgers>(&scheme_); d && d->mu < 0.0) {
    throw std::invalid_argument("dissipative_burgers: mu must be non-negative");
  }
  if (std::holds_alternative<DissipativeBurgers>(scheme_) ||
      std::holds_alternative<UpwindBurgers>(scheme_)) {
    require_periodic(grid_, scheme_name(scheme_).c_str());
  }
  if (std::holds_alternative<MusclBurgers>(scheme_) &&
      std::holds_alternative<Outflow>(grid_.boundary())) {
    throw UnsupportedBoundary("muscl2_burgers: outflow boundary is not supported");
  }
  if (std::holds_alternative<LlfEuler>(scheme_) &&
      std::holds_alternative<Dirichlet>(grid_.boundary())) {
    throw UnsupportedBoundary("llf_euler: dirichlet boundary is not supported");
  }
}

std::size_t Discretization::state_size() const {
  return euler() ? 3 * grid_.n_cells() : grid_.n_cells();
}

void Discretization::rhs(std::span<const double> q, std::span<double> out) const {
  if (q.size() != state_size() || out.size() != state_size()) {
    throw std::invalid_argument("Discretization::rhs: state size mismatch");
  }
  if (const auto* d = std::get_if<DissipativeBurgers>(&scheme_)) {
    dissipative_kernel(q, grid_.dx(), d->mu, out);
  } else if (std::holds_alternative<UpwindBurgers>(scheme_)) {
    upwind_kernel(q, grid_.dx(), out);
  } else if (std::holds_alternative<MusclBurgers>(scheme_)) {
    muscl_kernel(q, grid_, out);
  } else {
    const auto& e = std::get<LlfEuler>(scheme_);
    euler_kernel(q, grid_, e.gamma, e.variant, out);
  }
}

std::vector<double> Discretization::rhs(std::span<const double> q) const {
  std::vector<double> out(state_size());
  rhs(q, out);
  return out;
}

double Discretization::dt_fe(std::span<const double> q) const {
  const double dx = grid_.dx();
  if (const auto* d = std::get_if<DissipativeBurgers>(&scheme_)) return d->dt_fe_ratio * dx;
  if (std::holds_alternative<UpwindBurgers>(scheme_)) return dx;
  if (std::holds_alternative<MusclBurgers>(scheme_)) {
    const double m = max_abs(q);
    return m > 0.0 ? dx / (2.0 * m) : kInfinity;
  }
  const double a = euler_a_max(q, grid_, std::get<LlfEuler>(scheme_).gamma);
  return a > 0.0 ? dx / a : kInfinity;
}

double dt_fe(const SchemeSpec& scheme, const ScalarField& f) {
  return Discretization(scheme, f.grid).dt_fe(f.q);
}

double dt_fe(const SchemeSpec& scheme, const EulerField& f) {
  return Discretization(scheme, f.grid).dt_fe(flatten(f));
}

std::vector<double> flatten(const EulerField& f) {
  std::vector<double> q;
  q.reserve(3 * f.size());
  q.insert(q.end(), f.rho.begin(), f.rho.end());
  q.insert(q.end(), f.m.begin(), f.m.end());
  q.insert(q.end(), f.E.begin(), f.E.end());
  return q;
}

EulerField unflatten(std::span<const double> q, const Grid1D& grid, double gamma) {
  const auto n = grid.n_cells();
  if (q.size() != 3 * n) throw std::invalid_argument("unflatten: state size mismatch");
  return EulerField(grid, {q.begin(), q.begin() + n}, {q.begin() + n, q.begin() + 2 * n},
                    {q.begin() + 2 * n, q.end()}, gamma);
}

}  // namespace rkstab
