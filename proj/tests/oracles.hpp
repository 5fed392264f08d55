#pragma once

#include <algorithm>
#include <vector>

namespace rkstab::oracle {

// Straightforward transcription of minmod MUSCL with the exact Riemann
// flux of q^2/2. Boundary cells read `left_state` / `right_state` unless
// the grid is periodic.
inline std::vector<double> muscl_rhs(const std::vector<double>& q, double dx, bool periodic,
                                     double left_state, double right_state) {
  const long n = static_cast<long>(q.size());
  auto at = [&](long i) {
    if (periodic) return q[static_cast<std::size_t>(((i % n) + n) % n)];
    if (i < 0) return left_state;
    if (i >= n) return right_state;
    return q[static_cast<std::size_t>(i)];
  };
  auto mm = [](double a, double b) {
    if (a > 0.0 && b > 0.0) return std::min(a, b);
    if (a < 0.0 && b < 0.0) return std::max(a, b);
    return 0.0;
  };
  auto riemann = [](double l, double r) {
    if (l > r) return std::max(l * l, r * r) / 2.0;  // shock
    if (l > 0.0) return l * l / 2.0;                 // right-moving fan
    if (r < 0.0) return r * r / 2.0;                 // left-moving fan
    return 0.0;                                      // transonic fan
  };
  auto face = [&](long i) {  // between cells i and i + 1
    const double l = at(i) + 0.5 * mm(at(i) - at(i - 1), at(i + 1) - at(i));
    const double r = at(i + 1) - 0.5 * mm(at(i + 1) - at(i), at(i + 2) - at(i + 1));
    return riemann(l, r);
  };
  std::vector<double> out(q.size());
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = -(face(i) - face(i - 1)) / dx;
  return out;
}

}  // namespace rkstab::oracle
