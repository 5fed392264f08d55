#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace rkstab {

/// Explicit Runge-Kutta method in Butcher form.
///
/// `a` is stored densely (s x s); explicitness is checked by
/// validate_consistency rather than enforced by the type so that malformed
/// tableaux read from files can still be reported on.
struct ButcherTableau {
  std::string name;
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;

  int stages() const { return static_cast<int>(b.size()); }
};

/// Builds a tableau from A and b, filling c with the row sums of A.
ButcherTableau make_tableau(std::string name, Eigen::MatrixXd a, Eigen::VectorXd b);

/// Identifiers accepted by builtin_scheme, in table order.
const std::vector<std::string>& builtin_scheme_ids();

/// Throws std::invalid_argument listing the valid ids for an unknown id.
ButcherTableau builtin_scheme(std::string_view id);

struct ConsistencyIssue {
  enum class Kind { shape, not_explicit, row_sum, weight_sum };
  Kind kind;
  int row = -1;
  int col = -1;
  double residual = 0.0;
  std::string message;
};

struct ConsistencyReport {
  std::vector<ConsistencyIssue> issues;
  bool ok() const { return issues.empty(); }
};

inline constexpr double kConsistencyTolerance = 1e-14;

ConsistencyReport validate_consistency(const ButcherTableau& t);

/// True iff every a_ij, c_i, b_j lies in [0, 1]. Exact comparisons.
bool check_assumption1(const ButcherTableau& t);

struct SspAnalysis {
  double ssp_coefficient = 0.0;
  bool satisfies_assumption1 = false;
  double bisection_tolerance = 0.0;
};

/// Radius of absolute monotonicity of the method, located by bisection on
/// [0, 2s]. A probe r is feasible when (I + rA) is invertible and
///   A(I+rA)^-1 >= 0,  b^T(I+rA)^-1 >= 0,
///   r A(I+rA)^-1 e <= e,  r b^T(I+rA)^-1 e <= 1.
SspAnalysis ssp_coefficient(const ButcherTableau& t, double tol = 1e-10);

/// Feasibility of a single probe r, exposed for testing the bisection.
bool ssp_feasible(const ButcherTableau& t, double r);

/// Plain-text form: name line, stage count, s rows of A, then b.
/// Blank lines and lines starting with '#' are skipped on read.
void write_tableau(std::ostream& os, const ButcherTableau& t);

/// Throws TableauParseError carrying the 1-based line number.
ButcherTableau read_tableau(std::istream& is);

class TableauParseError : public std::runtime_error {
 public:
  TableauParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace rkstab
