#include "rkstab/tableau.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace rkstab {

ButcherTableau make_tableau(std::string name, Eigen::MatrixXd a, Eigen::VectorXd b) {
  ButcherTableau t;
  t.name = std::move(name);
  t.c = a.rowwise().sum();
  t.a = std::move(a);
  t.b = std::move(b);
  return t;
}

const std::vector<std::string>& builtin_scheme_ids() {
  static const std::vector<std::string> ids = {"forward_euler", "midpoint", "ssprk33", "rk31",
                                               "rk44"};
  return ids;
}

ButcherTableau builtin_scheme(std::string_view id) {
  using Eigen::MatrixXd;
  using Eigen::VectorXd;
  if (id == "forward_euler") {
    return make_tableau("forward_euler", MatrixXd::Zero(1, 1), VectorXd::Ones(1));
  }
  if (id == "midpoint") {
    MatrixXd a = MatrixXd::Zero(2, 2);
    a(1, 0) = 0.5;
    VectorXd b(2);
    b << 0.0, 1.0;
    return make_tableau("midpoint", a, b);
  }
  if (id == "ssprk33") {
    MatrixXd a = MatrixXd::Zero(3, 3);
    a(1, 0) = 1.0;
    a(2, 0) = 0.25;
    a(2, 1) = 0.25;
    VectorXd b(3);
    b << 1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0;
    return make_tableau("ssprk33", a, b);
  }
  if (id == "rk31") {
    // Nystrom's third-order method.
    MatrixXd a = MatrixXd::Zero(3, 3);
    a(1, 0) = 2.0 / 3.0;
    a(2, 1) = 2.0 / 3.0;
    VectorXd b(3);
    b << 0.25, 0.375, 0.375;
    return make_tableau("rk31", a, b);
  }
  if (id == "rk44") {
    MatrixXd a = MatrixXd::Zero(4, 4);
    a(1, 0) = 0.5;
    a(2, 1) = 0.5;
    a(3, 2) = 1.0;
    VectorXd b(4);
    b << 1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0;
    return make_tableau("rk44", a, b);
  }
  std::string valid;
  for (const auto& s : builtin_scheme_ids()) {
    valid += valid.empty() ? s : ", " + s;
  }
  throw std::invalid_argument("unknown scheme '" + std::string(id) + "'; valid schemes: " + valid);
}

ConsistencyReport validate_consistency(const ButcherTableau& t) {
  ConsistencyReport report;
  const auto s = t.b.size();
  if (s == 0 || t.a.rows() != s || t.a.cols() != s || t.c.size() != s) {
    report.issues.push_back({ConsistencyIssue::Kind::shape, -1, -1, 0.0,
                             "inconsistent dimensions of A, b, c"});
    return report;
  }
  for (Eigen::Index i = 0; i < s; ++i) {
    for (Eigen::Index j = i; j < s; ++j) {
      if (t.a(i, j) != 0.0) {
        std::ostringstream msg;
        msg << "not explicit: a(" << i + 1 << "," << j + 1 << ") = " << t.a(i, j);
        report.issues.push_back({ConsistencyIssue::Kind::not_explicit, static_cast<int>(i),
                                 static_cast<int>(j), t.a(i, j), msg.str()});
      }
    }
  }
  for (Eigen::Index i = 0; i < s; ++i) {
    const double residual = t.c(i) - t.a.row(i).sum();
    if (std::abs(residual) > kConsistencyTolerance) {
      std::ostringstream msg;
      msg << "row sum mismatch at stage " << i + 1 << ": c - sum(a) = " << residual;
      report.issues.push_back({ConsistencyIssue::Kind::row_sum, static_cast<int>(i), -1,
                               residual, msg.str()});
    }
  }
  const double weight_residual = t.b.sum() - 1.0;
  if (std::abs(weight_residual) > kConsistencyTolerance) {
    std::ostringstream msg;
    msg << "weights sum to " << std::setprecision(17) << t.b.sum() << ", expected 1";
    report.issues.push_back(
        {ConsistencyIssue::Kind::weight_sum, -1, -1, weight_residual, msg.str()});
  }
  return report;
}

bool check_assumption1(const ButcherTableau& t) {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  for (Eigen::Index i = 0; i < t.a.rows(); ++i) {
    for (Eigen::Index j = 0; j < t.a.cols(); ++j) {
      if (!in_unit(t.a(i, j))) return false;
    }
  }
  for (Eigen::Index i = 0; i < t.b.size(); ++i) {
    if (!in_unit(t.b(i)) || !in_unit(t.c(i))) return false;
  }
  return true;
}

bool ssp_feasible(const ButcherTableau& t, double r) {
  const auto s = t.stages();
  const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(s, s) + r * t.a;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  if (!lu.isInvertible()) return false;
  const Eigen::MatrixXd inv = lu.inverse();
  const Eigen::MatrixXd k = t.a * inv;
  const Eigen::RowVectorXd kb = t.b.transpose() * inv;
  // Roundoff in the inverse must not flip a probe that is feasible in exact
  // arithmetic; without the allowance the bisection stalls just below
  // coefficients such as exactly 1.
  constexpr double eps = 1e-13;
  if ((k.array() < -eps).any() || (kb.array() < -eps).any()) return false;
  if ((r * k.rowwise().sum().array() > 1.0 + eps).any()) return false;
  return r * kb.sum() <= 1.0 + eps;
}

SspAnalysis ssp_coefficient(const ButcherTableau& t, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("ssp_coefficient: tolerance must be positive");
  SspAnalysis out;
  out.satisfies_assumption1 = check_assumption1(t);
  out.bisection_tolerance = tol;
  if ((t.a.array() < 0.0).any() || (t.b.array() < 0.0).any()) return out;

  double lo = 0.0;
  double hi = 2.0 * t.stages();
  if (ssp_feasible(t, hi)) {
    out.ssp_coefficient = hi;
    return out;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (ssp_feasible(t, mid) ? lo : hi) = mid;
  }
  out.ssp_coefficient = lo;
  return out;
}

TableauParseError::TableauParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

void write_tableau(std::ostream& os, const ButcherTableau& t) {
  const auto old_precision = os.precision(17);
  os << t.name << '\n' << t.stages() << '\n';
  for (Eigen::Index i = 0; i < t.a.rows(); ++i) {
    for (Eigen::Index j = 0; j < t.a.cols(); ++j) {
      os << (j ? " " : "") << t.a(i, j);
    }
    os << '\n';
  }
  for (Eigen::Index j = 0; j < t.b.size(); ++j) {
    os << (j ? " " : "") << t.b(j);
  }
  os << '\n';
  os.precision(old_precision);
}

namespace {

struct LineReader {
  std::istream& is;
  int line_no = 0;

  bool next(std::string& out) {
    std::string line;
    while (std::getline(is, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto last = line.find_last_not_of(" \t\r");
      out = line.substr(first, last - first + 1);
      return true;
    }
    return false;
  }

  std::string require(const char* what) {
    std::string line;
    if (!next(line)) throw TableauParseError(line_no + 1, std::string("missing ") + what);
    return line;
  }
};

std::vector<double> parse_row(const std::string& text, int line_no, int expected) {
  std::istringstream ss(text);
  std::vector<double> row;
  std::string token;
  while (ss >> token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw TableauParseError(line_no, "not a decimal literal: '" + token + "'");
    }
    row.push_back(v);
  }
  if (static_cast<int>(row.size()) != expected) {
    throw TableauParseError(line_no, "expected " + std::to_string(expected) + " values, got " +
                                         std::to_string(row.size()));
  }
  return row;
}

}  // namespace

ButcherTableau read_tableau(std::istream& is) {
  LineReader reader{is};
  const std::string name = reader.require("name");
  const std::string stage_line = reader.require("stage count");
  int s = 0;
  try {
    std::size_t used = 0;
    s = std::stoi(stage_line, &used);
    if (used != stage_line.size()) s = 0;
  } catch (const std::exception&) {
    s = 0;
  }
  if (s <= 0) throw TableauParseError(reader.line_no, "invalid stage count '" + stage_line + "'");

  Eigen::MatrixXd a(s, s);
  for (int i = 0; i < s; ++i) {
    const std::string text = reader.require("row of A");
    const auto row = parse_row(text, reader.line_no, s);
    for (int j = 0; j < s; ++j) a(i, j) = row[j];
  }
  const std::string text = reader.require("weights b");
  const auto row = parse_row(text, reader.line_no, s);
  Eigen::VectorXd b(s);
  for (int j = 0; j < s; ++j) b(j) = row[j];
  return make_tableau(name, a, b);
}

}  // namespace rkstab
