#include "andent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace andent {

namespace {

constexpr double kClampTol = 1e-10;
constexpr double kSandwichSlack = 1e-9;

double clamp_unit(double x, double tol, const char* what) {
  if (x < -tol || x > 1.0 + tol)
    throw NumericalDefect(std::string(what) + ": value " + std::to_string(x) +
                          " outside [0,1] beyond tolerance");
  return std::min(1.0, std::max(0.0, x));
}

// Local indices of the requested global sites inside the matrix window.
std::vector<Eigen::Index> local_indices(const CorrelationMatrix& cm,
                                        const std::vector<Eigen::Index>& sites) {
  std::vector<Eigen::Index> local(sites.size());
  const Eigen::Index w = cm.window_size();
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const Eigen::Index k = sites[i] - cm.offset;
    if (k < 0 || k >= w)
      throw std::invalid_argument("restrict: site " + std::to_string(sites[i]) +
                                  " outside the available correlation window");
    local[i] = k;
  }
  return local;
}

}  // namespace

double binary_entropy(double x) {
  x = clamp_unit(x, 1e-9, "binary_entropy");
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

double entropy_quadratic(double x) { return 4.0 * x * (1.0 - x); }

Eigen::MatrixXd SubsystemCorrelation::gamma_lambda() const {
  Eigen::MatrixXd gamma = p_lambda - p_lambda * p_lambda;
  gamma = 0.5 * (gamma + gamma.transpose()).eval();
  return gamma;
}

Eigen::VectorXd SubsystemCorrelation::gamma_diagonal() const {
  const Eigen::Index n = size();
  Eigen::VectorXd diag(n);
  for (Eigen::Index j = 0; j < n; ++j)
    diag[j] = p_lambda(j, j) - p_lambda.row(j).squaredNorm();
  return diag;
}

SubsystemCorrelation restrict_to(const CorrelationMatrix& cm, const LatticeSpec& spec) {
  return restrict_to(cm, spec.lambda_indices());
}

SubsystemCorrelation restrict_to(const CorrelationMatrix& cm,
                                 const std::vector<Eigen::Index>& sites) {
  const auto local = local_indices(cm, sites);
  const Eigen::Index n = static_cast<Eigen::Index>(local.size());
  SubsystemCorrelation sc;
  sc.p_lambda.resize(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      sc.p_lambda(a, b) = cm.entries(local[static_cast<std::size_t>(a)],
                                     local[static_cast<std::size_t>(b)]);
  return sc;
}

Eigen::VectorXd occupation_spectrum(const SubsystemCorrelation& sc) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sc.p_lambda,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalDefect("occupation_spectrum: eigensolver did not converge");
  Eigen::VectorXd ev = solver.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    ev[i] = clamp_unit(ev[i], kClampTol, "occupation_spectrum");
  return ev;
}

double entanglement_entropy(const Eigen::VectorXd& occupation_spectrum) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < occupation_spectrum.size(); ++i)
    s += binary_entropy(occupation_spectrum[i]);
  return s;
}

double entanglement_entropy(const SubsystemCorrelation& sc) {
  return entanglement_entropy(occupation_spectrum(sc));
}

double renyi_entropy(const Eigen::VectorXd& occupation_spectrum, double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0)
    throw std::invalid_argument("renyi_entropy: alpha must be positive and != 1");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < occupation_spectrum.size(); ++i) {
    const double x = occupation_spectrum[i];
    sum += std::log2(std::pow(x, alpha) + std::pow(1.0 - x, alpha));
  }
  return sum / (1.0 - alpha);
}

double renyi_entropy(const SubsystemCorrelation& sc, double alpha) {
  return renyi_entropy(occupation_spectrum(sc), alpha);
}

double lower_bound(const SubsystemCorrelation& sc) {
  return 4.0 * (sc.p_lambda.trace() - sc.p_lambda.squaredNorm());
}

double lower_bound_checked(const CorrelationMatrix& cm,
                           const std::vector<Eigen::Index>& sites) {
  const SubsystemCorrelation sc = restrict_to(cm, sites);
  const double trace_form = lower_bound(sc);
  if (!cm.projector) return trace_form;

  const auto local = local_indices(cm, sites);
  std::vector<char> inside(static_cast<std::size_t>(cm.window_size()), 0);
  for (const Eigen::Index k : local) inside[static_cast<std::size_t>(k)] = 1;
  double sum_form = 0.0;
  for (const Eigen::Index j : local) {
    double row = 0.0;
    for (Eigen::Index k = 0; k < cm.window_size(); ++k)
      if (!inside[static_cast<std::size_t>(k)]) row += cm.entries(j, k) * cm.entries(j, k);
    sum_form += row;
  }
  sum_form *= 4.0;

  const double diff = std::abs(trace_form - sum_form);
  const double scale = std::max(1.0, std::abs(trace_form));
  if (diff > 1e-6 * scale)
    throw NumericalDefect("lower_bound: trace form " + std::to_string(trace_form) +
                          " and exterior sum " + std::to_string(sum_form) +
                          " disagree beyond 1e-6 (projector defect)");
  if (diff > 1e-9 * scale)
    std::fprintf(stderr, "andent: warning: lower-bound routes differ by %.3e\n", diff);
  return trace_form;
}

double upper_bound(const Eigen::VectorXd& occupation_spectrum) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < occupation_spectrum.size(); ++i) {
    const double x = occupation_spectrum[i];
    sum += std::sqrt(x * (1.0 - x));
  }
  return 2.0 * sum;
}

double upper_bound(const SubsystemCorrelation& sc) {
  return upper_bound(occupation_spectrum(sc));
}

double tightened_upper(const Eigen::VectorXd& occupation_spectrum, double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("tightened_upper: alpha must lie in (0, 1)");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < occupation_spectrum.size(); ++i) {
    const double phi = entropy_quadratic(occupation_spectrum[i]);
    if (phi > 0.0) sum += std::pow(phi, alpha);
  }
  return sum;
}

double tightened_upper(const SubsystemCorrelation& sc, double alpha) {
  return tightened_upper(occupation_spectrum(sc), alpha);
}

double peierls_upper(const SubsystemCorrelation& sc) {
  const Eigen::VectorXd diag = sc.gamma_diagonal();
  double sum = 0.0;
  for (Eigen::Index j = 0; j < diag.size(); ++j) sum += std::sqrt(std::max(0.0, diag[j]));
  return 2.0 * sum;
}

BoundaryTerms1d boundary_terms_1d(const CorrelationMatrix& cm, const LatticeSpec& spec,
                                  Eigen::Index cutoff) {
  if (spec.dim != 1) throw std::invalid_argument("boundary_terms_1d: d = 1 only");
  if (cutoff < 1) throw std::invalid_argument("boundary_terms_1d: cutoff must be >= 1");
  const Eigen::Index m = spec.half_lambda();
  const Eigen::Index c = spec.center_coord();
  const Eigen::Index lo = c - m, hi = c + m;  // Lambda = [lo, hi], global
  const Eigen::Index wlo = cm.offset, whi = cm.offset + cm.window_size() - 1;
  if (lo < wlo || hi > whi)
    throw std::invalid_argument("boundary_terms_1d: Lambda outside the correlation window");

  const auto& P = cm.entries;
  const auto sq = [&](Eigen::Index j, Eigen::Index k) {
    const double v = P(j - wlo, k - wlo);
    return v * v;
  };

  BoundaryTerms1d bt;
  // Exact split of the lower bound over the available range.
  for (Eigen::Index j = lo; j <= hi; ++j) {
    for (Eigen::Index k = hi + 1; k <= whi; ++k) bt.l_plus += sq(j, k);
    for (Eigen::Index k = wlo; k < lo; ++k) bt.l_minus += sq(j, k);
  }
  bt.l_plus *= 4.0;
  bt.l_minus *= 4.0;
  // Remainders couple the two exteriors across Lambda.
  for (Eigen::Index j = wlo; j < lo; ++j)
    for (Eigen::Index k = hi + 1; k <= whi; ++k) bt.r_plus += sq(j, k);
  for (Eigen::Index j = hi + 1; j <= whi; ++j)
    for (Eigen::Index k = wlo; k < lo; ++k) bt.r_minus += sq(j, k);
  bt.r_plus *= 4.0;
  bt.r_minus *= 4.0;

  // Truncated edge functionals: both index ranges within `cutoff` of the cut.
  const double pref_u = 2.0 * std::sqrt(2.0);  // 2^{3/2}
  {
    const Eigen::Index jmin = std::max(wlo, hi - cutoff), kmax = std::min(whi, hi + cutoff);
    double acc = 0.0, acc_u = 0.0;
    for (Eigen::Index j = jmin; j <= hi; ++j) {
      double row = 0.0;
      for (Eigen::Index k = hi + 1; k <= kmax; ++k) row += sq(j, k);
      acc += row;
      acc_u += std::sqrt(row);
    }
    bt.cal_l_plus = 4.0 * acc;
    bt.cal_u_plus = pref_u * acc_u;
  }
  {
    const Eigen::Index jmax = std::min(whi, lo + cutoff), kmin = std::max(wlo, lo - cutoff);
    double acc = 0.0, acc_u = 0.0;
    for (Eigen::Index j = lo; j <= jmax; ++j) {
      double row = 0.0;
      for (Eigen::Index k = kmin; k < lo; ++k) row += sq(j, k);
      acc += row;
      acc_u += std::sqrt(row);
    }
    bt.cal_l_minus = 4.0 * acc;
    bt.cal_u_minus = pref_u * acc_u;
  }
  return bt;
}

CorrelationMatrix ti_projector(double kappa, Eigen::Index n) {
  if (!(kappa > 0.0) || !(kappa < M_PI))
    throw std::invalid_argument("ti_projector: kappa must lie in (0, pi)");
  if (n < 1) throw std::invalid_argument("ti_projector: n must be >= 1");
  CorrelationMatrix cm;
  cm.entries.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    cm.entries(j, j) = kappa / M_PI;
    for (Eigen::Index k = 0; k < j; ++k) {
      const double t = static_cast<double>(j - k);
      const double v = std::sin(kappa * t) / (M_PI * t);
      cm.entries(j, k) = v;
      cm.entries(k, j) = v;
    }
  }
  cm.ambient = n;
  cm.mu = 0.0;
  cm.temperature = 0.0;
  cm.projector = false;  // restriction of the infinite-chain projector
  return cm;
}

EntropyReport compute_report(const CorrelationMatrix& cm, const LatticeSpec& spec,
                             const ReportOptions& options) {
  const auto sites = spec.lambda_indices();
  const SubsystemCorrelation sc = restrict_to(cm, sites);
  const Eigen::VectorXd spectrum = occupation_spectrum(sc);

  EntropyReport report;
  report.entropy = entanglement_entropy(spectrum);
  report.lower = lower_bound_checked(cm, sites);
  report.upper = upper_bound(spectrum);
  report.upper_tight = tightened_upper(spectrum);
  report.upper_peierls = peierls_upper(sc);
  for (const double alpha : options.renyi_alphas)
    report.renyi[alpha] = renyi_entropy(spectrum, alpha);

  const double slack = kSandwichSlack;
  const bool ok = report.lower <= report.entropy + slack &&
                  report.entropy <= report.upper_tight + slack &&
                  report.upper_tight <= report.upper + slack &&
                  report.upper <= report.upper_peierls + slack && report.lower >= -slack;
  if (!ok)
    throw NumericalDefect(
        "compute_report: bound sandwich violated (L=" + std::to_string(report.lower) +
        " S=" + std::to_string(report.entropy) + " Ut=" + std::to_string(report.upper_tight) +
        " U=" + std::to_string(report.upper) + " Up=" + std::to_string(report.upper_peierls) +
        ")");

  if (options.with_boundary && spec.dim == 1 && cm.projector) {
    report.boundary = boundary_terms_1d(cm, spec, options.boundary_cutoff);
    report.has_boundary = true;
  }
  return report;
}

}  // namespace andent
