#pragma once

#include <Eigen/Dense>

#include <map>
#include <vector>

#include "andent/spectral.hpp"

namespace andent {

/// Binary entropy h(x) = -x log2 x - (1-x) log2(1-x) in bits, with
/// h(0) = h(1) = 0. Inputs outside [-1e-9, 1 + 1e-9] indicate a broken
/// correlation matrix upstream and raise NumericalDefect.
double binary_entropy(double x);

/// phi(x) = 4 x (1 - x).
double entropy_quadratic(double x);

/// Restriction of a correlation matrix to a subsystem.
struct SubsystemCorrelation {
  Eigen::MatrixXd p_lambda;

  Eigen::Index size() const { return p_lambda.rows(); }
  /// Gamma_Lambda = P_Lambda (1 - P_Lambda), formed on demand.
  Eigen::MatrixXd gamma_lambda() const;
  /// Diagonal of Gamma_Lambda without forming the full product.
  Eigen::VectorXd gamma_diagonal() const;
};

/// Entrywise extraction of the centered cube Lambda.
SubsystemCorrelation restrict_to(const CorrelationMatrix& cm, const LatticeSpec& spec);

/// Entrywise extraction of arbitrary (ascending) global site indices.
SubsystemCorrelation restrict_to(const CorrelationMatrix& cm,
                                 const std::vector<Eigen::Index>& sites);

/// Eigenvalues of P_Lambda, ascending, clamped to [0, 1]: excursions within
/// 1e-10 outside are snapped to the boundary, anything larger raises
/// NumericalDefect (floating-point leakage must not create entropy).
Eigen::VectorXd occupation_spectrum(const SubsystemCorrelation& sc);

double entanglement_entropy(const Eigen::VectorXd& occupation_spectrum);
double entanglement_entropy(const SubsystemCorrelation& sc);

/// Renyi entropy (1-alpha)^-1 sum_i log2(lambda_i^alpha + (1-lambda_i)^alpha),
/// alpha > 0, alpha != 1.
double renyi_entropy(const Eigen::VectorXd& occupation_spectrum, double alpha);
double renyi_entropy(const SubsystemCorrelation& sc, double alpha);

/// Lower bound 4 tr Gamma_Lambda, evaluated as 4 (tr P - ||P||_F^2).
double lower_bound(const SubsystemCorrelation& sc);

/// Lower bound with the dual-route consistency check for exact projectors:
/// the trace form is compared against the explicit exterior sum
/// 4 sum_{j in Lambda} sum_{k not in Lambda} |P_jk|^2. Disagreement beyond
/// 1e-6 raises NumericalDefect; beyond 1e-9 logs a warning. Returns the
/// trace form. Non-projector inputs use the trace form only.
double lower_bound_checked(const CorrelationMatrix& cm,
                           const std::vector<Eigen::Index>& sites);

/// Upper bound 2 tr sqrt(Gamma_Lambda) = 2 sum_i sqrt(lambda_i (1-lambda_i)).
double upper_bound(const Eigen::VectorXd& occupation_spectrum);
double upper_bound(const SubsystemCorrelation& sc);

/// Tightened upper bound tr phi(P_Lambda)^alpha with alpha = log 2.
double tightened_upper(const Eigen::VectorXd& occupation_spectrum, double alpha = 0.6931471805599453);
double tightened_upper(const SubsystemCorrelation& sc, double alpha = 0.6931471805599453);

/// Row-wise (Peierls) bound 2 sum_{j in Lambda} sqrt((Gamma_Lambda)_jj).
double peierls_upper(const SubsystemCorrelation& sc);

/// The two edge contributions to the 1d lower bound and their remainders and
/// truncated boundary functionals. Sums over the available index range;
/// the infinite-series functionals cal_* are truncated at distance `cutoff`
/// from the respective boundary of Lambda.
struct BoundaryTerms1d {
  double l_plus = 0.0, l_minus = 0.0;       // split of the exact lower bound
  double r_plus = 0.0, r_minus = 0.0;       // cross-boundary remainders
  double cal_l_plus = 0.0, cal_l_minus = 0.0;  // truncated edge functionals
  double cal_u_plus = 0.0, cal_u_minus = 0.0;  // 2^{3/2}-prefactor edge bounds
};

BoundaryTerms1d boundary_terms_1d(const CorrelationMatrix& cm, const LatticeSpec& spec,
                                  Eigen::Index cutoff);

/// Translation-invariant sine-kernel correlation matrix on n sites:
/// P_jk = sin(kappa (j-k)) / (pi (j-k)), P_jj = kappa / pi. Approximately
/// idempotent (it is the infinite-chain projector restricted to n sites).
CorrelationMatrix ti_projector(double kappa, Eigen::Index n);

struct EntropyReport {
  double entropy = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double upper_tight = 0.0;
  double upper_peierls = 0.0;
  std::map<double, double> renyi;
  bool has_boundary = false;
  BoundaryTerms1d boundary;
};

struct ReportOptions {
  std::vector<double> renyi_alphas;
  Eigen::Index boundary_cutoff = 48;
  bool with_boundary = true;  // honored only for d = 1 projectors
};

/// Full per-realization report; enforces the bound sandwich
/// L <= S <= U_tight <= U <= U_peierls within 1e-9 slack.
EntropyReport compute_report(const CorrelationMatrix& cm, const LatticeSpec& spec,
                             const ReportOptions& options = {});

}  // namespace andent
