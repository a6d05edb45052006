#include "andent/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

namespace andent {

namespace {

// FNV-1a over the matrix bytes; identifies a failing instance in error text.
std::string matrix_fingerprint(const Eigen::MatrixXd& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto* bytes = reinterpret_cast<const unsigned char*>(m.data());
  const std::size_t len = sizeof(double) * static_cast<std::size_t>(m.size());
  for (std::size_t i = 0; i < len; ++i) h = (h ^ bytes[i]) * 0x100000001b3ULL;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Eigen::Index occupied_count(const Eigen::VectorXd& eigenvalues, double mu) {
  Eigen::Index n_occ = 0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    if (std::abs(eigenvalues[i] - mu) < 1e-12)
      std::fprintf(stderr, "andent: warning: eigenvalue %ld within 1e-12 of mu=%.17g\n",
                   static_cast<long>(i), mu);
    if (eigenvalues[i] < mu) ++n_occ;
  }
  return n_occ;
}

}  // namespace

SpectralData eigendecompose(const AndersonModel& model, const EigenOptions& options) {
  const Eigen::Index n = model.spec.site_count();
  if (n > options.dense_limit)
    throw std::invalid_argument("eigendecompose: " + std::to_string(n) +
                                " sites exceed the dense-solver limit of " +
                                std::to_string(options.dense_limit));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  const bool tridiagonal =
      model.spec.dim == 1 && model.spec.boundary == Boundary::open && !options.force_dense;
  if (tridiagonal) {
    Eigen::VectorXd sub = Eigen::VectorXd::Constant(std::max<Eigen::Index>(n - 1, 0),
                                                    model.hopping);
    solver.computeFromTridiagonal(model.potential, sub, Eigen::ComputeEigenvectors);
  } else {
    solver.compute(model.hamiltonian, Eigen::ComputeEigenvectors);
  }
  if (solver.info() != Eigen::Success)
    throw NumericalDefect("eigendecompose: solver did not converge (matrix fingerprint " +
                          matrix_fingerprint(model.hamiltonian) + ")");
  return SpectralData{solver.eigenvalues(), solver.eigenvectors()};
}

double integrated_dos(const SpectralData& spectral, double mu) {
  Eigen::Index below = 0;
  for (Eigen::Index i = 0; i < spectral.eigenvalues.size(); ++i)
    if (spectral.eigenvalues[i] < mu) ++below;
  return static_cast<double>(below) / static_cast<double>(spectral.eigenvalues.size());
}

CorrelationMatrix fermi_projector(const SpectralData& spectral, double mu) {
  const Eigen::Index n = spectral.eigenvalues.size();
  const Eigen::Index n_occ = occupied_count(spectral.eigenvalues, mu);
  CorrelationMatrix cm;
  cm.entries = Eigen::MatrixXd::Zero(n, n);
  if (n_occ > 0) {
    const auto occ = spectral.eigenvectors.leftCols(n_occ);
    cm.entries.selfadjointView<Eigen::Lower>().rankUpdate(occ);
    cm.entries.triangularView<Eigen::StrictlyUpper>() =
        cm.entries.triangularView<Eigen::StrictlyLower>().transpose();
  }
  cm.ambient = n;
  cm.mu = mu;
  cm.temperature = 0.0;
  cm.projector = true;
  return cm;
}

double fermi_factor(double x) {
  if (x <= 0.0) return 1.0 / (1.0 + std::exp(x));
  const double e = std::exp(-x);
  return e / (1.0 + e);
}

CorrelationMatrix thermal_correlation(const SpectralData& spectral, double mu,
                                      double temperature) {
  if (!(temperature > 0.0))
    throw std::invalid_argument("thermal_correlation: temperature must be > 0");
  const Eigen::Index n = spectral.eigenvalues.size();
  Eigen::VectorXd sqrt_occ(n);
  for (Eigen::Index i = 0; i < n; ++i)
    sqrt_occ[i] = std::sqrt(fermi_factor((spectral.eigenvalues[i] - mu) / temperature));
  CorrelationMatrix cm;
  cm.entries = Eigen::MatrixXd::Zero(n, n);
  cm.entries.selfadjointView<Eigen::Lower>().rankUpdate(spectral.eigenvectors *
                                                        sqrt_occ.asDiagonal());
  cm.entries.triangularView<Eigen::StrictlyUpper>() =
      cm.entries.triangularView<Eigen::StrictlyLower>().transpose();
  cm.ambient = n;
  cm.mu = mu;
  cm.temperature = temperature;
  cm.projector = false;
  return cm;
}

std::pair<Eigen::Index, Eigen::Index> window_for(const LatticeSpec& spec, Eigen::Index cutoff) {
  if (spec.dim != 1) throw std::invalid_argument("window_for: windows are 1d only");
  const Eigen::Index c = spec.center_coord();
  const Eigen::Index m = spec.half_lambda();
  const Eigen::Index begin = std::max<Eigen::Index>(0, c - m - cutoff);
  const Eigen::Index end = std::min<Eigen::Index>(spec.site_count() - 1, c + m + cutoff);
  return {begin, end - begin + 1};
}

CorrelationMatrix windowed_correlation(const LatticeSpec& spec, double hopping,
                                       const Eigen::VectorXd& potential, double mu,
                                       double temperature, Eigen::Index cutoff) {
  if (spec.dim != 1) throw std::invalid_argument("windowed_correlation: 1d only");
  if (spec.boundary != Boundary::open)
    throw std::invalid_argument("windowed_correlation: open boundary only");
  const auto [begin, size] = window_for(spec, cutoff);
  const LatticeSpec window_spec = LatticeSpec::unchecked(1, size, 1, Boundary::open);
  const AndersonModel window_model =
      assemble(window_spec, hopping, potential.segment(begin, size));
  const SpectralData spectral = eigendecompose(window_model);
  CorrelationMatrix cm = temperature > 0.0 ? thermal_correlation(spectral, mu, temperature)
                                           : fermi_projector(spectral, mu);
  cm.offset = begin;
  cm.ambient = spec.site_count();
  return cm;
}

}  // namespace andent
