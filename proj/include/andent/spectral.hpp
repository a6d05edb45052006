#pragma once

#include <Eigen/Dense>

#include "andent/lattice.hpp"

namespace andent {

struct SpectralData {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns, H v_i = E_i v_i
};

struct EigenOptions {
  Eigen::Index dense_limit = 10000;  // refuse dense solves beyond this many sites
  bool force_dense = false;          // disable the 1d tridiagonal fast path (tests)
};

/// Exact diagonalization. Open 1d chains take a symmetric tridiagonal path,
/// everything else a dense selfadjoint path.
SpectralData eigendecompose(const AndersonModel& model, const EigenOptions& options = {});

/// Fraction of eigenvalues strictly below mu.
double integrated_dos(const SpectralData& spectral, double mu);

/// Dense correlation matrix, possibly covering only a contiguous index
/// window [offset, offset + entries.rows()) of a larger system; entries
/// outside the window are not represented (exponentially small in the
/// localized regimes the window mode is meant for).
struct CorrelationMatrix {
  Eigen::MatrixXd entries;
  Eigen::Index offset = 0;
  Eigen::Index ambient = 0;  // site count of the system this approximates
  double mu = 0.0;
  double temperature = 0.0;
  bool projector = false;  // true iff entries is an exact spectral projector

  Eigen::Index window_size() const { return entries.rows(); }
};

/// Zero-temperature Fermi projector P = sum_{E_i < mu} v_i v_i^T.
/// Eigenvalues within 1e-12 of mu are logged to stderr as near-degenerate
/// and counted strictly.
CorrelationMatrix fermi_projector(const SpectralData& spectral, double mu);

/// Thermal correlation K = sum_i f((E_i - mu)/T) v_i v_i^T, T > 0.
CorrelationMatrix thermal_correlation(const SpectralData& spectral, double mu,
                                      double temperature);

/// Overflow-safe Fermi factor 1/(1 + e^x).
double fermi_factor(double x);

/// Index window [begin, begin + size) centered on Lambda with `cutoff`
/// extra sites on each side, clipped to the lattice (d = 1 only).
std::pair<Eigen::Index, Eigen::Index> window_for(const LatticeSpec& spec, Eigen::Index cutoff);

/// Windowed correlation matrix for a large 1d system: restricts the chain to
/// the window around Lambda, diagonalizes the restriction, and returns its
/// projector (or thermal correlation) with the window offset recorded.
CorrelationMatrix windowed_correlation(const LatticeSpec& spec, double hopping,
                                       const Eigen::VectorXd& potential, double mu,
                                       double temperature, Eigen::Index cutoff);

}  // namespace andent
