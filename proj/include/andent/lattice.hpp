#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <utility>
#include <vector>

#include "andent/common.hpp"

namespace andent {

enum class Boundary { open, periodic };

/// Hypercubic lattice Omega of side L with a centered sub-cube Lambda of
/// side l = 2m+1. Sites are indexed 0..L^d-1, row-major in the coordinates.
struct LatticeSpec {
  int dim = 1;
  Eigen::Index side_omega = 3;
  Eigen::Index side_lambda = 1;
  Boundary boundary = Boundary::open;

  /// Public constructor: enforces odd sides, l <= L, L >= 3.
  static LatticeSpec make(int dim, Eigen::Index side_omega, Eigen::Index side_lambda,
                          Boundary boundary = Boundary::open);

  /// Relaxed constructor for internal/test use: permits even and tiny sides
  /// (periodic still requires L >= 3 to keep the neighbor set unambiguous).
  static LatticeSpec unchecked(int dim, Eigen::Index side_omega, Eigen::Index side_lambda,
                               Boundary boundary = Boundary::open);

  Eigen::Index site_count() const;
  Eigen::Index lambda_count() const;
  Eigen::Index half_lambda() const { return (side_lambda - 1) / 2; }
  Eigen::Index center_coord() const { return (side_omega - 1) / 2; }

  /// Flat index of the site with the given coordinates (each in [0, L)).
  Eigen::Index index_of(const std::vector<Eigen::Index>& coord) const;
  std::vector<Eigen::Index> coord_of(Eigen::Index index) const;

  /// Ascending flat indices of the centered cube Lambda.
  std::vector<Eigen::Index> lambda_indices() const;
};

/// SplitMix64 (Steele, Lea & Flood 2014). Runs the full 64-bit state through
/// the murmur-style finalizer; identical seeds give identical streams on any
/// platform. Uniform doubles take the top 53 bits.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [-width, width).
  double next_symmetric(double width) { return width * (2.0 * next_unit() - 1.0); }
};

enum class PotentialKind { none, uniform, custom };

struct PotentialModel {
  PotentialKind kind = PotentialKind::none;
  double width = 0.0;  // half-width W of the uniform law
  std::uint64_t seed = 0;
  std::vector<double> table;  // used by kind == custom
};

/// Draws the on-site potential: zeros, i.i.d. uniform on [-W, W], or a fixed
/// table. Identical (kind, seed, n) reproduce the same vector bit-exactly.
Eigen::VectorXd sample_potential(const PotentialModel& model, Eigen::Index n);

/// Nearest-neighbor pairs (j, k) with j < k of the d-dimensional grid.
/// Open boundaries drop out-of-range neighbors, periodic wraps.
std::vector<std::pair<Eigen::Index, Eigen::Index>> build_laplacian(const LatticeSpec& spec);

/// One-body Anderson Hamiltonian H = a*Delta + diag(V), with Delta the
/// adjacency (zero-diagonal) Laplacian.
struct AndersonModel {
  LatticeSpec spec;
  double hopping = 0.0;
  Eigen::VectorXd potential;
  Eigen::MatrixXd hamiltonian;
};

AndersonModel assemble(const LatticeSpec& spec, double hopping, const Eigen::VectorXd& potential);

enum class ShiftMode { rotate, truncate };

/// (T^a V)_j = V_{j+a}. Rotate keeps the length (periodic relabeling);
/// truncate drops the |a| sites that fall off the end.
Eigen::VectorXd shift_potential(const Eigen::VectorXd& potential, Eigen::Index shift,
                                ShiftMode mode);

}  // namespace andent
