#include "andent/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace andent {

namespace {

void check_common(int dim, Eigen::Index side_omega, Eigen::Index side_lambda) {
  if (dim < 1) throw std::invalid_argument("lattice: dim must be >= 1");
  if (side_lambda < 1) throw std::invalid_argument("lattice: sideLambda must be >= 1");
  if (side_lambda > side_omega)
    throw std::invalid_argument("lattice: sideLambda must not exceed sideOmega");
}

}  // namespace

LatticeSpec LatticeSpec::make(int dim, Eigen::Index side_omega, Eigen::Index side_lambda,
                              Boundary boundary) {
  check_common(dim, side_omega, side_lambda);
  if (side_omega < 3) throw std::invalid_argument("lattice: sideOmega must be >= 3");
  if (side_omega % 2 == 0) throw std::invalid_argument("lattice: sideOmega must be odd");
  if (side_lambda % 2 == 0) throw std::invalid_argument("lattice: sideLambda must be odd");
  return LatticeSpec{dim, side_omega, side_lambda, boundary};
}

LatticeSpec LatticeSpec::unchecked(int dim, Eigen::Index side_omega, Eigen::Index side_lambda,
                                   Boundary boundary) {
  check_common(dim, side_omega, side_lambda);
  if (side_omega < 1) throw std::invalid_argument("lattice: sideOmega must be >= 1");
  if (boundary == Boundary::periodic && side_omega < 3)
    throw std::invalid_argument("lattice: periodic boundary needs sideOmega >= 3");
  return LatticeSpec{dim, side_omega, side_lambda, boundary};
}

Eigen::Index LatticeSpec::site_count() const {
  Eigen::Index n = 1;
  for (int i = 0; i < dim; ++i) n *= side_omega;
  return n;
}

Eigen::Index LatticeSpec::lambda_count() const {
  Eigen::Index n = 1;
  for (int i = 0; i < dim; ++i) n *= side_lambda;
  return n;
}

Eigen::Index LatticeSpec::index_of(const std::vector<Eigen::Index>& coord) const {
  Eigen::Index idx = 0;
  for (int i = 0; i < dim; ++i) idx = idx * side_omega + coord[static_cast<std::size_t>(i)];
  return idx;
}

std::vector<Eigen::Index> LatticeSpec::coord_of(Eigen::Index index) const {
  std::vector<Eigen::Index> coord(static_cast<std::size_t>(dim));
  for (int i = dim - 1; i >= 0; --i) {
    coord[static_cast<std::size_t>(i)] = index % side_omega;
    index /= side_omega;
  }
  return coord;
}

std::vector<Eigen::Index> LatticeSpec::lambda_indices() const {
  const Eigen::Index m = half_lambda();
  const Eigen::Index c = center_coord();
  std::vector<Eigen::Index> out;
  out.reserve(static_cast<std::size_t>(lambda_count()));
  std::vector<Eigen::Index> coord(static_cast<std::size_t>(dim), c - m);
  while (true) {
    out.push_back(index_of(coord));
    int axis = dim - 1;
    for (; axis >= 0; --axis) {
      auto& x = coord[static_cast<std::size_t>(axis)];
      if (++x <= c + m) break;
      x = c - m;
    }
    if (axis < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::VectorXd sample_potential(const PotentialModel& model, Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("potential: site count must be >= 1");
  Eigen::VectorXd v(n);
  switch (model.kind) {
    case PotentialKind::none:
      v.setZero();
      break;
    case PotentialKind::uniform: {
      if (!(model.width > 0.0))
        throw std::invalid_argument("potential: uniform kind needs width > 0");
      SplitMix64 rng(model.seed);
      for (Eigen::Index j = 0; j < n; ++j) v[j] = rng.next_symmetric(model.width);
      break;
    }
    case PotentialKind::custom: {
      if (static_cast<Eigen::Index>(model.table.size()) != n)
        throw std::invalid_argument("potential: custom table size does not match site count");
      for (Eigen::Index j = 0; j < n; ++j) v[j] = model.table[static_cast<std::size_t>(j)];
      break;
    }
  }
  return v;
}

std::vector<std::pair<Eigen::Index, Eigen::Index>> build_laplacian(const LatticeSpec& spec) {
  const Eigen::Index n = spec.site_count();
  const Eigen::Index L = spec.side_omega;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(spec.dim));
  for (Eigen::Index j = 0; j < n; ++j) {
    auto coord = spec.coord_of(j);
    for (int axis = 0; axis < spec.dim; ++axis) {
      auto& x = coord[static_cast<std::size_t>(axis)];
      const Eigen::Index saved = x;
      if (saved + 1 < L) {
        x = saved + 1;
        pairs.emplace_back(j, spec.index_of(coord));
      } else if (spec.boundary == Boundary::periodic) {
        x = 0;
        const Eigen::Index k = spec.index_of(coord);
        if (k > j) pairs.emplace_back(j, k);  // wrap partner; L >= 3 keeps k != j+... unique
      }
      x = saved;
    }
  }
  return pairs;
}

AndersonModel assemble(const LatticeSpec& spec, double hopping,
                       const Eigen::VectorXd& potential) {
  const Eigen::Index n = spec.site_count();
  if (potential.size() != n)
    throw std::invalid_argument("assemble: potential length does not match site count");
  AndersonModel model;
  model.spec = spec;
  model.hopping = hopping;
  model.potential = potential;
  model.hamiltonian = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) model.hamiltonian(j, j) = potential[j];
  for (const auto& [j, k] : build_laplacian(spec)) {
    model.hamiltonian(j, k) = hopping;
    model.hamiltonian(k, j) = hopping;
  }
  return model;
}

Eigen::VectorXd shift_potential(const Eigen::VectorXd& potential, Eigen::Index shift,
                                ShiftMode mode) {
  const Eigen::Index n = potential.size();
  if (mode == ShiftMode::rotate) {
    Eigen::VectorXd out(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      Eigen::Index src = (j + shift) % n;
      if (src < 0) src += n;
      out[j] = potential[src];
    }
    return out;
  }
  const Eigen::Index a = std::abs(shift);
  if (a > n) throw std::invalid_argument("shift_potential: shift exceeds vector length");
  const Eigen::Index len = n - a;
  Eigen::VectorXd out(len);
  const Eigen::Index start = shift >= 0 ? shift : 0;
  for (Eigen::Index j = 0; j < len; ++j) out[j] = potential[start + j];
  return out;
}

}  // namespace andent
