#include "pairsolve/hamiltonian.hpp"

#include <cmath>
#include <sstream>

namespace pairsolve {

Eigen::MatrixXd build_hamiltonian(const LevelSet& levels, double G, const SectorBasis& basis) {
  const Sector& s = basis.sector();
  if (s.L != levels.size())
    throw SectorMismatchError("build_hamiltonian: sector L != level count");
  const auto d = basis.dimension();
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(d, d);
  const auto& z = levels.z();
  const auto& z2 = levels.z2();
  for (std::int64_t i = 0; i < d; ++i) {
    const Configuration c = basis.config(i);
    double diag = 0.0;
    for (int l = 0; l < s.L; ++l)
      if (c.occupied(l)) diag += z2[l];
    H(i, i) = diag;
    // hop one pair k -> l; fill the upper triangle, mirror below
    for (int k = 0; k < s.L; ++k) {
      if (!c.occupied(k)) continue;
      for (int l = 0; l < s.L; ++l) {
        if (c.occupied(l)) continue;
        Configuration cc{(c.mask & ~(1u << k)) | (1u << l)};
        const std::int64_t j = basis.index_of(cc);
        if (j > i) {
          H(i, j) = -G * z[l] * z[k];
          H(j, i) = H(i, j);
        }
      }
    }
  }
  return H;
}

Eigen::MatrixXd build_hamiltonian(const LevelSet& levels, double G, Sector sector) {
  SectorBasis basis(sector);
  return build_hamiltonian(levels, G, basis);
}

Spectrum diagonalize_sector(const Eigen::MatrixXd& H) {
  if (H.rows() != H.cols()) throw DomainError("diagonalize_sector: matrix not square");
  if (!H.isApprox(H.transpose(), 1e-12))
    throw DomainError("diagonalize_sector: matrix not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "diagonalize_sector: eigensolver failed on " << H.rows() << "x" << H.cols()
        << " matrix, |H| = " << H.norm() << ", trace = " << H.trace();
    throw ConvergenceError(msg.str(), std::nan(""));
  }
  Spectrum out{solver.eigenvalues(), solver.eigenvectors()};
  const double scale = std::max(1.0, H.norm());
  const double res = (H * out.eigenvectors - out.eigenvectors * out.eigenvalues.asDiagonal())
                         .cwiseAbs()
                         .maxCoeff();
  if (res > 1e-10 * scale) {
    std::ostringstream msg;
    msg << "diagonalize_sector: eigenpair residual " << res << " exceeds 1e-10 * " << scale;
    throw ConvergenceError(msg.str(), res);
  }
  return out;
}

Spectrum diagonalize_sector(const LevelSet& levels, double G, Sector sector) {
  return diagonalize_sector(build_hamiltonian(levels, G, sector));
}

StateVector apply_hamiltonian(const LevelSet& levels, double G, const StateVector& state) {
  const Sector& s = state.sector();
  if (s.L != levels.size())
    throw SectorMismatchError("apply_hamiltonian: sector L != level count");
  const auto& z = levels.z();
  const auto& z2 = levels.z2();
  const auto& basis = state.basis();
  std::vector<Complex> out(static_cast<std::size_t>(basis.dimension()), Complex{});
  for (std::int64_t i = 0; i < basis.dimension(); ++i) {
    const Complex a = state.amplitude(i);
    if (a == Complex{}) continue;
    const Configuration c = basis.config(i);
    double diag = 0.0;
    for (int l = 0; l < s.L; ++l)
      if (c.occupied(l)) diag += z2[l];
    out[static_cast<std::size_t>(i)] += diag * a;
    for (int k = 0; k < s.L; ++k) {
      if (!c.occupied(k)) continue;
      for (int l = 0; l < s.L; ++l) {
        if (c.occupied(l)) continue;
        Configuration cc{(c.mask & ~(1u << k)) | (1u << l)};
        out[static_cast<std::size_t>(basis.index_of(cc))] += -G * z[l] * z[k] * a;
      }
    }
  }
  return StateVector(state.basis_ptr(), std::move(out));
}

double eigen_residual(const StateVector& state, const LevelSet& levels, double G, double energy) {
  const double n = state.norm();
  if (n == 0.0) throw DomainError("eigen_residual: zero state");
  const StateVector hs = apply_hamiltonian(levels, G, state);
  double s = 0.0;
  for (std::int64_t i = 0; i < state.basis().dimension(); ++i)
    s += std::norm(hs.amplitude(i) - energy * state.amplitude(i));
  return std::sqrt(s) / n;
}

}  // namespace pairsolve
