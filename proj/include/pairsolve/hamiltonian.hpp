#pragma once

#include <Eigen/Dense>

#include "pairsolve/model.hpp"
#include "pairsolve/state.hpp"

namespace pairsolve {

/// Dense block of H(G) = (1+G) H0 - G Q^dag Q in the sector basis:
/// diagonal sum_{l in c} z_l^2, off-diagonal -G z_l z_k between
/// configurations that differ by moving one pair from level k to level l.
Eigen::MatrixXd build_hamiltonian(const LevelSet& levels, double G, const SectorBasis& basis);

Eigen::MatrixXd build_hamiltonian(const LevelSet& levels, double G, Sector sector);

struct Spectrum {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns, same order
};

/// Dense symmetric diagonalization; eigenpair residuals are checked against
/// 1e-10 * ||H|| before returning.
Spectrum diagonalize_sector(const Eigen::MatrixXd& H);

Spectrum diagonalize_sector(const LevelSet& levels, double G, Sector sector);

/// H(G) applied to a state (sparse action, no matrix build).
StateVector apply_hamiltonian(const LevelSet& levels, double G, const StateVector& state);

/// || H psi - E psi || / || psi ||.
double eigen_residual(const StateVector& state, const LevelSet& levels, double G, double energy);

}  // namespace pairsolve
