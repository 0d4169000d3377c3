#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "pairsolve/model.hpp"

namespace pairsolve {

using Complex = std::complex<double>;

/// Amplitudes over the canonical occupation basis of one sector.  Bethe
/// product states are kept unnormalized; the zero vector is representable
/// and flagged through is_zero().
class StateVector {
 public:
  StateVector(std::shared_ptr<const SectorBasis> basis, std::vector<Complex> amps);
  static StateVector zero(std::shared_ptr<const SectorBasis> basis);

  /// Basis state |c> (amplitude 1 on one configuration).
  static StateVector basis_state(std::shared_ptr<const SectorBasis> basis, Configuration c);
  static StateVector vacuum(const LevelSet& levels);        // |0>, M = 0
  static StateVector filled(const LevelSet& levels);        // |chi>, M = L

  const SectorBasis& basis() const { return *basis_; }
  std::shared_ptr<const SectorBasis> basis_ptr() const { return basis_; }
  const Sector& sector() const { return basis_->sector(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(std::int64_t i) const { return amps_[static_cast<std::size_t>(i)]; }

  double norm() const;
  bool is_zero(double tol = 0.0) const;

 private:
  std::shared_ptr<const SectorBasis> basis_;
  std::vector<Complex> amps_;
};

enum class PairOperator {
  QDagger,   // sum_l z_l b_l^dag
  Q,         // sum_l z_l b_l
  CZero,     // C(0) = -sum_l (1/z_l) b_l^dag
  BZero,     // B(0) = -sum_l (1/z_l) b_l
};

bool is_creation(PairOperator op);

/// Applies one of Q, Q^dag, C(0), B(0) as a sparse action.  Creation at
/// M = L and annihilation at M = 0 return the flagged zero vector of the
/// same sector (there is no adjacent sector to land in).
StateVector apply_operator(PairOperator op, const StateVector& state, const LevelSet& levels);

/// Generic one-pair operators with coefficient w_l = z_l / (y - z_l^2):
/// C(y) (creation) and B(y) (annihilation).
StateVector apply_c(Complex y, const StateVector& state, const LevelSet& levels);
StateVector apply_b(Complex y, const StateVector& state, const LevelSet& levels);

/// Creation/annihilation with an arbitrary coefficient vector.
StateVector apply_creation(const std::vector<Complex>& w, const StateVector& state);
StateVector apply_annihilation(const std::vector<Complex>& w, const StateVector& state);

/// Particle-hole transform Upsilon: amplitude of c moves to the complement
/// of c; an involution mapping sector M to L - M.
StateVector particle_hole_transform(const StateVector& state);

/// Conjugate-bilinear inner product <a|b> in the canonical basis.
Complex overlap(const StateVector& a, const StateVector& b);

}  // namespace pairsolve
