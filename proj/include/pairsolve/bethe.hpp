#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "pairsolve/model.hpp"

namespace pairsolve {

using Complex = std::complex<double>;

// Roots are carried in 80-bit precision: near a collapse they sit within
// ~1e-5 of the v = +-1 poles, and resolving the energies to 1e-8 requires
// the pair offsets below double rounding.
using Cplx = std::complex<long double>;

/// Which family of Bethe equations parametrizes the state: M roots acting on
/// the vacuum, or P = L - M roots acting on the filled state.
enum class Picture { ParticlePair, HolePair };

int root_count(Picture picture, Sector sector);
const char* picture_name(Picture picture);

/// A solved root configuration in the transformed variables v_j, with the
/// free-limit seed that produced it and the achieved residual.
struct RootSet {
  Picture picture = Picture::HolePair;
  Sector sector;
  Coupling coupling;
  std::vector<Cplx> roots_v;
  Configuration seed;
  double residual = 0.0;         // max-norm of the v-space residual
  double residual_scaled = 0.0;  // residual relative to per-equation term size

  std::vector<Cplx> roots_y() const;          // y_j = (1 + v_j)/(1 - v_j)
  std::vector<Complex> roots_v_d() const;     // double view for I/O
  std::vector<Complex> roots_y_d() const;
};

/// Root counts after threshold classification in v-space: |v+1| < tau0 is a
/// collapsed zero-energy pair, |v-1| < tauInf a collapsed infinite-energy
/// pair.  sigma_estimate accumulates y over the infinite cluster, which stays
/// finite at offset couplings.
struct RootClassification {
  std::vector<int> zero_indices;
  std::vector<int> infinite_indices;
  std::vector<int> ambiguous;  // caught between tau and 3*tau
  Complex sigma_estimate{0.0, 0.0};

  int n_zero() const { return static_cast<int>(zero_indices.size()); }
  int n_infinite() const { return static_cast<int>(infinite_indices.size()); }
  int n_regular = 0;
};

/// Residual of the Moebius-transformed Bethe equations.  For the hole
/// picture the n-th component is
///   (-2/G + 4P - 2L - 2)/(1 - v_n^2) + (L - 2P + 2)/(1 - v_n)
///     + sum_l 1/(v_n - eps_l) - sum_{q != n} 2/(v_n - v_q);
/// the particle picture flips the sign of 1/G and replaces P by M.
/// `scale` (optional) receives the sum of term magnitudes per component.
Eigen::VectorXcd bae_residual(const std::vector<Complex>& roots_v, Picture picture,
                              const LevelSet& levels, Complex G, Sector sector,
                              Eigen::VectorXd* scale = nullptr);

/// Analytic Jacobian of bae_residual with respect to the roots.
Eigen::MatrixXcd bae_jacobian(const std::vector<Complex>& roots_v, Picture picture,
                              const LevelSet& levels, Complex G, Sector sector);

struct SolveOptions {
  double tol = 1e-12;     // scaled residual target
  int max_iter = 80;      // Newton iterations per solve
  double g_start = 1e-6;  // magnitude of the free-limit anchor coupling
  double initial_step_fraction = 0.01;
  double min_step = 1e-12;
  int threads = 1;  // seed-level parallelism in enumerate_spectrum
};

struct NewtonResult {
  std::vector<Complex> roots_v;
  double residual = 0.0;
  double residual_scaled = 0.0;
  int iterations = 0;
};

/// Damped Newton (step halving on residual increase, up to 5 halvings) with
/// the analytic Jacobian, entirely in v-space.  Near-collisions restart once
/// with the offending pair nudged +-1e-8 i.
NewtonResult newton_solve(std::vector<Complex> initial_v, Picture picture,
                          const LevelSet& levels, Complex G, Sector sector,
                          double tol = 1e-12, int max_iter = 80);

/// Free-limit estimate for a root attached to level l: v = eps_l offset by
/// the leading O(G) displacement.
std::vector<Complex> free_limit_roots(Configuration seed, Picture picture,
                                      const LevelSet& levels, double G);

/// Path-follows the roots of one seed from the free limit to G_target with
/// adaptive steps; couplings whose inverse passes through an integer are
/// rounded by a short excursion into complex G, which keeps the collapsing
/// clusters at a uniform distance from the v = +-1 poles.
RootSet continuation_solve(Configuration seed, Picture picture, const LevelSet& levels,
                           const Coupling& G_target, Sector sector,
                           const SolveOptions& opts = {});

/// Continues an already-solved root set to a new coupling.  Used to tighten
/// offsets without re-running from the free limit.
RootSet refine_to_coupling(const RootSet& rs, const LevelSet& levels,
                           const Coupling& G_target, const SolveOptions& opts = {});

/// One RootSet per seed configuration, in lexicographic seed order.
std::vector<RootSet> enumerate_spectrum(const LevelSet& levels, const Coupling& G,
                                        Sector sector, Picture picture,
                                        const SolveOptions& opts = {});

/// Failure of some continuation paths; carries everything that did solve.
struct EnumerationError : Error {
  EnumerationError(const std::string& what, std::vector<Configuration> failed,
                   std::vector<RootSet> done)
      : Error(what), failed_seeds(std::move(failed)), completed(std::move(done)) {}
  std::vector<Configuration> failed_seeds;
  std::vector<RootSet> completed;
};

/// E = sum z^2 + (G - 1) sum y  (hole picture)  or  E = (1 + G) sum y
/// (particle picture).  The imaginary part must cancel by conjugate closure.
double energy_from_roots(const RootSet& rs, const LevelSet& levels);

RootClassification classify_roots(const RootSet& rs, double tau0 = 1e-2,
                                  double tau_inf = 1e-2);

/// Residual of the identity sum z^2 = (1 - 1/T) sigma + 2 sum_{Y'} y obeyed
/// by collapsing root sets in the limit G^-1 -> T = n_infinite, where Y' is
/// everything outside the infinite cluster.
double sigma_identity_gap(const RootSet& rs, const RootClassification& cls,
                          const LevelSet& levels);

/// Limit energy (1 + 1/T) sum_{Y'} y of a collapsing root set.
double collapse_limit_energy(const RootSet& rs, const RootClassification& cls);

/// Sorts root sets by energy (stable on near-ties).
void sort_by_energy(std::vector<RootSet>& sets, const LevelSet& levels);

}  // namespace pairsolve
