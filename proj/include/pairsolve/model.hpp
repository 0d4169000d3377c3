#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pairsolve/errors.hpp"

namespace pairsolve {

// Largest sector dimension we diagonalize or enumerate (L=16 at half filling).
inline constexpr std::int64_t kMaxSectorDim = 12870;

/// Moebius change of variables y = (1+v)/(1-v) and its inverse,
/// mapping y=0 <-> v=-1 and y=inf <-> v=1.  Also used for the level
/// parameters, z^2 = (1+eps)/(1-eps).
double moebius(double y);
double moebius_inverse(double v);
std::complex<double> moebius(std::complex<double> y);
std::complex<double> moebius_inverse(std::complex<double> v);

/// The L single-pair energy parameters z_l > 0 of the model instance,
/// together with their squares and Moebius images eps_l.
class LevelSet {
 public:
  static LevelSet from_z(std::vector<double> z);
  static LevelSet from_z2(const std::vector<double>& z2);
  static LevelSet from_epsilon(const std::vector<double>& eps);

  // eps_j = j/10, j = 1..8; the level set used for both benchmark tables.
  static LevelSet preset_paper8();
  // z in {0.8, 1/0.8, 0.6, 1/0.6}: closed under z -> 1/z (inversion mapping).
  static LevelSet preset_inv4();
  static std::optional<LevelSet> from_preset_name(const std::string& name);

  int size() const { return static_cast<int>(z_.size()); }
  const std::vector<double>& z() const { return z_; }
  const std::vector<double>& z2() const { return z2_; }
  const std::vector<double>& epsilon() const { return eps_; }
  double sum_z2() const { return sum_z2_; }

  bool closed_under_inversion(double tol = 1e-12) const;

 private:
  explicit LevelSet(std::vector<double> z);
  std::vector<double> z_, z2_, eps_;
  double sum_z2_ = 0.0;
};

/// Signed pairing coupling, kept as an exact rational target plus a recorded
/// offset so that critical couplings like 1/2 + 1e-7 are bit-reproducible.
class Coupling {
 public:
  Coupling() = default;
  explicit Coupling(double value) : num_(0), den_(0), offset_(value) {}
  Coupling(std::int64_t num, std::int64_t den, double offset = 0.0);

  /// Parses "0.37", "-1/3", "1/2+1e-7", "1/2-1e-9".
  static Coupling parse(const std::string& text);

  double value() const;
  double inverse() const { return 1.0 / value(); }
  bool is_rational() const { return den_ != 0; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double offset() const { return offset_; }

  /// Exact integer G^-1 when the target is 1/k and the offset is zero.
  std::optional<std::int64_t> exact_inverse() const;

  Coupling negated() const;
  std::string str() const;

 private:
  std::int64_t num_ = 0, den_ = 0;  // den_ == 0: no rational part
  double offset_ = 0.0;
};

/// An (L, M) block of the number-conserving Hamiltonian; P = L - M counts
/// hole-pairs.
struct Sector {
  int L = 0;
  int M = 0;

  Sector() = default;
  Sector(int L, int M);
  static Sector from_holes(int L, int P) { return Sector(L, L - P); }

  int P() const { return L - M; }
  std::int64_t dimension() const;  // L choose M
};

std::int64_t binomial(int n, int k);

/// A pair-occupation pattern: subset of the L levels, canonical bitmask form
/// (bit l set <=> level l occupied, 0-based).
struct Configuration {
  std::uint32_t mask = 0;

  int count() const { return __builtin_popcount(mask); }
  bool occupied(int level) const { return (mask >> level) & 1u; }
  std::vector<int> levels() const;              // ascending, 0-based
  static Configuration from_levels(const std::vector<int>& levels, int L);

  friend bool operator==(Configuration a, Configuration b) { return a.mask == b.mask; }
};

/// All size-M subsets of {0..L-1} in lexicographic order of their sorted
/// index lists, plus the reverse lookup.
class SectorBasis {
 public:
  explicit SectorBasis(Sector sector);

  const Sector& sector() const { return sector_; }
  std::int64_t dimension() const { return static_cast<std::int64_t>(configs_.size()); }
  const std::vector<Configuration>& configurations() const { return configs_; }
  Configuration config(std::int64_t i) const { return configs_[static_cast<std::size_t>(i)]; }
  std::int64_t index_of(Configuration c) const;

 private:
  Sector sector_;
  std::vector<Configuration> configs_;
  std::unordered_map<std::uint32_t, std::int64_t> index_;
};

std::vector<Configuration> enumerate_sector_basis(Sector sector);

}  // namespace pairsolve
