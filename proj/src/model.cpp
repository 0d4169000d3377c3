#include "pairsolve/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

namespace pairsolve {

namespace {

constexpr double kPoleTol = 1e-300;

}  // namespace

double moebius(double y) {
  if (std::abs(y + 1.0) < kPoleTol) throw PoleError("moebius: pole at y = -1");
  return (y - 1.0) / (y + 1.0);
}

double moebius_inverse(double v) {
  if (std::abs(v - 1.0) < kPoleTol) throw PoleError("moebius_inverse: pole at v = 1");
  return (1.0 + v) / (1.0 - v);
}

std::complex<double> moebius(std::complex<double> y) {
  if (std::abs(y + 1.0) < kPoleTol) throw PoleError("moebius: pole at y = -1");
  return (y - 1.0) / (y + 1.0);
}

std::complex<double> moebius_inverse(std::complex<double> v) {
  if (std::abs(v - 1.0) < kPoleTol) throw PoleError("moebius_inverse: pole at v = 1");
  return (1.0 + v) / (1.0 - v);
}

LevelSet::LevelSet(std::vector<double> z) : z_(std::move(z)) {
  if (z_.empty()) throw DomainError("LevelSet: need at least one level");
  z2_.reserve(z_.size());
  eps_.reserve(z_.size());
  for (double zl : z_) {
    if (!(zl > 0.0)) throw DomainError("LevelSet: all z_l must be positive");
    const double z2 = zl * zl;
    z2_.push_back(z2);
    eps_.push_back((z2 - 1.0) / (z2 + 1.0));
  }
  std::vector<double> sorted = z2_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] < 1e-12 * (1.0 + sorted[i]))
      throw DomainError("LevelSet: level squares must be pairwise distinct");
  }
  // Moebius round trip eps -> z^2 -> eps must close.
  for (std::size_t i = 0; i < z_.size(); ++i) {
    const double back = (z2_[i] - 1.0) / (z2_[i] + 1.0);
    if (std::abs(back - eps_[i]) > 1e-14)
      throw DomainError("LevelSet: Moebius round trip failed");
  }
  sum_z2_ = std::accumulate(z2_.begin(), z2_.end(), 0.0);
}

LevelSet LevelSet::from_z(std::vector<double> z) { return LevelSet(std::move(z)); }

LevelSet LevelSet::from_z2(const std::vector<double>& z2) {
  std::vector<double> z;
  z.reserve(z2.size());
  for (double s : z2) {
    if (!(s > 0.0)) throw DomainError("LevelSet: z^2 must be positive");
    z.push_back(std::sqrt(s));
  }
  return LevelSet(std::move(z));
}

LevelSet LevelSet::from_epsilon(const std::vector<double>& eps) {
  std::vector<double> z;
  z.reserve(eps.size());
  for (double e : eps) {
    if (!(e > -1.0 && e < 1.0))
      throw DomainError("LevelSet: epsilon must lie in (-1, 1)");
    z.push_back(std::sqrt((1.0 + e) / (1.0 - e)));
  }
  return LevelSet(std::move(z));
}

LevelSet LevelSet::preset_paper8() {
  std::vector<double> eps(8);
  for (int j = 1; j <= 8; ++j) eps[j - 1] = j / 10.0;
  return from_epsilon(eps);
}

LevelSet LevelSet::preset_inv4() {
  return from_z({0.8, 1.0 / 0.8, 0.6, 1.0 / 0.6});
}

std::optional<LevelSet> LevelSet::from_preset_name(const std::string& name) {
  if (name == "paper8") return preset_paper8();
  if (name == "inv4") return preset_inv4();
  return std::nullopt;
}

bool LevelSet::closed_under_inversion(double tol) const {
  std::vector<double> a = z_, b;
  b.reserve(a.size());
  for (double zl : a) b.push_back(1.0 / zl);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol * (1.0 + std::abs(a[i]))) return false;
  return true;
}

Coupling::Coupling(std::int64_t num, std::int64_t den, double offset)
    : num_(num), den_(den), offset_(offset) {
  if (den_ == 0) throw DomainError("Coupling: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

double Coupling::value() const {
  double v = offset_;
  if (den_ != 0) v += static_cast<double>(num_) / static_cast<double>(den_);
  return v;
}

std::optional<std::int64_t> Coupling::exact_inverse() const {
  if (den_ == 0 || num_ == 0 || offset_ != 0.0) return std::nullopt;
  if (den_ % num_ != 0) return std::nullopt;
  return den_ / num_;
}

Coupling Coupling::negated() const {
  Coupling c;
  c.num_ = -num_;
  c.den_ = den_;
  c.offset_ = -offset_;
  return c;
}

std::string Coupling::str() const {
  char buf[96];
  if (den_ != 0 && offset_ != 0.0)
    std::snprintf(buf, sizeof buf, "%lld/%lld%+.9g", static_cast<long long>(num_),
                  static_cast<long long>(den_), offset_);
  else if (den_ != 0)
    std::snprintf(buf, sizeof buf, "%lld/%lld", static_cast<long long>(num_),
                  static_cast<long long>(den_));
  else
    std::snprintf(buf, sizeof buf, "%.17g", offset_);
  return buf;
}

Coupling Coupling::parse(const std::string& text) {
  // [-]p/q[(+|-)offset]  or a plain float.
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw DomainError("Coupling: cannot parse '" + text + "'");
    return Coupling(v);
  }
  std::size_t pos = 0;
  const long long num = std::stoll(text, &pos);
  if (pos != slash) throw DomainError("Coupling: cannot parse '" + text + "'");
  std::size_t pos2 = 0;
  const std::string rest = text.substr(slash + 1);
  const long long den = std::stoll(rest, &pos2);
  double offset = 0.0;
  if (pos2 != rest.size()) {
    const std::string off = rest.substr(pos2);
    if (off[0] != '+' && off[0] != '-')
      throw DomainError("Coupling: cannot parse '" + text + "'");
    std::size_t pos3 = 0;
    offset = std::stod(off, &pos3);
    if (pos3 != off.size()) throw DomainError("Coupling: cannot parse '" + text + "'");
  }
  return Coupling(num, den, offset);
}

Sector::Sector(int L_, int M_) : L(L_), M(M_) {
  if (L < 1) throw DomainError("Sector: L must be >= 1");
  if (M < 0 || M > L) throw DomainError("Sector: M must lie in [0, L]");
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (2 * k > n) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // n <= 62 keeps this exact in 64 bits for every k we scan
    r = r * (n - k + i) / i;
  }
  return r;
}

std::int64_t Sector::dimension() const { return binomial(L, M); }

std::vector<int> Configuration::levels() const {
  std::vector<int> out;
  for (int l = 0; l < 32; ++l)
    if ((mask >> l) & 1u) out.push_back(l);
  return out;
}

Configuration Configuration::from_levels(const std::vector<int>& levels, int L) {
  Configuration c;
  for (int l : levels) {
    if (l < 0 || l >= L) throw DomainError("Configuration: level index out of range");
    if (c.occupied(l)) throw DomainError("Configuration: repeated level index");
    c.mask |= (1u << l);
  }
  return c;
}

std::vector<Configuration> enumerate_sector_basis(Sector sector) {
  if (sector.L > 30 || sector.dimension() > kMaxSectorDim)
    throw CapacityError("enumerate_sector_basis: sector dimension exceeds dense budget");
  const int L = sector.L, M = sector.M;
  std::vector<Configuration> out;
  out.reserve(static_cast<std::size_t>(sector.dimension()));
  std::vector<int> idx(M);
  std::iota(idx.begin(), idx.end(), 0);
  if (M == 0) {
    out.push_back(Configuration{});
    return out;
  }
  while (true) {
    Configuration c;
    for (int l : idx) c.mask |= (1u << l);
    out.push_back(c);
    // next combination in lexicographic order
    int i = M - 1;
    while (i >= 0 && idx[i] == L - M + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < M; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

SectorBasis::SectorBasis(Sector sector)
    : sector_(sector), configs_(enumerate_sector_basis(sector)) {
  index_.reserve(configs_.size() * 2);
  for (std::size_t i = 0; i < configs_.size(); ++i)
    index_.emplace(configs_[i].mask, static_cast<std::int64_t>(i));
}

std::int64_t SectorBasis::index_of(Configuration c) const {
  const auto it = index_.find(c.mask);
  if (it == index_.end())
    throw SectorMismatchError("SectorBasis: configuration not in this sector");
  return it->second;
}

}  // namespace pairsolve
