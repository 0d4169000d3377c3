#include "pairsolve/bethe.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace pairsolve {

namespace {

using Real = long double;
using VecC = Eigen::Matrix<Cplx, Eigen::Dynamic, 1>;
using MatC = Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic>;
using VecR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

struct Prefactors {
  Cplx c1;  // coefficient of 1/(1 - v^2)
  Real c2;  // coefficient of 1/(1 - v)
};

Prefactors prefactors(Picture pic, Sector sector, Cplx G) {
  const Real L = sector.L;
  const Cplx ginv = Cplx{1.0L, 0.0L} / G;
  if (pic == Picture::HolePair) {
    const Real P = sector.P();
    return {-2.0L * ginv + 4.0L * P - 2.0L * L - 2.0L, L - 2.0L * P + 2.0L};
  }
  const Real M = sector.M;
  return {2.0L * ginv + 4.0L * M - 2.0L * L - 2.0L, L - 2.0L * M + 2.0L};
}

void residual_core(const std::vector<Cplx>& v, Picture pic, const LevelSet& levels, Cplx G,
                   Sector sector, VecC& F, VecR* scale) {
  const int n = static_cast<int>(v.size());
  const auto& eps = levels.epsilon();
  const auto [c1, c2] = prefactors(pic, sector, G);
  F.resize(n);
  if (scale) scale->resize(n);
  for (int i = 0; i < n; ++i) {
    const Cplx vi = v[i];
    const Cplx one_m_v = 1.0L - vi;
    const Cplx one_m_v2 = (1.0L - vi) * (1.0L + vi);
    Cplx f = c1 / one_m_v2 + c2 / one_m_v;
    Real s = std::abs(c1 / one_m_v2) + std::abs(c2 / one_m_v) + 1.0L;
    for (double e : eps) {
      const Cplx t = 1.0L / (vi - static_cast<Real>(e));
      f += t;
      s += std::abs(t);
    }
    for (int q = 0; q < n; ++q) {
      if (q == i) continue;
      const Cplx t = 2.0L / (vi - v[q]);
      f -= t;
      s += std::abs(t);
    }
    F(i) = f;
    if (scale) (*scale)(i) = s;
  }
}

void jacobian_core(const std::vector<Cplx>& v, Picture pic, const LevelSet& levels, Cplx G,
                   Sector sector, MatC& J) {
  const int n = static_cast<int>(v.size());
  const auto& eps = levels.epsilon();
  const auto [c1, c2] = prefactors(pic, sector, G);
  J.setZero(n, n);
  for (int i = 0; i < n; ++i) {
    const Cplx vi = v[i];
    const Cplx one_m_v = 1.0L - vi;
    const Cplx one_m_v2 = (1.0L - vi) * (1.0L + vi);
    Cplx d = c1 * 2.0L * vi / (one_m_v2 * one_m_v2) + c2 / (one_m_v * one_m_v);
    for (double e : eps) {
      const Cplx t = vi - static_cast<Real>(e);
      d -= 1.0L / (t * t);
    }
    for (int q = 0; q < n; ++q) {
      if (q == i) continue;
      const Cplx t = vi - v[q];
      d += 2.0L / (t * t);
      J(i, q) = -2.0L / (t * t);
    }
    J(i, i) = d;
  }
}

Real scaled_norm(const VecC& F, const VecR& s) {
  Real m = 0.0L;
  for (int i = 0; i < F.size(); ++i) m = std::max(m, std::abs(F(i)) / s(i));
  return m;
}

Real abs_norm(const VecC& F) {
  Real m = 0.0L;
  for (int i = 0; i < F.size(); ++i) m = std::max(m, std::abs(F(i)));
  return m;
}

void check_collisions(const std::vector<Cplx>& v, const LevelSet& levels, double tol) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (std::abs(v[i] - v[j]) < static_cast<Real>(tol) * (1.0L + std::abs(v[i]))) {
        std::ostringstream msg;
        msg << "bethe: roots " << i << " and " << j << " coincide at v = "
            << static_cast<double>(v[i].real()) << (v[i].imag() >= 0 ? "+" : "")
            << static_cast<double>(v[i].imag()) << "i";
        throw SingularConfigurationError(msg.str());
      }
    }
    for (std::size_t l = 0; l < levels.epsilon().size(); ++l) {
      if (std::abs(v[i] - static_cast<Real>(levels.epsilon()[l])) < static_cast<Real>(tol)) {
        std::ostringstream msg;
        msg << "bethe: root " << i << " coincides with level " << l + 1;
        throw SingularConfigurationError(msg.str());
      }
    }
  }
}

struct CoreResult {
  std::vector<Cplx> v;
  Real residual = 0.0L;
  Real residual_scaled = 0.0L;
  int iterations = 0;
};

// Damped Newton with the analytic Jacobian.  Throws ConvergenceError,
// DivergenceError or SingularConfigurationError.
CoreResult newton_core(std::vector<Cplx> v, Picture pic, const LevelSet& levels, Cplx G,
                       Sector sector, Real tol, int max_iter) {
  const int n = static_cast<int>(v.size());
  CoreResult out;
  if (n == 0) {
    out.v = std::move(v);
    return out;
  }
  VecC F;
  VecR s;
  MatC J;
  int nudges = 0, non_improving = 0;
  residual_core(v, pic, levels, G, sector, F, &s);
  Real res = scaled_norm(F, s);
  for (int it = 0; it < max_iter; ++it) {
    if (res <= tol) {
      out.v = std::move(v);
      out.residual = abs_norm(F);
      out.residual_scaled = res;
      out.iterations = it;
      return out;
    }
    // real-axis mergers bifurcate into conjugate pairs; nudge and retry
    bool nudged = false;
    for (int i = 0; i < n && !nudged; ++i) {
      for (int j = i + 1; j < n && !nudged; ++j) {
        if (std::abs(v[i] - v[j]) < 1e-10L * (1.0L + std::abs(v[i]))) {
          if (++nudges > 3) check_collisions(v, levels, 1e-10);
          const Cplx m = (v[i] + v[j]) / 2.0L;
          v[i] = m + Cplx{0.0L, 1e-8L};
          v[j] = m - Cplx{0.0L, 1e-8L};
          nudged = true;
        }
      }
    }
    if (nudged) {
      residual_core(v, pic, levels, G, sector, F, &s);
      res = scaled_norm(F, s);
      continue;
    }
    jacobian_core(v, pic, levels, G, sector, J);
    Eigen::PartialPivLU<MatC> lu(J);
    const VecC dv = lu.solve(-F);
    if (!dv.allFinite()) throw SingularConfigurationError("bethe: singular Jacobian");
    Real lambda = 1.0L;
    std::vector<Cplx> best_v;
    Real best_res = res;
    VecC bestF;
    for (int halving = 0; halving <= 5; ++halving) {
      std::vector<Cplx> trial = v;
      for (int i = 0; i < n; ++i) trial[i] += lambda * dv(i);
      VecC Ft;
      VecR st;
      residual_core(trial, pic, levels, G, sector, Ft, &st);
      const Real rt = scaled_norm(Ft, st);
      if (rt < best_res) {
        best_res = rt;
        best_v = std::move(trial);
        bestF = std::move(Ft);
        s = st;
        break;  // accept the first improving step
      }
      lambda /= 2.0L;
    }
    if (best_v.empty()) {
      if (++non_improving >= 5)
        throw DivergenceError("bethe: residual grew over 5 damped steps");
      // keep the smallest damped step and hope the landscape improves
      for (int i = 0; i < n; ++i) v[i] += lambda * 2.0L * dv(i);
      residual_core(v, pic, levels, G, sector, F, &s);
      res = scaled_norm(F, s);
    } else {
      non_improving = 0;
      v = std::move(best_v);
      F = std::move(bestF);
      res = best_res;
    }
  }
  throw ConvergenceError("bethe: Newton did not converge", static_cast<double>(res));
}

// Pairs roots into a conjugate-closed multiset (real coupling only).
void symmetrize_conjugates(std::vector<Cplx>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<bool> done(n, false);
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    if (std::abs(v[i].imag()) <= 1e-11L * (1.0L + std::abs(v[i].real()))) {
      v[i].imag(0.0L);
      done[i] = true;
      continue;
    }
    int best = -1;
    Real bestd = 1e-7L;  // pairing window; genuine pairs sit far above noise
    for (int j = 0; j < n; ++j) {
      if (j == i || done[j]) continue;
      const Real d = std::abs(v[i] - std::conj(v[j]));
      if (d < bestd) {
        bestd = d;
        best = j;
      }
    }
    if (best >= 0) {
      const Cplx m = (v[i] + std::conj(v[best])) / 2.0L;
      v[i] = m;
      v[best] = std::conj(m);
      done[i] = done[best] = true;
    } else {
      done[i] = true;  // left as-is; closure is validated by the caller
    }
  }
}

// Critical couplings 1/k on the real segment get a rectangular excursion
// into the upper half plane; half-width shrinks with the gap between
// neighbouring 1/k points so bubbles never overlap.
double bubble_halfwidth(int k) { return 0.4 / (static_cast<double>(k) * (k + 1)); }

std::vector<std::complex<double>> build_path(double g0, double gt, int max_order) {
  std::vector<std::complex<double>> wp;
  wp.emplace_back(g0, 0.0);
  const double lo = std::min(g0, gt), hi = std::max(g0, gt);
  const double dir = (gt >= g0) ? 1.0 : -1.0;
  struct Crit {
    double g;
    double w;
  };
  std::vector<Crit> crits;
  for (int k = 1; k <= max_order; ++k) {
    for (double sgn : {1.0, -1.0}) {
      const double gc = sgn / k;
      if (gc > lo && gc < hi) crits.push_back({gc, bubble_halfwidth(k)});
    }
  }
  std::sort(crits.begin(), crits.end(),
            [dir](const Crit& a, const Crit& b) { return dir * a.g < dir * b.g; });
  for (const Crit& c : crits) {
    const double h = c.w;
    const double a = c.g - dir * c.w;
    double b = c.g + dir * c.w;
    // target inside the bubble: exit above the target and descend there
    if (std::abs(gt - c.g) < c.w) b = gt;
    wp.emplace_back(a, 0.0);
    wp.emplace_back(a, h);
    wp.emplace_back(b, h);
    wp.emplace_back(b, 0.0);
  }
  if (wp.back() != std::complex<double>(gt, 0.0)) wp.emplace_back(gt, 0.0);
  return wp;
}

struct ContinuationStuck : ConvergenceError {
  ContinuationStuck(const std::string& what, double res) : ConvergenceError(what, res) {}
};

std::vector<Cplx> follow_path(std::vector<Cplx> v, Picture pic, const LevelSet& levels,
                              Sector sector, const std::vector<std::complex<double>>& wp,
                              const SolveOptions& opts) {
  const Real tol = static_cast<Real>(opts.tol);
  const double g_target_mag = std::max(std::abs(wp.back()), 1e-3);
  Cplx g_prev{0.0L, 0.0L};
  std::vector<Cplx> v_prev;
  bool have_prev = false;
  Cplx g_cur{static_cast<Real>(wp.front().real()), static_cast<Real>(wp.front().imag())};

  for (std::size_t seg = 0; seg + 1 < wp.size(); ++seg) {
    const Cplx A{static_cast<Real>(wp[seg].real()), static_cast<Real>(wp[seg].imag())};
    const Cplx B{static_cast<Real>(wp[seg + 1].real()), static_cast<Real>(wp[seg + 1].imag())};
    const Real len = std::abs(B - A);
    if (len == 0.0L) continue;
    Real s = 0.0L;
    Real ds = std::min<Real>(1.0L, static_cast<Real>(opts.initial_step_fraction) *
                                       static_cast<Real>(g_target_mag) / len);
    ds = std::max<Real>(ds, 1e-6L);
    int easy = 0;
    while (s < 1.0L) {
      const Real step = std::min(ds, 1.0L - s);
      const Cplx g_next = A + (s + step) * (B - A);
      std::vector<Cplx> guess = v;
      bool predicted = false;
      if (have_prev && std::abs(g_cur - g_prev) > 0.0L) {
        const Cplx r = (g_next - g_cur) / (g_cur - g_prev);
        if (std::abs(r) < 4.0L) {
          predicted = true;
          for (std::size_t i = 0; i < v.size(); ++i) guess[i] = v[i] + r * (v[i] - v_prev[i]);
          for (std::size_t i = 0; i < guess.size() && predicted; ++i)
            for (std::size_t j = i + 1; j < guess.size(); ++j)
              if (std::abs(guess[i] - guess[j]) < 1e-9L) {
                predicted = false;
                break;
              }
          if (!predicted) guess = v;
        }
      }
      bool ok = true;
      CoreResult res;
      try {
        res = newton_core(std::move(guess), pic, levels, g_next, sector, tol, opts.max_iter);
      } catch (const Error&) {
        ok = false;
      }
      if (!ok && predicted) {
        // second chance from the unextrapolated roots
        try {
          res = newton_core(v, pic, levels, g_next, sector, tol, opts.max_iter);
          ok = true;
        } catch (const Error&) {
        }
      }
      if (ok) {
        g_prev = g_cur;
        v_prev = v;
        have_prev = true;
        g_cur = g_next;
        v = std::move(res.v);
        s += step;
        if (res.iterations <= 4 && step == ds) {
          if (++easy >= 3) {
            ds = std::min<Real>(ds * 2.0L, 1.0L);
            easy = 0;
          }
        } else {
          easy = 0;
        }
      } else {
        ds /= 2.0L;
        easy = 0;
        if (ds * len < static_cast<Real>(opts.min_step))
          throw ContinuationStuck("bethe: continuation step underflow near G = (" +
                                      std::to_string(static_cast<double>(g_next.real())) + "," +
                                      std::to_string(static_cast<double>(g_next.imag())) + "i)",
                                  static_cast<double>(tol));
      }
    }
  }
  return v;
}

RootSet finish_rootset(std::vector<Cplx> v, Picture pic, const LevelSet& levels,
                       const Coupling& G, Sector sector, Configuration seed,
                       const SolveOptions& opts) {
  const Cplx g{static_cast<Real>(G.value()), 0.0L};
  symmetrize_conjugates(v);
  CoreResult polished;
  try {
    polished = newton_core(v, pic, levels, g, sector, static_cast<Real>(opts.tol), opts.max_iter);
    symmetrize_conjugates(polished.v);
  } catch (const Error&) {
    polished.v = std::move(v);  // keep the symmetrized landing point
  }
  VecC F;
  VecR s;
  residual_core(polished.v, pic, levels, g, sector, F, &s);
  RootSet rs;
  rs.picture = pic;
  rs.sector = sector;
  rs.coupling = G;
  rs.seed = seed;
  rs.roots_v = std::move(polished.v);
  rs.residual = static_cast<double>(abs_norm(F));
  rs.residual_scaled = static_cast<double>(scaled_norm(F, s));
  if (rs.residual_scaled > 50.0 * opts.tol) {
    std::ostringstream msg;
    msg << "bethe: final residual " << rs.residual_scaled << " exceeds tolerance " << opts.tol;
    throw ConvergenceError(msg.str(), rs.residual_scaled);
  }
  return rs;
}

}  // namespace

int root_count(Picture picture, Sector sector) {
  return picture == Picture::ParticlePair ? sector.M : sector.P();
}

const char* picture_name(Picture picture) {
  return picture == Picture::ParticlePair ? "particle" : "hole";
}

std::vector<Cplx> RootSet::roots_y() const {
  std::vector<Cplx> y;
  y.reserve(roots_v.size());
  for (const Cplx& v : roots_v) {
    if (std::abs(v - 1.0L) < 1e-300L) throw PoleError("roots_y: root at the v = 1 pole");
    y.push_back((1.0L + v) / (1.0L - v));
  }
  return y;
}

std::vector<Complex> RootSet::roots_v_d() const {
  std::vector<Complex> out;
  out.reserve(roots_v.size());
  for (const Cplx& v : roots_v)
    out.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  return out;
}

std::vector<Complex> RootSet::roots_y_d() const {
  std::vector<Complex> out;
  for (const Cplx& y : roots_y())
    out.emplace_back(static_cast<double>(y.real()), static_cast<double>(y.imag()));
  return out;
}

Eigen::VectorXcd bae_residual(const std::vector<Complex>& roots_v, Picture picture,
                              const LevelSet& levels, Complex G, Sector sector,
                              Eigen::VectorXd* scale) {
  if (static_cast<int>(roots_v.size()) != root_count(picture, sector))
    throw SectorMismatchError("bae_residual: root count does not match the sector");
  std::vector<Cplx> v(roots_v.begin(), roots_v.end());
  check_collisions(v, levels, 1e-14);
  VecC F;
  VecR s;
  residual_core(v, picture, levels, Cplx{G.real(), G.imag()}, sector, F, scale ? &s : nullptr);
  Eigen::VectorXcd out(F.size());
  for (int i = 0; i < F.size(); ++i)
    out(i) = Complex(static_cast<double>(F(i).real()), static_cast<double>(F(i).imag()));
  if (scale) {
    scale->resize(s.size());
    for (int i = 0; i < s.size(); ++i) (*scale)(i) = static_cast<double>(s(i));
  }
  return out;
}

Eigen::MatrixXcd bae_jacobian(const std::vector<Complex>& roots_v, Picture picture,
                              const LevelSet& levels, Complex G, Sector sector) {
  if (static_cast<int>(roots_v.size()) != root_count(picture, sector))
    throw SectorMismatchError("bae_jacobian: root count does not match the sector");
  std::vector<Cplx> v(roots_v.begin(), roots_v.end());
  check_collisions(v, levels, 1e-14);
  MatC J;
  jacobian_core(v, picture, levels, Cplx{G.real(), G.imag()}, sector, J);
  Eigen::MatrixXcd out(J.rows(), J.cols());
  for (int i = 0; i < J.rows(); ++i)
    for (int j = 0; j < J.cols(); ++j)
      out(i, j) =
          Complex(static_cast<double>(J(i, j).real()), static_cast<double>(J(i, j).imag()));
  return out;
}

NewtonResult newton_solve(std::vector<Complex> initial_v, Picture picture,
                          const LevelSet& levels, Complex G, Sector sector, double tol,
                          int max_iter) {
  if (static_cast<int>(initial_v.size()) != root_count(picture, sector))
    throw SectorMismatchError("newton_solve: root count does not match the sector");
  std::vector<Cplx> v(initial_v.begin(), initial_v.end());
  check_collisions(v, levels, 1e-13);
  CoreResult res = newton_core(std::move(v), picture, levels, Cplx{G.real(), G.imag()}, sector,
                               static_cast<Real>(tol), max_iter);
  if (G.imag() == 0.0) symmetrize_conjugates(res.v);
  NewtonResult out;
  for (const Cplx& w : res.v)
    out.roots_v.emplace_back(static_cast<double>(w.real()), static_cast<double>(w.imag()));
  out.residual = static_cast<double>(res.residual);
  out.residual_scaled = static_cast<double>(res.residual_scaled);
  out.iterations = res.iterations;
  return out;
}

std::vector<Complex> free_limit_roots(Configuration seed, Picture picture,
                                      const LevelSet& levels, double G) {
  const double sgn = picture == Picture::HolePair ? 1.0 : -1.0;
  std::vector<Complex> v;
  for (int l : seed.levels()) {
    const double e = levels.epsilon()[l];
    v.emplace_back(e + sgn * G * (1.0 - e * e) / 2.0, 0.0);
  }
  return v;
}

RootSet continuation_solve(Configuration seed, Picture picture, const LevelSet& levels,
                           const Coupling& G_target, Sector sector, const SolveOptions& opts) {
  if (seed.count() != root_count(picture, sector))
    throw SectorMismatchError("continuation_solve: seed size does not match the sector");
  const double gt = G_target.value();
  if (gt == 0.0) throw DomainError("continuation_solve: coupling must be nonzero");
  const double g0 = (std::abs(gt) <= opts.g_start) ? gt : std::copysign(opts.g_start, gt);

  const auto guess_d = free_limit_roots(seed, picture, levels, g0);
  std::vector<Cplx> v(guess_d.begin(), guess_d.end());
  CoreResult anchored =
      newton_core(std::move(v), picture, levels, Cplx{static_cast<Real>(g0), 0.0L}, sector,
                  static_cast<Real>(opts.tol), opts.max_iter);
  std::vector<Cplx> roots = std::move(anchored.v);
  if (g0 != gt)
    roots = follow_path(std::move(roots), picture, levels, sector,
                        build_path(g0, gt, std::max(sector.L, 8)), opts);
  return finish_rootset(std::move(roots), picture, levels, G_target, sector, seed, opts);
}

RootSet refine_to_coupling(const RootSet& rs, const LevelSet& levels, const Coupling& G_target,
                           const SolveOptions& opts) {
  const double g0 = rs.coupling.value();
  const double gt = G_target.value();
  std::vector<Cplx> roots = rs.roots_v;
  if (g0 != gt)
    roots = follow_path(std::move(roots), rs.picture, levels, rs.sector,
                        build_path(g0, gt, std::max(rs.sector.L, 8)), opts);
  return finish_rootset(std::move(roots), rs.picture, levels, G_target, rs.sector, rs.seed, opts);
}

std::vector<RootSet> enumerate_spectrum(const LevelSet& levels, const Coupling& G, Sector sector,
                                        Picture picture, const SolveOptions& opts) {
  const int m = root_count(picture, sector);
  const Sector seed_sector(sector.L, m);
  const auto seeds = enumerate_sector_basis(seed_sector);
  std::vector<RootSet> out(seeds.size());
  std::vector<char> failed(seeds.size(), 0);

  const int nthreads = std::max(1, std::min<int>(opts.threads, static_cast<int>(seeds.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= seeds.size()) return;
      try {
        out[i] = continuation_solve(seeds[i], picture, levels, G, sector, opts);
      } catch (const Error&) {
        failed[i] = 1;
      }
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<Configuration> bad;
  for (std::size_t i = 0; i < seeds.size(); ++i)
    if (failed[i]) bad.push_back(seeds[i]);
  if (!bad.empty()) {
    std::vector<RootSet> done;
    for (std::size_t i = 0; i < seeds.size(); ++i)
      if (!failed[i]) done.push_back(std::move(out[i]));
    std::ostringstream msg;
    msg << "enumerate_spectrum: " << bad.size() << " of " << seeds.size()
        << " continuation paths failed";
    throw EnumerationError(msg.str(), std::move(bad), std::move(done));
  }
  return out;
}

double energy_from_roots(const RootSet& rs, const LevelSet& levels) {
  const Real g = static_cast<Real>(rs.coupling.value());
  Cplx sum{0.0L, 0.0L};
  Real sum_abs = 0.0L;
  for (const Cplx& y : rs.roots_y()) {
    sum += y;
    sum_abs += std::abs(y);
  }
  const Real im_tol = 1e-10L * std::max<Real>(1.0L, sum_abs * 1e-5L);
  if (std::abs(sum.imag()) > im_tol) {
    std::ostringstream msg;
    msg << "energy_from_roots: imaginary part " << static_cast<double>(sum.imag())
        << " of the root sum violates conjugate closure";
    throw ConjugationViolationError(msg.str());
  }
  Real E;
  if (rs.picture == Picture::HolePair)
    E = static_cast<Real>(levels.sum_z2()) + (g - 1.0L) * sum.real();
  else
    E = (1.0L + g) * sum.real();
  return static_cast<double>(E);
}

RootClassification classify_roots(const RootSet& rs, double tau0, double tau_inf) {
  RootClassification cls;
  Cplx sigma{0.0L, 0.0L};
  for (std::size_t i = 0; i < rs.roots_v.size(); ++i) {
    const Cplx& v = rs.roots_v[i];
    const Real d0 = std::abs(v + 1.0L);
    const Real di = std::abs(v - 1.0L);
    if (d0 < static_cast<Real>(tau0)) {
      cls.zero_indices.push_back(static_cast<int>(i));
    } else if (di < static_cast<Real>(tau_inf)) {
      cls.infinite_indices.push_back(static_cast<int>(i));
      sigma += (1.0L + v) / (1.0L - v);
    } else {
      ++cls.n_regular;
      if (d0 < 3.0L * static_cast<Real>(tau0) || di < 3.0L * static_cast<Real>(tau_inf))
        cls.ambiguous.push_back(static_cast<int>(i));
    }
  }
  cls.sigma_estimate =
      Complex(static_cast<double>(sigma.real()), static_cast<double>(sigma.imag()));
  return cls;
}

double sigma_identity_gap(const RootSet& rs, const RootClassification& cls,
                          const LevelSet& levels) {
  if (cls.n_infinite() == 0) throw DomainError("sigma_identity_gap: no infinite cluster");
  const Real T = cls.n_infinite();
  std::vector<bool> inf_mask(rs.roots_v.size(), false);
  for (int i : cls.infinite_indices) inf_mask[static_cast<std::size_t>(i)] = true;
  Cplx sum_regular{0.0L, 0.0L};
  Cplx sigma{0.0L, 0.0L};
  for (std::size_t i = 0; i < rs.roots_v.size(); ++i) {
    const Cplx y = (1.0L + rs.roots_v[i]) / (1.0L - rs.roots_v[i]);
    if (inf_mask[i])
      sigma += y;
    else
      sum_regular += y;
  }
  const Cplx gap =
      static_cast<Real>(levels.sum_z2()) - (1.0L - 1.0L / T) * sigma - 2.0L * sum_regular;
  return static_cast<double>(std::abs(gap));
}

double collapse_limit_energy(const RootSet& rs, const RootClassification& cls) {
  if (cls.n_infinite() == 0) throw DomainError("collapse_limit_energy: no infinite cluster");
  const Real T = cls.n_infinite();
  std::vector<bool> inf_mask(rs.roots_v.size(), false);
  for (int i : cls.infinite_indices) inf_mask[static_cast<std::size_t>(i)] = true;
  Cplx sum_regular{0.0L, 0.0L};
  for (std::size_t i = 0; i < rs.roots_v.size(); ++i) {
    if (inf_mask[i]) continue;
    sum_regular += (1.0L + rs.roots_v[i]) / (1.0L - rs.roots_v[i]);
  }
  return static_cast<double>(((1.0L + 1.0L / T) * sum_regular).real());
}

void sort_by_energy(std::vector<RootSet>& sets, const LevelSet& levels) {
  std::stable_sort(sets.begin(), sets.end(), [&](const RootSet& a, const RootSet& b) {
    return energy_from_roots(a, levels) < energy_from_roots(b, levels);
  });
}

}  // namespace pairsolve
