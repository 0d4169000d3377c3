#include "pairsolve/state.hpp"

#include <cmath>

namespace pairsolve {

StateVector::StateVector(std::shared_ptr<const SectorBasis> basis, std::vector<Complex> amps)
    : basis_(std::move(basis)), amps_(std::move(amps)) {
  if (static_cast<std::int64_t>(amps_.size()) != basis_->dimension())
    throw SectorMismatchError("StateVector: amplitude count != sector dimension");
  for (const Complex& a : amps_)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw DomainError("StateVector: non-finite amplitude");
}

StateVector StateVector::zero(std::shared_ptr<const SectorBasis> basis) {
  std::vector<Complex> amps(static_cast<std::size_t>(basis->dimension()), Complex{0.0, 0.0});
  return StateVector(std::move(basis), std::move(amps));
}

StateVector StateVector::basis_state(std::shared_ptr<const SectorBasis> basis, Configuration c) {
  auto s = StateVector::zero(basis);
  s.amps_[static_cast<std::size_t>(basis->index_of(c))] = 1.0;
  return s;
}

StateVector StateVector::vacuum(const LevelSet& levels) {
  auto basis = std::make_shared<const SectorBasis>(Sector(levels.size(), 0));
  return basis_state(basis, Configuration{});
}

StateVector StateVector::filled(const LevelSet& levels) {
  const int L = levels.size();
  auto basis = std::make_shared<const SectorBasis>(Sector(L, L));
  Configuration c;
  c.mask = (L == 32) ? ~0u : ((1u << L) - 1u);
  return basis_state(basis, c);
}

double StateVector::norm() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

bool StateVector::is_zero(double tol) const {
  for (const Complex& a : amps_)
    if (std::abs(a) > tol) return false;
  return true;
}

bool is_creation(PairOperator op) {
  return op == PairOperator::QDagger || op == PairOperator::CZero;
}

namespace {

std::vector<Complex> operator_coefficients(PairOperator op, const LevelSet& levels) {
  std::vector<Complex> w(static_cast<std::size_t>(levels.size()));
  for (int l = 0; l < levels.size(); ++l) {
    switch (op) {
      case PairOperator::QDagger:
      case PairOperator::Q:
        w[l] = levels.z()[l];
        break;
      case PairOperator::CZero:
      case PairOperator::BZero:
        w[l] = -1.0 / levels.z()[l];
        break;
    }
  }
  return w;
}

std::vector<Complex> cy_coefficients(Complex y, const LevelSet& levels) {
  std::vector<Complex> w(static_cast<std::size_t>(levels.size()));
  for (int l = 0; l < levels.size(); ++l) {
    const Complex d = y - levels.z2()[l];
    if (std::abs(d) < 1e-12)
      throw PoleError("C(y)/B(y): root coincides with a level square");
    w[l] = levels.z()[l] / d;
  }
  return w;
}

}  // namespace

StateVector apply_creation(const std::vector<Complex>& w, const StateVector& state) {
  const Sector& s = state.sector();
  if (static_cast<int>(w.size()) != s.L)
    throw SectorMismatchError("apply_creation: coefficient count != L");
  if (s.M == s.L) return StateVector::zero(state.basis_ptr());  // hardcore: nowhere to create
  auto target = std::make_shared<const SectorBasis>(Sector(s.L, s.M + 1));
  std::vector<Complex> out(static_cast<std::size_t>(target->dimension()), Complex{});
  const auto& src = state.basis();
  for (std::int64_t i = 0; i < src.dimension(); ++i) {
    const Complex a = state.amplitude(i);
    if (a == Complex{}) continue;
    const Configuration c = src.config(i);
    for (int l = 0; l < s.L; ++l) {
      if (c.occupied(l)) continue;  // (b_l^dag)^2 = 0
      Configuration cc{c.mask | (1u << l)};
      out[static_cast<std::size_t>(target->index_of(cc))] += w[l] * a;
    }
  }
  return StateVector(std::move(target), std::move(out));
}

StateVector apply_annihilation(const std::vector<Complex>& w, const StateVector& state) {
  const Sector& s = state.sector();
  if (static_cast<int>(w.size()) != s.L)
    throw SectorMismatchError("apply_annihilation: coefficient count != L");
  if (s.M == 0) return StateVector::zero(state.basis_ptr());
  auto target = std::make_shared<const SectorBasis>(Sector(s.L, s.M - 1));
  std::vector<Complex> out(static_cast<std::size_t>(target->dimension()), Complex{});
  const auto& src = state.basis();
  for (std::int64_t i = 0; i < src.dimension(); ++i) {
    const Complex a = state.amplitude(i);
    if (a == Complex{}) continue;
    const Configuration c = src.config(i);
    for (int l = 0; l < s.L; ++l) {
      if (!c.occupied(l)) continue;
      Configuration cc{c.mask & ~(1u << l)};
      out[static_cast<std::size_t>(target->index_of(cc))] += w[l] * a;
    }
  }
  return StateVector(std::move(target), std::move(out));
}

StateVector apply_operator(PairOperator op, const StateVector& state, const LevelSet& levels) {
  const auto w = operator_coefficients(op, levels);
  return is_creation(op) ? apply_creation(w, state) : apply_annihilation(w, state);
}

StateVector apply_c(Complex y, const StateVector& state, const LevelSet& levels) {
  return apply_creation(cy_coefficients(y, levels), state);
}

StateVector apply_b(Complex y, const StateVector& state, const LevelSet& levels) {
  return apply_annihilation(cy_coefficients(y, levels), state);
}

StateVector particle_hole_transform(const StateVector& state) {
  const Sector& s = state.sector();
  auto target = std::make_shared<const SectorBasis>(Sector(s.L, s.L - s.M));
  std::vector<Complex> out(static_cast<std::size_t>(target->dimension()), Complex{});
  const std::uint32_t full = (s.L == 32) ? ~0u : ((1u << s.L) - 1u);
  const auto& src = state.basis();
  for (std::int64_t i = 0; i < src.dimension(); ++i) {
    Configuration cc{src.config(i).mask ^ full};
    out[static_cast<std::size_t>(target->index_of(cc))] = state.amplitude(i);
  }
  return StateVector(std::move(target), std::move(out));
}

Complex overlap(const StateVector& a, const StateVector& b) {
  if (a.sector().L != b.sector().L || a.sector().M != b.sector().M)
    throw SectorMismatchError("overlap: states live in different sectors");
  Complex s{};
  for (std::int64_t i = 0; i < a.basis().dimension(); ++i)
    s += std::conj(a.amplitude(i)) * b.amplitude(i);
  return s;
}

}  // namespace pairsolve
