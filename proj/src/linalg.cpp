#include "dimdist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dimdist/error.hpp"

namespace dimdist {
namespace {

void require_bit(int v, const char* name) {
  if (v != 0 && v != 1) {
    throw InputError(std::string(name) + " must be 0 or 1, got " + std::to_string(v));
  }
}

Ket make_ket(Dimension dim, Complex a0, Complex a1, Complex a2 = 0.0) {
  Ket k;
  k.dim = dim;
  k.amps = {a0, a1, a2};
  return k;
}

}  // namespace

Dimension make_dimension(int d) {
  if (d == 2) return Dimension::Two;
  if (d == 3) return Dimension::Three;
  throw InputError("unsupported dimension " + std::to_string(d) + " (expected 2 or 3)");
}

double Ket::squared_norm() const noexcept {
  double s = 0.0;
  for (int j = 0; j < to_int(dim); ++j) s += std::norm(amps[j]);
  return s;
}

Complex inner(const Ket& bra, const Ket& ket) noexcept {
  Complex s = 0.0;
  for (int j = 0; j < to_int(bra.dim); ++j) s += std::conj(bra.amps[j]) * ket.amps[j];
  return s;
}

Ket with_phase(const Ket& k, Complex phase) noexcept {
  Ket out = k;
  for (auto& a : out.amps) a *= phase;
  return out;
}

double OrthonormalBasis::orthonormality_defect() const noexcept {
  const int d = to_int(dim);
  double worst = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Complex expected = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(inner(kets[i], kets[j]) - expected));
    }
  }
  return worst;
}

double BipartiteState::squared_norm() const noexcept {
  double s = 0.0;
  const int d = to_int(dim);
  for (int i = 0; i < d * d; ++i) s += std::norm(amps[i]);
  return s;
}

double JointDistribution::total() const noexcept {
  double s = 0.0;
  const int d = to_int(dim);
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v) s += p[u][v];
  return s;
}

BipartiteState max_entangled(Dimension dim) {
  const int d = to_int(make_dimension(to_int(dim)));
  BipartiteState s;
  s.dim = dim;
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) s.amps[j * d + j] = amp;
  return s;
}

OrthonormalBasis alice_basis_d2(int x) {
  require_bit(x, "x");
  OrthonormalBasis b;
  b.dim = Dimension::Two;
  if (x == 0) {
    b.kets = {make_ket(Dimension::Two, 1.0, 0.0), make_ket(Dimension::Two, 0.0, 1.0)};
  } else {
    const double h = std::numbers::sqrt2 / 2.0;
    b.kets = {make_ket(Dimension::Two, h, h), make_ket(Dimension::Two, h, -h)};
  }
  return b;
}

OrthonormalBasis bob_basis_d2(int y, double theta0, double theta1) {
  require_bit(y, "y");
  const double t = (y == 0) ? theta0 : theta1;
  const double c = std::cos(t);
  const double s = std::sin(t);
  OrthonormalBasis b;
  b.dim = Dimension::Two;
  b.kets = {make_ket(Dimension::Two, c, s), make_ket(Dimension::Two, s, -c)};
  return b;
}

OrthonormalBasis alice_basis_d3(int x) {
  require_bit(x, "x");
  OrthonormalBasis b;
  b.dim = Dimension::Three;
  if (x == 0) {
    b.kets = {make_ket(Dimension::Three, 1.0, 0.0, 0.0), make_ket(Dimension::Three, 0.0, 1.0, 0.0),
              make_ket(Dimension::Three, 0.0, 0.0, 1.0)};
    return b;
  }
  const double r = 1.0 / std::sqrt(3.0);
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const Complex w2 = std::polar(1.0, 4.0 * std::numbers::pi / 3.0);
  b.kets = {make_ket(Dimension::Three, r, r, r), make_ket(Dimension::Three, r, r * w, r * w2),
            make_ket(Dimension::Three, r, r * w2, r * w)};
  return b;
}

OrthonormalBasis bob_basis_d3(int y, double theta0, double theta1) {
  require_bit(y, "y");
  const double a = (y == 0) ? theta0 : theta1;
  const double b = (y == 0) ? theta1 : theta0;
  const double ca = std::cos(a), sa = std::sin(a);
  const double cb = std::cos(b), sb = std::sin(b);
  OrthonormalBasis basis;
  basis.dim = Dimension::Three;
  basis.kets = {make_ket(Dimension::Three, ca, sa * cb, sa * sb),
                make_ket(Dimension::Three, sa, -ca * cb, -ca * sb),
                make_ket(Dimension::Three, 0.0, sb, -cb)};
  return basis;
}

OrthonormalBasis alice_basis(Dimension dim, int x) {
  return dim == Dimension::Two ? alice_basis_d2(x) : alice_basis_d3(x);
}

OrthonormalBasis bob_basis(Dimension dim, int y, double theta0, double theta1) {
  return dim == Dimension::Two ? bob_basis_d2(y, theta0, theta1) : bob_basis_d3(y, theta0, theta1);
}

JointDistribution joint_distribution(const BipartiteState& state, const OrthonormalBasis& alice,
                                     const OrthonormalBasis& bob) {
  if (state.dim != alice.dim || state.dim != bob.dim) {
    throw InputError("joint_distribution: dimension mismatch (state " + std::to_string(to_int(state.dim)) +
                     ", alice " + std::to_string(to_int(alice.dim)) + ", bob " +
                     std::to_string(to_int(bob.dim)) + ")");
  }
  const int d = to_int(state.dim);
  JointDistribution out;
  out.dim = state.dim;
  for (int u = 0; u < d; ++u) {
    const Ket& a = alice.kets[u];
    for (int v = 0; v < d; ++v) {
      const Ket& b = bob.kets[v];
      Complex amp = 0.0;
      for (int j = 0; j < d; ++j) {
        const Complex bra_a = std::conj(a.amps[j]);
        for (int k = 0; k < d; ++k) {
          amp += bra_a * std::conj(b.amps[k]) * state.amps[j * d + k];
        }
      }
      out.p[u][v] = std::norm(amp);
    }
  }
  return out;
}

}  // namespace dimdist
