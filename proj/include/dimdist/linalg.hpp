#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace dimdist {

using Complex = std::complex<double>;

/// Local Hilbert space dimension. Only qubits and qutrits are modelled.
enum class Dimension : int { Two = 2, Three = 3 };

constexpr int to_int(Dimension d) noexcept { return static_cast<int>(d); }

/// Throws InputError unless `d` is 2 or 3.
Dimension make_dimension(int d);

inline constexpr int kMaxDim = 3;

/// Pure state of a single qubit or qutrit. Unused trailing amplitudes are 0.
struct Ket {
  Dimension dim = Dimension::Two;
  std::array<Complex, kMaxDim> amps{};

  double squared_norm() const noexcept;
};

/// <bra|ket>, conjugate-linear in the bra.
Complex inner(const Ket& bra, const Ket& ket) noexcept;

/// Ket scaled by a unit phase; measurement statistics do not change.
Ket with_phase(const Ket& k, Complex phase) noexcept;

struct OrthonormalBasis {
  Dimension dim = Dimension::Two;
  std::array<Ket, kMaxDim> kets{};

  /// Largest |<k_i|k_j> - delta_ij| over all pairs.
  double orthonormality_defect() const noexcept;
};

/// Two-party pure state with amplitudes indexed (j, k) -> j * dim + k.
struct BipartiteState {
  Dimension dim = Dimension::Two;
  std::array<Complex, kMaxDim * kMaxDim> amps{};

  double squared_norm() const noexcept;
};

/// p[u][v] = probability that Alice sees outcome u and Bob outcome v.
struct JointDistribution {
  Dimension dim = Dimension::Two;
  std::array<std::array<double, kMaxDim>, kMaxDim> p{};

  double total() const noexcept;
};

/// (1/sqrt(d)) sum_j |j>|j>.
BipartiteState max_entangled(Dimension dim);

/// x = 0: computational basis; x = 1: Hadamard basis.
OrthonormalBasis alice_basis_d2(int x);

/// Bob's qubit basis for question y:
///   nu0 = cos(t)|0> + sin(t)|1>,  nu1 = sin(t)|0> - cos(t)|1>,  t = y ? theta1 : theta0.
OrthonormalBasis bob_basis_d2(int y, double theta0, double theta1);

/// x = 0: computational basis of C^3; x = 1: Fourier basis with omega = exp(2 pi i / 3).
OrthonormalBasis alice_basis_d3(int x);

/// Bob's qutrit basis. With (a, b) = (theta0, theta1) for y = 0 and
/// (theta1, theta0) for y = 1:
///   k0 = cos a|0> + sin a cos b|1> + sin a sin b|2>
///   k1 = sin a|0> - cos a cos b|1> - cos a sin b|2>
///   k2 = sin b|1> - cos b|2>
/// The minus sign on k2 is required for orthogonality with k0 and k1.
OrthonormalBasis bob_basis_d3(int y, double theta0, double theta1);

OrthonormalBasis alice_basis(Dimension dim, int x);
OrthonormalBasis bob_basis(Dimension dim, int y, double theta0, double theta1);

/// Born rule: p[u][v] = |(<a_u| (x) <b_v|) |state>|^2.
/// Throws InputError when the three dimensions disagree.
JointDistribution joint_distribution(const BipartiteState& state, const OrthonormalBasis& alice,
                                     const OrthonormalBasis& bob);

}  // namespace dimdist
