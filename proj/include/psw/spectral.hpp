#pragma once

// Closed-form spectrum of the phase-space walk U_psw(theta).
//
// Mode labels k run over [0, 2N):
//   odd N:   lambda_k = exp(i pi k / N)
//   even N:  k = 2l + s,  lambda = exp(+i alpha) omega^l  (s = 0)
//                         lambda = exp(-i alpha) omega^l  (s = 1)
//            with alpha = arccos(cos^N theta) / N.
//
// Eigenvector components are fixed by a_0(k) = 1; a_n follows from the
// running product of unimodular factors and b_n from
//   b_n = a_n sin(theta) / (cos(theta) + lambda omega^{-n}).

#include <utility>
#include <vector>

#include "psw/coin_density.hpp"
#include "psw/types.hpp"

namespace psw {

/// Coin angles below this are treated as theta = 0.
inline constexpr double kDegenerateTheta = 1e-9;

struct EigenMode {
	std::size_t k = 0;
	Complex lambda;
	CVector a;  ///< coin-0 components
	CVector b;  ///< coin-1 components
	double norm_const = 0.0;

	/// Normalized eigenvector, coin-major layout.
	WalkerCoinState assemble() const;
	/// sum |a_n|^2 + |b_n|^2
	double direct_norm() const;
};

struct SplitPairSpectrum {
	double alpha = 0.0;
	std::vector<std::pair<Complex, Complex>> pairs;  ///< (lambda+_l, lambda-_l)
};

struct EigenstateEntropies {
	double von_neumann = 0.0;
	double linear = 0.0;
};

struct OffDiagonalSum {
	Complex direct;
	double closed_form = 0.0;

	double deviation() const { return std::abs(direct - closed_form); }
};

struct MomentumComponents {
	CVector a_tilde;
	CVector b_tilde;
};

/// (x; q)_n = prod_{j<n} (1 - x q^j)
Complex q_pochhammer(Complex x, Complex q, std::size_t n);

double split_alpha(const WalkSpec& spec);
Complex eigenvalue(const WalkSpec& spec, std::size_t k);
std::vector<Complex> eigenvalues(const WalkSpec& spec);
SplitPairSpectrum split_pair_spectrum(const WalkSpec& spec);

/// Index of the mode whose eigenvalue is conj(lambda_k).
std::size_t conjugate_index(const WalkSpec& spec, std::size_t k);

/// Generic closed form. Throws DegenerateCoin for theta < kDegenerateTheta.
EigenMode eigenmode(const WalkSpec& spec, std::size_t k);
/// Product-state modes of the block-diagonal theta = 0 walk (both parities).
EigenMode eigenmode_theta_zero(const WalkSpec& spec, std::size_t k);
/// Routes to eigenmode_theta_zero below kDegenerateTheta.
EigenMode closed_form_mode(const WalkSpec& spec, std::size_t k);
std::vector<EigenMode> all_modes(const WalkSpec& spec);

/// zeta_n(k) with a_n(k) = exp(-i zeta_n(k)); odd N only.
std::vector<double> eigenmode_trig_phases(const WalkSpec& spec, std::size_t k);

/// Closed-form C_N(k) in the a_0 = 1 convention. Infinite for the odd-k
/// modes at theta = 0, where a_0 vanishes.
double normalization(const WalkSpec& spec, std::size_t k);

/// ||U phi - lambda phi|| for the normalized eigenvector, via the step kernel.
double residual(const WalkSpec& spec, const EigenMode& mode);

/// Closed-form coin density of an odd-N eigenstate.
CoinReducedDensity coin_reduced_density(const WalkSpec& spec, std::size_t k);
std::array<double, 2> coin_schmidt_weights(const WalkSpec& spec);
EigenstateEntropies eigenstate_entropies(const WalkSpec& spec, std::size_t k, LogBase base = LogBase::Natural);

/// sum_n 1/(cos theta + lambda_k omega^{-n}) next to its closed form.
OffDiagonalSum off_diagonal_sum(const WalkSpec& spec, std::size_t k);

/// Walker-momentum components (a~, b~), up to normalization. Requires
/// theta strictly inside (0, pi/2).
MomentumComponents momentum_basis_components(const WalkSpec& spec, std::size_t k);
/// Label pairing the momentum components of mode k with the position
/// components of its dual, (N - k) mod 2N; odd N only.
std::size_t dual_index(const WalkSpec& spec, std::size_t k);

/// Applies (U_theta (x) R_N) to the eigenvector of `mode`.
EigenMode chiral_conjugate(const WalkSpec& spec, const EigenMode& mode);

}  // namespace psw
