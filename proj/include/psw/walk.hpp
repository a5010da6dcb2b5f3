#pragma once

// Matrix-free operators and evolution for the phase-space walk (PSW) and
// the periodic configuration-space walk (CSW).
//
// PSW:  U = (|0><0| (x) T + |1><1| (x) Tp) (U_theta (x) 1)
// CSW:  U = (|0><0| (x) T + |1><1| (x) T^dagger) (U_theta (x) 1)
//
// with T|n> = |n+1 mod N>, Tp|n> = omega^n |n>, omega = exp(2 pi i / N) and
// U_theta = [[cos, sin], [sin, -cos]].

#include <functional>
#include <map>
#include <span>

#include "psw/types.hpp"

namespace psw {

/// T: amplitude at site n moves to (n+1) mod N.
void apply_position_shift(std::span<Complex> lattice);
/// T^dagger: amplitude at site n moves to (n-1) mod N.
void apply_position_shift_back(std::span<Complex> lattice);
/// Tp: site n picks up omega^n.
void apply_momentum_boost(std::span<Complex> lattice, const WalkSpec& spec);
void apply_momentum_boost_back(std::span<Complex> lattice, const WalkSpec& spec);
/// R_N: n -> (N - n) mod N.
void apply_reflection(std::span<Complex> lattice);

/// In-place U_theta on the coin index of every site.
void apply_coin(WalkerCoinState& state, double cos_theta, double sin_theta);

CVector position_shift(CVector lattice);
CVector momentum_boost(CVector lattice, const WalkSpec& spec);

/// Max |(Tp T - omega T Tp)|n>| over all basis states n.
double weyl_commutator_check(const WalkSpec& spec);

/// Forward applies (G_N)_{nk} = exp(2 pi i n k / N) / sqrt(N); inverse
/// applies G_N^dagger. Inverse takes position amplitudes to momentum
/// amplitudes <k~|psi>.
CVector dft(std::span<const Complex> lattice, Direction direction);

/// Inverse DFT on both coin blocks; the returned state is tagged Momentum.
WalkerCoinState to_momentum_basis(const WalkerCoinState& state);

/// One step of U in place, O(N) work, no allocation.
void step_inplace(WalkerCoinState& state, const WalkSpec& spec);
WalkerCoinState step(WalkerCoinState state, const WalkSpec& spec);
WalkerCoinState evolve(WalkerCoinState state, const WalkSpec& spec, long t);

/// Calls visit(t, state) for t = 0..t_max, stepping in place in between.
void for_each_step(WalkerCoinState state, const WalkSpec& spec, long t_max,
                   const std::function<void(long, const WalkerCoinState&)>& visit);

struct ClassicalWalkSpec {
	double f = 0.5;  ///< probability of a position shift
	long t = 0;
};

/// Binomial walker on the line p + q = t, coordinates reduced mod N with
/// coinciding points summed.
std::map<PhaseSpacePoint, double> classical_phase_walk_distribution(const ClassicalWalkSpec& cspec,
                                                                    std::size_t n_sites);

/// P(t) = 2^{2t} / C(2t, t) for the unbiased walk on the line.
double classical_line_walk_pr(long t);

}  // namespace psw
