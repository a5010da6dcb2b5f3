#pragma once

#include <array>

#include "psw/types.hpp"

namespace psw {

/// 2x2 reduced density matrix of the coin.
struct CoinReducedDensity {
	std::array<std::array<Complex, 2>, 2> rho{};

	Complex operator()(int i, int j) const { return rho[i][j]; }
	Complex trace() const { return rho[0][0] + rho[1][1]; }
	/// max |rho - rho^dagger|
	double hermiticity_error() const;
	/// Eigenvalues in descending order, clamped to [0, 1].
	std::array<double, 2> eigenvalues() const;
};

/// Partial trace over the walker.
CoinReducedDensity partial_trace_walker(const WalkerCoinState& state);

/// -sum mu log mu over the given eigenvalues.
double von_neumann_entropy(const std::array<double, 2>& mu, LogBase base);
double linear_entropy(const CoinReducedDensity& rho);

}  // namespace psw
