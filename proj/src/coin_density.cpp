#include "psw/coin_density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace psw {

double CoinReducedDensity::hermiticity_error() const
{
	double worst = 0.0;
	for (int i = 0; i < 2; ++i) {
		for (int j = 0; j < 2; ++j) {
			worst = std::max(worst, std::abs(rho[i][j] - std::conj(rho[j][i])));
		}
	}
	return worst;
}

std::array<double, 2> CoinReducedDensity::eigenvalues() const
{
	const double a = rho[0][0].real();
	const double d = rho[1][1].real();
	const double off = std::abs(rho[0][1]);
	const double mean = 0.5 * (a + d);
	const double radius = std::hypot(0.5 * (a - d), off);
	const auto clamp = [](double x) { return std::clamp(x, 0.0, 1.0); };
	return {clamp(mean + radius), clamp(mean - radius)};
}

CoinReducedDensity partial_trace_walker(const WalkerCoinState& state)
{
	CoinReducedDensity out;
	const std::size_t n_sites = state.n_sites();
	for (int i = 0; i < 2; ++i) {
		for (int j = 0; j < 2; ++j) {
			Complex acc = 0.0;
			const Complex* x = state.coin_data(i);
			const Complex* y = state.coin_data(j);
			for (std::size_t n = 0; n < n_sites; ++n) {
				acc += x[n] * std::conj(y[n]);
			}
			out.rho[i][j] = acc;
		}
	}
	return out;
}

double von_neumann_entropy(const std::array<double, 2>& mu, LogBase base)
{
	double s = 0.0;
	for (double m : mu) {
		if (m > 0.0) {
			s -= m * std::log(m);
		}
	}
	return base == LogBase::Two ? s / std::numbers::ln2 : s;
}

double linear_entropy(const CoinReducedDensity& rho)
{
	double purity = 0.0;
	for (int i = 0; i < 2; ++i) {
		for (int j = 0; j < 2; ++j) {
			purity += std::norm(rho(i, j));
		}
	}
	return 1.0 - purity;
}

}  // namespace psw
