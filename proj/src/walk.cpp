#include "psw/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace psw {

std::string to_string(WalkKind kind)
{
	return kind == WalkKind::PSW ? "psw" : "csw";
}

WalkSpec::WalkSpec(std::size_t n_sites, double theta, WalkKind kind)
	: n_(n_sites), theta_(theta), kind_(kind)
{
	if (n_sites < 2) {
		throw std::invalid_argument("n_sites must be >= 2");
	}
	if (!(theta >= 0.0 && theta <= kMaxTheta)) {
		throw std::invalid_argument("theta must lie in [0, pi/2]");
	}
	if (theta == 0.0) {
		cos_ = 1.0;
		sin_ = 0.0;
	} else if (theta == kMaxTheta) {
		cos_ = 0.0;
		sin_ = 1.0;
	} else {
		cos_ = std::cos(theta);
		sin_ = std::sin(theta);
	}

	phases_.resize(n_);
	const double base = 2.0 * std::numbers::pi / static_cast<double>(n_);
	for (std::size_t n = 0; n < n_; ++n) {
		phases_[n] = std::polar(1.0, base * static_cast<double>(n));
	}
}

Complex WalkSpec::omega_pow(long long m) const noexcept
{
	const auto n = static_cast<long long>(n_);
	long long r = m % n;
	if (r < 0) {
		r += n;
	}
	return phases_[static_cast<std::size_t>(r)];
}

CoinState::CoinState(Complex c0, Complex c1) : c0_(c0), c1_(c1)
{
	const double norm = std::norm(c0) + std::norm(c1);
	if (std::abs(norm - 1.0) > 1e-12) {
		throw std::invalid_argument("coin state must have unit norm");
	}
}

CoinState CoinState::symmetric()
{
	const double r = std::numbers::sqrt2 / 2.0;
	return {Complex(r, 0.0), Complex(0.0, r)};
}

WalkerCoinState::WalkerCoinState(std::size_t n_sites, Basis basis)
	: amps_(2 * n_sites, Complex(0.0)), basis_(basis)
{
}

WalkerCoinState::WalkerCoinState(CVector amplitudes, Basis basis)
	: amps_(std::move(amplitudes)), basis_(basis)
{
	if (amps_.size() % 2 != 0 || amps_.empty()) {
		throw std::invalid_argument("walker-coin state needs 2N amplitudes");
	}
}

WalkerCoinState WalkerCoinState::site(std::size_t n_sites, const CoinState& coin, std::size_t site)
{
	if (site >= n_sites) {
		throw std::invalid_argument("site index out of range");
	}
	WalkerCoinState s(n_sites);
	s(0, site) = coin.c0();
	s(1, site) = coin.c1();
	return s;
}

WalkerCoinState WalkerCoinState::product(const CoinState& coin, const CVector& walker)
{
	WalkerCoinState s(walker.size());
	for (std::size_t n = 0; n < walker.size(); ++n) {
		s(0, n) = coin.c0() * walker[n];
		s(1, n) = coin.c1() * walker[n];
	}
	return s;
}

CVector WalkerCoinState::coin_part(int coin) const
{
	return CVector(coin_data(coin), coin_data(coin) + n_sites());
}

double WalkerCoinState::norm_squared() const
{
	double s = 0.0;
	for (const auto& a : amps_) {
		s += std::norm(a);
	}
	return s;
}

void WalkerCoinState::normalize()
{
	const double n = std::sqrt(norm_squared());
	for (auto& a : amps_) {
		a /= n;
	}
}

Complex WalkerCoinState::inner(const WalkerCoinState& other) const
{
	Complex s = 0.0;
	for (std::size_t i = 0; i < amps_.size(); ++i) {
		s += std::conj(amps_[i]) * other.amps_[i];
	}
	return s;
}

void apply_position_shift(std::span<Complex> lattice)
{
	std::rotate(lattice.rbegin(), lattice.rbegin() + 1, lattice.rend());
}

void apply_position_shift_back(std::span<Complex> lattice)
{
	std::rotate(lattice.begin(), lattice.begin() + 1, lattice.end());
}

void apply_momentum_boost(std::span<Complex> lattice, const WalkSpec& spec)
{
	const auto& ph = spec.phases();
	for (std::size_t n = 0; n < lattice.size(); ++n) {
		lattice[n] *= ph[n];
	}
}

void apply_momentum_boost_back(std::span<Complex> lattice, const WalkSpec& spec)
{
	const auto& ph = spec.phases();
	for (std::size_t n = 0; n < lattice.size(); ++n) {
		lattice[n] *= std::conj(ph[n]);
	}
}

void apply_reflection(std::span<Complex> lattice)
{
	// site 0 is fixed; the rest reverse
	std::reverse(lattice.begin() + 1, lattice.end());
}

void apply_coin(WalkerCoinState& state, double c, double s)
{
	Complex* up = state.coin_data(0);
	Complex* down = state.coin_data(1);
	const std::size_t n_sites = state.n_sites();
	for (std::size_t n = 0; n < n_sites; ++n) {
		const Complex a = up[n];
		const Complex b = down[n];
		up[n] = c * a + s * b;
		down[n] = s * a - c * b;
	}
}

CVector position_shift(CVector lattice)
{
	apply_position_shift(lattice);
	return lattice;
}

CVector momentum_boost(CVector lattice, const WalkSpec& spec)
{
	apply_momentum_boost(lattice, spec);
	return lattice;
}

double weyl_commutator_check(const WalkSpec& spec)
{
	const std::size_t n_sites = spec.n_sites();
	double worst = 0.0;
	CVector basis(n_sites);
	for (std::size_t n = 0; n < n_sites; ++n) {
		std::fill(basis.begin(), basis.end(), Complex(0.0));
		basis[n] = 1.0;
		const CVector lhs = momentum_boost(position_shift(basis), spec);
		const CVector rhs = position_shift(momentum_boost(basis, spec));
		for (std::size_t m = 0; m < n_sites; ++m) {
			worst = std::max(worst, std::abs(lhs[m] - spec.omega() * rhs[m]));
		}
	}
	return worst;
}

CVector dft(std::span<const Complex> lattice, Direction direction)
{
	const std::size_t n_sites = lattice.size();
	const double scale = 1.0 / std::sqrt(static_cast<double>(n_sites));
	const double sign = direction == Direction::Forward ? 1.0 : -1.0;
	CVector table(n_sites);
	for (std::size_t m = 0; m < n_sites; ++m) {
		table[m] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(m)
		                               / static_cast<double>(n_sites));
	}
	CVector out(n_sites, Complex(0.0));
	for (std::size_t n = 0; n < n_sites; ++n) {
		Complex acc = 0.0;
		for (std::size_t k = 0; k < n_sites; ++k) {
			acc += table[(n * k) % n_sites] * lattice[k];
		}
		out[n] = acc * scale;
	}
	return out;
}

WalkerCoinState to_momentum_basis(const WalkerCoinState& state)
{
	const std::size_t n_sites = state.n_sites();
	WalkerCoinState out(n_sites, Basis::Momentum);
	for (int c = 0; c < 2; ++c) {
		const CVector m = dft({state.coin_data(c), n_sites}, Direction::Inverse);
		std::copy(m.begin(), m.end(), out.coin_data(c));
	}
	return out;
}

void step_inplace(WalkerCoinState& state, const WalkSpec& spec)
{
	const std::size_t n_sites = spec.n_sites();
	apply_coin(state, spec.cos_theta(), spec.sin_theta());
	apply_position_shift({state.coin_data(0), n_sites});
	if (spec.kind() == WalkKind::PSW) {
		apply_momentum_boost({state.coin_data(1), n_sites}, spec);
	} else {
		apply_position_shift_back({state.coin_data(1), n_sites});
	}
}

WalkerCoinState step(WalkerCoinState state, const WalkSpec& spec)
{
	step_inplace(state, spec);
	return state;
}

WalkerCoinState evolve(WalkerCoinState state, const WalkSpec& spec, long t)
{
	if (t < 0) {
		throw std::invalid_argument("evolve needs t >= 0");
	}
	for (long i = 0; i < t; ++i) {
		step_inplace(state, spec);
	}
	return state;
}

void for_each_step(WalkerCoinState state, const WalkSpec& spec, long t_max,
                   const std::function<void(long, const WalkerCoinState&)>& visit)
{
	for (long t = 0; t <= t_max; ++t) {
		visit(t, state);
		if (t < t_max) {
			step_inplace(state, spec);
		}
	}
}

namespace {

double log_binomial(long n, long k)
{
	return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0)
	       - std::lgamma(static_cast<double>(n - k) + 1.0);
}

}  // namespace

std::map<PhaseSpacePoint, double> classical_phase_walk_distribution(const ClassicalWalkSpec& cspec,
                                                                    std::size_t n_sites)
{
	if (!(cspec.f >= 0.0 && cspec.f <= 1.0) || cspec.t < 0 || n_sites == 0) {
		throw std::invalid_argument("classical walk needs f in [0,1], t >= 0, N > 0");
	}
	std::map<PhaseSpacePoint, double> out;
	const long t = cspec.t;
	for (long q = 0; q <= t; ++q) {
		double prob = 0.0;
		if (cspec.f == 0.0 || cspec.f == 1.0) {
			const long certain = cspec.f == 1.0 ? t : 0;
			prob = q == certain ? 1.0 : 0.0;
		} else {
			prob = std::exp(log_binomial(t, q) + static_cast<double>(q) * std::log(cspec.f)
			                + static_cast<double>(t - q) * std::log1p(-cspec.f));
		}
		if (prob == 0.0) {
			continue;
		}
		const PhaseSpacePoint pt{static_cast<std::size_t>(q) % n_sites,
		                         static_cast<std::size_t>(t - q) % n_sites};
		out[pt] += prob;
	}
	return out;
}

double classical_line_walk_pr(long t)
{
	if (t < 0) {
		throw std::invalid_argument("classical_line_walk_pr needs t >= 0");
	}
	const double td = static_cast<double>(t);
	return std::exp(2.0 * td * std::numbers::ln2 - std::lgamma(2.0 * td + 1.0) + 2.0 * std::lgamma(td + 1.0));
}

}  // namespace psw
