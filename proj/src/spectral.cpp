#include "psw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "psw/walk.hpp"

namespace psw {

namespace {

void require_psw(const WalkSpec& spec)
{
	if (spec.kind() != WalkKind::PSW) {
		throw std::invalid_argument("closed-form spectrum exists for the phase-space walk only");
	}
}

void require_mode_index(const WalkSpec& spec, std::size_t k)
{
	if (k >= 2 * spec.n_sites()) {
		throw std::out_of_range("mode index must lie in [0, 2N)");
	}
}

void require_odd(const WalkSpec& spec, const char* what)
{
	if (!spec.odd()) {
		throw std::invalid_argument(std::string(what) + " is defined for odd N only");
	}
}

double parity_sign(std::size_t k)
{
	return k % 2 == 0 ? 1.0 : -1.0;
}

Complex unit(Complex z)
{
	return z / std::abs(z);
}

}  // namespace

WalkerCoinState EigenMode::assemble() const
{
	const std::size_t n_sites = a.size();
	WalkerCoinState s(n_sites);
	const double scale = 1.0 / std::sqrt(direct_norm());
	for (std::size_t n = 0; n < n_sites; ++n) {
		s(0, n) = a[n] * scale;
		s(1, n) = b[n] * scale;
	}
	return s;
}

double EigenMode::direct_norm() const
{
	double acc = 0.0;
	for (std::size_t n = 0; n < a.size(); ++n) {
		acc += std::norm(a[n]) + std::norm(b[n]);
	}
	return acc;
}

Complex q_pochhammer(Complex x, Complex q, std::size_t n)
{
	Complex acc = 1.0;
	Complex qj = 1.0;
	for (std::size_t j = 0; j < n; ++j) {
		acc *= 1.0 - x * qj;
		qj *= q;
	}
	return acc;
}

double split_alpha(const WalkSpec& spec)
{
	const double cn = std::pow(spec.cos_theta(), static_cast<double>(spec.n_sites()));
	return std::acos(std::clamp(cn, -1.0, 1.0)) / static_cast<double>(spec.n_sites());
}

Complex eigenvalue(const WalkSpec& spec, std::size_t k)
{
	require_mode_index(spec, k);
	const std::size_t n_sites = spec.n_sites();
	if (spec.odd()) {
		return std::polar(1.0, std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_sites));
	}
	const double alpha = split_alpha(spec);
	const std::size_t l = k / 2;
	const double sign = k % 2 == 0 ? 1.0 : -1.0;
	return std::polar(1.0, sign * alpha) * spec.phases()[l];
}

std::vector<Complex> eigenvalues(const WalkSpec& spec)
{
	require_psw(spec);
	std::vector<Complex> out(2 * spec.n_sites());
	for (std::size_t k = 0; k < out.size(); ++k) {
		out[k] = eigenvalue(spec, k);
	}
	return out;
}

SplitPairSpectrum split_pair_spectrum(const WalkSpec& spec)
{
	require_psw(spec);
	if (spec.odd()) {
		throw std::invalid_argument("split pairs exist for even N only");
	}
	SplitPairSpectrum out;
	out.alpha = split_alpha(spec);
	for (std::size_t l = 0; l < spec.n_sites(); ++l) {
		out.pairs.emplace_back(eigenvalue(spec, 2 * l), eigenvalue(spec, 2 * l + 1));
	}
	return out;
}

std::size_t conjugate_index(const WalkSpec& spec, std::size_t k)
{
	require_mode_index(spec, k);
	const std::size_t n_sites = spec.n_sites();
	if (spec.odd()) {
		return (2 * n_sites - k) % (2 * n_sites);
	}
	const std::size_t l = k / 2;
	const std::size_t s = k % 2;
	return 2 * ((n_sites - l) % n_sites) + (1 - s);
}

EigenMode eigenmode(const WalkSpec& spec, std::size_t k)
{
	require_psw(spec);
	require_mode_index(spec, k);
	if (spec.theta() < kDegenerateTheta) {
		throw DegenerateCoin("generic eigenvector formula needs theta > 0; use eigenmode_theta_zero");
	}
	const std::size_t n_sites = spec.n_sites();
	const double c = spec.cos_theta();
	const double s = spec.sin_theta();

	EigenMode mode;
	mode.k = k;
	mode.lambda = eigenvalue(spec, k);
	mode.a.resize(n_sites);
	mode.b.resize(n_sites);

	const Complex lambda_inv = std::conj(mode.lambda);
	mode.a[0] = 1.0;
	for (std::size_t n = 1; n < n_sites; ++n) {
		const Complex w = spec.omega_pow(-static_cast<long long>(n - 1));
		const Complex factor = (lambda_inv + c * w) / (c + mode.lambda * w);
		mode.a[n] = unit(mode.a[n - 1] * unit(factor));
	}
	for (std::size_t n = 0; n < n_sites; ++n) {
		const Complex w = spec.omega_pow(-static_cast<long long>(n));
		mode.b[n] = mode.a[n] * s / (c + mode.lambda * w);
	}
	mode.norm_const = normalization(spec, k);
	return mode;
}

EigenMode eigenmode_theta_zero(const WalkSpec& spec, std::size_t k)
{
	require_psw(spec);
	require_mode_index(spec, k);
	const std::size_t n_sites = spec.n_sites();
	const auto nl = static_cast<long long>(n_sites);

	EigenMode mode;
	mode.k = k;
	mode.lambda = eigenvalue(spec, k);
	mode.a.assign(n_sites, Complex(0.0));
	mode.b.assign(n_sites, Complex(0.0));

	if (spec.odd()) {
		if (k % 2 == 0) {
			// momentum state of T with eigenvalue omega^{k/2}: a_n = exp(-i pi n k / N)
			for (std::size_t n = 0; n < n_sites; ++n) {
				const long long m = (static_cast<long long>(n) * static_cast<long long>(k)) % (2 * nl);
				mode.a[n] = std::polar(1.0, -std::numbers::pi * static_cast<double>(m) / static_cast<double>(n_sites));
			}
		} else {
			long long site = (static_cast<long long>(k) - nl) / 2;
			site = ((site % nl) + nl) % nl;
			mode.b[static_cast<std::size_t>(site)] = 1.0;
		}
	} else {
		const auto l = static_cast<long long>(k / 2);
		if (k % 2 == 0) {
			for (std::size_t n = 0; n < n_sites; ++n) {
				mode.a[n] = spec.omega_pow(-l * static_cast<long long>(n));
			}
		} else {
			const long long site = (l + nl / 2) % nl;
			mode.b[static_cast<std::size_t>(site)] = 1.0;
		}
	}
	mode.norm_const = mode.direct_norm();
	return mode;
}

EigenMode closed_form_mode(const WalkSpec& spec, std::size_t k)
{
	if (spec.theta() < kDegenerateTheta) {
		return eigenmode_theta_zero(spec, k);
	}
	return eigenmode(spec, k);
}

std::vector<EigenMode> all_modes(const WalkSpec& spec)
{
	std::vector<EigenMode> out;
	out.reserve(2 * spec.n_sites());
	for (std::size_t k = 0; k < 2 * spec.n_sites(); ++k) {
		out.push_back(closed_form_mode(spec, k));
	}
	return out;
}

std::vector<double> eigenmode_trig_phases(const WalkSpec& spec, std::size_t k)
{
	require_psw(spec);
	require_mode_index(spec, k);
	require_odd(spec, "trigonometric phase form");
	if (spec.theta() < kDegenerateTheta) {
		throw DegenerateCoin("trigonometric phase form needs theta > 0");
	}
	const std::size_t n_sites = spec.n_sites();
	const double nd = static_cast<double>(n_sites);
	const double c = spec.cos_theta();
	std::vector<double> zeta(n_sites, 0.0);
	for (std::size_t n = 1; n < n_sites; ++n) {
		const double j = static_cast<double>(n - 1);
		const double phi = std::numbers::pi * (2.0 * j - static_cast<double>(k)) / nd;
		zeta[n] = zeta[n - 1] + 2.0 * std::numbers::pi * j / nd - 2.0 * std::atan2(std::sin(phi), c + std::cos(phi));
	}
	return zeta;
}

double normalization(const WalkSpec& spec, std::size_t k)
{
	require_mode_index(spec, k);
	const double two_n = 2.0 * static_cast<double>(spec.n_sites());
	if (!spec.odd()) {
		return two_n;
	}
	const double cn = std::pow(spec.cos_theta(), static_cast<double>(spec.n_sites()));
	const double denom = 1.0 + parity_sign(k) * cn;
	if (denom == 0.0) {
		return std::numeric_limits<double>::infinity();
	}
	return two_n / denom;
}

double residual(const WalkSpec& spec, const EigenMode& mode)
{
	const WalkerCoinState phi = mode.assemble();
	const WalkerCoinState u_phi = step(phi, spec);
	double acc = 0.0;
	for (std::size_t i = 0; i < phi.size(); ++i) {
		acc += std::norm(u_phi.amplitudes()[i] - mode.lambda * phi.amplitudes()[i]);
	}
	return std::sqrt(acc);
}

CoinReducedDensity coin_reduced_density(const WalkSpec& spec, std::size_t k)
{
	require_mode_index(spec, k);
	require_odd(spec, "closed-form coin density");
	const double n = static_cast<double>(spec.n_sites());
	const double c = spec.cos_theta();
	const double sign = parity_sign(k);
	const double cn = std::pow(c, n);
	// cos^N tan = cos^{N-1} sin stays finite at pi/2
	const double off = sign * std::pow(c, n - 1.0) * spec.sin_theta();
	CoinReducedDensity rho;
	rho.rho[0][0] = 0.5 * (1.0 + sign * cn);
	rho.rho[1][1] = 0.5 * (1.0 - sign * cn);
	rho.rho[0][1] = 0.5 * off;
	rho.rho[1][0] = 0.5 * off;
	return rho;
}

std::array<double, 2> coin_schmidt_weights(const WalkSpec& spec)
{
	require_odd(spec, "closed-form coin spectrum");
	const double x = std::pow(spec.cos_theta(), static_cast<double>(spec.n_sites()) - 1.0);
	return {0.5 * (1.0 + x), 0.5 * (1.0 - x)};
}

EigenstateEntropies eigenstate_entropies(const WalkSpec& spec, std::size_t k, LogBase base)
{
	require_mode_index(spec, k);
	const auto mu = coin_schmidt_weights(spec);
	const double x2 = std::pow(spec.cos_theta(), 2.0 * static_cast<double>(spec.n_sites()) - 2.0);
	return {von_neumann_entropy(mu, base), 0.5 * (1.0 - x2)};
}

OffDiagonalSum off_diagonal_sum(const WalkSpec& spec, std::size_t k)
{
	require_psw(spec);
	require_mode_index(spec, k);
	require_odd(spec, "off-diagonal eigenvector sum");
	const std::size_t n_sites = spec.n_sites();
	const double c = spec.cos_theta();
	OffDiagonalSum out;
	out.direct = 0.0;
	// 1/(c + e^{i phi}) = (c + e^{-i phi}) / |c + e^{i phi}|^2, with the
	// modulus written as (1-c)^2 + 4c cos^2(phi/2) so that nothing cancels
	// near the poles of the small-theta modes
	const double half = std::sin(spec.theta() / 2.0);
	const double one_minus_c = c == 0.0 ? 1.0 : 2.0 * half * half;
	const auto two_n = static_cast<long long>(2 * n_sites);
	for (std::size_t n = 0; n < n_sites; ++n) {
		const long long m = ((static_cast<long long>(k) - 2 * static_cast<long long>(n)) % two_n + two_n) % two_n;
		const double phi = std::numbers::pi * static_cast<double>(m) / static_cast<double>(n_sites);
		const double ch = std::cos(phi / 2.0);
		const double denom = one_minus_c * one_minus_c + 4.0 * c * ch * ch;
		out.direct += Complex(2.0 * ch * ch - one_minus_c, -std::sin(phi)) / denom;
	}
	const double nd = static_cast<double>(n_sites);
	const double sign = parity_sign(k);
	out.closed_form = sign * nd * std::pow(c, nd - 1.0) / (1.0 + sign * std::pow(c, nd));
	return out;
}

MomentumComponents momentum_basis_components(const WalkSpec& spec, std::size_t k)
{
	require_psw(spec);
	require_mode_index(spec, k);
	if (!(spec.theta() > 0.0 && spec.theta() < WalkSpec::kMaxTheta)) {
		throw DegenerateCoin("momentum-basis components need theta strictly inside (0, pi/2)");
	}
	const std::size_t n_sites = spec.n_sites();
	const double c = spec.cos_theta();
	const double s = spec.sin_theta();
	const Complex lambda = eigenvalue(spec, k);
	const Complex lambda_inv = std::conj(lambda);

	// Running form of omega^{n(n-1)/2} (sec/lambda; 1/omega)_n / (sec lambda; omega)_n,
	// each factor multiplied through by cos(theta).
	MomentumComponents out;
	out.b_tilde.resize(n_sites);
	out.a_tilde.resize(n_sites);
	out.b_tilde[0] = 1.0;
	for (std::size_t n = 1; n < n_sites; ++n) {
		const auto j = static_cast<long long>(n - 1);
		const Complex factor = spec.omega_pow(j) * (c - lambda_inv * spec.omega_pow(-j))
		                       / (c - lambda * spec.omega_pow(j));
		out.b_tilde[n] = unit(out.b_tilde[n - 1] * unit(factor));
	}
	for (std::size_t n = 0; n < n_sites; ++n) {
		const Complex w = spec.omega_pow(static_cast<long long>(n));
		out.a_tilde[n] = s * out.b_tilde[n] / (lambda * w - c);
	}
	return out;
}

std::size_t dual_index(const WalkSpec& spec, std::size_t k)
{
	require_mode_index(spec, k);
	require_odd(spec, "momentum duality");
	const std::size_t two_n = 2 * spec.n_sites();
	return (spec.n_sites() + two_n - k) % two_n;
}

EigenMode chiral_conjugate(const WalkSpec& spec, const EigenMode& mode)
{
	require_psw(spec);
	const std::size_t n_sites = spec.n_sites();
	WalkerCoinState v(n_sites);
	for (std::size_t n = 0; n < n_sites; ++n) {
		v(0, n) = mode.a[n];
		v(1, n) = mode.b[n];
	}
	apply_coin(v, spec.cos_theta(), spec.sin_theta());
	apply_reflection({v.coin_data(0), n_sites});
	apply_reflection({v.coin_data(1), n_sites});

	EigenMode out;
	out.k = conjugate_index(spec, mode.k);
	out.lambda = std::conj(mode.lambda);
	out.a = v.coin_part(0);
	out.b = v.coin_part(1);
	out.norm_const = mode.norm_const;
	return out;
}

}  // namespace psw
