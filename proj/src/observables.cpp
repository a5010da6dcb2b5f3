#include "psw/observables.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "psw/coin_density.hpp"
#include "psw/walk.hpp"

namespace psw {

double SiteDistribution::total() const
{
	double s = 0.0;
	for (double x : p) {
		s += x;
	}
	return s;
}

SiteDistribution site_distribution(const WalkerCoinState& state)
{
	const std::size_t n_sites = state.n_sites();
	SiteDistribution d;
	d.p.resize(n_sites);
	d.p0.resize(n_sites);
	d.p1.resize(n_sites);
	for (std::size_t n = 0; n < n_sites; ++n) {
		d.p0[n] = std::norm(state(0, n));
		d.p1[n] = std::norm(state(1, n));
		d.p[n] = d.p0[n] + d.p1[n];
	}
	return d;
}

SpectralPropagator::SpectralPropagator(const WalkSpec& spec, const WalkerCoinState& initial)
	: spec_(spec), modes_(all_modes(spec))
{
	if (initial.n_sites() != spec.n_sites()) {
		throw std::invalid_argument("initial state size does not match the lattice");
	}
	vectors_.reserve(modes_.size());
	weights_.reserve(modes_.size());
	for (const auto& mode : modes_) {
		vectors_.push_back(mode.assemble());
		weights_.push_back(vectors_.back().inner(initial));
	}
}

Complex SpectralPropagator::lambda_pow(std::size_t k, long t) const
{
	const auto n = static_cast<long long>(spec_.n_sites());
	if (spec_.odd()) {
		long long m = (static_cast<long long>(k) * t) % (2 * n);
		if (m < 0) {
			m += 2 * n;
		}
		return std::polar(1.0, std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
	}
	const auto l = static_cast<long long>(k / 2);
	const double sign = k % 2 == 0 ? 1.0 : -1.0;
	return std::polar(1.0, sign * split_alpha(spec_) * static_cast<double>(t)) * spec_.omega_pow(l * t);
}

WalkerCoinState SpectralPropagator::state_at(long t) const
{
	WalkerCoinState out(spec_.n_sites());
	auto& amps = out.amplitudes();
	for (std::size_t k = 0; k < modes_.size(); ++k) {
		const Complex coeff = lambda_pow(k, t) * weights_[k];
		const auto& v = vectors_[k].amplitudes();
		for (std::size_t i = 0; i < amps.size(); ++i) {
			amps[i] += coeff * v[i];
		}
	}
	return out;
}

SiteDistribution spectral_propagate(const WalkSpec& spec, const WalkerCoinState& initial, long t)
{
	return SpectralPropagator(spec, initial).distribution_at(t);
}

double std_dev(const SiteDistribution& dist)
{
	double m1 = 0.0;
	double m2 = 0.0;
	for (std::size_t n = 0; n < dist.p.size(); ++n) {
		const double x = static_cast<double>(n);
		m1 += x * dist.p[n];
		m2 += x * x * dist.p[n];
	}
	return std::sqrt(std::max(0.0, m2 - m1 * m1));
}

double participation_ratio(const SiteDistribution& dist)
{
	double s = 0.0;
	for (double x : dist.p) {
		s += x * x;
	}
	return std::clamp(1.0 / s, 1.0, static_cast<double>(dist.p.size()));
}

double coin_entropy(const WalkerCoinState& state, LogBase base)
{
	return von_neumann_entropy(partial_trace_walker(state).eigenvalues(), base);
}

ObservableSeries observe(const WalkSpec& spec, const WalkerCoinState& initial, long t_max, LogBase base)
{
	ObservableSeries series;
	series.reserve(static_cast<std::size_t>(std::max(0L, t_max) + 1));
	for_each_step(initial, spec, t_max, [&](long t, const WalkerCoinState& s) {
		const auto d = site_distribution(s);
		series.push_back({t, std_dev(d), participation_ratio(d), coin_entropy(s, base)});
	});
	return series;
}

double value_of(const ObservableRecord& r, Observable which)
{
	switch (which) {
	case Observable::Sigma:
		return r.sigma;
	case Observable::CoinEntropy:
		return r.coin_entropy;
	case Observable::Participation:
		break;
	}
	return r.participation;
}

namespace {

struct WindowSamples {
	std::vector<double> x;
	std::vector<double> y;
};

WindowSamples select_window(const std::vector<double>& t, const std::vector<double>& y, FitWindow window)
{
	if (t.size() != y.size()) {
		throw std::invalid_argument("time and value series differ in length");
	}
	WindowSamples w;
	for (std::size_t i = 0; i < t.size(); ++i) {
		if (t[i] >= window.t_start && t[i] <= window.t_end) {
			w.x.push_back(t[i]);
			w.y.push_back(y[i]);
		}
	}
	if (w.x.size() < 2) {
		throw EmptyWindow("fit window holds fewer than two samples");
	}
	return w;
}

struct LineFit {
	double slope;
	double intercept;
	double r_squared;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y)
{
	const double n = static_cast<double>(x.size());
	double mx = 0.0;
	double my = 0.0;
	for (std::size_t i = 0; i < x.size(); ++i) {
		mx += x[i];
		my += y[i];
	}
	mx /= n;
	my /= n;
	double sxx = 0.0;
	double sxy = 0.0;
	double syy = 0.0;
	for (std::size_t i = 0; i < x.size(); ++i) {
		sxx += (x[i] - mx) * (x[i] - mx);
		sxy += (x[i] - mx) * (y[i] - my);
		syy += (y[i] - my) * (y[i] - my);
	}
	if (sxx == 0.0) {
		throw EmptyWindow("fit window has no spread in t");
	}
	const double slope = sxy / sxx;
	const double r2 = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
	return {slope, my - slope * mx, r2};
}

}  // namespace

PowerLawFit fit_power_law(const std::vector<double>& t, const std::vector<double>& y, FitWindow window)
{
	auto w = select_window(t, y, window);
	for (std::size_t i = 0; i < w.x.size(); ++i) {
		if (!(w.x[i] > 0.0) || !(w.y[i] > 0.0)) {
			throw NonPositiveValue("power-law fit needs positive t and values");
		}
		w.x[i] = std::log(w.x[i]);
		w.y[i] = std::log(w.y[i]);
	}
	const auto line = least_squares(w.x, w.y);
	return {line.slope, std::exp(line.intercept), window, line.r_squared, w.x.size()};
}

PowerLawFit fit_power_law(const ObservableSeries& series, FitWindow window, Observable which)
{
	std::vector<double> t;
	std::vector<double> y;
	t.reserve(series.size());
	y.reserve(series.size());
	for (const auto& r : series) {
		t.push_back(static_cast<double>(r.t));
		y.push_back(value_of(r, which));
	}
	return fit_power_law(t, y, window);
}

double fit_linear_slope(const std::vector<double>& t, const std::vector<double>& y, FitWindow window)
{
	const auto w = select_window(t, y, window);
	return least_squares(w.x, w.y).slope;
}

TimescaleEstimate finite_size_divergence_time(const WalkSpec& a, const WalkSpec& b, double epsilon,
                                              std::optional<long> horizon)
{
	if (!(epsilon > 0.0)) {
		throw std::invalid_argument("epsilon must be positive");
	}
	if (a.theta() != b.theta() || a.kind() != b.kind()) {
		throw std::invalid_argument("divergence time compares lattices of the same walk");
	}
	const long t_max = horizon.value_or(2 * static_cast<long>(std::max(a.n_sites(), b.n_sites())));
	WalkerCoinState sa = WalkerCoinState::site(a.n_sites(), CoinState::zero(), 0);
	WalkerCoinState sb = WalkerCoinState::site(b.n_sites(), CoinState::zero(), 0);
	const double n_min = static_cast<double>(std::min(a.n_sites(), b.n_sites()));
	for (long t = 0; t <= t_max; ++t) {
		const double pa = participation_ratio(site_distribution(sa));
		const double pb = participation_ratio(site_distribution(sb));
		if (std::abs(pa - pb) / std::max(pa, pb) > epsilon) {
			return {TimescaleKind::FiniteSize, static_cast<double>(t) / n_min, t, n_min, epsilon};
		}
		step_inplace(sa, a);
		step_inplace(sb, b);
	}
	throw NoDivergence("participation ratios stayed within epsilon over the horizon");
}

TimescaleEstimate ehrenfest_time(const WalkSpec& spec, const CoinState& coin0, const CVector& walker0, double tol)
{
	if (walker0.size() != spec.n_sites()) {
		throw std::invalid_argument("walker state size does not match the lattice");
	}
	return ehrenfest_time(spec, WalkerCoinState::product(coin0, walker0), tol);
}

TimescaleEstimate ehrenfest_time(const WalkSpec& spec, const WalkerCoinState& initial, double tol)
{
	if (initial.n_sites() != spec.n_sites()) {
		throw std::invalid_argument("initial state size does not match the lattice");
	}
	const long horizon = 2 * static_cast<long>(spec.n_sites());
	std::vector<double> entropy;
	entropy.reserve(static_cast<std::size_t>(horizon) + 1);
	for_each_step(initial, spec, horizon,
	              [&](long, const WalkerCoinState& s) { entropy.push_back(coin_entropy(s, LogBase::Two)); });
	const double peak = *std::max_element(entropy.begin(), entropy.end());
	long t_e = 0;
	while (entropy[static_cast<std::size_t>(t_e)] < peak - tol) {
		++t_e;
	}
	return {TimescaleKind::Ehrenfest, static_cast<double>(t_e), t_e, peak, tol};
}

FitWindow default_fit_window(const WalkSpec& spec)
{
	const double gamma = spec.kind() == WalkKind::PSW ? 0.25 : 1.41;
	return {30.0, gamma * static_cast<double>(spec.n_sites()) / 2.0};
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn)
{
	if (jobs == 0) {
		jobs = std::max(1u, std::thread::hardware_concurrency());
	}
	const auto workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
	if (workers <= 1) {
		for (std::size_t i = 0; i < count; ++i) {
			fn(i);
		}
		return;
	}
	std::atomic<std::size_t> next{0};
	std::vector<std::jthread> pool;
	pool.reserve(workers);
	for (unsigned w = 0; w < workers; ++w) {
		pool.emplace_back([&] {
			for (std::size_t i = next++; i < count; i = next++) {
				fn(i);
			}
		});
	}
}

std::vector<std::vector<double>> pr_theta_time_scan(std::size_t n_sites, const std::vector<double>& theta_grid,
                                                    long t_max, WalkKind kind, const CoinState& coin, unsigned jobs)
{
	std::vector<std::vector<double>> out(theta_grid.size());
	// validate up front so worker threads never throw
	std::vector<WalkSpec> specs;
	specs.reserve(theta_grid.size());
	for (double theta : theta_grid) {
		specs.emplace_back(n_sites, theta, kind);
	}
	parallel_for(theta_grid.size(), jobs, [&](std::size_t i) {
		auto& row = out[i];
		row.reserve(static_cast<std::size_t>(t_max) + 1);
		for_each_step(WalkerCoinState::site(n_sites, coin, 0), specs[i], t_max,
		              [&](long, const WalkerCoinState& s) { row.push_back(participation_ratio(site_distribution(s))); });
	});
	return out;
}

}  // namespace psw
