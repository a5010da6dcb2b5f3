#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "psw/spectral.hpp"
#include "psw/types.hpp"

namespace psw {

struct SiteDistribution {
	std::vector<double> p;
	std::vector<double> p0;  ///< coin-0 part
	std::vector<double> p1;  ///< coin-1 part

	double total() const;
};

SiteDistribution site_distribution(const WalkerCoinState& state);

/// Precomputes the closed-form modes and the overlaps <phi_k|initial>, so
/// each time costs O(N^2) with no matrix diagonalization or powers.
class SpectralPropagator {
public:
	SpectralPropagator(const WalkSpec& spec, const WalkerCoinState& initial);

	/// U^t |initial>; t may be negative.
	WalkerCoinState state_at(long t) const;
	SiteDistribution distribution_at(long t) const { return site_distribution(state_at(t)); }

	const std::vector<EigenMode>& modes() const noexcept { return modes_; }

private:
	Complex lambda_pow(std::size_t k, long t) const;

	WalkSpec spec_;
	std::vector<EigenMode> modes_;
	std::vector<WalkerCoinState> vectors_;
	CVector weights_;
};

SiteDistribution spectral_propagate(const WalkSpec& spec, const WalkerCoinState& initial, long t);

/// Raw site labels 0..N-1.
double std_dev(const SiteDistribution& dist);
/// 1 / sum p_n^2, clamped to [1, N].
double participation_ratio(const SiteDistribution& dist);
double coin_entropy(const WalkerCoinState& state, LogBase base = LogBase::Two);

struct ObservableRecord {
	long t = 0;
	double sigma = 0.0;
	double participation = 1.0;
	double coin_entropy = 0.0;
};

using ObservableSeries = std::vector<ObservableRecord>;

/// Direct O(N)-per-step evolution, one record per t in [0, t_max].
ObservableSeries observe(const WalkSpec& spec, const WalkerCoinState& initial, long t_max,
                         LogBase base = LogBase::Two);

enum class Observable { Sigma, Participation, CoinEntropy };

double value_of(const ObservableRecord& r, Observable which);

struct FitWindow {
	double t_start = 0.0;
	double t_end = 0.0;
};

struct PowerLawFit {
	double exponent = 0.0;
	double prefactor = 0.0;
	FitWindow window;
	double r_squared = 0.0;
	std::size_t samples = 0;
};

/// Least squares on (log t, log y) over samples with t inside the closed window.
PowerLawFit fit_power_law(const std::vector<double>& t, const std::vector<double>& y, FitWindow window);
PowerLawFit fit_power_law(const ObservableSeries& series, FitWindow window,
                          Observable which = Observable::Participation);

/// Ordinary least-squares slope of y against t over the window.
double fit_linear_slope(const std::vector<double>& t, const std::vector<double>& y, FitWindow window);

enum class TimescaleKind { Ehrenfest, FiniteSize };

struct TimescaleEstimate {
	TimescaleKind kind = TimescaleKind::FiniteSize;
	/// gamma for FiniteSize; t_E for Ehrenfest
	double value = 0.0;
	long step = 0;
	/// min(N1, N2) for FiniteSize; saturation entropy for Ehrenfest
	double reference = 0.0;
	double epsilon = 0.0;
};

/// Start both lattices from |site 0>|coin 0> and report the first t at which
/// |P1 - P2| / max(P1, P2) > epsilon. Horizon defaults to 2 max(N1, N2).
TimescaleEstimate finite_size_divergence_time(const WalkSpec& a, const WalkSpec& b, double epsilon = 0.05,
                                              std::optional<long> horizon = std::nullopt);

/// First t in [0, 2N] at which the coin entropy (base 2) is within tol of
/// its maximum over that horizon.
TimescaleEstimate ehrenfest_time(const WalkSpec& spec, const CoinState& coin0, const CVector& walker0,
                                 double tol = 1e-3);
TimescaleEstimate ehrenfest_time(const WalkSpec& spec, const WalkerCoinState& initial, double tol = 1e-3);

/// Default power-law window: [30, gamma N / 2] with gamma = 0.25 (PSW) or 1.41 (CSW).
FitWindow default_fit_window(const WalkSpec& spec);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

/// Participation ratio matrix: row i is theta_grid[i], column t in [0, t_max].
/// Each row starts from |site 0>|coin>.
std::vector<std::vector<double>> pr_theta_time_scan(std::size_t n_sites, const std::vector<double>& theta_grid,
                                                    long t_max, WalkKind kind,
                                                    const CoinState& coin = CoinState::zero(), unsigned jobs = 1);

}  // namespace psw
