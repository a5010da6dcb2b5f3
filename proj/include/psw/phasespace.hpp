#pragma once

// Toral coherent states and Husimi distributions.
//
// The fiducial |(0,0)> is the ground state of the Harper operator
//   H = (1 - cos(2 pi q/N)) + (1 - (T + T^dagger)/2),
// the second term being 1 - cos(2 pi p/N) written in the position basis.
// Coherent states are |(q,p)> = Tp^p T^q |(0,0)>.

#include <Eigen/Dense>

#include "psw/types.hpp"

namespace psw {

struct FiducialState {
	CVector amplitudes;
	double energy = 0.0;

	std::size_t n_sites() const noexcept { return amplitudes.size(); }
};

/// Dense solve for N <= kHarperDenseLimit, shifted inverse iteration above.
inline constexpr std::size_t kHarperDenseLimit = 512;

FiducialState harper_fiducial(std::size_t n_sites);
/// <psi|H|psi> for the Harper operator on a walker vector.
double harper_expectation(const CVector& walker);

CVector coherent_state(const FiducialState& fiducial, PhaseSpacePoint point);

class HusimiGrid {
public:
	HusimiGrid(std::size_t n_sites, long time = 0);

	std::size_t n_sites() const noexcept { return n_; }
	long time() const noexcept { return time_; }
	void set_time(long t) noexcept { time_ = t; }

	double& operator()(std::size_t q, std::size_t p) { return w_[q * n_ + p]; }
	double operator()(std::size_t q, std::size_t p) const { return w_[q * n_ + p]; }

	double sum() const;
	double max() const;
	double min() const;
	PhaseSpacePoint argmax() const;

private:
	std::size_t n_;
	long time_;
	std::vector<double> w_;
};

/// Walker density with the coin traced out.
Eigen::MatrixXcd walker_reduced_density(const WalkerCoinState& state);

HusimiGrid husimi(const CVector& walker, const FiducialState& fiducial);
/// Husimi of the coin-traced walker state.
HusimiGrid husimi(const WalkerCoinState& state, const FiducialState& fiducial);
HusimiGrid husimi(const Eigen::MatrixXcd& walker_density, const FiducialState& fiducial);

/// max |W(q,p) - W(p,q)| / max W
double cat_symmetry_metric(const HusimiGrid& grid);

/// Share of the total W within periodic distance half_width of the line q + p = t.
double line_band_fraction(const HusimiGrid& grid, long t, std::size_t half_width);

WalkerCoinState evolve_coherent(const WalkSpec& spec, const CoinState& coin0, PhaseSpacePoint point0, long t,
                                const FiducialState& fiducial);

}  // namespace psw
