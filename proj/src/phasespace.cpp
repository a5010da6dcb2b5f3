#include "psw/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "psw/walk.hpp"

namespace psw {

namespace {

double harper_diagonal(std::size_t n, std::size_t n_sites)
{
	// (1 - cos 2 pi n / N) from the position term plus 1 from the momentum term
	return 2.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(n_sites));
}

Eigen::MatrixXd harper_dense(std::size_t n_sites)
{
	const auto n = static_cast<Eigen::Index>(n_sites);
	Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
	for (Eigen::Index i = 0; i < n; ++i) {
		h(i, i) += harper_diagonal(static_cast<std::size_t>(i), n_sites);
		h(i, (i + 1) % n) -= 0.5;
		h((i + 1) % n, i) -= 0.5;
	}
	return h;
}

Eigen::VectorXd harper_ground_iterative(std::size_t n_sites)
{
	const auto n = static_cast<Eigen::Index>(n_sites);
	std::vector<Eigen::Triplet<double>> entries;
	entries.reserve(3 * n_sites);
	for (Eigen::Index i = 0; i < n; ++i) {
		entries.emplace_back(i, i, harper_diagonal(static_cast<std::size_t>(i), n_sites));
		entries.emplace_back(i, (i + 1) % n, -0.5);
		entries.emplace_back((i + 1) % n, i, -0.5);
	}
	Eigen::SparseMatrix<double> h(n, n);
	h.setFromTriplets(entries.begin(), entries.end());

	// H is positive definite, so zero is a valid shift below the spectrum.
	Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(h);
	if (solver.info() != Eigen::Success) {
		throw std::runtime_error("Harper factorization failed");
	}
	// start from a Gaussian bump at the origin
	Eigen::VectorXd x(n);
	const double width = std::sqrt(static_cast<double>(n_sites) / (2.0 * std::numbers::pi));
	for (Eigen::Index i = 0; i < n; ++i) {
		const double d = static_cast<double>(std::min(i, n - i));
		x(i) = std::exp(-0.5 * d * d / (width * width));
	}
	x.normalize();
	for (int iter = 0; iter < 500; ++iter) {
		Eigen::VectorXd y = solver.solve(x);
		y.normalize();
		if (y.dot(x) < 0.0) {
			y = -y;
		}
		const double change = (y - x).norm();
		x = std::move(y);
		if (change < 1e-12) {
			break;
		}
	}
	return x;
}

}  // namespace

FiducialState harper_fiducial(std::size_t n_sites)
{
	if (n_sites < 2) {
		throw std::invalid_argument("Harper fiducial needs N >= 2");
	}
	Eigen::VectorXd ground;
	if (n_sites <= kHarperDenseLimit) {
		Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(harper_dense(n_sites));
		ground = es.eigenvectors().col(0);
	} else {
		ground = harper_ground_iterative(n_sites);
	}
	Eigen::Index peak = 0;
	ground.cwiseAbs().maxCoeff(&peak);
	if (ground(peak) < 0.0) {
		ground = -ground;
	}

	FiducialState f;
	f.amplitudes.resize(n_sites);
	for (std::size_t n = 0; n < n_sites; ++n) {
		f.amplitudes[n] = ground(static_cast<Eigen::Index>(n));
	}
	f.energy = harper_expectation(f.amplitudes);
	return f;
}

double harper_expectation(const CVector& walker)
{
	const std::size_t n_sites = walker.size();
	Complex acc = 0.0;
	for (std::size_t n = 0; n < n_sites; ++n) {
		const Complex hpsi = harper_diagonal(n, n_sites) * walker[n]
		                     - 0.5 * (walker[(n + 1) % n_sites] + walker[(n + n_sites - 1) % n_sites]);
		acc += std::conj(walker[n]) * hpsi;
	}
	return acc.real();
}

CVector coherent_state(const FiducialState& fiducial, PhaseSpacePoint point)
{
	const std::size_t n_sites = fiducial.n_sites();
	const WalkSpec clock(n_sites, 0.0);
	CVector out = fiducial.amplitudes;
	std::rotate(out.rbegin(), out.rbegin() + static_cast<long>(point.q % n_sites), out.rend());
	for (std::size_t n = 0; n < n_sites; ++n) {
		out[n] *= clock.omega_pow(static_cast<long long>(point.p % n_sites) * static_cast<long long>(n));
	}
	return out;
}

HusimiGrid::HusimiGrid(std::size_t n_sites, long time) : n_(n_sites), time_(time), w_(n_sites * n_sites, 0.0)
{
}

double HusimiGrid::sum() const
{
	double s = 0.0;
	for (double x : w_) {
		s += x;
	}
	return s;
}

double HusimiGrid::max() const
{
	return *std::max_element(w_.begin(), w_.end());
}

double HusimiGrid::min() const
{
	return *std::min_element(w_.begin(), w_.end());
}

PhaseSpacePoint HusimiGrid::argmax() const
{
	const auto i = static_cast<std::size_t>(std::max_element(w_.begin(), w_.end()) - w_.begin());
	return {i / n_, i % n_};
}

Eigen::MatrixXcd walker_reduced_density(const WalkerCoinState& state)
{
	const auto n = static_cast<Eigen::Index>(state.n_sites());
	Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, n);
	for (int c = 0; c < 2; ++c) {
		const Eigen::Map<const Eigen::VectorXcd> v(state.coin_data(c), n);
		rho += v * v.adjoint();
	}
	return rho;
}

namespace {

/// Adds weight * |<(q,p)|psi>|^2 to every grid point.
void accumulate_pure(HusimiGrid& grid, const Complex* psi, double weight, const FiducialState& fiducial)
{
	const std::size_t n_sites = fiducial.n_sites();
	const WalkSpec clock(n_sites, 0.0);
	const auto& f = fiducial.amplitudes;
	CVector g(n_sites);
	for (std::size_t q = 0; q < n_sites; ++q) {
		for (std::size_t n = 0; n < n_sites; ++n) {
			g[n] = std::conj(f[(n + n_sites - q) % n_sites]) * psi[n];
		}
		for (std::size_t p = 0; p < n_sites; ++p) {
			Complex acc = 0.0;
			for (std::size_t n = 0; n < n_sites; ++n) {
				acc += std::conj(clock.phases()[(p * n) % n_sites]) * g[n];
			}
			grid(q, p) += weight * std::norm(acc);
		}
	}
}

}  // namespace

HusimiGrid husimi(const CVector& walker, const FiducialState& fiducial)
{
	if (walker.size() != fiducial.n_sites()) {
		throw std::invalid_argument("walker and fiducial sizes differ");
	}
	HusimiGrid grid(walker.size());
	accumulate_pure(grid, walker.data(), 1.0, fiducial);
	return grid;
}

HusimiGrid husimi(const WalkerCoinState& state, const FiducialState& fiducial)
{
	if (state.n_sites() != fiducial.n_sites()) {
		throw std::invalid_argument("state and fiducial sizes differ");
	}
	HusimiGrid grid(state.n_sites());
	accumulate_pure(grid, state.coin_data(0), 1.0, fiducial);
	accumulate_pure(grid, state.coin_data(1), 1.0, fiducial);
	return grid;
}

HusimiGrid husimi(const Eigen::MatrixXcd& walker_density, const FiducialState& fiducial)
{
	const auto n = static_cast<Eigen::Index>(fiducial.n_sites());
	if (walker_density.rows() != n || walker_density.cols() != n) {
		throw std::invalid_argument("density and fiducial sizes differ");
	}
	Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(walker_density);
	HusimiGrid grid(fiducial.n_sites());
	for (Eigen::Index i = 0; i < n; ++i) {
		const double weight = es.eigenvalues()(i);
		if (weight == 0.0) {
			continue;
		}
		const Eigen::VectorXcd v = es.eigenvectors().col(i);
		accumulate_pure(grid, v.data(), weight, fiducial);
	}
	return grid;
}

double cat_symmetry_metric(const HusimiGrid& grid)
{
	const std::size_t n_sites = grid.n_sites();
	double worst = 0.0;
	for (std::size_t q = 0; q < n_sites; ++q) {
		for (std::size_t p = q + 1; p < n_sites; ++p) {
			worst = std::max(worst, std::abs(grid(q, p) - grid(p, q)));
		}
	}
	return worst / grid.max();
}

double line_band_fraction(const HusimiGrid& grid, long t, std::size_t half_width)
{
	const auto n = static_cast<long>(grid.n_sites());
	double inside = 0.0;
	for (long q = 0; q < n; ++q) {
		for (long p = 0; p < n; ++p) {
			long d = ((q + p - t) % n + n) % n;
			d = std::min(d, n - d);
			if (d <= static_cast<long>(half_width)) {
				inside += grid(static_cast<std::size_t>(q), static_cast<std::size_t>(p));
			}
		}
	}
	return inside / grid.sum();
}

WalkerCoinState evolve_coherent(const WalkSpec& spec, const CoinState& coin0, PhaseSpacePoint point0, long t,
                                const FiducialState& fiducial)
{
	if (fiducial.n_sites() != spec.n_sites()) {
		throw std::invalid_argument("fiducial and walk sizes differ");
	}
	return evolve(WalkerCoinState::product(coin0, coherent_state(fiducial, point0)), spec, t);
}

}  // namespace psw
