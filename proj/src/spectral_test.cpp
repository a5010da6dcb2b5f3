#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "psw/coin_density.hpp"
#include "psw/spectral.hpp"
#include "psw/walk.hpp"

using namespace psw;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<double> kThetas{0.2, kPi / 4, 1.3, WalkSpec::kMaxTheta};

oracle::Vector dense_mode(const EigenMode& m)
{
	return oracle::to_eigen(m.assemble());
}

}  // namespace

TEST_CASE("q-Pochhammer symbol")
{
	CHECK(q_pochhammer({3.0, 1.0}, {0.2, 0.7}, 0) == Complex(1.0));
	const Complex w = std::polar(1.0, 2.0 * kPi / 3.0);
	CHECK(std::abs(q_pochhammer(2.0, w, 3) - Complex(-7.0)) < 1e-13);
	CHECK(std::abs(q_pochhammer(0.5, 0.5, 2) - 0.375) < 1e-15);
	// (x; omega)_N = 1 - x^N for several N
	for (std::size_t n : {4u, 7u, 12u}) {
		const Complex x(0.3, -0.8);
		CHECK(std::abs(q_pochhammer(x, std::polar(1.0, 2.0 * kPi / n), n) - (1.0 - std::pow(x, n))) < 1e-12);
	}
}

TEST_CASE("odd-N eigenvalues are 2N-th roots of unity for every theta")
{
	for (std::size_t n : {3u, 5u, 9u}) {
		std::vector<Complex> first;
		for (double theta : {0.0, 0.1, kPi / 4, 1.2, WalkSpec::kMaxTheta}) {
			const auto ev = eigenvalues(WalkSpec(n, theta));
			REQUIRE(ev.size() == 2 * n);
			for (std::size_t k = 0; k < 2 * n; ++k) {
				CHECK(ev[k] == std::polar(1.0, kPi * static_cast<double>(k) / static_cast<double>(n)));
			}
			if (first.empty()) {
				first = ev;
			}
			CHECK(ev == first);
			CHECK(oracle::multiset_distance(ev, oracle::dense_eigenvalues(oracle::walk_matrix(n, theta))) < 1e-10);
		}
	}
	CHECK_THROWS_AS(eigenvalues(WalkSpec(5, 0.3, WalkKind::CSW)), std::invalid_argument);
}

TEST_CASE("even-N split pairs")
{
	const auto zero = eigenvalues(WalkSpec(2, 0.0));
	CHECK(oracle::multiset_distance(zero, {1.0, 1.0, -1.0, -1.0}) < 1e-15);

	const WalkSpec spec(4, kPi / 4);
	CHECK(split_alpha(spec) == doctest::Approx(0.329529).epsilon(1e-6));
	CHECK(split_alpha(spec) == doctest::Approx(std::acos(0.25) / 4).epsilon(1e-14));
	CHECK(oracle::multiset_distance(eigenvalues(spec), oracle::dense_eigenvalues(oracle::walk_matrix(4, kPi / 4))) <
	      1e-10);

	for (std::size_t n : {2u, 4u, 6u, 8u, 16u}) {
		for (double theta : {0.0, 0.2, kPi / 4, 1.3, WalkSpec::kMaxTheta}) {
			const WalkSpec s(n, theta);
			const auto sp = split_pair_spectrum(s);
			CHECK(sp.alpha >= 0.0);
			CHECK(sp.alpha <= kPi / (2.0 * n) + 1e-15);
			for (std::size_t l = 0; l < n; ++l) {
				CHECK(std::abs(sp.pairs[l].first - std::polar(1.0, sp.alpha) * s.omega_pow(l)) < 1e-12);
				CHECK(std::abs(sp.pairs[l].second - std::polar(1.0, -sp.alpha) * s.omega_pow(l)) < 1e-12);
			}
			CHECK(oracle::multiset_distance(eigenvalues(s), oracle::dense_eigenvalues(oracle::walk_matrix(n, theta))) <
			      1e-10);
		}
	}
	CHECK_THROWS_AS(split_pair_spectrum(WalkSpec(5, 0.2)), std::invalid_argument);
}

TEST_CASE("generic eigenmode matches the dense eigenvector")
{
	const WalkSpec spec(3, kPi / 4);
	const auto mode = eigenmode(spec, 0);
	CHECK(mode.a[0] == Complex(1.0));
	Eigen::ComplexEigenSolver<oracle::Matrix> es(oracle::walk_matrix(3, kPi / 4));
	Eigen::Index idx = 0;
	(es.eigenvalues().array() - Complex(1.0)).abs().minCoeff(&idx);
	CHECK(oracle::scale_free_distance(es.eigenvectors().col(idx), dense_mode(mode)) < 1e-10);

	CHECK_THROWS_AS(eigenmode(WalkSpec(5, 0.0), 1), DegenerateCoin);
	CHECK_THROWS_AS(eigenmode(WalkSpec(5, 5e-10), 1), DegenerateCoin);
	CHECK_THROWS_AS(eigenmode(spec, 6), std::out_of_range);
}

TEST_CASE("eigenmode invariants, both parities")
{
	for (std::size_t n : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 21u, 101u}) {
		for (double theta : kThetas) {
			const WalkSpec spec(n, theta);
			for (std::size_t k = 0; k < 2 * n; ++k) {
				const auto m = eigenmode(spec, k);
				CHECK(std::abs(std::abs(m.lambda) - 1.0) < 1e-13);
				CHECK(m.lambda == eigenvalue(spec, k));
				CHECK(residual(spec, m) < 1e-10);
				CHECK(std::abs(m.direct_norm() - m.norm_const) < 1e-10 * m.norm_const);
				const double c = spec.cos_theta();
				const double s = spec.sin_theta();
				for (std::size_t j = 0; j < n; ++j) {
					if (spec.odd()) {
						CHECK(std::abs(std::abs(m.a[j]) - 1.0) < 1e-12);
					}
					// b (cos + lambda omega^-n) = a sin
					CHECK(std::abs(m.b[j] * (c + m.lambda * spec.omega_pow(-static_cast<long long>(j))) - m.a[j] * s) <
					      1e-12);
					// U phi = lambda phi, row by row, including the wrap at j = 0
					const std::size_t prev = (j + n - 1) % n;
					CHECK(std::abs(c * m.a[prev] + s * m.b[prev] - m.lambda * m.a[j]) < 1e-12);
					CHECK(std::abs(spec.omega_pow(static_cast<long long>(j)) * (s * m.a[j] - c * m.b[j]) -
					               m.lambda * m.b[j]) < 1e-12);
				}
			}
		}
	}
}

TEST_CASE("Case theta = pi/2: all components are pure phases")
{
	for (std::size_t n : {3u, 5u, 11u}) {
		const WalkSpec spec(n, WalkSpec::kMaxTheta);
		for (std::size_t k = 0; k < 2 * n; ++k) {
			const auto m = eigenmode(spec, k);
			for (std::size_t j = 0; j < n; ++j) {
				CHECK(std::abs(std::abs(m.a[j]) - 1.0) < 1e-12);
				CHECK(std::abs(std::abs(m.b[j]) - 1.0) < 1e-12);
			}
		}
	}
}

TEST_CASE("trigonometric phase form")
{
	const WalkSpec spec(7, kPi / 4);
	for (std::size_t k = 0; k < 14; ++k) {
		const auto zeta = eigenmode_trig_phases(spec, k);
		CHECK(zeta[0] == 0.0);
	}
	const auto zeta = eigenmode_trig_phases(spec, 3);
	const auto m = eigenmode(spec, 3);
	for (std::size_t j = 0; j < 7; ++j) {
		CHECK(std::abs(std::polar(1.0, -zeta[j]) - m.a[j]) < 1e-10);
	}

	for (std::size_t n : {3u, 5u, 9u, 21u}) {
		const WalkSpec half(n, WalkSpec::kMaxTheta);
		for (std::size_t k = 0; k < 2 * n; ++k) {
			const auto z = eigenmode_trig_phases(half, k);
			for (std::size_t j = 0; j < n; ++j) {
				const double jj = static_cast<double>(j);
				const Complex expect =
				    std::polar(1.0, kPi * (jj * (jj - 1.0) - 2.0 * jj * static_cast<double>(k)) / static_cast<double>(n));
				CHECK(std::abs(std::polar(1.0, -z[j]) - expect) < 1e-10);
			}
		}
		for (double theta : {0.2, 1.3}) {
			const WalkSpec s(n, theta);
			for (std::size_t k = 0; k < 2 * n; ++k) {
				const auto z = eigenmode_trig_phases(s, k);
				const auto mode = eigenmode(s, k);
				for (std::size_t j = 0; j < n; ++j) {
					CHECK(std::abs(std::polar(1.0, -z[j]) - mode.a[j]) < 1e-10);
				}
			}
		}
	}
	CHECK_THROWS_AS(eigenmode_trig_phases(WalkSpec(4, 0.3), 1), std::invalid_argument);
	CHECK_THROWS_AS(eigenmode_trig_phases(WalkSpec(5, 0.0), 1), DegenerateCoin);
}

TEST_CASE("theta = 0 modes")
{
	const WalkSpec spec(5, 0.0);
	for (std::size_t k = 0; k < 10; ++k) {
		const auto m = eigenmode_theta_zero(spec, k);
		CHECK(residual(spec, m) < 1e-12);
		const auto rho = partial_trace_walker(m.assemble());
		CHECK(von_neumann_entropy(rho.eigenvalues(), LogBase::Natural) < 1e-12);
		if (k % 2 == 0) {
			for (const auto& b : m.b) {
				CHECK(b == Complex(0.0));
			}
			for (const auto& a : m.a) {
				CHECK(std::abs(std::abs(a) - 1.0) < 1e-14);
			}
		} else {
			for (const auto& a : m.a) {
				CHECK(a == Complex(0.0));
			}
		}
	}
	// k = 1 localizes at (1 - 5)/2 mod 5 = 3
	const auto m1 = eigenmode_theta_zero(spec, 1);
	for (std::size_t j = 0; j < 5; ++j) {
		CHECK(std::abs(m1.b[j]) == doctest::Approx(j == 3 ? 1.0 : 0.0));
	}

	for (std::size_t n : {2u, 3u, 4u, 6u, 9u}) {
		const WalkSpec s(n, 0.0);
		std::vector<oracle::Vector> cols;
		for (std::size_t k = 0; k < 2 * n; ++k) {
			const auto m = closed_form_mode(s, k);
			CHECK(residual(s, m) < 1e-12);
			CHECK(std::abs(m.lambda - eigenvalue(s, k)) < 1e-14);
			cols.push_back(dense_mode(m));
		}
		for (std::size_t i = 0; i < cols.size(); ++i) {
			for (std::size_t j = i + 1; j < cols.size(); ++j) {
				CHECK(std::abs(cols[i].dot(cols[j])) < 1e-12);
			}
		}
	}
	// routing threshold
	CHECK(closed_form_mode(WalkSpec(5, 1e-10), 2).b[0] == Complex(0.0));
}

TEST_CASE("normalization constants")
{
	CHECK(normalization(WalkSpec(3, kPi / 4), 0) == doctest::Approx(6.0 / (1.0 + std::pow(2.0, -1.5))).epsilon(1e-13));
	CHECK(normalization(WalkSpec(3, kPi / 4), 0) == doctest::Approx(4.4328).epsilon(1e-4));
	for (std::size_t n : {2u, 4u, 8u, 10u}) {
		for (double theta : {0.3, 1.0}) {
			for (std::size_t k = 0; k < 2 * n; ++k) {
				CHECK(normalization(WalkSpec(n, theta), k) == 2.0 * n);
			}
		}
	}
	for (std::size_t n : {3u, 5u, 7u, 9u, 21u, 101u}) {
		CHECK(normalization(WalkSpec(n, WalkSpec::kMaxTheta), 1) == 2.0 * n);
		for (double theta : kThetas) {
			const WalkSpec spec(n, theta);
			for (std::size_t k = 0; k < 2 * n; ++k) {
				const auto m = eigenmode(spec, k);
				CHECK(std::abs(m.direct_norm() - normalization(spec, k)) < 1e-10);
			}
		}
	}
	CHECK(std::isinf(normalization(WalkSpec(5, 0.0), 1)));
	CHECK(normalization(WalkSpec(5, 0.0), 2) == 5.0);
}

TEST_CASE("coin reduced density of eigenstates")
{
	const auto mu3 = coin_schmidt_weights(WalkSpec(3, kPi / 4));
	CHECK(mu3[0] == doctest::Approx(0.75).epsilon(1e-13));
	CHECK(mu3[1] == doctest::Approx(0.25).epsilon(1e-13));
	const auto half = coin_schmidt_weights(WalkSpec(7, WalkSpec::kMaxTheta));
	CHECK(half[0] == doctest::Approx(0.5));
	CHECK(half[1] == doctest::Approx(0.5));

	for (std::size_t n : {3u, 5u, 7u, 9u, 21u}) {
		for (double theta : {0.0, 0.2, kPi / 4, 1.3, WalkSpec::kMaxTheta}) {
			const WalkSpec spec(n, theta);
			const double cn1 = std::pow(spec.cos_theta(), static_cast<double>(n - 1));
			for (std::size_t k = 0; k < 2 * n; ++k) {
				const auto closed = coin_reduced_density(spec, k);
				const auto traced = partial_trace_walker(closed_form_mode(spec, k).assemble());
				CHECK(closed.hermiticity_error() < 1e-12);
				CHECK(std::abs(closed.trace() - 1.0) < 1e-12);
				for (int i = 0; i < 2; ++i) {
					for (int j = 0; j < 2; ++j) {
						CHECK(std::abs(closed(i, j) - traced(i, j)) < 1e-10);
					}
				}
				const auto mu = traced.eigenvalues();
				CHECK(std::abs(mu[0] - (1.0 + cn1) / 2.0) < 1e-10);
				CHECK(std::abs(mu[1] - (1.0 - cn1) / 2.0) < 1e-10);
			}
		}
	}
	CHECK_THROWS_AS(coin_reduced_density(WalkSpec(4, 0.3), 0), std::invalid_argument);
}

TEST_CASE("eigenstate entropies")
{
	const auto zero = eigenstate_entropies(WalkSpec(5, 0.0), 3);
	CHECK(zero.von_neumann == doctest::Approx(0.0));
	CHECK(zero.linear == doctest::Approx(0.0));

	for (std::size_t n : {21u, 31u, 51u}) {
		const WalkSpec spec(n, kPi / 4);
		const auto e = eigenstate_entropies(spec, 4);
		const double c2 = std::pow(std::cos(kPi / 4), 2.0 * n - 2.0);
		CHECK(std::abs(e.von_neumann - (std::log(2.0) - c2 / 2.0)) < 1e-6);
		CHECK(std::abs(e.linear - (1.0 - std::pow(2.0, 1.0 - static_cast<double>(n))) / 2.0) < 1e-12);
		const auto two = eigenstate_entropies(spec, 4, LogBase::Two);
		CHECK(two.von_neumann == doctest::Approx(e.von_neumann / std::log(2.0)).epsilon(1e-13));
	}
	for (std::size_t n : {3u, 7u}) {
		for (double theta : kThetas) {
			const WalkSpec spec(n, theta);
			const double linear = (1.0 - std::pow(spec.cos_theta(), 2.0 * n - 2.0)) / 2.0;
			for (std::size_t k = 0; k < 2 * n; ++k) {
				const auto e = eigenstate_entropies(spec, k);
				CHECK(std::abs(e.linear - linear) < 1e-10);
				CHECK(std::abs(e.linear - linear_entropy(partial_trace_walker(eigenmode(spec, k).assemble()))) < 1e-10);
			}
		}
	}
}

TEST_CASE("off-diagonal sum")
{
	const WalkSpec spec(3, kPi / 4);
	const auto s = off_diagonal_sum(spec, 0);
	Complex direct = 0.0;
	for (long long j = 0; j < 3; ++j) {
		direct += 1.0 / (std::cos(kPi / 4) + std::polar(1.0, -2.0 * kPi * j / 3.0));
	}
	CHECK(std::abs(s.direct - direct) < 1e-14);
	CHECK(s.closed_form == doctest::Approx(1.5 / (1.0 + std::pow(2.0, -1.5))).epsilon(1e-13));
	CHECK(s.closed_form == doctest::Approx(1.1082).epsilon(1e-4));
	CHECK(s.deviation() < 1e-12);

	CHECK(std::abs(off_diagonal_sum(WalkSpec(7, WalkSpec::kMaxTheta), 3).direct) < 1e-12);
	CHECK(off_diagonal_sum(WalkSpec(9, 0.3), 5).deviation() < 1e-12);
	// at theta = 0 the even modes are still finite; odd modes hit a pole
	CHECK(off_diagonal_sum(WalkSpec(9, 0.0), 4).deviation() < 1e-12);
	for (std::size_t n : {3u, 5u, 9u, 21u}) {
		for (double theta : {0.3, kPi / 4, 1.3}) {
			for (std::size_t k = 0; k < 2 * n; ++k) {
				CHECK(off_diagonal_sum(WalkSpec(n, theta), k).deviation() < 1e-12);
			}
		}
	}
}

TEST_CASE("momentum-basis components")
{
	for (std::size_t n : {5u, 7u, 9u}) {
		for (double theta : {0.3, kPi / 4}) {
			const WalkSpec s(n, theta);
			for (std::size_t k = 0; k < 2 * n; ++k) {
				const auto mc = momentum_basis_components(s, k);
				for (const auto& x : mc.b_tilde) {
					CHECK(std::abs(std::abs(x) - 1.0) < 1e-12);
				}
				// transport the position-basis eigenvector with the dense inverse DFT
				const auto m = eigenmode(s, k);
				const oracle::Matrix gi = oracle::fourier(n).adjoint();
				oracle::Vector transported(2 * n);
				transported << gi * oracle::to_eigen(m.a), gi * oracle::to_eigen(m.b);
				oracle::Vector formula(2 * n);
				formula << oracle::to_eigen(mc.a_tilde), oracle::to_eigen(mc.b_tilde);
				CHECK(oracle::scale_free_distance(transported, formula) < 1e-10);

				// duality with the mode labelled (N - k) mod 2N, one constant per coin block
				const std::size_t d = dual_index(s, k);
				CHECK(d == (n + 2 * n - k) % (2 * n));
				const auto md = eigenmode(s, d);
				oracle::Vector conj_a(n);
				oracle::Vector conj_b(n);
				for (std::size_t j = 0; j < n; ++j) {
					conj_a(static_cast<Eigen::Index>(j)) = std::conj(md.a[j]);
					conj_b(static_cast<Eigen::Index>(j)) = std::conj(md.b[j]);
					CHECK(std::abs(std::conj(md.a[j]) - 1.0 / md.a[j]) < 1e-12);
				}
				CHECK(oracle::scale_free_distance(oracle::to_eigen(mc.b_tilde), conj_a) < 1e-10);
				CHECK(oracle::scale_free_distance(oracle::to_eigen(mc.a_tilde), conj_b) < 1e-10);
			}
		}
	}
	CHECK_THROWS_AS(momentum_basis_components(WalkSpec(5, 0.0), 1), DegenerateCoin);
	CHECK_THROWS_AS(momentum_basis_components(WalkSpec(5, WalkSpec::kMaxTheta), 1), DegenerateCoin);
}

TEST_CASE("chiral symmetry")
{
	for (std::size_t n = 2; n <= 10; ++n) {
		for (double theta : {0.0, 0.3, kPi / 4, WalkSpec::kMaxTheta}) {
			const oracle::Matrix r = oracle::coin_times(oracle::reflection(n), theta);
			const oracle::Matrix u = oracle::walk_matrix(n, theta);
			CHECK((r * u * r - u.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
		}
		const oracle::Matrix rn = oracle::reflection(n);
		CHECK((rn * rn - oracle::Matrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-14);

		CVector v = oracle::random_state(n, 9).coin_part(0);
		const CVector orig = v;
		apply_reflection(v);
		apply_reflection(v);
		for (std::size_t j = 0; j < n; ++j) {
			CHECK(v[j] == orig[j]);
		}
	}
	for (std::size_t n : {3u, 4u, 5u, 8u, 21u}) {
		for (double theta : {0.0, 0.3, kPi / 4, WalkSpec::kMaxTheta}) {
			const WalkSpec spec(n, theta);
			for (std::size_t k = 0; k < 2 * n; ++k) {
				const auto mode = closed_form_mode(spec, k);
				const auto conj = chiral_conjugate(spec, mode);
				CHECK(std::abs(conj.lambda - std::conj(mode.lambda)) < 1e-12);
				CHECK(residual(spec, conj) < 1e-10);
				CHECK(std::abs(eigenvalue(spec, conjugate_index(spec, k)) - std::conj(eigenvalue(spec, k))) < 1e-12);
				if (std::abs(mode.lambda.imag()) < 1e-15) {
					CHECK(std::abs(conj.lambda - mode.lambda) < 1e-15);
				}
			}
		}
	}
}

TEST_CASE("spectral completeness and reconstruction")
{
	for (std::size_t n : {2u, 3u, 4u, 5u, 9u, 16u, 25u, 50u, 100u}) {
		for (double theta : {0.0, 0.3, kPi / 4, WalkSpec::kMaxTheta}) {
			const WalkSpec spec(n, theta);
			const auto dim = static_cast<Eigen::Index>(2 * n);
			oracle::Matrix v(dim, dim);
			oracle::Vector lam(dim);
			const auto modes = all_modes(spec);
			for (std::size_t k = 0; k < 2 * n; ++k) {
				v.col(static_cast<Eigen::Index>(k)) = dense_mode(modes[k]);
				lam(static_cast<Eigen::Index>(k)) = modes[k].lambda;
			}
			const oracle::Matrix gram = v.adjoint() * v;
			CHECK((gram - oracle::Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-9);
			if (n <= 50) {
				const oracle::Matrix rebuilt = v * lam.asDiagonal() * v.adjoint();
				CHECK((rebuilt - oracle::walk_matrix(n, theta)).cwiseAbs().maxCoeff() < 1e-9);
			}
		}
	}
}
