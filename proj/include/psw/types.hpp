#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace psw {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

enum class WalkKind { PSW, CSW };
enum class Basis { Position, Momentum };
enum class Direction { Forward, Inverse };
enum class LogBase { Natural, Two };

std::string to_string(WalkKind kind);

/// Raised when a closed-form construction needs a nonzero coin angle
/// (or one strictly inside (0, pi/2)) and did not get it.
class DegenerateCoin : public std::domain_error {
public:
	using std::domain_error::domain_error;
};

/// Power-law fit window selected fewer than two samples.
class EmptyWindow : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

class NonPositiveValue : public std::domain_error {
public:
	using std::domain_error::domain_error;
};

/// Two participation-ratio curves never separated within the simulated horizon.
class NoDivergence : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// A point of the discrete N x N toral phase space, 0 <= q, p < N.
struct PhaseSpacePoint {
	std::size_t q = 0;
	std::size_t p = 0;

	auto operator<=>(const PhaseSpacePoint&) const = default;
};

/// Lattice size, coin angle and walk kind. The root of unity and its
/// phase table are derived once on construction.
class WalkSpec {
public:
	static constexpr double kMaxTheta = 1.57079632679489661923;

	WalkSpec(std::size_t n_sites, double theta, WalkKind kind = WalkKind::PSW);

	std::size_t n_sites() const noexcept { return n_; }
	double theta() const noexcept { return theta_; }
	WalkKind kind() const noexcept { return kind_; }
	bool odd() const noexcept { return n_ % 2 == 1; }

	/// cos(theta) and sin(theta), snapped to exact 0/1 at the endpoints.
	double cos_theta() const noexcept { return cos_; }
	double sin_theta() const noexcept { return sin_; }

	Complex omega() const noexcept { return phases_[1 % n_]; }

	/// omega^m for any integer m, looked up after reducing m mod N.
	Complex omega_pow(long long m) const noexcept;

	const CVector& phases() const noexcept { return phases_; }

	WalkSpec with_theta(double theta) const { return WalkSpec(n_, theta, kind_); }
	WalkSpec with_kind(WalkKind kind) const { return WalkSpec(n_, theta_, kind); }
	WalkSpec with_sites(std::size_t n) const { return WalkSpec(n, theta_, kind_); }

private:
	std::size_t n_;
	double theta_;
	WalkKind kind_;
	double cos_;
	double sin_;
	CVector phases_;
};

/// Normalized two-component coin state.
class CoinState {
public:
	CoinState(Complex c0, Complex c1);

	static CoinState zero() { return {1.0, 0.0}; }
	static CoinState one() { return {0.0, 1.0}; }
	/// (|0> + i|1>)/sqrt(2)
	static CoinState symmetric();
	/// |0>
	static CoinState asymmetric() { return zero(); }

	Complex c0() const noexcept { return c0_; }
	Complex c1() const noexcept { return c1_; }
	Complex operator[](int c) const noexcept { return c == 0 ? c0_ : c1_; }

private:
	Complex c0_;
	Complex c1_;
};

/// 2N amplitudes over (coin, site). Coin is the slow index: the flat
/// layout is [coin 0 sites 0..N-1, coin 1 sites 0..N-1].
class WalkerCoinState {
public:
	explicit WalkerCoinState(std::size_t n_sites, Basis basis = Basis::Position);
	WalkerCoinState(CVector amplitudes, Basis basis = Basis::Position);

	static WalkerCoinState site(std::size_t n_sites, const CoinState& coin, std::size_t site);
	static WalkerCoinState product(const CoinState& coin, const CVector& walker);

	std::size_t n_sites() const noexcept { return amps_.size() / 2; }
	std::size_t size() const noexcept { return amps_.size(); }
	Basis basis() const noexcept { return basis_; }
	void set_basis(Basis b) noexcept { basis_ = b; }

	Complex& operator()(int coin, std::size_t n) { return amps_[coin * n_sites() + n]; }
	Complex operator()(int coin, std::size_t n) const { return amps_[coin * n_sites() + n]; }

	Complex* coin_data(int coin) { return amps_.data() + coin * n_sites(); }
	const Complex* coin_data(int coin) const { return amps_.data() + coin * n_sites(); }
	CVector coin_part(int coin) const;

	CVector& amplitudes() noexcept { return amps_; }
	const CVector& amplitudes() const noexcept { return amps_; }

	double norm_squared() const;
	void normalize();

	/// <this|other>
	Complex inner(const WalkerCoinState& other) const;

private:
	CVector amps_;
	Basis basis_;
};

}  // namespace psw
