#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psw/types.hpp"

namespace psw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitUsage = 64;

class UsageError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// Radians, or the exact tokens 0, pi, pi/<m>.
double parse_theta(std::string_view token);

struct InitialSelector {
	enum class Kind { Site, Coherent } kind = Kind::Site;
	std::size_t site = 0;
	PhaseSpacePoint point;
};

/// site:<n> | coherent:<q>,<p>
InitialSelector parse_initial(std::string_view token);
/// zero | one | symmetric | asymmetric | amp:<re0>,<im0>,<re1>,<im1>
CoinState parse_coin(std::string_view token);
WalkKind parse_kind(std::string_view token);

struct ThetaGrid {
	double start = 0.0;
	double stop = 0.0;
	std::size_t count = 1;

	std::vector<double> values() const;
};

/// start:stop:count, endpoints inclusive. Values above pi/2 by less than
/// 1e-4 are taken as pi/2, so a rounded 1.5708 is accepted.
ThetaGrid parse_theta_grid(std::string_view token);

std::vector<long> parse_long_list(std::string_view token);

/// %.12g
std::string format_number(double x);

/// Full command line, argv[0] included. Returns the process exit code;
/// results that are not written to files go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psw::cli
