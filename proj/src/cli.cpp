#include "psw/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "psw/observables.hpp"
#include "psw/phasespace.hpp"
#include "psw/spectral.hpp"
#include "psw/walk.hpp"

namespace psw::cli {

namespace {

constexpr double kResidualLimit = 1e-8;
constexpr double kHusimiSumTol = 1e-8;

std::string trim(std::string_view s)
{
	const auto b = s.find_first_not_of(" \t");
	if (b == std::string_view::npos) {
		return {};
	}
	const auto e = s.find_last_not_of(" \t");
	return std::string(s.substr(b, e - b + 1));
}

double parse_double(std::string_view token, const char* what)
{
	const std::string s = trim(token);
	if (s.empty()) {
		throw UsageError(std::string("empty value for ") + what);
	}
	std::size_t used = 0;
	double v = 0.0;
	try {
		v = std::stod(s, &used);
	} catch (const std::exception&) {
		throw UsageError(std::string("cannot parse ") + what + ": '" + s + "'");
	}
	if (used != s.size() || !std::isfinite(v)) {
		throw UsageError(std::string("cannot parse ") + what + ": '" + s + "'");
	}
	return v;
}

long parse_long(std::string_view token, const char* what)
{
	const std::string s = trim(token);
	long v = 0;
	const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
	if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
		throw UsageError(std::string("cannot parse ") + what + ": '" + s + "'");
	}
	return v;
}

std::vector<std::string> split(std::string_view s, char sep)
{
	std::vector<std::string> parts;
	std::size_t start = 0;
	while (true) {
		const auto pos = s.find(sep, start);
		parts.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
		if (pos == std::string_view::npos) {
			break;
		}
		start = pos + 1;
	}
	return parts;
}

std::ofstream open_output(const std::string& path)
{
	std::ofstream f(path, std::ios::binary);
	if (!f) {
		throw UsageError("cannot open output file '" + path + "'");
	}
	return f;
}

/// Writes to `path`, or to `fallback` when path is "-".
class Sink {
public:
	Sink(const std::string& path, std::ostream& fallback)
	{
		if (path != "-") {
			file_ = open_output(path);
			stream_ = &file_;
		} else {
			stream_ = &fallback;
		}
	}

	std::ostream& operator*() { return *stream_; }

private:
	std::ofstream file_;
	std::ostream* stream_ = nullptr;
};

struct RunConfig {
	std::size_t n = 0;
	std::string theta = "pi/4";
	std::string kind = "psw";
	long t = 0;
	long t_max = 0;
	std::string init = "site:0";
	std::string coin = "zero";
	std::string out = "-";
	std::string dump_dist;
	std::string times;
	std::string theta_grid;
	std::string ns;
	std::string base = "two";
	double sat_tol = 1e-3;
	unsigned jobs = 0;
	bool pgm = false;
};

WalkSpec make_spec(const RunConfig& cfg)
{
	try {
		return WalkSpec(cfg.n, parse_theta(cfg.theta), parse_kind(cfg.kind));
	} catch (const UsageError&) {
		throw;
	} catch (const std::invalid_argument& e) {
		throw UsageError(e.what());
	}
}

WalkerCoinState make_initial(const RunConfig& cfg, const WalkSpec& spec)
{
	const auto sel = parse_initial(cfg.init);
	const CoinState coin = parse_coin(cfg.coin);
	if (sel.kind == InitialSelector::Kind::Site) {
		if (sel.site >= spec.n_sites()) {
			throw UsageError("initial site outside the lattice");
		}
		return WalkerCoinState::site(spec.n_sites(), coin, sel.site);
	}
	const auto fid = harper_fiducial(spec.n_sites());
	return WalkerCoinState::product(coin, coherent_state(fid, sel.point));
}

LogBase parse_base(const std::string& s)
{
	if (s == "two" || s == "2") {
		return LogBase::Two;
	}
	if (s == "natural" || s == "e") {
		return LogBase::Natural;
	}
	throw UsageError("entropy base must be 'two' or 'natural'");
}

std::string header_comment(const std::string& cmd, const RunConfig& cfg)
{
	std::ostringstream os;
	os << "# " << cmd << " kind=" << cfg.kind << " n=" << cfg.n << " theta=" << cfg.theta;
	return os.str();
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
	const WalkSpec spec = make_spec(cfg);
	if (spec.kind() != WalkKind::PSW) {
		throw UsageError("spectrum is available for --kind psw only");
	}
	nlohmann::ordered_json doc;
	doc["n"] = spec.n_sites();
	doc["theta"] = spec.theta();
	doc["kind"] = to_string(spec.kind());
	doc["parity"] = spec.odd() ? "odd" : "even";
	if (!spec.odd()) {
		doc["alpha"] = split_alpha(spec);
	}
	double worst = 0.0;
	std::size_t worst_k = 0;
	auto modes = nlohmann::ordered_json::array();
	for (std::size_t k = 0; k < 2 * spec.n_sites(); ++k) {
		const auto mode = closed_form_mode(spec, k);
		const double r = residual(spec, mode);
		if (r > worst) {
			worst = r;
			worst_k = k;
		}
		nlohmann::ordered_json m;
		m["k"] = k;
		m["lambda_re"] = mode.lambda.real();
		m["lambda_im"] = mode.lambda.imag();
		m["C"] = mode.norm_const;
		m["residual"] = r;
		modes.push_back(std::move(m));
	}
	doc["max_residual"] = worst;
	doc["modes"] = std::move(modes);

	Sink sink(cfg.out, out);
	*sink << doc.dump(2) << '\n';
	if (!(worst <= kResidualLimit)) {
		err << "spectrum: residual " << format_number(worst) << " at k=" << worst_k << " exceeds "
		    << format_number(kResidualLimit) << '\n';
		return kExitNumerical;
	}
	return kExitOk;
}

void write_distribution(std::ostream& os, const SiteDistribution& d)
{
	os << "n,p,p0,p1\n";
	for (std::size_t n = 0; n < d.p.size(); ++n) {
		os << n << ',' << format_number(d.p[n]) << ',' << format_number(d.p0[n]) << ',' << format_number(d.p1[n])
		   << '\n';
	}
}

std::string strip_csv(const std::string& path)
{
	if (path.size() > 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
		return path.substr(0, path.size() - 4);
	}
	return path;
}

int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
	const WalkSpec spec = make_spec(cfg);
	if (cfg.t < 0) {
		throw UsageError("--t must be nonnegative");
	}
	const LogBase base = parse_base(cfg.base);
	std::vector<long> dumps;
	if (!cfg.dump_dist.empty()) {
		dumps = parse_long_list(cfg.dump_dist);
		for (long d : dumps) {
			if (d < 0 || d > cfg.t) {
				throw UsageError("--dump-dist times must lie in [0, t]");
			}
		}
	}
	const WalkerCoinState initial = make_initial(cfg, spec);

	std::vector<std::pair<long, SiteDistribution>> dists;
	ObservableSeries series;
	for_each_step(initial, spec, cfg.t, [&](long t, const WalkerCoinState& s) {
		const auto d = site_distribution(s);
		series.push_back({t, std_dev(d), participation_ratio(d), coin_entropy(s, base)});
		if (std::find(dumps.begin(), dumps.end(), t) != dumps.end()) {
			dists.emplace_back(t, d);
		}
	});

	Sink sink(cfg.out, out);
	std::ostream& os = *sink;
	os << header_comment("evolve", cfg) << " init=" << cfg.init << " coin=" << cfg.coin << " t=" << cfg.t
	   << " base=" << cfg.base << '\n';
	os << "t,sigma,participation,coin_entropy\n";
	for (const auto& r : series) {
		os << r.t << ',' << format_number(r.sigma) << ',' << format_number(r.participation) << ','
		   << format_number(r.coin_entropy) << '\n';
	}
	for (const auto& [t, d] : dists) {
		if (cfg.out == "-") {
			os << "# distribution t=" << t << '\n';
			write_distribution(os, d);
		} else {
			auto f = open_output(strip_csv(cfg.out) + "_dist_t" + std::to_string(t) + ".csv");
			f << "# distribution t=" << t << '\n';
			write_distribution(f, d);
		}
	}
	return kExitOk;
}

void write_husimi_csv(std::ostream& os, const HusimiGrid& g)
{
	const std::size_t n = g.n_sites();
	os << "# husimi t=" << g.time() << " n=" << n << " sum=" << format_number(g.sum())
	   << " rows=p columns=q\n";
	for (std::size_t p = 0; p < n; ++p) {
		for (std::size_t q = 0; q < n; ++q) {
			if (q > 0) {
				os << ',';
			}
			os << format_number(g(q, p));
		}
		os << '\n';
	}
}

void write_husimi_pgm(std::ostream& os, const HusimiGrid& g)
{
	const std::size_t n = g.n_sites();
	const double scale = g.max();
	os << "P5\n# scale=" << format_number(scale) << " t=" << g.time() << "\n" << n << ' ' << n << "\n65535\n";
	std::string row(2 * n, '\0');
	for (std::size_t p = 0; p < n; ++p) {
		for (std::size_t q = 0; q < n; ++q) {
			const double x = scale > 0.0 ? std::clamp(g(q, p) / scale, 0.0, 1.0) : 0.0;
			const auto v = static_cast<unsigned>(std::lround(x * 65535.0));
			row[2 * q] = static_cast<char>((v >> 8) & 0xFF);
			row[2 * q + 1] = static_cast<char>(v & 0xFF);
		}
		os.write(row.data(), static_cast<std::streamsize>(row.size()));
	}
}

int cmd_husimi(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
	const WalkSpec spec = make_spec(cfg);
	const std::vector<long> times = parse_long_list(cfg.times.empty() ? "0" : cfg.times);
	for (long t : times) {
		if (t < 0) {
			throw UsageError("--times must be nonnegative");
		}
	}
	if (cfg.out == "-") {
		throw UsageError("husimi writes one file per time; --out must be a path prefix");
	}
	const auto fid = harper_fiducial(spec.n_sites());
	const auto sel = parse_initial(cfg.init);
	const CoinState coin = parse_coin(cfg.coin);
	if (sel.kind == InitialSelector::Kind::Site && sel.site >= spec.n_sites()) {
		throw UsageError("initial site outside the lattice");
	}
	const WalkerCoinState initial = sel.kind == InitialSelector::Kind::Site
	                                    ? WalkerCoinState::site(spec.n_sites(), coin, sel.site)
	                                    : WalkerCoinState::product(coin, coherent_state(fid, sel.point));

	const long t_last = *std::max_element(times.begin(), times.end());
	std::vector<HusimiGrid> grids;
	for_each_step(initial, spec, t_last, [&](long t, const WalkerCoinState& s) {
		if (std::find(times.begin(), times.end(), t) != times.end()) {
			grids.push_back(husimi(s, fid));
			grids.back().set_time(t);
		}
	});

	int status = kExitOk;
	out << "t,sum,max,cat_metric,file\n";
	for (const auto& g : grids) {
		const std::string stem = cfg.out + "_t" + std::to_string(g.time());
		{
			auto f = open_output(stem + ".csv");
			write_husimi_csv(f, g);
		}
		if (cfg.pgm) {
			auto f = open_output(stem + ".pgm");
			write_husimi_pgm(f, g);
		}
		const double sum = g.sum();
		out << g.time() << ',' << format_number(sum) << ',' << format_number(g.max()) << ','
		    << format_number(cat_symmetry_metric(g)) << ',' << stem << ".csv\n";
		if (!(std::abs(sum - static_cast<double>(spec.n_sites())) <= kHusimiSumTol)) {
			err << "husimi: grid sum " << format_number(sum) << " at t=" << g.time() << " differs from N\n";
			status = kExitNumerical;
		}
	}
	return status;
}

int cmd_pr_scan(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
	if (cfg.theta_grid.empty()) {
		throw UsageError("--theta-grid start:stop:count is required");
	}
	if (cfg.t_max < 0) {
		throw UsageError("--t-max must be nonnegative");
	}
	const auto grid = parse_theta_grid(cfg.theta_grid).values();
	const WalkKind kind = parse_kind(cfg.kind);
	const auto sel = parse_initial(cfg.init);
	if (sel.kind != InitialSelector::Kind::Site || sel.site != 0) {
		throw UsageError("pr-scan starts from site:0");
	}
	const CoinState coin = parse_coin(cfg.coin);
	std::vector<std::vector<double>> matrix;
	try {
		matrix = pr_theta_time_scan(cfg.n, grid, cfg.t_max, kind, coin, cfg.jobs);
	} catch (const std::invalid_argument& e) {
		throw UsageError(e.what());
	}

	Sink sink(cfg.out, out);
	std::ostream& os = *sink;
	os << "# pr-scan kind=" << cfg.kind << " n=" << cfg.n << " t_max=" << cfg.t_max << " theta_grid=" << cfg.theta_grid
	   << " coin=" << cfg.coin << '\n';
	os << "theta\\t";
	for (long t = 0; t <= cfg.t_max; ++t) {
		os << ',' << t;
	}
	os << '\n';
	for (std::size_t i = 0; i < grid.size(); ++i) {
		os << format_number(grid[i]);
		for (double v : matrix[i]) {
			os << ',' << format_number(v);
		}
		os << '\n';
	}
	return kExitOk;
}

int cmd_ehrenfest(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
	if (cfg.ns.empty()) {
		throw UsageError("--ns requires a list of odd lattice sizes");
	}
	const auto ns = parse_long_list(cfg.ns);
	for (long n : ns) {
		if (n < 3 || n % 2 == 0) {
			throw UsageError("--ns expects odd lattice sizes >= 3");
		}
	}
	if (!(cfg.sat_tol > 0.0)) {
		throw UsageError("--sat-tol must be positive");
	}
	const double theta = parse_theta(cfg.theta);
	const WalkKind kind = parse_kind(cfg.kind);
	const CoinState coin = parse_coin(cfg.coin);
	const auto sel = parse_initial(cfg.init);
	if (sel.kind != InitialSelector::Kind::Coherent) {
		throw UsageError("ehrenfest expects a coherent initial state");
	}
	std::vector<WalkSpec> specs;
	for (long n : ns) {
		try {
			specs.emplace_back(static_cast<std::size_t>(n), theta, kind);
		} catch (const std::invalid_argument& e) {
			throw UsageError(e.what());
		}
	}

	std::vector<TimescaleEstimate> results(specs.size());
	parallel_for(specs.size(), cfg.jobs, [&](std::size_t i) {
		const auto fid = harper_fiducial(specs[i].n_sites());
		results[i] = ehrenfest_time(specs[i], coin, coherent_state(fid, sel.point), cfg.sat_tol);
	});

	Sink sink(cfg.out, out);
	std::ostream& os = *sink;
	os << "# ehrenfest kind=" << cfg.kind << " theta=" << cfg.theta << " coin=" << cfg.coin << " init=" << cfg.init
	   << " sat_tol=" << format_number(cfg.sat_tol) << '\n';
	os << "N,t_E,saturation\n";
	for (std::size_t i = 0; i < specs.size(); ++i) {
		os << specs[i].n_sites() << ',' << results[i].step << ',' << format_number(results[i].reference) << '\n';
	}
	if (specs.size() >= 2) {
		std::vector<double> x;
		std::vector<double> y;
		for (std::size_t i = 0; i < specs.size(); ++i) {
			x.push_back(static_cast<double>(specs[i].n_sites()));
			y.push_back(results[i].value);
		}
		try {
			const auto fit = fit_power_law(x, y, {0.0, std::numeric_limits<double>::infinity()});
			os << "# slope=" << format_number(fit.exponent) << " r2=" << format_number(fit.r_squared) << '\n';
		} catch (const NonPositiveValue&) {
			os << "# slope=nan (t_E = 0 for some N)\n";
		}
	}
	return kExitOk;
}

}  // namespace

double parse_theta(std::string_view token)
{
	const std::string s = trim(token);
	double v = 0.0;
	if (s == "pi") {
		v = std::numbers::pi;
	} else if (s.rfind("pi/", 0) == 0) {
		const long m = parse_long(std::string_view(s).substr(3), "theta denominator");
		if (m <= 0) {
			throw UsageError("theta denominator must be positive");
		}
		v = m == 2 ? WalkSpec::kMaxTheta : std::numbers::pi / static_cast<double>(m);
	} else {
		v = parse_double(s, "theta");
	}
	if (!(v >= 0.0 && v <= WalkSpec::kMaxTheta)) {
		throw UsageError("theta must lie in [0, pi/2]");
	}
	return v;
}

InitialSelector parse_initial(std::string_view token)
{
	const std::string s = trim(token);
	InitialSelector sel;
	if (s.rfind("site:", 0) == 0) {
		const long n = parse_long(std::string_view(s).substr(5), "site");
		if (n < 0) {
			throw UsageError("site must be nonnegative");
		}
		sel.kind = InitialSelector::Kind::Site;
		sel.site = static_cast<std::size_t>(n);
		return sel;
	}
	if (s.rfind("coherent:", 0) == 0) {
		const auto parts = split(std::string_view(s).substr(9), ',');
		if (parts.size() != 2) {
			throw UsageError("coherent initial state needs coherent:<q>,<p>");
		}
		const long q = parse_long(parts[0], "q");
		const long p = parse_long(parts[1], "p");
		if (q < 0 || p < 0) {
			throw UsageError("phase-space coordinates must be nonnegative");
		}
		sel.kind = InitialSelector::Kind::Coherent;
		sel.point = {static_cast<std::size_t>(q), static_cast<std::size_t>(p)};
		return sel;
	}
	throw UsageError("initial state must be site:<n> or coherent:<q>,<p>");
}

CoinState parse_coin(std::string_view token)
{
	const std::string s = trim(token);
	if (s == "zero" || s == "asymmetric") {
		return CoinState::zero();
	}
	if (s == "one") {
		return CoinState::one();
	}
	if (s == "symmetric") {
		return CoinState::symmetric();
	}
	if (s.rfind("amp:", 0) == 0) {
		const auto parts = split(std::string_view(s).substr(4), ',');
		if (parts.size() != 4) {
			throw UsageError("coin amplitudes need amp:<re0>,<im0>,<re1>,<im1>");
		}
		Complex c0(parse_double(parts[0], "coin amplitude"), parse_double(parts[1], "coin amplitude"));
		Complex c1(parse_double(parts[2], "coin amplitude"), parse_double(parts[3], "coin amplitude"));
		const double norm = std::sqrt(std::norm(c0) + std::norm(c1));
		if (std::abs(norm - 1.0) > 1e-6) {
			throw UsageError("coin amplitudes must be normalized");
		}
		return {c0 / norm, c1 / norm};
	}
	throw UsageError("coin must be zero, one, symmetric, asymmetric or amp:...");
}

WalkKind parse_kind(std::string_view token)
{
	const std::string s = trim(token);
	if (s == "psw") {
		return WalkKind::PSW;
	}
	if (s == "csw") {
		return WalkKind::CSW;
	}
	throw UsageError("kind must be psw or csw");
}

std::vector<double> ThetaGrid::values() const
{
	std::vector<double> out;
	out.reserve(count);
	for (std::size_t i = 0; i < count; ++i) {
		if (count == 1) {
			out.push_back(start);
			break;
		}
		const double f = static_cast<double>(i) / static_cast<double>(count - 1);
		double v = i + 1 == count ? stop : start + f * (stop - start);
		out.push_back(std::min(v, WalkSpec::kMaxTheta));
	}
	return out;
}

ThetaGrid parse_theta_grid(std::string_view token)
{
	const auto parts = split(token, ':');
	if (parts.size() != 3) {
		throw UsageError("theta grid must be start:stop:count");
	}
	ThetaGrid g;
	const auto endpoint = [](const std::string& s) {
		const std::string t = trim(s);
		if (t == "pi" || t.rfind("pi/", 0) == 0) {
			return parse_theta(t);
		}
		double v = parse_double(t, "theta grid endpoint");
		if (v > WalkSpec::kMaxTheta && v - WalkSpec::kMaxTheta < 1e-4) {
			v = WalkSpec::kMaxTheta;
		}
		if (!(v >= 0.0 && v <= WalkSpec::kMaxTheta)) {
			throw UsageError("theta grid must lie within [0, pi/2]");
		}
		return v;
	};
	g.start = endpoint(parts[0]);
	g.stop = endpoint(parts[1]);
	const long count = parse_long(parts[2], "theta grid count");
	if (count < 1) {
		throw UsageError("theta grid count must be >= 1");
	}
	g.count = static_cast<std::size_t>(count);
	return g;
}

std::vector<long> parse_long_list(std::string_view token)
{
	std::vector<long> out;
	for (const auto& part : split(token, ',')) {
		out.push_back(parse_long(part, "list entry"));
	}
	return out;
}

std::string format_number(double x)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.12g", x);
	return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	RunConfig cfg;
	CLI::App app{"Phase-space and configuration-space quantum walks on a torus"};
	app.require_subcommand(1);

	const auto add_common = [&cfg](CLI::App* sub) {
		sub->add_option("--n", cfg.n, "lattice size N")->required();
		sub->add_option("--theta", cfg.theta, "coin angle: radians or pi/<m>");
		sub->add_option("--kind", cfg.kind, "psw | csw");
		sub->add_option("--out", cfg.out, "output path ('-' for stdout)");
	};

	auto* spectrum = app.add_subcommand("spectrum", "closed-form eigenpairs as JSON");
	add_common(spectrum);

	auto* evolve_cmd = app.add_subcommand("evolve", "sigma, participation ratio and coin entropy per step");
	add_common(evolve_cmd);
	evolve_cmd->add_option("--t", cfg.t, "number of steps")->required();
	evolve_cmd->add_option("--init", cfg.init, "site:<n> | coherent:<q>,<p>");
	evolve_cmd->add_option("--coin", cfg.coin, "zero | one | symmetric | asymmetric | amp:re0,im0,re1,im1");
	evolve_cmd->add_option("--dump-dist", cfg.dump_dist, "comma-separated times for site distributions");
	evolve_cmd->add_option("--base", cfg.base, "entropy base: two | natural");

	auto* husimi_cmd = app.add_subcommand("husimi", "Husimi grids of the walker at selected times");
	add_common(husimi_cmd);
	husimi_cmd->add_option("--init", cfg.init, "site:<n> | coherent:<q>,<p>");
	husimi_cmd->add_option("--coin", cfg.coin, "coin state");
	husimi_cmd->add_option("--times", cfg.times, "comma-separated times");
	husimi_cmd->add_flag("--pgm", cfg.pgm, "also write 16-bit PGM images");

	auto* scan = app.add_subcommand("pr-scan", "participation ratio over a theta grid and time");
	scan->add_option("--n", cfg.n, "lattice size N")->required();
	scan->add_option("--kind", cfg.kind, "psw | csw");
	scan->add_option("--t-max", cfg.t_max, "last time step")->required();
	scan->add_option("--theta-grid", cfg.theta_grid, "start:stop:count")->required();
	scan->add_option("--coin", cfg.coin, "coin state");
	scan->add_option("--init", cfg.init, "site:0");
	scan->add_option("--out", cfg.out, "output path ('-' for stdout)");
	scan->add_option("--jobs", cfg.jobs, "worker threads (0 = available parallelism)");

	auto* ehr = app.add_subcommand("ehrenfest", "entanglement saturation time against N");
	ehr->add_option("--ns", cfg.ns, "comma-separated odd lattice sizes")->required();
	ehr->add_option("--theta", cfg.theta, "coin angle");
	ehr->add_option("--kind", cfg.kind, "psw | csw");
	ehr->add_option("--coin", cfg.coin, "coin state");
	ehr->add_option("--init", cfg.init, "coherent:<q>,<p>");
	ehr->add_option("--sat-tol", cfg.sat_tol, "distance from the maximum entropy");
	ehr->add_option("--out", cfg.out, "output path ('-' for stdout)");
	ehr->add_option("--jobs", cfg.jobs, "worker threads (0 = available parallelism)");

	std::vector<const char*> argv;
	argv.reserve(args.size());
	for (const auto& a : args) {
		argv.push_back(a.c_str());
	}
	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return kExitOk;
	} catch (const CLI::ParseError& e) {
		err << e.what() << '\n';
		return kExitUsage;
	}

	// subcommand-specific defaults
	if (ehr->parsed() && ehr->count("--coin") == 0) {
		cfg.coin = "symmetric";
	}
	if (ehr->parsed() && ehr->count("--init") == 0) {
		cfg.init = "coherent:0,0";
	}
	if (husimi_cmd->parsed() && husimi_cmd->count("--init") == 0) {
		cfg.init = "coherent:0,0";
	}
	if (husimi_cmd->parsed() && husimi_cmd->count("--coin") == 0) {
		cfg.coin = "symmetric";
	}
	if (husimi_cmd->parsed() && husimi_cmd->count("--out") == 0) {
		cfg.out = "husimi";
	}

	try {
		if (spectrum->parsed()) {
			return cmd_spectrum(cfg, out, err);
		}
		if (evolve_cmd->parsed()) {
			return cmd_evolve(cfg, out, err);
		}
		if (husimi_cmd->parsed()) {
			return cmd_husimi(cfg, out, err);
		}
		if (scan->parsed()) {
			return cmd_pr_scan(cfg, out, err);
		}
		return cmd_ehrenfest(cfg, out, err);
	} catch (const UsageError& e) {
		err << "usage error: " << e.what() << '\n';
		return kExitUsage;
	} catch (const std::invalid_argument& e) {
		err << "usage error: " << e.what() << '\n';
		return kExitUsage;
	} catch (const std::exception& e) {
		err << "error: " << e.what() << '\n';
		return kExitNumerical;
	}
}

}  // namespace psw::cli
