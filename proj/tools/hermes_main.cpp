// hermes -- exact sphere sizes, packing bounds and code verification for
// Hermitian rank-metric spaces. Every printed quantity is computed in exact
// integer or rational arithmetic.

#include <CLI11.hpp>
#include <json.hpp>

#include "hermes/codefile.hpp"
#include "hermes/codes.hpp"
#include "hermes/counting.hpp"
#include "hermes/error.hpp"
#include "hermes/exact.hpp"
#include "hermes/field.hpp"
#include "hermes/hermitian.hpp"
#include "hermes/oracle.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;
using namespace hermes;

std::string ratio_str(const Ratio& r) { return r.str(); }

// Full decimal, with a q-power annotation for pure powers of q.
std::string count_str(const Count& v, std::uint64_t q) {
    const auto k = power_of_exponent(v, q);
    if (k && *k >= 1) return v.str() + " (= " + std::to_string(q) + "^" + std::to_string(*k) + ")";
    return v.str();
}

std::vector<std::uint64_t> parse_q_list(const std::string& s) {
    std::vector<std::uint64_t> qs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            const auto v = std::stoull(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            qs.push_back(v);
        } catch (const std::exception&) {
            fail(Errc::usage_error, "bad q value '" + tok + "' in list");
        }
    }
    if (qs.empty()) fail(Errc::usage_error, "empty q list");
    return qs;
}

std::vector<std::string> prime_power_warnings(const std::vector<std::uint64_t>& qs) {
    std::vector<std::string> w;
    for (auto q : qs)
        if (!prime_power_decomposition(q))
            w.push_back("q = " + std::to_string(q) +
                        " is not a prime power; values are formula evaluations, not matrix counts");
    return w;
}

void emit(const Json& doc, const std::vector<std::string>& warnings, bool json_format,
          const std::function<void()>& print_text) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    if (json_format)
        std::cout << doc.dump(2) << "\n";
    else
        print_text();
}

struct SizedCheck {
    Count value;
    CountBracket bracket;
};

int run_sphere_or_ball(bool ball, std::uint64_t q, std::uint32_t n, std::uint32_t t, bool json_format) {
    if (q < 2) fail(Errc::usage_error, "q must be >= 2");
    const SizedCheck c = ball ? SizedCheck{ball_size(q, n, t), ball_bounds(q, n, t)}
                              : SizedCheck{sphere_size(q, n, t), sphere_bounds(q, n, t)};
    const bool inside = c.bracket.contains(c.value);
    const auto warnings = prime_power_warnings({q});
    Json doc;
    doc["command"] = ball ? "ball" : "sphere";
    doc["q"] = q;
    doc["n"] = n;
    doc["t"] = t;
    doc["value"] = c.value.str();
    doc["lower"] = c.bracket.lower.str();
    doc["upper"] = c.bracket.upper.str();
    doc["contained"] = inside;
    doc["warnings"] = warnings;
    emit(doc, warnings, json_format, [&] {
        std::cout << (ball ? "B_" : "S_") << t << "(q=" << q << ", n=" << n << ") = " << count_str(c.value, q)
                  << "\n";
        std::cout << "bracket = [" << count_str(c.bracket.lower, q) << ", " << count_str(c.bracket.upper, q)
                  << "]\n";
        std::cout << "contained = " << (inside ? "yes" : "no") << "\n";
    });
    return 0;
}

int run_density(std::uint64_t q, std::uint32_t n, std::uint32_t d, const std::string& size_str, bool mrd,
                bool json_format) {
    if (q < 2) fail(Errc::usage_error, "q must be >= 2");
    CodeParams params;
    if (mrd) {
        params = mrd_params(q, n, d);
    } else {
        Count m;
        try {
            m = Count(size_str);
        } catch (const std::exception&) {
            fail(Errc::usage_error, "--size must be a decimal integer");
        }
        params = CodeParams{q, n, m, d};
    }
    const auto packing = sphere_packing_check(params); // throws when the bound is exceeded
    const Ratio density = packing_density(params);
    const auto limit = density_limit(q, d);
    const auto warnings = prime_power_warnings({q});

    Json doc;
    doc["command"] = "density";
    doc["q"] = q;
    doc["n"] = n;
    doc["d"] = d;
    doc["t"] = params.packing_radius();
    doc["size"] = params.size.str();
    doc["mrd"] = mrd;
    doc["density"] = {{"ratio", ratio_str(density)}, {"decimal", decimal_string(density)}};
    std::optional<MrdDensityBounds> mrd_bracket;
    if (mrd && d >= 1 && d <= n) {
        mrd_bracket = density_bounds_mrd(q, n, d);
        doc["mrd_bracket"] = {{"lower", ratio_str(mrd_bracket->bracket.lower)},
                              {"upper", ratio_str(mrd_bracket->bracket.upper)}};
    }
    std::optional<Ratio> general;
    if (d >= 2 && d <= 6 && d <= n) {
        general = density_upper_bound_general(q, n, d);
        doc["general_upper"] = ratio_str(*general);
    }
    Json lim;
    lim["even"] = limit.even_distance;
    if (limit.exact) lim["exact"] = ratio_str(*limit.exact);
    if (limit.bracket) {
        lim["lower"] = ratio_str(limit.bracket->lower);
        lim["upper"] = ratio_str(limit.bracket->upper);
    }
    doc["limit"] = lim;
    doc["warnings"] = warnings;

    emit(doc, warnings, json_format, [&] {
        std::cout << "parameters: q=" << q << " n=" << n << " d=" << d << " t=" << params.packing_radius()
                  << " M=" << count_str(params.size, q) << (mrd ? " (MRD)" : "") << "\n";
        std::cout << "density = " << ratio_str(density) << " = " << decimal_string(density) << "\n";
        if (mrd_bracket)
            std::cout << "MRD density bracket (" << (mrd_bracket->even_distance ? "even" : "odd")
                      << " d) = [" << ratio_str(mrd_bracket->bracket.lower) << ", "
                      << ratio_str(mrd_bracket->bracket.upper) << "]"
                      << (mrd_bracket->bracket.contains(density) ? "  -- contains the density" : "  -- VIOLATED")
                      << "\n";
        if (general)
            std::cout << "general upper bound (d=" << d << ") = " << ratio_str(*general) << "\n";
        if (limit.even_distance) {
            std::cout << "limit as n grows: 0 (even distance)\n";
        } else {
            std::cout << "limit as n grows: within [" << ratio_str(limit.bracket->lower) << ", "
                      << ratio_str(limit.bracket->upper) << "]";
            if (limit.exact) std::cout << ", exactly " << ratio_str(*limit.exact);
            std::cout << "\n";
        }
    });
    return 0;
}

int run_verify(const std::string& path, std::uint64_t codeword_cap, bool json_format) {
    const LinearCode code = load_code_file(path);
    const VerifyReport r = verify_code(code, codeword_cap);

    Json doc;
    doc["command"] = "verify";
    doc["file"] = path;
    doc["p"] = r.p;
    doc["e"] = r.e;
    doc["q"] = r.q;
    doc["n"] = r.n;
    doc["k"] = r.dimension;
    doc["size"] = r.size.str();
    doc["degenerate"] = r.degenerate;
    if (!r.degenerate) {
        doc["d"] = r.min_dist;
        doc["t"] = r.packing_radius;
        doc["singleton_bound"] = r.singleton_bound.str();
        doc["is_mrd"] = r.is_mrd;
        doc["covered"] = r.covered.str();
        doc["ambient"] = r.ambient.str();
        doc["slack"] = r.slack.str();
        doc["is_perfect"] = r.is_perfect;
        doc["density"] = {{"ratio", ratio_str(r.density)}, {"decimal", decimal_string(r.density)}};
        if (r.general_upper) doc["general_upper"] = ratio_str(*r.general_upper);
    }

    emit(doc, {}, json_format, [&] {
        std::cout << "file: " << path << "\n";
        std::cout << "field: GF(" << r.q << ") = GF(" << r.p << "^" << r.e << "), matrices over GF(" << r.q * r.q
                  << ")\n";
        std::cout << "parameters: n=" << r.n << " k=" << r.dimension << " M=" << count_str(r.size, r.q);
        if (r.degenerate) {
            std::cout << "\nsingle-codeword code: minimum distance undefined (degenerate)\n";
            return;
        }
        std::cout << " d=" << r.min_dist << " t=" << r.packing_radius << "\n";
        std::cout << "singleton bound = " << count_str(r.singleton_bound, r.q) << ", MRD: " << (r.is_mrd ? "yes" : "no")
                  << "\n";
        std::cout << "packing: M*B_t = " << r.covered.str() << " of " << count_str(r.ambient, r.q)
                  << ", slack = " << r.slack.str() << ", perfect: " << (r.is_perfect ? "yes" : "no") << "\n";
        std::cout << "density = " << ratio_str(r.density) << " = " << decimal_string(r.density) << "\n";
        if (r.general_upper)
            std::cout << "general upper bound (d=" << r.min_dist << ") = " << ratio_str(*r.general_upper) << "\n";
    });
    return 0;
}

int run_census(std::uint64_t q, std::uint32_t n, std::uint64_t enum_cap, unsigned jobs, bool json_format) {
    const auto cmp = census_vs_formula(q, n, enum_cap, jobs);
    Json doc;
    doc["command"] = "census";
    doc["q"] = q;
    doc["n"] = n;
    Json counts = Json::array(), formula = Json::array();
    for (const auto& c : cmp.census.counts) counts.push_back(c.str());
    for (const auto& c : cmp.formula) formula.push_back(c.str());
    doc["counts"] = counts;
    doc["formula"] = formula;
    doc["total"] = cmp.census.total.str();
    doc["pass"] = cmp.pass;

    emit(doc, {}, json_format, [&] {
        std::cout << "rank census of H_" << n << "(" << q * q << "): [";
        for (std::uint32_t t = 0; t <= n; ++t) std::cout << (t ? ", " : "") << cmp.census.counts[t].str();
        std::cout << "], total " << count_str(cmp.census.total, q) << "\n";
        std::cout << "formula S_t:               [";
        for (std::uint32_t t = 0; t <= n; ++t) std::cout << (t ? ", " : "") << cmp.formula[t].str();
        std::cout << "]\n";
        std::cout << "agreement: " << (cmp.pass ? "pass" : "FAIL") << "\n";
    });
    return cmp.pass ? 0 : 1;
}

int run_scan(const std::string& q_list, std::uint32_t n_max, const std::string& mode_str, bool json_format) {
    const auto qs = parse_q_list(q_list);
    ScanMode mode;
    if (mode_str == "power-of-q")
        mode = ScanMode::power_of_q;
    else if (mode_str == "any-integer")
        mode = ScanMode::any_integer;
    else
        fail(Errc::usage_error, "--mode must be power-of-q or any-integer");
    const auto warnings = prime_power_warnings(qs);
    const auto result = perfect_scan(qs, n_max, mode);

    Json doc;
    doc["command"] = "scan";
    doc["q"] = qs;
    doc["n_max"] = n_max;
    doc["mode"] = mode_str;
    doc["points"] = result.points_examined;
    Json findings = Json::array();
    for (const auto& f : result.findings)
        findings.push_back(Json{{"q", f.q}, {"n", f.n}, {"d", f.d}, {"size", f.size.str()}, {"trivial", f.trivial}});
    doc["findings"] = findings;
    doc["trivial"] = result.findings.size() - result.nontrivial_count();
    doc["nontrivial"] = result.nontrivial_count();
    doc["warnings"] = warnings;

    emit(doc, warnings, json_format, [&] {
        std::cout << "perfect-parameter scan: " << result.points_examined << " (q, n, d) points, mode " << mode_str
                  << "\n";
        std::cout << "trivial findings (d=1, full space): " << result.findings.size() - result.nontrivial_count()
                  << "\n";
        std::cout << "nontrivial perfect candidates: " << result.nontrivial_count() << "\n";
        for (const auto& f : result.findings)
            if (!f.trivial)
                std::cout << "  candidate: q=" << f.q << " n=" << f.n << " d=" << f.d << " M=" << f.size.str()
                          << "\n";
    });
    return 0;
}

int run_sweep(const std::string& q_list, std::uint32_t n_max, bool json_format) {
    const auto qs = parse_q_list(q_list);
    const auto warnings = prime_power_warnings(qs);
    const auto report = bound_sweep(qs, n_max);

    Json doc;
    doc["command"] = "sweep";
    doc["q"] = qs;
    doc["n_max"] = n_max;
    doc["checks"] = report.checks;
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back(Json{{"q", v.q}, {"n", v.n}, {"index", v.index}, {"kind", v.kind}});
    doc["violations"] = violations;
    doc["warnings"] = warnings;

    emit(doc, warnings, json_format, [&] {
        std::cout << "bound sweep: " << report.checks << " bracket checks over q in {" << q_list << "}, n <= "
                  << n_max << "\n";
        std::cout << "violations: " << report.violations.size() << "\n";
        for (const auto& v : report.violations)
            std::cout << "  " << v.kind << " bracket violated at q=" << v.q << " n=" << v.n << " index=" << v.index
                      << "\n";
    });
    return report.violations.empty() ? 0 : 1;
}

int run_sample(std::uint64_t q, std::uint32_t n, std::uint64_t seed, bool json_format) {
    const auto pp = prime_power_decomposition(q);
    if (!pp) fail(Errc::not_prime_power, "q = " + std::to_string(q) + " is not a prime power");
    const auto ext = quadratic_extension(make_field(pp->first, pp->second));
    const auto m = sample_hermitian(ext, n, seed);

    Json doc;
    doc["command"] = "sample";
    doc["q"] = q;
    doc["n"] = n;
    doc["seed"] = seed;
    doc["rank"] = m.rank();
    Json rows = Json::array();
    for (std::uint32_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::uint32_t j = 0; j < n; ++j) row.push_back(ext->digit_string(m.value_at(i, j)));
        rows.push_back(row);
    }
    doc["matrix"] = rows;

    emit(doc, {}, json_format, [&] {
        std::cout << "uniform sample of H_" << n << "(" << q * q << "), seed " << seed << ", rank " << m.rank()
                  << "\n";
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t j = 0; j < n; ++j) std::cout << (j ? " " : "  ") << ext->digit_string(m.value_at(i, j));
            std::cout << "\n";
        }
    });
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for Hermitian rank-metric spaces", "hermes"};
    app.require_subcommand(1);

    std::uint64_t enum_cap = kDefaultEnumCap;
    if (const char* env = std::getenv("HERMES_ENUM_CAP")) {
        try {
            enum_cap = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: HERMES_ENUM_CAP is not an integer\n";
            return 2;
        }
    }

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::uint64_t q = 0, seed = 0;
    std::uint32_t n = 0, t = 0, d = 0, n_max = 8;
    std::string size_str, q_list, path, mode = "power-of-q";
    bool mrd = false;
    std::uint64_t codeword_cap = kDefaultCodewordCap;
    unsigned jobs = 1;

    std::function<int(bool)> run;

    auto* sphere = app.add_subcommand("sphere", "exact sphere size S_t with its power-of-q bracket");
    sphere->add_option("--q", q, "field size")->required();
    sphere->add_option("--n", n, "matrix order")->required();
    sphere->add_option("--t", t, "radius")->required();
    sphere->fallthrough();
    sphere->callback([&] { run = [&](bool js) { return run_sphere_or_ball(false, q, n, t, js); }; });

    auto* ball = app.add_subcommand("ball", "exact ball size B_t with its power-of-q bracket");
    ball->add_option("--q", q, "field size")->required();
    ball->add_option("--n", n, "matrix order")->required();
    ball->add_option("--t", t, "radius")->required();
    ball->fallthrough();
    ball->callback([&] { run = [&](bool js) { return run_sphere_or_ball(true, q, n, t, js); }; });

    auto* density = app.add_subcommand("density", "exact packing density with brackets and limits");
    density->add_option("--q", q, "field size")->required();
    density->add_option("--n", n, "matrix order")->required();
    density->add_option("--d", d, "minimum distance")->required();
    auto* size_opt = density->add_option("--size", size_str, "code size M (decimal)");
    auto* mrd_opt = density->add_flag("--mrd", mrd, "use the Singleton-like bound size q^(n(n-d+1))");
    size_opt->excludes(mrd_opt);
    density->fallthrough();
    density->callback([&] {
        if (size_str.empty() && !mrd) fail(Errc::usage_error, "density needs exactly one of --size or --mrd");
        run = [&](bool js) { return run_density(q, n, d, size_str, mrd, js); };
    });

    auto* verify = app.add_subcommand("verify", "full report on a JSON code file");
    verify->add_option("file", path, "code file")->required();
    verify->add_option("--codeword-cap", codeword_cap, "cap on exhaustive codeword enumeration");
    verify->fallthrough();
    verify->callback([&] { run = [&](bool js) { return run_verify(path, codeword_cap, js); }; });

    auto* census = app.add_subcommand("census", "enumerate H_n(q^2), rank every matrix, compare to the formula");
    census->add_option("--q", q, "field size (prime power)")->required();
    census->add_option("--n", n, "matrix order")->required();
    census->add_option("--jobs", jobs, "parallel partitions");
    census->add_option("--enum-cap", enum_cap, "enumeration cap");
    census->fallthrough();
    census->callback([&] { run = [&](bool js) { return run_census(q, n, enum_cap, jobs, js); }; });

    auto* scan = app.add_subcommand("scan", "scan (q, n, d) grids for perfect-code parameter sets");
    scan->add_option("--q", q_list, "comma-separated q values")->required();
    scan->add_option("--n-max", n_max, "largest matrix order");
    scan->add_option("--mode", mode, "power-of-q or any-integer");
    scan->fallthrough();
    scan->callback([&] { run = [&](bool js) { return run_scan(q_list, n_max, mode, js); }; });

    auto* sweep = app.add_subcommand("sweep", "verify every sphere/ball/binomial bracket over a grid");
    sweep->add_option("--q", q_list, "comma-separated q values")->required();
    sweep->add_option("--n-max", n_max, "largest matrix order");
    sweep->fallthrough();
    sweep->callback([&] { run = [&](bool js) { return run_sweep(q_list, n_max, js); }; });

    auto* sample = app.add_subcommand("sample", "uniform random Hermitian matrix, reproducible from a seed");
    sample->add_option("--q", q, "field size (prime power)")->required();
    sample->add_option("--n", n, "matrix order")->required();
    sample->add_option("--seed", seed, "RNG seed");
    sample->fallthrough();
    sample->callback([&] { run = [&](bool js) { return run_sample(q, n, seed, js); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // help/version exit 0, every flag problem exits 2
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_usage() ? 2 : 1;
    }

    try {
        return run(format == "json");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_usage() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
