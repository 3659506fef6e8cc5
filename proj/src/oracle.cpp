#include "hermes/oracle.hpp"

#include "hermes/counting.hpp"
#include "hermes/error.hpp"
#include "hermes/field.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace hermes {

RankCensus rank_census(std::uint64_t q, std::uint32_t n, std::uint64_t enum_cap, unsigned jobs) {
    const auto pp = prime_power_decomposition(q);
    if (!pp) fail(Errc::not_prime_power, "q = " + std::to_string(q) + " is not a prime power");
    const auto base = make_field(pp->first, pp->second);
    const auto ext = quadratic_extension(base);

    const auto qbase = static_cast<std::uint32_t>(q);
    jobs = std::max(1u, std::min({jobs, qbase, std::thread::hardware_concurrency() * 2 + 2}));

    // One partition per worker: a contiguous range of first-diagonal values.
    auto tally_range = [&](std::uint32_t lo, std::uint32_t hi) {
        std::vector<std::uint64_t> counts(n + 1, 0);
        HermitianEnumerator en(ext, n, lo, hi, enum_cap);
        std::vector<std::uint32_t> scratch(std::size_t(n) * n);
        while (en.next()) {
            const auto vals = en.entries();
            std::copy(vals.begin(), vals.end(), scratch.begin());
            ++counts[detail::rank_in_place(*ext, n, scratch)];
        }
        return counts;
    };

    // Cap check for the whole space up front, so a partitioned run cannot
    // exceed in aggregate what a serial run would refuse.
    if (hermitian_space_size(ext, n) > enum_cap)
        fail(Errc::enumeration_too_large, "q^(n^2) = " + hermitian_space_size(ext, n).str() +
                                              " exceeds the enumeration cap " + std::to_string(enum_cap));

    std::vector<std::vector<std::uint64_t>> partials;
    if (jobs == 1) {
        partials.push_back(tally_range(0, qbase));
    } else {
        std::vector<std::future<std::vector<std::uint64_t>>> futs;
        for (unsigned w = 0; w < jobs; ++w) {
            const auto lo = static_cast<std::uint32_t>(std::uint64_t(qbase) * w / jobs);
            const auto hi = static_cast<std::uint32_t>(std::uint64_t(qbase) * (w + 1) / jobs);
            futs.push_back(std::async(std::launch::async, tally_range, lo, hi));
        }
        for (auto& f : futs) partials.push_back(f.get());
    }

    RankCensus census;
    census.q = q;
    census.n = n;
    census.counts.assign(n + 1, Count(0));
    census.total = 0;
    for (const auto& part : partials)
        for (std::uint32_t t = 0; t <= n; ++t) census.counts[t] += part[t];
    for (const auto& c : census.counts) census.total += c;
    return census;
}

CensusComparison census_vs_formula(std::uint64_t q, std::uint32_t n, std::uint64_t enum_cap, unsigned jobs) {
    CensusComparison cmp;
    cmp.census = rank_census(q, n, enum_cap, jobs);
    cmp.formula.reserve(n + 1);
    for (std::uint32_t t = 0; t <= n; ++t) cmp.formula.push_back(sphere_size(q, n, t));
    cmp.pass = true;
    for (std::uint32_t t = 0; t <= n; ++t) {
        if (cmp.census.counts[t] != cmp.formula[t]) {
            cmp.pass = false;
            cmp.first_mismatch = t;
            break;
        }
    }
    if (cmp.pass && cmp.census.total != ambient_size(q, n)) {
        cmp.pass = false;
        cmp.first_mismatch = n + 1;
    }
    return cmp;
}

std::size_t PerfectScanResult::nontrivial_count() const {
    return static_cast<std::size_t>(
        std::count_if(findings.begin(), findings.end(), [](const PerfectCandidate& f) { return !f.trivial; }));
}

PerfectScanResult perfect_scan(std::vector<std::uint64_t> qs, std::uint32_t n_max, ScanMode mode) {
    if (n_max < 2) fail(Errc::invalid_parameters, "n_max must be >= 2");
    PerfectScanResult result;
    result.qs = std::move(qs);
    result.n_max = n_max;
    result.mode = mode;
    for (const auto q : result.qs) {
        if (q < 2) fail(Errc::invalid_parameters, "every q must be >= 2");
        for (std::uint32_t n = 2; n <= n_max; ++n) {
            const Count ambient = ambient_size(q, n);
            for (std::uint32_t d = 1; d <= n; ++d) {
                ++result.points_examined;
                const std::uint32_t t = (d - 1) / 2;
                const Count bt = ball_size(q, n, t);
                if (ambient % bt != 0) continue;
                const Count m = ambient / bt;
                const Count cap = pow_count(q, std::uint64_t(n) * (n - d + 1));
                if (m > cap) continue;
                if (mode == ScanMode::power_of_q && !power_of_exponent(m, q)) continue;
                // d = 1 forces M = q^(n^2): the full space, the only trivial
                // perfect code.
                result.findings.push_back({q, n, d, m, d == 1});
            }
        }
    }
    return result;
}

Count capped_packing_mass(std::uint64_t q, std::uint32_t n, std::uint32_t t) {
    if (2 * t > n) fail(Errc::radius_out_of_range, "need 2t <= n for the Singleton cap exponent");
    return pow_count(q, std::uint64_t(n) * (n - 2 * t)) * ball_size(q, n, t);
}

BoundSweepReport bound_sweep(std::vector<std::uint64_t> qs, std::uint32_t n_max) {
    BoundSweepReport report;
    report.qs = std::move(qs);
    report.n_max = n_max;
    for (const auto q : report.qs) {
        if (q < 2) fail(Errc::invalid_parameters, "every q must be >= 2");
        for (std::uint32_t n = 1; n <= n_max; ++n) {
            for (std::uint32_t m = 0; m <= n; ++m) {
                ++report.checks;
                if (!binomial_bounds(q, n, m).contains(gaussian_binomial(q * q, n, m)))
                    report.violations.push_back({q, n, m, "binomial"});
            }
            for (std::uint32_t t = 0; t <= n; ++t) {
                ++report.checks;
                if (!sphere_bounds(q, n, t).contains(sphere_size(q, n, t)))
                    report.violations.push_back({q, n, t, "sphere"});
                ++report.checks;
                if (!ball_bounds(q, n, t).contains(ball_size(q, n, t)))
                    report.violations.push_back({q, n, t, "ball"});
            }
        }
    }
    return report;
}

} // namespace hermes
