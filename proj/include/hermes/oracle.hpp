#pragma once

#include "hermes/exact.hpp"
#include "hermes/hermitian.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hermes {

/// Rank tally of the full enumeration of H_n(q^2): counts[t] is the number of
/// matrices of rank t, independently of any closed form.
struct RankCensus {
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    std::vector<Count> counts; // indexed by rank, length n + 1
    Count total;
};

/// Enumerates H_n(q^2) and ranks every matrix. q must be a prime power and
/// q^(n^2) must fit under the enumeration cap. Partitions on the first
/// diagonal entry run on `jobs` threads and their tallies are merged.
RankCensus rank_census(std::uint64_t q, std::uint32_t n, std::uint64_t enum_cap = kDefaultEnumCap,
                       unsigned jobs = 1);

struct CensusComparison {
    RankCensus census;
    std::vector<Count> formula; // sphere_size for each t
    bool pass = false;
    std::int64_t first_mismatch = -1; // rank index, or -1
};

/// The census against the closed-form sphere sizes, rank by rank.
CensusComparison census_vs_formula(std::uint64_t q, std::uint32_t n,
                                   std::uint64_t enum_cap = kDefaultEnumCap, unsigned jobs = 1);

enum class ScanMode {
    power_of_q,  // M must be a power of q (the linear-code setting)
    any_integer, // any positive integer M
};

/// A parameter set (q, n, d) admitting an integer M with M * B_t = q^(n^2)
/// and M within the Singleton-like cap. Only d = 1 (the full space) is ever
/// expected; that finding is tagged trivial.
struct PerfectCandidate {
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    std::uint32_t d = 0;
    Count size;
    bool trivial = false;
};

struct PerfectScanResult {
    std::vector<std::uint64_t> qs;
    std::uint32_t n_max = 0;
    ScanMode mode = ScanMode::power_of_q;
    std::uint64_t points_examined = 0;
    std::vector<PerfectCandidate> findings;

    std::size_t nontrivial_count() const;
};

/// Exact-arithmetic sweep over every (q, n, d) with 2 <= n <= n_max and
/// 1 <= d <= n, collecting all perfect-code candidates. Pure arithmetic in q;
/// non-prime-power q values are legal inputs here.
PerfectScanResult perfect_scan(std::vector<std::uint64_t> qs, std::uint32_t n_max,
                               ScanMode mode = ScanMode::power_of_q);

/// Largest packing mass allowed at odd distance d = 2t + 1: the Singleton cap
/// q^(n(n-2t)) times B_t. Strictly below q^(n^2) for t in {1, 2}, which is
/// the arithmetic core of the non-existence result.
Count capped_packing_mass(std::uint64_t q, std::uint32_t n, std::uint32_t t);

struct SweepViolation {
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    std::uint32_t index = 0; // the m or t at fault
    std::string kind;        // "binomial", "sphere" or "ball"
};

struct BoundSweepReport {
    std::vector<std::uint64_t> qs;
    std::uint32_t n_max = 0;
    std::uint64_t checks = 0;
    std::vector<SweepViolation> violations;
};

/// Asserts every bracket (binomial, sphere, ball) contains its exact value
/// over the grid; violations are collected rather than thrown.
BoundSweepReport bound_sweep(std::vector<std::uint64_t> qs, std::uint32_t n_max);

} // namespace hermes
