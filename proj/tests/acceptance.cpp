// Acceptance suite: every check is an exact integer or rational comparison.
// Each criterion prints exactly one [PASS]/[FAIL] line; the binary exits
// nonzero if any criterion fails.

#include "hermes/codefile.hpp"
#include "hermes/codes.hpp"
#include "hermes/counting.hpp"
#include "hermes/exact.hpp"
#include "hermes/oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace hermes;

namespace {

const std::string kDataDir = HERMES_DATA_DIR;

struct Harness {
    int failures = 0;

    void criterion(int index, const std::string& title, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double elapsed =
            std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() - start)
                .count();
        if (ok && budget_seconds > 0 && elapsed > budget_seconds) {
            ok = false;
            detail = "exceeded the " + std::to_string(budget_seconds) + " s budget";
        }
        if (!ok) ++failures;
        std::ostringstream line;
        line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << title;
        line << " (" << static_cast<long>(elapsed * 1000) << " ms)";
        if (!ok && !detail.empty()) line << " -- " << detail;
        std::cout << line.str() << "\n";
    }
};

const std::vector<std::uint64_t> kFormulaGrid{2, 3, 4, 5, 7, 8, 9};
constexpr std::uint32_t kGridNMax = 12;

bool check_counts(const std::vector<Count>& got, std::initializer_list<std::uint64_t> want, std::string& detail) {
    if (got.size() != want.size()) {
        detail = "census length mismatch";
        return false;
    }
    std::size_t i = 0;
    for (auto w : want) {
        if (got[i] != w) {
            detail = "census[" + std::to_string(i) + "] = " + got[i].str() + ", expected " + std::to_string(w);
            return false;
        }
        ++i;
    }
    return true;
}

} // namespace

int main() {
    Harness h;

    h.criterion(1, "brute-force rank census equals the Carlitz sphere sizes", 30.0, [](std::string& detail) {
        const std::vector<std::pair<std::uint64_t, std::uint32_t>> grid{{2, 1}, {2, 2}, {2, 3}, {3, 1},
                                                                        {3, 2}, {3, 3}, {4, 2}, {5, 2}};
        for (const auto& [q, n] : grid) {
            const auto cmp = census_vs_formula(q, n, kDefaultEnumCap, 1);
            if (!cmp.pass) {
                detail = "mismatch at q=" + std::to_string(q) + " n=" + std::to_string(n) + " t=" +
                         std::to_string(cmp.first_mismatch);
                return false;
            }
        }
        if (!check_counts(rank_census(2, 2).counts, {1, 5, 10}, detail)) return false;
        if (!check_counts(rank_census(2, 3).counts, {1, 21, 210, 280}, detail)) return false;
        if (!check_counts(rank_census(3, 2).counts, {1, 20, 60}, detail)) return false;
        return true;
    });

    h.criterion(2, "partition identity sum_t S_t = q^(n^2) over the grid", 1.0, [](std::string& detail) {
        for (const auto q : kFormulaGrid) {
            for (std::uint32_t n = 1; n <= kGridNMax; ++n) {
                Count sum = 0;
                for (std::uint32_t t = 0; t <= n; ++t) sum += sphere_size(q, n, t);
                if (sum != ambient_size(q, n)) {
                    detail = "q=" + std::to_string(q) + " n=" + std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    });

    h.criterion(3, "binomial, sphere and ball brackets contain the exact values", 0, [](std::string& detail) {
        const auto report = bound_sweep(kFormulaGrid, kGridNMax);
        if (!report.violations.empty()) {
            const auto& v = report.violations.front();
            detail = v.kind + " bracket violated at q=" + std::to_string(v.q) + " n=" + std::to_string(v.n) +
                     " index=" + std::to_string(v.index);
            return false;
        }
        return report.checks > 0;
    });

    h.criterion(4, "closed-form B_1 and B_2 equal the summed ball sizes", 0, [](std::string& detail) {
        for (const auto q : kFormulaGrid) {
            for (std::uint32_t n = 1; n <= kGridNMax; ++n) {
                for (std::uint32_t t = 1; t <= 2 && t <= n; ++t) {
                    if (ball_size_closed_form(q, n, t) != ball_size(q, n, t)) {
                        detail = "q=" + std::to_string(q) + " n=" + std::to_string(n) + " t=" + std::to_string(t);
                        return false;
                    }
                }
            }
        }
        return true;
    });

    h.criterion(5, "perfect scan: no nontrivial parameter sets, one trivial per (q, n)", 5.0,
                [](std::string& detail) {
                    const std::vector<std::uint64_t> qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
                    const auto result = perfect_scan(qs, 12, ScanMode::power_of_q);
                    if (result.nontrivial_count() != 0) {
                        detail = "found " + std::to_string(result.nontrivial_count()) + " nontrivial candidates";
                        return false;
                    }
                    const std::size_t expected = qs.size() * 11; // n in 2..12
                    if (result.findings.size() != expected) {
                        detail = "expected " + std::to_string(expected) + " trivial findings, saw " +
                                 std::to_string(result.findings.size());
                        return false;
                    }
                    for (const auto& f : result.findings)
                        if (!f.trivial || f.d != 1 || f.size != ambient_size(f.q, f.n)) {
                            detail = "unexpected finding at q=" + std::to_string(f.q) + " n=" + std::to_string(f.n);
                            return false;
                        }
                    return true;
                });

    h.criterion(6, "d=3 MRD densities approach 1/(q+1); even-d densities vanish", 0, [](std::string& detail) {
        for (const std::uint64_t q : {2, 3, 4}) {
            const Ratio target(Count(1), Count(q + 1));
            for (std::uint32_t n = 2; n <= 50; ++n) {
                const Ratio gap = packing_density(mrd_params(q, n, 3)) - target;
                if (gap != pow_ratio(q, 1 - 2 * std::int64_t(n)) / Ratio(Count(q + 1))) {
                    detail = "gap identity failed at q=" + std::to_string(q) + " n=" + std::to_string(n);
                    return false;
                }
            }
            for (const std::uint32_t d : {2, 4, 6}) {
                const Ratio density = packing_density(mrd_params(q, 50, d));
                if (density >= pow_ratio(10, -15)) {
                    detail = "even-d density too large at q=" + std::to_string(q) + " d=" + std::to_string(d);
                    return false;
                }
                const std::string rendered = decimal_string(density);
                const auto epos = rendered.find('e');
                if (epos == std::string::npos || std::stol(rendered.substr(epos + 1)) > -16) {
                    detail = "decimal rendering " + rendered + " is not below 1e-15";
                    return false;
                }
            }
        }
        return true;
    });

    h.criterion(7, "MRD densities respect the bracket and the general upper bound", 0, [](std::string& detail) {
        for (const std::uint64_t q : {2, 3, 4, 5}) {
            for (std::uint32_t n = 2; n <= 12; ++n) {
                for (std::uint32_t d = 1; d <= n; ++d) {
                    const Ratio density = packing_density(mrd_params(q, n, d));
                    const auto bounds = density_bounds_mrd(q, n, d);
                    if (!bounds.bracket.contains(density)) {
                        detail = "bracket missed at q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                 " d=" + std::to_string(d);
                        return false;
                    }
                    if (d >= 2 && d <= 6) {
                        const Ratio upper = density_upper_bound_general(q, n, d);
                        if (density > upper) {
                            detail = "upper bound violated at q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                     " d=" + std::to_string(d);
                            return false;
                        }
                        if (d == 3 && density != upper) {
                            detail = "d=3 bound must equal the MRD density at q=" + std::to_string(q) +
                                     " n=" + std::to_string(n);
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    });

    h.criterion(8, "bundled code files produce the documented verdicts", 0, [](std::string& detail) {
        struct Expected {
            const char* file;
            std::uint32_t d;
            bool mrd;
            bool perfect;
            Ratio density;
        };
        const std::vector<Expected> cases{
            {"scalar_identity_q2_n2.json", 2, false, false, Ratio(1, 8)},
            {"diagonal_q2_n2.json", 1, false, false, Ratio(1, 4)},
            {"full_space_q2_n2.json", 1, true, true, Ratio(1)},
        };
        for (const auto& c : cases) {
            const auto report = verify_code(load_code_file(kDataDir + "/codes/" + c.file));
            if (report.degenerate || report.min_dist != c.d || report.is_mrd != c.mrd ||
                report.is_perfect != c.perfect || report.density != c.density) {
                detail = std::string(c.file) + ": got d=" + std::to_string(report.min_dist) +
                         " mrd=" + (report.is_mrd ? "yes" : "no") + " perfect=" + (report.is_perfect ? "yes" : "no") +
                         " density=" + report.density.str();
                return false;
            }
        }
        return true;
    });

    if (h.failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << h.failures << " acceptance criteria failed\n";
    return 1;
}
