#pragma once

#include "hermes/codes.hpp"
#include "hermes/exact.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace hermes {

/// JSON code file:
///   {
///     "header": { "p": 2, "e": 1, "n": 2, "modulus": [0] },
///     "basis":  [ [["10","00"],["00","10"]], ... ]
///   }
/// The header describes the base field GF(q), q = p^e; `modulus` holds the e
/// non-leading coefficients of its canonical modulus, little-endian, and must
/// match the deterministic construction. Matrix entries are element digit
/// strings over GF(q^2) (2e digits, constant term first).
LinearCode load_code_file(const std::filesystem::path& path);
LinearCode code_from_json_text(const std::string& text);
std::string code_to_json_text(const LinearCode& code);
void save_code_file(const std::filesystem::path& path, const LinearCode& code);

/// Everything cmd_verify prints: parameters, Singleton-like verdict, packing
/// verdict, and exact density. A single-codeword file yields `degenerate` and
/// empty verdicts.
struct VerifyReport {
    std::uint64_t p = 0;
    std::uint32_t e = 0;
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    std::uint32_t dimension = 0;
    Count size;
    bool degenerate = false;

    std::uint32_t min_dist = 0;
    std::uint32_t packing_radius = 0;
    Count singleton_bound;
    bool is_mrd = false;
    Count covered;
    Count ambient;
    Count slack;
    bool is_perfect = false;
    Ratio density;
    std::optional<Ratio> general_upper; // closed-form density bound, d in {2..6}
};

VerifyReport verify_code(const LinearCode& code, std::uint64_t codeword_cap = kDefaultCodewordCap);

} // namespace hermes
