#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace hermes {

/// Arbitrary-precision non-negative integer. Every cardinality, sphere size
/// and bound in this library is held exactly; no floating point is involved
/// anywhere in the counting paths.
using Count = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in lowest terms by the backend.
using Ratio = boost::multiprecision::cpp_rational;

Count pow_count(const Count& base, std::uint64_t exp);
Count pow_count(std::uint64_t base, std::uint64_t exp);

/// q^e for possibly negative e, as an exact rational.
Ratio pow_ratio(std::uint64_t q, std::int64_t exp);

/// Exact quotient num / den; throws Errc::non_integral_result when den does
/// not divide num. Used for the telescoped products whose intermediate
/// fractions are integral only in total.
Count exact_div(const Count& num, const Count& den, const char* context);

bool is_prime(std::uint64_t n);

/// n = p^e with p prime, e >= 1, or nullopt.
std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power_decomposition(std::uint64_t n);

/// k such that v == q^k, or nullopt (q >= 2, v >= 1).
std::optional<std::uint64_t> power_of_exponent(const Count& v, std::uint64_t q);

/// Closed interval [lower, upper] of exact counts.
struct CountBracket {
    Count lower;
    Count upper;
    bool contains(const Count& v) const { return lower <= v && v <= upper; }
};

/// Closed interval of exact rationals.
struct RatioBracket {
    Ratio lower;
    Ratio upper;
    bool contains(const Ratio& v) const { return lower <= v && v <= upper; }
};

/// Decimal rendering of a non-negative rational to `sig` significant digits,
/// computed with integer arithmetic only. Values far from 1 switch to
/// scientific notation; trailing zeros of the fraction are trimmed.
std::string decimal_string(const Ratio& r, unsigned sig = 12);

/// "q^k" when v is a pure power of q, otherwise an empty string. Used to
/// annotate large printed integers.
std::string q_power_hint(const Count& v, std::uint64_t q);

} // namespace hermes
