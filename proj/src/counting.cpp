#include "hermes/counting.hpp"

#include "hermes/error.hpp"

#include <string>

namespace hermes {

namespace {

void require_radius(std::uint64_t q, std::uint32_t n, std::uint32_t t) {
    if (q < 2) fail(Errc::invalid_parameters, "q must be >= 2");
    if (t > n)
        fail(Errc::radius_out_of_range,
             "radius " + std::to_string(t) + " exceeds the matrix order " + std::to_string(n));
}

} // namespace

Count gaussian_binomial(std::uint64_t base, std::int64_t n, std::int64_t m) {
    if (base < 2) fail(Errc::invalid_parameters, "binomial base must be >= 2");
    if (n < 0) fail(Errc::invalid_parameters, "binomial n must be >= 0");
    if (m < 0 || m > n) return 0;
    Count num = 1, den = 1;
    for (std::int64_t i = 1; i <= m; ++i) {
        num *= pow_count(base, static_cast<std::uint64_t>(n - i + 1)) - 1;
        den *= pow_count(base, static_cast<std::uint64_t>(i)) - 1;
    }
    return exact_div(num, den, "gaussian binomial");
}

CountBracket binomial_bounds(std::uint64_t q, std::uint32_t n, std::uint32_t m) {
    if (q < 2) fail(Errc::invalid_parameters, "q must be >= 2");
    if (m > n) fail(Errc::invalid_parameters, "m must lie in [0, n]");
    const std::uint64_t exp = 2ull * m * (n - m);
    return {pow_count(q, exp), pow_count(q, exp + 2)};
}

Count sphere_size(std::uint64_t q, std::uint32_t n, std::uint32_t t) {
    require_radius(q, n, t);
    const std::uint64_t tri = t < 2 ? 0 : std::uint64_t(t) * (t - 1) / 2;
    Count s = gaussian_binomial(q * q, n, t) * pow_count(q, tri);
    for (std::uint32_t i = 1; i <= t; ++i) {
        Count factor = pow_count(q, i);
        if (i % 2 == 1)
            factor -= 1;
        else
            factor += 1;
        s *= factor;
    }
    return s;
}

Count ball_size(std::uint64_t q, std::uint32_t n, std::uint32_t t) {
    require_radius(q, n, t);
    Count b = 0;
    for (std::uint32_t r = 0; r <= t; ++r) b += sphere_size(q, n, r);
    return b;
}

Count ball_size_closed_form(std::uint64_t q, std::uint32_t n, std::uint32_t t) {
    if (t != 1 && t != 2) fail(Errc::unsupported_radius, "closed form exists for t in {1, 2} only");
    require_radius(q, n, t);
    const Count q2n = pow_count(q, 2ull * n);
    Count b = 1 + exact_div(q2n - 1, Count(q + 1), "closed-form B_1 term");
    if (t == 2) {
        const Count num = (q2n - 1) * (pow_count(q, 2ull * (n - 1)) - 1) * q;
        const Count den = Count(q + 1) * (Count(q) * q - 1);
        b += exact_div(num, den, "closed-form B_2 term");
    }
    return b;
}

CountBracket sphere_bounds(std::uint64_t q, std::uint32_t n, std::uint32_t t) {
    require_radius(q, n, t);
    const std::uint64_t lo = std::uint64_t(t) * (2ull * n - t - 1);
    const std::uint64_t hi = std::uint64_t(t) * (2ull * n - t + 1) + 2;
    return {pow_count(q, lo), pow_count(q, hi)};
}

CountBracket ball_bounds(std::uint64_t q, std::uint32_t n, std::uint32_t t) {
    require_radius(q, n, t);
    const std::uint64_t lo = std::uint64_t(t) * (2ull * n - t - 1);
    const std::uint64_t hi = std::uint64_t(t) * (2ull * n - t + 1) + 3;
    return {pow_count(q, lo), pow_count(q, hi)};
}

Count ambient_size(std::uint64_t q, std::uint32_t n) {
    if (q < 2) fail(Errc::invalid_parameters, "q must be >= 2");
    return pow_count(q, std::uint64_t(n) * n);
}

} // namespace hermes
