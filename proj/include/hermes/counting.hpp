#pragma once

#include "hermes/exact.hpp"

#include <cstdint>

namespace hermes {

/// Gaussian binomial coefficient over base b >= 2: the number of m-dimensional
/// subspaces of an n-dimensional space over a field of size b. Returns 0 when
/// m is outside [0, n]. Numerator and denominator are accumulated in full
/// before a single exact division.
Count gaussian_binomial(std::uint64_t base, std::int64_t n, std::int64_t m);

/// Power-of-q bracket [q^(2m(n-m)), q^(2m(n-m)+2)] containing the
/// q^2-binomial coefficient bin_{q^2}(n, m).
CountBracket binomial_bounds(std::uint64_t q, std::uint32_t n, std::uint32_t m);

/// Number of rank-t matrices in H_n(q^2):
///   bin_{q^2}(n,t) * q^(t(t-1)/2) * prod_{s=1}^{t} (q^s + (-1)^s).
/// Spheres of radius t have this size regardless of their center.
Count sphere_size(std::uint64_t q, std::uint32_t n, std::uint32_t t);

/// Number of matrices of rank at most t: the partial sum of sphere sizes.
Count ball_size(std::uint64_t q, std::uint32_t n, std::uint32_t t);

/// Closed forms for radius 1 and 2:
///   B_1 = 1 + (q^(2n) - 1)/(q + 1)
///   B_2 = B_1 + q (q^(2n) - 1)(q^(2n-2) - 1) / ((q + 1)(q^2 - 1))
/// Integrality is asserted; must agree with ball_size.
Count ball_size_closed_form(std::uint64_t q, std::uint32_t n, std::uint32_t t);

/// [q^(t(2n-t-1)), q^(t(2n-t+1)+2)] containing S_t.
CountBracket sphere_bounds(std::uint64_t q, std::uint32_t n, std::uint32_t t);

/// [q^(t(2n-t-1)), q^(t(2n-t+1)+3)] containing B_t.
CountBracket ball_bounds(std::uint64_t q, std::uint32_t n, std::uint32_t t);

/// q^(n^2), the number of n-by-n Hermitian matrices over GF(q^2).
Count ambient_size(std::uint64_t q, std::uint32_t n);

} // namespace hermes
