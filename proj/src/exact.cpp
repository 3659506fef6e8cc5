#include "hermes/exact.hpp"

#include "hermes/error.hpp"

#include <sstream>

namespace hermes {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::not_prime: return "NotPrime";
        case Errc::not_prime_power: return "NotPrimePower";
        case Errc::too_large: return "TooLarge";
        case Errc::field_mismatch: return "FieldMismatch";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::not_quadratic_extension: return "NotQuadraticExtension";
        case Errc::not_hermitian: return "NotHermitian";
        case Errc::shape_mismatch: return "ShapeMismatch";
        case Errc::enumeration_too_large: return "EnumerationTooLarge";
        case Errc::radius_out_of_range: return "RadiusOutOfRange";
        case Errc::non_integral_result: return "NonIntegralResult";
        case Errc::unsupported_radius: return "UnsupportedRadius";
        case Errc::unsupported_distance: return "UnsupportedDistance";
        case Errc::invalid_parameters: return "InvalidParameters";
        case Errc::degenerate_code: return "Degenerate";
        case Errc::codeword_space_too_large: return "CodewordSpaceTooLarge";
        case Errc::linearly_dependent: return "LinearlyDependent";
        case Errc::parse_error: return "ParseError";
        case Errc::usage_error: return "UsageError";
    }
    return "Error";
}

bool Error::is_usage() const {
    switch (code_) {
        case Errc::not_prime:
        case Errc::not_prime_power:
        case Errc::too_large:
        case Errc::radius_out_of_range:
        case Errc::unsupported_radius:
        case Errc::unsupported_distance:
        case Errc::not_hermitian:
        case Errc::shape_mismatch:
        case Errc::field_mismatch:
        case Errc::linearly_dependent:
        case Errc::parse_error:
        case Errc::usage_error:
            return true;
        default:
            return false;
    }
}

Count pow_count(const Count& base, std::uint64_t exp) {
    Count r = 1;
    Count b = base;
    while (exp != 0) {
        if (exp & 1) r *= b;
        exp >>= 1;
        if (exp != 0) b *= b;
    }
    return r;
}

Count pow_count(std::uint64_t base, std::uint64_t exp) { return pow_count(Count(base), exp); }

Ratio pow_ratio(std::uint64_t q, std::int64_t exp) {
    if (exp >= 0) return Ratio(pow_count(q, static_cast<std::uint64_t>(exp)));
    return Ratio(Count(1), pow_count(q, static_cast<std::uint64_t>(-exp)));
}

Count exact_div(const Count& num, const Count& den, const char* context) {
    Count quo, rem;
    boost::multiprecision::divide_qr(num, den, quo, rem);
    if (rem != 0) fail(Errc::non_integral_result, std::string(context) + " left remainder " + rem.str());
    return quo;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power_decomposition(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    std::uint64_t p = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t e = 0;
    std::uint64_t m = n;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) return std::nullopt;
    return std::make_pair(p, e);
}

std::optional<std::uint64_t> power_of_exponent(const Count& v, std::uint64_t q) {
    if (q < 2 || v < 1) return std::nullopt;
    Count m = v;
    std::uint64_t k = 0;
    while (m > 1) {
        if (m % q != 0) return std::nullopt;
        m /= q;
        ++k;
    }
    return k;
}

std::string q_power_hint(const Count& v, std::uint64_t q) {
    auto k = power_of_exponent(v, q);
    if (!k) return {};
    return std::to_string(q) + "^" + std::to_string(*k);
}

std::string decimal_string(const Ratio& r, unsigned sig) {
    if (sig == 0) sig = 1;
    Count num = numerator(r);
    Count den = denominator(r);
    if (num == 0) return "0";
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }

    // e10 = floor(log10(num/den)), estimated from bit lengths then corrected.
    auto bits = [](const Count& v) { return static_cast<long>(boost::multiprecision::msb(v)) + 1; };
    long e10 = static_cast<long>((bits(num) - bits(den)) * 0.30102999566398L);
    auto cmp_pow10 = [&](long e) {
        // num/den >= 10^e ?
        if (e >= 0) return num >= den * pow_count(Count(10), static_cast<std::uint64_t>(e));
        return num * pow_count(Count(10), static_cast<std::uint64_t>(-e)) >= den;
    };
    while (cmp_pow10(e10 + 1)) ++e10;
    while (!cmp_pow10(e10)) --e10;

    // Scale into [10^(sig-1), 10^sig) and round half away from zero.
    long shift = static_cast<long>(sig) - 1 - e10;
    Count sn = num, sd = den;
    if (shift >= 0)
        sn *= pow_count(Count(10), static_cast<std::uint64_t>(shift));
    else
        sd *= pow_count(Count(10), static_cast<std::uint64_t>(-shift));
    Count digits, rem;
    boost::multiprecision::divide_qr(sn, sd, digits, rem);
    if (2 * rem >= sd) ++digits;
    if (digits == pow_count(Count(10), sig)) {
        digits /= 10;
        ++e10;
    }

    std::string ds = digits.str();
    auto trim = [](std::string s) {
        while (s.find('.') != std::string::npos && (s.back() == '0' || s.back() == '.')) {
            bool dot = s.back() == '.';
            s.pop_back();
            if (dot) break;
        }
        return s;
    };

    if (e10 >= static_cast<long>(sig) || e10 < -4) {
        std::string mant = ds.substr(0, 1);
        if (ds.size() > 1) mant += "." + ds.substr(1);
        mant = trim(mant);
        std::ostringstream out;
        out << sign << mant << "e" << (e10 >= 0 ? "+" : "") << e10;
        return out.str();
    }
    std::string s;
    if (e10 >= 0) {
        s = ds.substr(0, static_cast<std::size_t>(e10) + 1);
        if (ds.size() > static_cast<std::size_t>(e10) + 1) s += "." + ds.substr(static_cast<std::size_t>(e10) + 1);
    } else {
        s = "0." + std::string(static_cast<std::size_t>(-e10 - 1), '0') + ds;
    }
    return sign + trim(s);
}

} // namespace hermes
