#pragma once

#include <stdexcept>
#include <string>

namespace hermes {

/// Failure categories surfaced by the library. The CLI maps these to exit
/// codes: input/usage problems exit 2, computational limits and violations
/// exit 1.
enum class Errc {
    not_prime,
    not_prime_power,
    too_large,
    field_mismatch,
    division_by_zero,
    not_quadratic_extension,
    not_hermitian,
    shape_mismatch,
    enumeration_too_large,
    radius_out_of_range,
    non_integral_result,
    unsupported_radius,
    unsupported_distance,
    invalid_parameters,
    degenerate_code,
    codeword_space_too_large,
    linearly_dependent,
    parse_error,
    usage_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

    /// True for errors caused by bad flags or malformed input files rather
    /// than by a computation hitting a cap or an arithmetic violation.
    bool is_usage() const;

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace hermes
