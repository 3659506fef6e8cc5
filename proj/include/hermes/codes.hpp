#pragma once

#include "hermes/exact.hpp"
#include "hermes/field.hpp"
#include "hermes/hermitian.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hermes {

/// Default ceiling on |C| for exhaustive codeword enumeration.
inline constexpr std::uint64_t kDefaultCodewordCap = std::uint64_t(1) << 24;

/// The (n, M, d) parameter triple of a code in H_n(q^2), with M kept exact.
/// Parameter-level checks accept arbitrary integer sizes and distances (with
/// the packing radius inside [0, n]) so that hypotheticals can be screened;
/// infeasible sets are rejected by the bound checks.
struct CodeParams {
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    Count size;
    std::uint32_t min_dist = 0;

    /// t = floor((d - 1) / 2).
    std::uint32_t packing_radius() const { return (min_dist - 1) / 2; }
};

/// Parameters of a hypothetical Hermitian MRD code: M = q^(n(n-d+1)).
/// Accepts d = n + 1 (a single codeword) so density identities can be
/// evaluated down to small n.
CodeParams mrd_params(std::uint64_t q, std::uint32_t n, std::uint32_t d);

struct SingletonReport {
    Count bound;  // q^(n(n-d+1))
    bool is_mrd;  // size == bound
};

/// Singleton-like bound check; throws InvalidParameters when M exceeds the
/// bound (no such code exists).
SingletonReport singleton_check(const CodeParams& params);

struct PackingReport {
    Count covered;  // M * B_t
    Count ambient;  // q^(n^2)
    Count slack;    // ambient - covered
    bool is_perfect;
};

/// Sphere-packing bound check at radius t = floor((d-1)/2); throws
/// InvalidParameters when M * B_t exceeds the ambient size.
PackingReport sphere_packing_check(const CodeParams& params);

/// Exact packing density M * B_t / q^(n^2), in lowest terms, in (0, 1].
Ratio packing_density(const CodeParams& params);

struct MrdDensityBounds {
    RatioBracket bracket;
    bool even_distance;
};

/// Density bracket for a Hermitian MRD code with minimum distance d:
///   d = 2t+1:  [q^(-t^2-t),     q^(-t^2+t+3)]
///   d = 2t+2:  [q^(-n-t^2-t),   q^(-n-t^2+t+3)]
/// The upper end is clipped to 1, the largest possible density.
MrdDensityBounds density_bounds_mrd(std::uint64_t q, std::uint32_t n, std::uint32_t d);

/// Exact upper bound on the density of any code with distance d in {2,...,6};
/// equals the density of a hypothetical code meeting the Singleton-like bound.
Ratio density_upper_bound_general(std::uint64_t q, std::uint32_t n, std::uint32_t d);

/// Limit of MRD densities as the matrix order grows: 0 for even d; a bracket
/// for odd d, exact 1/(q+1) when d = 3.
struct DensityLimit {
    bool even_distance = false;
    std::optional<Ratio> exact;
    std::optional<RatioBracket> bracket;
};

DensityLimit density_limit(std::uint64_t q, std::uint32_t d);

/// GF(q)-coordinates of a Hermitian matrix: the n diagonal entries land in
/// the embedded GF(q); each strict-upper entry contributes its two
/// coordinates w.r.t. the basis {1, beta}. Total n^2 values.
std::vector<std::uint32_t> base_coordinates_of(const HermitianMatrix& m);

/// An F_q-linear code in H_n(q^2), given by a basis of Hermitian matrices.
/// Construction verifies GF(q)-linear independence (so |C| = q^k) and reports
/// the index of the first dependent basis matrix otherwise.
class LinearCode {
  public:
    LinearCode(FieldPtr field, std::uint32_t n, std::vector<HermitianMatrix> basis);

    std::uint32_t order() const { return n_; }
    const FieldPtr& field() const { return field_; }
    std::uint32_t dimension() const { return static_cast<std::uint32_t>(basis_.size()); }
    const std::vector<HermitianMatrix>& basis() const { return basis_; }
    Count size() const;

    /// Codeword for a coefficient vector over GF(q) (packed values, length k).
    HermitianMatrix codeword(std::span<const std::uint32_t> coeffs) const;

    /// Minimum rank of a nonzero codeword, by exhaustive enumeration over the
    /// q^k coefficient vectors. The walk is a reflected p-ary Gray code over
    /// the GF(p)-coordinates, so each successive codeword costs one matrix
    /// addition. Throws Degenerate for k = 0 and CodewordSpaceTooLarge when
    /// q^k exceeds the cap.
    std::uint32_t min_distance(std::uint64_t cap = kDefaultCodewordCap) const;

    CodeParams params(std::uint64_t cap = kDefaultCodewordCap) const;

  private:
    FieldPtr field_;
    std::uint32_t n_ = 0;
    std::vector<HermitianMatrix> basis_;
};

} // namespace hermes
