#pragma once

#include "hermes/exact.hpp"
#include "hermes/field.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hermes {

/// Default ceiling on the number of matrices an exhaustive enumeration may
/// visit. Overridable per call and via the CLI.
inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t(1) << 30;

/// An n-by-n matrix A over GF(q^2) with A equal to its conjugate transpose.
/// Entries are stored as packed field values, row-major; the field must be a
/// quadratic extension so that conjugation is defined. Instances are
/// immutable values.
class HermitianMatrix {
  public:
    /// Validates the Hermitian condition; reports the first violating (i, j)
    /// scanning the upper triangle row-major.
    static HermitianMatrix from_entries(FieldPtr field, std::uint32_t n,
                                        const std::vector<std::vector<std::uint32_t>>& rows);
    static HermitianMatrix from_elements(const std::vector<std::vector<Element>>& rows);
    static HermitianMatrix zero(FieldPtr field, std::uint32_t n);
    static HermitianMatrix identity(FieldPtr field, std::uint32_t n);

    std::uint32_t order() const { return n_; }
    const FieldPtr& field() const { return field_; }
    std::uint32_t value_at(std::uint32_t i, std::uint32_t j) const { return entries_[std::size_t(i) * n_ + j]; }
    Element at(std::uint32_t i, std::uint32_t j) const { return {field_, value_at(i, j)}; }
    std::span<const std::uint32_t> values() const { return entries_; }
    bool is_zero() const;

    /// Row rank over GF(q^2), by fraction-free forward elimination with
    /// first-nonzero pivots in column order.
    std::uint32_t rank() const;

    HermitianMatrix operator+(const HermitianMatrix& o) const;
    HermitianMatrix operator-(const HermitianMatrix& o) const;
    HermitianMatrix operator-() const;
    /// Scalar action of the embedded GF(q); closed on Hermitian matrices.
    HermitianMatrix scaled_by_base(std::uint32_t base_value) const;

    friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_ && a.field_->same_structure(*b.field_);
    }
    friend bool operator!=(const HermitianMatrix& a, const HermitianMatrix& b) { return !(a == b); }

    struct Unchecked {};
    HermitianMatrix(FieldPtr field, std::uint32_t n, std::vector<std::uint32_t> entries, Unchecked)
        : field_(std::move(field)), n_(n), entries_(std::move(entries)) {}

  private:
    void check_compatible(const HermitianMatrix& o) const;

    FieldPtr field_;
    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> entries_;
};

/// rank(A - B), the rank distance.
std::uint32_t rank_distance(const HermitianMatrix& a, const HermitianMatrix& b);

namespace detail {
/// In-place rank of an n-by-n value matrix; `a` is destroyed.
std::uint32_t rank_in_place(const Field& f, std::uint32_t n, std::span<std::uint32_t> a);
} // namespace detail

/// |H_n(q^2)| = q^(n^2).
Count hermitian_space_size(const FieldPtr& field, std::uint32_t n);

/// Streams every Hermitian matrix exactly once, in lexicographic order over
/// the free entries: the n diagonal slots (embedded GF(q), base-field
/// serialized order) followed by the strict upper triangle row-major (GF(q^2),
/// serialized order). The last slot varies fastest.
///
/// A partition restricted to a range of first-diagonal values yields a
/// contiguous block of that order, so disjoint partitions concatenate to the
/// full stream; partitions are the unit of parallelism.
class HermitianEnumerator {
  public:
    HermitianEnumerator(FieldPtr field, std::uint32_t n, std::uint64_t cap = kDefaultEnumCap);
    /// Restrict the first diagonal slot to subfield ranks [diag_lo, diag_hi).
    HermitianEnumerator(FieldPtr field, std::uint32_t n, std::uint32_t diag_lo, std::uint32_t diag_hi,
                        std::uint64_t cap = kDefaultEnumCap);

    /// Advances to the next matrix; false once the stream is exhausted. The
    /// first call yields the first matrix.
    bool next();
    std::span<const std::uint32_t> entries() const { return entries_; }
    std::uint32_t order() const { return n_; }
    const FieldPtr& field() const { return field_; }
    HermitianMatrix current() const { return {field_, n_, {entries_.begin(), entries_.end()}, HermitianMatrix::Unchecked{}}; }

    /// Matrices this enumerator will yield.
    Count total() const;

  private:
    void write_diag(std::uint32_t slot);
    void write_upper(std::uint32_t slot);

    FieldPtr field_;
    std::uint32_t n_;
    std::uint32_t qbase_;
    std::uint32_t qext_;
    std::uint32_t diag_lo_, diag_hi_;
    std::vector<std::uint32_t> diag_digits_;            // ranks into the subfield order
    std::vector<std::uint32_t> upper_digits_;           // ranks into the extension order
    std::vector<std::pair<std::uint32_t, std::uint32_t>> upper_slots_;
    std::vector<std::uint32_t> diag_values_;            // subfield rank -> embedded value
    std::vector<std::uint32_t> entries_;
    bool started_ = false;
    bool done_ = false;
};

/// Uniform sample of H_n(q^2), reproducible from the seed across platforms.
HermitianMatrix sample_hermitian(FieldPtr field, std::uint32_t n, std::uint64_t seed);

} // namespace hermes
