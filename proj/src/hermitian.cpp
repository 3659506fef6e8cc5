#include "hermes/hermitian.hpp"

#include "hermes/error.hpp"

#include <random>
#include <string>

namespace hermes {

namespace {

void require_hermitian_field(const FieldPtr& f) {
    if (!f) fail(Errc::usage_error, "null field");
    if (!f->has_base())
        fail(Errc::not_quadratic_extension, "Hermitian matrices need a field built as a quadratic extension");
}

} // namespace

HermitianMatrix HermitianMatrix::from_entries(FieldPtr field, std::uint32_t n,
                                              const std::vector<std::vector<std::uint32_t>>& rows) {
    require_hermitian_field(field);
    if (rows.size() != n) fail(Errc::shape_mismatch, "expected " + std::to_string(n) + " rows");
    std::vector<std::uint32_t> flat(std::size_t(n) * n);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) fail(Errc::shape_mismatch, "row " + std::to_string(i) + " has wrong length");
        for (std::uint32_t j = 0; j < n; ++j) {
            if (rows[i][j] >= field->size()) fail(Errc::field_mismatch, "entry value outside the field");
            flat[std::size_t(i) * n + j] = rows[i][j];
        }
    }
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j)
            if (flat[std::size_t(j) * n + i] != field->conjugate(flat[std::size_t(i) * n + j]))
                fail(Errc::not_hermitian, "entry (" + std::to_string(j) + "," + std::to_string(i) +
                                              ") is not the conjugate of (" + std::to_string(i) + "," +
                                              std::to_string(j) + ")");
    return {std::move(field), n, std::move(flat), Unchecked{}};
}

HermitianMatrix HermitianMatrix::from_elements(const std::vector<std::vector<Element>>& rows) {
    if (rows.empty()) fail(Errc::shape_mismatch, "empty matrix");
    FieldPtr f = rows[0].empty() ? nullptr : rows[0][0].field();
    require_hermitian_field(f);
    const auto n = static_cast<std::uint32_t>(rows.size());
    std::vector<std::vector<std::uint32_t>> vals(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (const auto& el : rows[i]) {
            if (!el.field() || !el.field()->same_structure(*f)) fail(Errc::field_mismatch, "mixed-field entries");
            vals[i].push_back(el.value());
        }
    }
    return from_entries(std::move(f), n, vals);
}

HermitianMatrix HermitianMatrix::zero(FieldPtr field, std::uint32_t n) {
    require_hermitian_field(field);
    return {std::move(field), n, std::vector<std::uint32_t>(std::size_t(n) * n, 0), Unchecked{}};
}

HermitianMatrix HermitianMatrix::identity(FieldPtr field, std::uint32_t n) {
    require_hermitian_field(field);
    std::vector<std::uint32_t> e(std::size_t(n) * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) e[std::size_t(i) * n + i] = 1;
    return {std::move(field), n, std::move(e), Unchecked{}};
}

bool HermitianMatrix::is_zero() const {
    for (auto v : entries_)
        if (v != 0) return false;
    return true;
}

namespace detail {

std::uint32_t rank_in_place(const Field& f, std::uint32_t n, std::span<std::uint32_t> a) {
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < n && rank < n; ++col) {
        std::uint32_t piv = rank;
        while (piv < n && a[std::size_t(piv) * n + col] == 0) ++piv;
        if (piv == n) continue;
        if (piv != rank)
            for (std::uint32_t c = col; c < n; ++c)
                std::swap(a[std::size_t(piv) * n + c], a[std::size_t(rank) * n + c]);
        const std::uint32_t pval = a[std::size_t(rank) * n + col];
        for (std::uint32_t r = rank + 1; r < n; ++r) {
            const std::uint32_t factor = a[std::size_t(r) * n + col];
            if (factor == 0) continue;
            // row_r = pval*row_r - factor*row_pivot, keeping everything in the field
            for (std::uint32_t c = col; c < n; ++c) {
                auto& cell = a[std::size_t(r) * n + c];
                cell = f.sub(f.mul(pval, cell), f.mul(factor, a[std::size_t(rank) * n + c]));
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

std::uint32_t HermitianMatrix::rank() const {
    std::vector<std::uint32_t> scratch(entries_);
    return detail::rank_in_place(*field_, n_, scratch);
}

void HermitianMatrix::check_compatible(const HermitianMatrix& o) const {
    if (n_ != o.n_) fail(Errc::shape_mismatch, "matrix orders differ");
    if (!field_->same_structure(*o.field_)) fail(Errc::field_mismatch, "matrices over different fields");
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
    check_compatible(o);
    std::vector<std::uint32_t> r(entries_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->add(entries_[i], o.entries_[i]);
    return {field_, n_, std::move(r), Unchecked{}};
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
    check_compatible(o);
    std::vector<std::uint32_t> r(entries_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->sub(entries_[i], o.entries_[i]);
    return {field_, n_, std::move(r), Unchecked{}};
}

HermitianMatrix HermitianMatrix::operator-() const {
    std::vector<std::uint32_t> r(entries_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->neg(entries_[i]);
    return {field_, n_, std::move(r), Unchecked{}};
}

HermitianMatrix HermitianMatrix::scaled_by_base(std::uint32_t base_value) const {
    const std::uint32_t s = field_->embed(base_value);
    std::vector<std::uint32_t> r(entries_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->mul(s, entries_[i]);
    return {field_, n_, std::move(r), Unchecked{}};
}

std::uint32_t rank_distance(const HermitianMatrix& a, const HermitianMatrix& b) { return (a - b).rank(); }

Count hermitian_space_size(const FieldPtr& field, std::uint32_t n) {
    require_hermitian_field(field);
    return pow_count(field->base()->size(), std::uint64_t(n) * n);
}

namespace {
constexpr std::uint32_t kFullDiagRange = ~std::uint32_t(0);
}

HermitianEnumerator::HermitianEnumerator(FieldPtr field, std::uint32_t n, std::uint64_t cap)
    : HermitianEnumerator(std::move(field), n, 0, kFullDiagRange, cap) {}

HermitianEnumerator::HermitianEnumerator(FieldPtr field, std::uint32_t n, std::uint32_t diag_lo,
                                         std::uint32_t diag_hi, std::uint64_t cap)
    : field_(std::move(field)), n_(n), diag_lo_(diag_lo), diag_hi_(diag_hi) {
    require_hermitian_field(field_);
    if (n_ == 0) fail(Errc::shape_mismatch, "order must be >= 1");
    qbase_ = static_cast<std::uint32_t>(field_->base()->size());
    qext_ = static_cast<std::uint32_t>(field_->size());
    if (diag_hi_ == kFullDiagRange) diag_hi_ = qbase_;
    if (diag_hi_ > qbase_ || diag_lo_ > diag_hi_) fail(Errc::usage_error, "bad diagonal partition range");

    diag_values_.resize(qbase_);
    for (std::uint32_t r = 0; r < qbase_; ++r)
        diag_values_[r] = field_->embed(field_->base()->element_by_rank(r));

    for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t j = i + 1; j < n_; ++j) upper_slots_.emplace_back(i, j);

    diag_digits_.assign(n_, 0);
    diag_digits_[0] = diag_lo_;
    upper_digits_.assign(upper_slots_.size(), 0);
    entries_.assign(std::size_t(n_) * n_, 0);
    if (total() > cap)
        fail(Errc::enumeration_too_large,
             "partition has " + total().str() + " matrices, cap is " + std::to_string(cap));
}

Count HermitianEnumerator::total() const {
    Count upper = pow_count(Count(qext_), upper_slots_.size());
    Count other_diag = pow_count(Count(qbase_), n_ - 1);
    return Count(diag_hi_ - diag_lo_) * other_diag * upper;
}

void HermitianEnumerator::write_diag(std::uint32_t slot) {
    entries_[std::size_t(slot) * n_ + slot] = diag_values_[diag_digits_[slot]];
}

void HermitianEnumerator::write_upper(std::uint32_t slot) {
    const auto [i, j] = upper_slots_[slot];
    const std::uint32_t v = field_->element_by_rank(upper_digits_[slot]);
    entries_[std::size_t(i) * n_ + j] = v;
    entries_[std::size_t(j) * n_ + i] = field_->conjugate(v);
}

bool HermitianEnumerator::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (diag_lo_ == diag_hi_) {
            done_ = true;
            return false;
        }
        for (std::uint32_t i = 0; i < n_; ++i) write_diag(i);
        for (std::uint32_t s = 0; s < upper_slots_.size(); ++s) write_upper(s);
        return true;
    }
    // Odometer, least significant slot last.
    for (std::size_t s = upper_digits_.size(); s-- > 0;) {
        if (++upper_digits_[s] < qext_) {
            write_upper(static_cast<std::uint32_t>(s));
            return true;
        }
        upper_digits_[s] = 0;
        write_upper(static_cast<std::uint32_t>(s));
    }
    for (std::size_t s = diag_digits_.size(); s-- > 0;) {
        const std::uint32_t radix = (s == 0) ? diag_hi_ : qbase_;
        if (++diag_digits_[s] < radix) {
            write_diag(static_cast<std::uint32_t>(s));
            return true;
        }
        diag_digits_[s] = (s == 0) ? diag_lo_ : 0;
        write_diag(static_cast<std::uint32_t>(s));
    }
    done_ = true;
    return false;
}

namespace {

// Rejection sampling keeps the draw uniform and identical on every platform
// (mt19937_64 output is fully specified by the standard).
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t m) {
    const std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % m + 1) % m;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - rem;
    std::uint64_t x;
    do {
        x = gen();
    } while (x > limit);
    return x % m;
}

} // namespace

HermitianMatrix sample_hermitian(FieldPtr field, std::uint32_t n, std::uint64_t seed) {
    require_hermitian_field(field);
    if (n == 0) fail(Errc::shape_mismatch, "order must be >= 1");
    std::mt19937_64 gen(seed);
    const std::uint64_t qb = field->base()->size();
    const std::uint64_t qe = field->size();
    std::vector<std::uint32_t> entries(std::size_t(n) * n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
        entries[std::size_t(i) * n + i] =
            field->embed(static_cast<std::uint32_t>(uniform_below(gen, qb)));
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const auto v = static_cast<std::uint32_t>(uniform_below(gen, qe));
            entries[std::size_t(i) * n + j] = v;
            entries[std::size_t(j) * n + i] = field->conjugate(v);
        }
    }
    return {std::move(field), n, std::move(entries), HermitianMatrix::Unchecked{}};
}

} // namespace hermes
