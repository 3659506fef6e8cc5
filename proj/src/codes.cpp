#include "hermes/codes.hpp"

#include "hermes/counting.hpp"
#include "hermes/error.hpp"

#include <numeric>
#include <string>

namespace hermes {

namespace {

// Hypothetical parameter sets (arbitrary M, d) are legal as long as the
// packing radius stays inside [0, n]; infeasible ones are then rejected by
// the bound checks themselves, which is what screening is for.
void validate_params(const CodeParams& p) {
    if (p.q < 2) fail(Errc::invalid_parameters, "q must be >= 2");
    if (p.n == 0) fail(Errc::invalid_parameters, "order must be >= 1");
    if (p.size < 1) fail(Errc::invalid_parameters, "code size must be >= 1");
    if (p.min_dist == 0) fail(Errc::invalid_parameters, "minimum distance must be >= 1");
    if (p.packing_radius() > p.n)
        fail(Errc::radius_out_of_range, "packing radius exceeds the matrix order");
}

std::int64_t singleton_exponent(const CodeParams& p) {
    const auto se = std::int64_t(p.n) * (std::int64_t(p.n) - p.min_dist + 1);
    if (se < 0) fail(Errc::invalid_parameters, "distance is too large for any code in H_n");
    return se;
}

} // namespace

CodeParams mrd_params(std::uint64_t q, std::uint32_t n, std::uint32_t d) {
    CodeParams p{q, n, 0, d};
    p.size = pow_count(q, static_cast<std::uint64_t>(singleton_exponent(p)));
    validate_params(p);
    return p;
}

SingletonReport singleton_check(const CodeParams& params) {
    validate_params(params);
    const Count bound = pow_count(params.q, static_cast<std::uint64_t>(singleton_exponent(params)));
    if (params.size > bound)
        fail(Errc::invalid_parameters, "size " + params.size.str() + " exceeds the Singleton-like bound " +
                                           bound.str() + "; no such code exists");
    return {bound, params.size == bound};
}

PackingReport sphere_packing_check(const CodeParams& params) {
    validate_params(params);
    const Count covered = params.size * ball_size(params.q, params.n, params.packing_radius());
    const Count ambient = ambient_size(params.q, params.n);
    if (covered > ambient)
        fail(Errc::invalid_parameters, "M*B_t = " + covered.str() + " exceeds the ambient size " +
                                           ambient.str() + "; the packing bound rules this code out");
    return {covered, ambient, ambient - covered, covered == ambient};
}

Ratio packing_density(const CodeParams& params) {
    const auto report = sphere_packing_check(params);
    return Ratio(report.covered, report.ambient);
}

MrdDensityBounds density_bounds_mrd(std::uint64_t q, std::uint32_t n, std::uint32_t d) {
    if (q < 2) fail(Errc::invalid_parameters, "q must be >= 2");
    if (d < 1 || d > n) fail(Errc::invalid_parameters, "distance must lie in [1, n]");
    const std::int64_t t = (d - 1) / 2;
    const bool even = d % 2 == 0;
    const std::int64_t shift = even ? -std::int64_t(n) : 0;
    Ratio lower = pow_ratio(q, shift - t * t - t);
    Ratio upper = pow_ratio(q, shift - t * t + t + 3);
    if (upper > 1) upper = 1; // densities never exceed 1
    return {{std::move(lower), std::move(upper)}, even};
}

Ratio density_upper_bound_general(std::uint64_t q, std::uint32_t n, std::uint32_t d) {
    if (q < 2) fail(Errc::invalid_parameters, "q must be >= 2");
    if (d < 2 || d > 6) fail(Errc::unsupported_distance, "general density bound covers d in {2,...,6}");
    if (d > n) fail(Errc::invalid_parameters, "distance exceeds the matrix order");
    const std::int64_t sn = n;
    const Ratio qp1(Count(q + 1));
    switch (d) {
        case 2:
            return pow_ratio(q, -sn);
        case 3:
            return (pow_ratio(q, 1 - 2 * sn) + 1) / qp1;
        case 4:
            return (pow_ratio(q, 1 - 3 * sn) + pow_ratio(q, -sn)) / qp1;
        default: {
            const Ratio q2n(pow_count(q, 2ull * n));
            const Ratio q2n2(pow_count(q, 2ull * (n - 1)));
            const Ratio ball2 = 1 + (q2n - 1) / qp1 + Ratio(Count(q)) * (q2n - 1) * (q2n2 - 1) / (qp1 * (Ratio(Count(q)) * Count(q) - 1));
            return pow_ratio(q, d == 5 ? -4 * sn : -5 * sn) * ball2;
        }
    }
}

DensityLimit density_limit(std::uint64_t q, std::uint32_t d) {
    if (q < 2) fail(Errc::invalid_parameters, "q must be >= 2");
    if (d == 0) fail(Errc::invalid_parameters, "distance must be >= 1");
    DensityLimit lim;
    lim.even_distance = d % 2 == 0;
    if (lim.even_distance) {
        lim.exact = Ratio(0);
        return lim;
    }
    const std::int64_t t = (d - 1) / 2;
    lim.bracket = RatioBracket{pow_ratio(q, -t * t - t), pow_ratio(q, -t * t + t + 3)};
    if (d == 3) lim.exact = Ratio(Count(1), Count(q + 1));
    return lim;
}

std::vector<std::uint32_t> base_coordinates_of(const HermitianMatrix& m) {
    const auto& f = *m.field();
    const std::uint32_t n = m.order();
    std::vector<std::uint32_t> coords;
    coords.reserve(std::size_t(n) * n);
    for (std::uint32_t i = 0; i < n; ++i) coords.push_back(f.to_base(m.value_at(i, i)));
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const auto xy = f.base_coordinates(m.value_at(i, j));
            coords.push_back(xy[0]);
            coords.push_back(xy[1]);
        }
    }
    return coords;
}

LinearCode::LinearCode(FieldPtr field, std::uint32_t n, std::vector<HermitianMatrix> basis)
    : field_(std::move(field)), n_(n), basis_(std::move(basis)) {
    if (!field_ || !field_->has_base())
        fail(Errc::not_quadratic_extension, "codes live over a quadratic extension");
    if (n_ == 0) fail(Errc::shape_mismatch, "order must be >= 1");
    const auto base = field_->base();

    // Incremental row reduction over GF(q); a basis matrix whose coordinate
    // vector reduces to zero is dependent on its predecessors.
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::size_t> pivots;
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        const auto& m = basis_[b];
        if (m.order() != n_) fail(Errc::shape_mismatch, "basis matrix " + std::to_string(b) + " has wrong order");
        if (!m.field()->same_structure(*field_))
            fail(Errc::field_mismatch, "basis matrix " + std::to_string(b) + " lives over a different field");
        auto vec = base_coordinates_of(m);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::uint32_t c = vec[pivots[r]];
            if (c == 0) continue;
            for (std::size_t col = 0; col < vec.size(); ++col)
                vec[col] = base->sub(vec[col], base->mul(c, rows[r][col]));
        }
        std::size_t pivot = vec.size();
        for (std::size_t col = 0; col < vec.size(); ++col)
            if (vec[col] != 0) {
                pivot = col;
                break;
            }
        if (pivot == vec.size())
            fail(Errc::linearly_dependent,
                 "basis matrix " + std::to_string(b) + " is dependent on its predecessors");
        const std::uint32_t scale = base->inv(vec[pivot]);
        for (auto& v : vec) v = base->mul(scale, v);
        rows.push_back(std::move(vec));
        pivots.push_back(pivot);
    }
}

Count LinearCode::size() const { return pow_count(field_->base()->size(), basis_.size()); }

HermitianMatrix LinearCode::codeword(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != basis_.size()) fail(Errc::shape_mismatch, "coefficient count differs from dimension");
    HermitianMatrix acc = HermitianMatrix::zero(field_, n_);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        acc = acc + basis_[i].scaled_by_base(coeffs[i]);
    }
    return acc;
}

std::uint32_t LinearCode::min_distance(std::uint64_t cap) const {
    const auto base = field_->base();
    const std::uint32_t k = dimension();
    if (k == 0) fail(Errc::degenerate_code, "single-codeword code has no minimum distance");
    if (size() > cap)
        fail(Errc::codeword_space_too_large,
             "code has " + size().str() + " codewords, cap is " + std::to_string(cap));

    const auto p = static_cast<std::uint32_t>(base->characteristic());
    const std::uint32_t eb = base->degree();
    const std::size_t m = std::size_t(k) * eb;

    // GF(p)-steps: the matrices alpha^j * B_i and their negatives, so each
    // Gray transition is a single entrywise addition.
    std::vector<std::vector<std::uint32_t>> steps, neg_steps;
    steps.reserve(m);
    neg_steps.reserve(m);
    for (std::uint32_t i = 0; i < k; ++i) {
        std::uint32_t power = 1; // alpha^j packed in the base field
        for (std::uint32_t j = 0; j < eb; ++j) {
            const auto s = basis_[i].scaled_by_base(power);
            steps.emplace_back(s.values().begin(), s.values().end());
            const auto ns = -s;
            neg_steps.emplace_back(ns.values().begin(), ns.values().end());
            power = static_cast<std::uint32_t>(power * p);
        }
    }

    // Loopless reflected p-ary Gray walk over the coefficient digits.
    std::vector<std::uint32_t> digit(m, 0);
    std::vector<std::int8_t> dir(m, 1);
    std::vector<std::size_t> focus(m + 1);
    std::iota(focus.begin(), focus.end(), std::size_t{0});

    std::vector<std::uint32_t> word(std::size_t(n_) * n_, 0);
    std::vector<std::uint32_t> scratch(word.size());
    std::uint32_t best = n_ + 1;
    const Field& f = *field_;
    while (true) {
        const std::size_t j = focus[0];
        focus[0] = 0;
        if (j == m) break;
        const auto& delta = dir[j] > 0 ? steps[j] : neg_steps[j];
        for (std::size_t idx = 0; idx < word.size(); ++idx) word[idx] = f.add(word[idx], delta[idx]);
        digit[j] = static_cast<std::uint32_t>(std::int64_t(digit[j]) + dir[j]);
        if (digit[j] == 0 || digit[j] == p - 1) {
            dir[j] = -dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        scratch = word;
        const std::uint32_t r = detail::rank_in_place(f, n_, scratch);
        if (r < best) {
            best = r;
            if (best == 1) break; // nothing below rank 1 among nonzero words
        }
    }
    return best;
}

CodeParams LinearCode::params(std::uint64_t cap) const {
    return {field_->base()->size(), n_, size(), min_distance(cap)};
}

} // namespace hermes
