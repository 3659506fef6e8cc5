#include "hermes/field.hpp"

#include "hermes/error.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace hermes {

namespace {

// Dense little-endian coefficient vectors over GF(p), used only during field
// construction.
using Poly = std::vector<std::uint32_t>;

std::uint32_t poly_degree(const Poly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return static_cast<std::uint32_t>(i);
    return 0;
}

// f mod g for monic g; f is consumed.
bool divides(Poly f, const Poly& g, std::uint64_t p) {
    const std::uint32_t dg = poly_degree(g);
    for (std::size_t i = f.size(); i-- > 0;) {
        if (i < dg) break;
        const std::uint64_t c = f[i];
        if (c == 0) continue;
        const std::size_t shift = i - dg;
        for (std::uint32_t j = 0; j <= dg; ++j) {
            std::uint64_t sub = (c * g[j]) % p;
            f[shift + j] = static_cast<std::uint32_t>((f[shift + j] + p - sub) % p);
        }
    }
    return std::all_of(f.begin(), f.end(), [](std::uint32_t c) { return c == 0; });
}

// Monic f of degree e is irreducible over GF(p) iff no monic polynomial of
// degree 1..e/2 divides it.
bool is_irreducible(const Poly& f, std::uint64_t p, std::uint32_t e) {
    if (e == 1) return true;
    for (std::uint32_t d = 1; 2 * d <= e; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly g(d + 1, 0);
            std::uint64_t v = low;
            for (std::uint32_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (divides(f, g, p)) return false;
        }
    }
    return true;
}

// Low coefficients of the lexicographically smallest monic irreducible of
// degree e, candidates ordered by (c_0, c_1, ...) with c_0 most significant.
Poly smallest_irreducible(std::uint64_t p, std::uint32_t e, std::uint64_t q) {
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        Poly low(e, 0);
        std::uint64_t v = idx;
        for (std::uint32_t i = e; i-- > 0;) {
            low[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        Poly f = low;
        f.push_back(1);
        if (is_irreducible(f, p, e)) return low;
    }
    fail(Errc::too_large, "no irreducible polynomial found"); // unreachable
}

} // namespace

FieldPtr make_field(std::uint64_t p, std::uint32_t e, std::uint64_t size_cap) {
    if (!is_prime(p)) fail(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (e == 0) fail(Errc::usage_error, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (q > size_cap / p) fail(Errc::too_large, "p^e exceeds the field size cap " + std::to_string(size_cap));
        q *= p;
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->e_ = e;
    f->q_ = q;
    f->modulus_ = smallest_irreducible(p, e, q);
    f->reduction_.resize(e);
    for (std::uint32_t i = 0; i < e; ++i)
        f->reduction_[i] = static_cast<std::uint32_t>((p - f->modulus_[i]) % p);
    f->build_tables();
    return f;
}

FieldPtr quadratic_extension(const FieldPtr& base, std::uint64_t size_cap) {
    if (!base) fail(Errc::usage_error, "null base field");
    if (base->size() > size_cap / base->size())
        fail(Errc::too_large, "q^2 exceeds the field size cap " + std::to_string(size_cap));
    auto ext = std::const_pointer_cast<Field>(
        make_field(base->characteristic(), 2 * base->degree(), size_cap));
    ext->attach_base(base);
    return ext;
}

std::vector<std::uint32_t> Field::digits_of(std::uint32_t v) const {
    std::vector<std::uint32_t> d(e_);
    std::uint64_t x = v;
    for (std::uint32_t i = 0; i < e_; ++i) {
        d[i] = static_cast<std::uint32_t>(x % p_);
        x /= p_;
    }
    return d;
}

std::uint32_t Field::pack_digits(const std::vector<std::uint32_t>& digits) const {
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i];
    return static_cast<std::uint32_t>(v);
}

void Field::build_tables() {
    const std::uint32_t q = static_cast<std::uint32_t>(q_);

    neg_table_.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        std::uint64_t v = 0;
        std::uint64_t x = a;
        std::uint64_t stride = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            v += ((p_ - x % p_) % p_) * stride;
            x /= p_;
            stride *= p_;
        }
        neg_table_[a] = static_cast<std::uint32_t>(v);
    }

    // Element order by little-endian digit string: sort by the digit-reversed
    // packed value.
    order_.resize(q);
    std::iota(order_.begin(), order_.end(), 0u);
    std::vector<std::uint64_t> rev(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        std::uint64_t r = 0;
        std::uint64_t x = a;
        for (std::uint32_t i = 0; i < e_; ++i) {
            r = r * p_ + x % p_;
            x /= p_;
        }
        rev[a] = r;
    }
    std::sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) { return rev[a] < rev[b]; });
    order_rank_.resize(q);
    for (std::uint32_t r = 0; r < q; ++r) order_rank_[order_[r]] = r;

    if (q <= 256) {
        add_table_.resize(std::size_t(q) * q);
        mul_table_.resize(std::size_t(q) * q);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                std::uint64_t s = 0, stride = 1, x = a, y = b;
                for (std::uint32_t i = 0; i < e_; ++i) {
                    s += ((x % p_ + y % p_) % p_) * stride;
                    x /= p_;
                    y /= p_;
                    stride *= p_;
                }
                add_table_[std::size_t(a) * q + b] = static_cast<std::uint32_t>(s);
                mul_table_[std::size_t(a) * q + b] = mul_poly(a, b);
            }
        }
    } else if (q <= 4096) {
        // Discrete log tables over a brute-forced generator.
        for (std::uint32_t g = 2; g < q; ++g) {
            std::vector<std::uint32_t> powers;
            powers.reserve(q - 1);
            std::uint32_t x = 1;
            do {
                powers.push_back(x);
                x = mul_poly(x, g);
            } while (x != 1 && powers.size() < q);
            if (powers.size() == q - 1) {
                antilog_ = std::move(powers);
                log_.assign(q, 0);
                for (std::uint32_t i = 0; i < q - 1; ++i) log_[antilog_[i]] = i;
                break;
            }
        }
        assert(!antilog_.empty());
    }
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
    if (p_ == 2) return a ^ b;
    std::uint64_t s = 0, stride = 1, x = a, y = b;
    for (std::uint32_t i = 0; i < e_; ++i) {
        s += ((x % p_ + y % p_) % p_) * stride;
        x /= p_;
        y /= p_;
        stride *= p_;
    }
    return static_cast<std::uint32_t>(s);
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_table_[b]); }

std::uint32_t Field::mul_poly(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    std::vector<std::uint64_t> w(2 * e_ - 1, 0);
    std::uint64_t x = a;
    for (std::uint32_t i = 0; i < e_; ++i, x /= p_) {
        const std::uint64_t ai = x % p_;
        if (ai == 0) continue;
        std::uint64_t y = b;
        for (std::uint32_t j = 0; j < e_; ++j, y /= p_) w[i + j] += ai * (y % p_);
    }
    for (std::size_t i = w.size(); i-- > e_;) {
        const std::uint64_t c = w[i] % p_;
        w[i] = 0;
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < e_; ++j) w[i - e_ + j] += c * reduction_[j];
    }
    std::uint64_t v = 0;
    for (std::uint32_t i = e_; i-- > 0;) v = v * p_ + w[i] % p_;
    return static_cast<std::uint32_t>(v);
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (!mul_table_.empty()) return mul_table_[std::size_t(a) * q_ + b];
    if (!log_.empty()) {
        if (a == 0 || b == 0) return 0;
        const std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
        return antilog_[s >= q_ - 1 ? s - (q_ - 1) : s];
    }
    return mul_poly(a, b);
}

std::uint32_t Field::pow_generic(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = 1;
    std::uint32_t b = a;
    while (k != 0) {
        if (k & 1) r = mul(r, b);
        k >>= 1;
        if (k != 0) b = mul(b, b);
    }
    return r;
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    if (!log_.empty()) {
        const std::uint64_t l = (std::uint64_t(log_[a]) * (k % (q_ - 1))) % (q_ - 1);
        return antilog_[l];
    }
    return pow_generic(a, k);
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) fail(Errc::division_by_zero, "inverse of zero");
    if (!log_.empty()) return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow_generic(a, q_ - 2);
}

std::uint32_t Field::conjugate(std::uint32_t a) const {
    if (!has_base()) fail(Errc::not_quadratic_extension, "conjugation needs a quadratic extension");
    return conj_table_[a];
}

std::uint32_t Field::embed(std::uint32_t base_value) const {
    if (!has_base()) fail(Errc::not_quadratic_extension, "embedding needs a quadratic extension");
    return embed_table_[base_value];
}

bool Field::in_base_subfield(std::uint32_t a) const {
    if (!has_base()) fail(Errc::not_quadratic_extension, "subfield test needs a quadratic extension");
    return to_base_[a] >= 0;
}

std::uint32_t Field::to_base(std::uint32_t a) const {
    if (!has_base()) fail(Errc::not_quadratic_extension, "subfield test needs a quadratic extension");
    if (to_base_[a] < 0) fail(Errc::field_mismatch, "value lies outside the embedded subfield");
    return static_cast<std::uint32_t>(to_base_[a]);
}

std::array<std::uint32_t, 2> Field::base_coordinates(std::uint32_t a) const {
    if (!has_base()) fail(Errc::not_quadratic_extension, "coordinates need a quadratic extension");
    return coords_[a];
}

void Field::attach_base(FieldPtr base) {
    base_ = std::move(base);
    const std::uint32_t qb = static_cast<std::uint32_t>(base_->size());
    const std::uint32_t q = static_cast<std::uint32_t>(q_);

    // Root of the base modulus, smallest by encoding; it generates the image
    // of the base power basis.
    const auto& bm = base_->modulus();
    const std::uint32_t eb = base_->degree();
    std::uint32_t rho = 0;
    bool found = false;
    for (std::uint32_t r = 0; r < q && !found; ++r) {
        std::uint32_t acc = 1; // monic leading coefficient
        for (std::uint32_t i = eb; i-- > 0;) acc = add(mul(acc, r), bm[i]);
        if (acc == 0) {
            rho = r;
            found = true;
        }
    }
    assert(found);

    embed_table_.resize(qb);
    to_base_.assign(q, -1);
    for (std::uint32_t v = 0; v < qb; ++v) {
        std::uint64_t x = v;
        std::vector<std::uint32_t> d(eb);
        for (std::uint32_t i = 0; i < eb; ++i) {
            d[i] = static_cast<std::uint32_t>(x % base_->characteristic());
            x /= base_->characteristic();
        }
        std::uint32_t acc = 0;
        for (std::uint32_t i = eb; i-- > 0;) acc = add(mul(acc, rho), d[i]);
        embed_table_[v] = acc;
        to_base_[acc] = static_cast<std::int32_t>(v);
    }

    beta_ = 0;
    while (to_base_[beta_] >= 0) ++beta_;

    coords_.assign(q, {0, 0});
    for (std::uint32_t x = 0; x < qb; ++x)
        for (std::uint32_t y = 0; y < qb; ++y)
            coords_[add(embed_table_[x], mul(embed_table_[y], beta_))] = {x, y};

    conj_table_.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) conj_table_[a] = pow(a, qb);
}

std::string Field::digit_string(std::uint32_t v) const {
    const auto d = digits_of(v);
    std::string s;
    if (p_ < 10) {
        s.reserve(e_);
        for (auto c : d) s.push_back(static_cast<char>('0' + c));
    } else {
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (i) s.push_back(',');
            s += std::to_string(d[i]);
        }
    }
    return s;
}

std::uint32_t Field::parse_digit_string(std::string_view s) const {
    std::vector<std::uint32_t> d;
    if (p_ < 10) {
        for (char c : s) {
            if (c < '0' || c > '9') fail(Errc::parse_error, "bad digit character in element string");
            d.push_back(static_cast<std::uint32_t>(c - '0'));
        }
    } else {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t next = s.find(',', pos);
            std::string_view tok = s.substr(pos, next == std::string_view::npos ? next : next - pos);
            if (tok.empty()) fail(Errc::parse_error, "empty digit in element string");
            std::uint32_t val = 0;
            for (char c : tok) {
                if (c < '0' || c > '9') fail(Errc::parse_error, "bad digit character in element string");
                val = val * 10 + static_cast<std::uint32_t>(c - '0');
            }
            d.push_back(val);
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
    }
    if (d.size() != e_)
        fail(Errc::parse_error, "element string has " + std::to_string(d.size()) + " digits, expected " +
                                    std::to_string(e_));
    for (auto c : d)
        if (c >= p_) fail(Errc::parse_error, "element digit " + std::to_string(c) + " is not below p");
    return pack_digits(d);
}

Element::Element(FieldPtr field, std::uint32_t value) : field_(std::move(field)), value_(value) {
    if (!field_) fail(Errc::usage_error, "element without a field");
    if (value_ >= field_->size()) fail(Errc::usage_error, "element value outside the field");
}

const Field& Element::owner(const Element& other) const {
    if (!field_ || !other.field_) fail(Errc::usage_error, "operation on a null element");
    if (!field_->same_structure(*other.field_)) fail(Errc::field_mismatch, "elements of different fields");
    return *field_;
}

Element Element::operator+(const Element& o) const { return {field_, owner(o).add(value_, o.value_)}; }
Element Element::operator-(const Element& o) const { return {field_, owner(o).sub(value_, o.value_)}; }
Element Element::operator*(const Element& o) const { return {field_, owner(o).mul(value_, o.value_)}; }
Element Element::operator-() const { return {field_, owner(*this).neg(value_)}; }
Element Element::inverse() const { return {field_, owner(*this).inv(value_)}; }
Element Element::conjugate() const { return {field_, owner(*this).conjugate(value_)}; }
Element Element::pow(std::uint64_t k) const { return {field_, owner(*this).pow(value_, k)}; }
bool Element::in_base_subfield() const { return owner(*this).in_base_subfield(value_); }

} // namespace hermes
