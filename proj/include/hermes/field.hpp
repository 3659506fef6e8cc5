#pragma once

#include "hermes/exact.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hermes {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Largest field size constructed by default. Every use in this library is
/// desk scale; the cap keeps table construction bounded.
inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t(1) << 16;

/// GF(p^e) with a deterministic modulus: the lexicographically smallest monic
/// irreducible polynomial of degree e over GF(p), coefficients compared
/// little-endian. Elements are packed base-p digit vectors (constant term
/// first), so values live in [0, p^e).
///
/// A field built by quadratic_extension() additionally knows its base GF(q),
/// the embedding GF(q) -> GF(q^2), and the conjugation x -> x^q. Fields are
/// immutable after construction and safe to share across threads.
class Field {
  public:
    std::uint64_t characteristic() const { return p_; }
    std::uint32_t degree() const { return e_; }
    std::uint64_t size() const { return q_; }

    /// Non-leading coefficients of the monic modulus, little-endian, length e.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    /// The base field when this field was built as a quadratic extension.
    const FieldPtr& base() const { return base_; }
    bool has_base() const { return base_ != nullptr; }

    // Arithmetic on packed element values.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const { return neg_table_[a]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;

    /// x -> x^q, the automorphism of GF(q^2) fixing exactly the embedded
    /// GF(q). Requires has_base().
    std::uint32_t conjugate(std::uint32_t a) const;

    /// Image of a base-field value under the fixed embedding GF(q) -> GF(q^2).
    std::uint32_t embed(std::uint32_t base_value) const;

    bool in_base_subfield(std::uint32_t a) const;
    /// Preimage under embed(); requires in_base_subfield(a).
    std::uint32_t to_base(std::uint32_t a) const;

    /// GF(q)-coordinates (x, y) of a w.r.t. the basis {1, beta} of GF(q^2):
    /// a = embed(x) + embed(y) * beta. Requires has_base().
    std::array<std::uint32_t, 2> base_coordinates(std::uint32_t a) const;
    /// The chosen second basis element: the smallest packed value outside the
    /// embedded subfield.
    std::uint32_t beta() const { return beta_; }

    // Deterministic element order: little-endian digit strings compared
    // lexicographically. Drives enumeration and golden files.
    std::uint32_t element_by_rank(std::uint32_t r) const { return order_[r]; }
    std::uint32_t rank_of_element(std::uint32_t v) const { return order_rank_[v]; }

    std::vector<std::uint32_t> digits_of(std::uint32_t v) const;
    std::uint32_t pack_digits(const std::vector<std::uint32_t>& digits) const;

    /// Serialized form: base-p digits, constant term first. Single characters
    /// for p < 10, comma-separated decimal digits otherwise.
    std::string digit_string(std::uint32_t v) const;
    std::uint32_t parse_digit_string(std::string_view s) const;

    /// Structural compatibility: same (p, e) — the modulus is canonical, so
    /// two such fields carry identical arithmetic.
    bool same_structure(const Field& other) const { return p_ == other.p_ && e_ == other.e_; }

  private:
    friend FieldPtr make_field(std::uint64_t, std::uint32_t, std::uint64_t);
    friend FieldPtr quadratic_extension(const FieldPtr&, std::uint64_t);
    Field() = default;

    void build_tables();
    void attach_base(FieldPtr base);
    std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow_generic(std::uint32_t a, std::uint64_t k) const;

    std::uint64_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;   // low coefficients of the monic modulus
    std::vector<std::uint32_t> reduction_; // x^e = reduction_(x), low coefficients
    FieldPtr base_;

    // Lookup tables, built as size permits.
    std::vector<std::uint32_t> neg_table_;
    std::vector<std::uint32_t> add_table_;  // q <= 256
    std::vector<std::uint32_t> mul_table_;  // q <= 256
    std::vector<std::uint32_t> log_;        // q <= 4096
    std::vector<std::uint32_t> antilog_;
    std::vector<std::uint32_t> order_;
    std::vector<std::uint32_t> order_rank_;

    // Extension-only tables.
    std::vector<std::uint32_t> conj_table_;
    std::vector<std::uint32_t> embed_table_;
    std::vector<std::int32_t> to_base_;                    // -1 outside the subfield
    std::vector<std::array<std::uint32_t, 2>> coords_;     // value -> (x, y)
    std::uint32_t beta_ = 0;
};

/// GF(p^e) with the canonical modulus. Throws NotPrime for composite p and
/// TooLarge when p^e exceeds the cap.
FieldPtr make_field(std::uint64_t p, std::uint32_t e, std::uint64_t size_cap = kDefaultFieldCap);

/// GF(q^2) over the given GF(q), with embedding and conjugation attached.
FieldPtr quadratic_extension(const FieldPtr& base, std::uint64_t size_cap = kDefaultFieldCap);

/// Value-plus-owner view of a field element; the convenience layer over the
/// packed-value arithmetic on Field. Binary operations require structurally
/// identical owners.
class Element {
  public:
    Element() = default;
    Element(FieldPtr field, std::uint32_t value);

    const FieldPtr& field() const { return field_; }
    std::uint32_t value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element operator-() const;
    Element inverse() const;
    Element conjugate() const;
    Element pow(std::uint64_t k) const;
    bool in_base_subfield() const;

    std::string digits() const { return field_->digit_string(value_); }

    friend bool operator==(const Element& a, const Element& b) {
        return a.value_ == b.value_ && (a.field_ == b.field_ || (a.field_ && b.field_ && a.field_->same_structure(*b.field_)));
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  private:
    const Field& owner(const Element& other) const;
    FieldPtr field_;
    std::uint32_t value_ = 0;
};

} // namespace hermes
