#include "hermes/error.hpp"
#include "hermes/field.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace hermes;

namespace {

// Degree-2 polynomials over GF(p) have a nontrivial factor iff they have a
// root; an independent irreducibility test for the quadratic moduli.
bool quadratic_irreducible(std::uint64_t p, std::uint32_t c0, std::uint32_t c1) {
    for (std::uint64_t x = 0; x < p; ++x)
        if ((x * x + c1 * x + c0) % p == 0) return false;
    return true;
}

std::mt19937_64 rng(0xfeedbeef);

std::uint32_t random_value(const FieldPtr& f) {
    return static_cast<std::uint32_t>(rng() % f->size());
}

} // namespace

TEST_CASE("prime fields and canonical moduli") {
    auto gf2 = make_field(2, 1);
    CHECK(gf2->size() == 2);
    CHECK(gf2->modulus() == std::vector<std::uint32_t>{0}); // x - 0 convention
    CHECK(gf2->add(1, 1) == 0);
    CHECK(gf2->mul(1, 1) == 1);

    // x^2+x+1 is the unique irreducible monic quadratic over GF(2).
    int irreducible = 0;
    std::vector<std::uint32_t> only;
    for (std::uint32_t c0 = 0; c0 < 2; ++c0)
        for (std::uint32_t c1 = 0; c1 < 2; ++c1)
            if (quadratic_irreducible(2, c0, c1)) {
                ++irreducible;
                only = {c0, c1};
            }
    CHECK(irreducible == 1);
    auto gf4 = make_field(2, 2);
    CHECK(gf4->modulus() == only);
    CHECK(gf4->modulus() == std::vector<std::uint32_t>{1, 1});

    // GF(9): the selection must be the first irreducible quadratic in lex
    // order over (c0, c1), c0 most significant.
    auto gf9 = make_field(3, 2);
    std::vector<std::uint32_t> first;
    for (std::uint32_t c0 = 0; c0 < 3 && first.empty(); ++c0)
        for (std::uint32_t c1 = 0; c1 < 3; ++c1)
            if (quadratic_irreducible(3, c0, c1)) {
                first = {c0, c1};
                break;
            }
    CHECK(gf9->modulus() == first);
    CHECK(first == std::vector<std::uint32_t>{1, 0}); // x^2 + 1

    CHECK(make_field(2, 2)->modulus() == make_field(2, 2)->modulus()); // deterministic

    CHECK_THROWS_WITH_AS(make_field(4, 1), doctest::Contains("not prime"), Error);
    CHECK_THROWS_AS(make_field(2, 17), Error);   // 2^17 over the cap
    CHECK_THROWS_AS(make_field(65537, 1), Error); // prime but over the cap
}

TEST_CASE("GF(4) arithmetic around the modulus root") {
    auto gf4 = quadratic_extension(make_field(2, 1));
    const std::uint32_t w = 2; // digits (0,1): the class of x
    CHECK(gf4->mul(w, w) == 3); // x^2 = x + 1
    CHECK(gf4->inv(1) == 1);
    CHECK(gf4->conjugate(0) == 0);
    CHECK(gf4->conjugate(1) == 1);
    CHECK(gf4->conjugate(w) == 3); // w^2 = w + 1
}

TEST_CASE("quadratic extensions and embeddings") {
    auto gf4 = quadratic_extension(make_field(2, 1));
    CHECK(gf4->size() == 4);
    CHECK(gf4->base()->size() == 2);

    auto gf9 = quadratic_extension(make_field(3, 1));
    CHECK(gf9->size() == 9);

    // Non-prime base: the embedding must be a field homomorphism.
    auto gf4_base = make_field(2, 2);
    auto gf16 = quadratic_extension(gf4_base);
    CHECK(gf16->size() == 16);
    for (std::uint32_t a = 0; a < 4; ++a) {
        for (std::uint32_t b = 0; b < 4; ++b) {
            CHECK(gf16->embed(gf4_base->add(a, b)) == gf16->add(gf16->embed(a), gf16->embed(b)));
            CHECK(gf16->embed(gf4_base->mul(a, b)) == gf16->mul(gf16->embed(a), gf16->embed(b)));
        }
    }
    CHECK(gf16->embed(1) == 1);

    CHECK_THROWS_AS(quadratic_extension(make_field(2, 9)), Error); // 2^18 over the cap
    CHECK_THROWS_AS(make_field(2, 2)->conjugate(1), Error);        // no base attached
}

TEST_CASE("field axioms on random triples") {
    for (auto f : {quadratic_extension(make_field(2, 1)), quadratic_extension(make_field(3, 1)),
                   quadratic_extension(make_field(2, 2)), quadratic_extension(make_field(5, 1)),
                   make_field(7, 2)}) {
        for (int i = 0; i < 200; ++i) {
            const auto a = random_value(f), b = random_value(f), c = random_value(f);
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
            CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
        }
        CHECK_THROWS_AS(f->inv(0), Error);
    }
}

TEST_CASE("conjugation is an involutive automorphism fixing exactly GF(q)") {
    for (std::uint64_t qb : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        const auto pp = prime_power_decomposition(qb);
        REQUIRE(pp);
        auto ext = quadratic_extension(make_field(pp->first, pp->second));
        std::uint64_t fixed = 0;
        for (std::uint32_t x = 0; x < ext->size(); ++x) {
            CHECK(ext->conjugate(ext->conjugate(x)) == x);
            if (ext->conjugate(x) == x) {
                ++fixed;
                CHECK(ext->in_base_subfield(x));
            } else {
                CHECK(!ext->in_base_subfield(x));
            }
        }
        CHECK(fixed == qb);
        for (int i = 0; i < 100; ++i) {
            const auto a = random_value(ext), b = random_value(ext);
            CHECK(ext->conjugate(ext->add(a, b)) == ext->add(ext->conjugate(a), ext->conjugate(b)));
            CHECK(ext->conjugate(ext->mul(a, b)) == ext->mul(ext->conjugate(a), ext->conjugate(b)));
        }
    }
}

TEST_CASE("multiplicative group order") {
    for (std::uint64_t qb : {2, 3, 4, 5, 7, 8}) {
        const auto pp = prime_power_decomposition(qb);
        auto ext = quadratic_extension(make_field(pp->first, pp->second));
        for (std::uint32_t x = 1; x < ext->size(); ++x) CHECK(ext->pow(x, ext->size() - 1) == 1);
    }
    auto big = quadratic_extension(make_field(13, 1));
    for (int i = 0; i < 50; ++i) {
        const auto x = random_value(big);
        if (x != 0) CHECK(big->pow(x, big->size() - 1) == 1);
    }
}

TEST_CASE("base coordinates split GF(q^2) over the embedded GF(q)") {
    for (std::uint64_t qb : {2, 3, 4, 5}) {
        const auto pp = prime_power_decomposition(qb);
        auto ext = quadratic_extension(make_field(pp->first, pp->second));
        CHECK(!ext->in_base_subfield(ext->beta()));
        std::set<std::uint32_t> seen;
        for (std::uint32_t v = 0; v < ext->size(); ++v) {
            const auto xy = ext->base_coordinates(v);
            CHECK(ext->add(ext->embed(xy[0]), ext->mul(ext->embed(xy[1]), ext->beta())) == v);
            CHECK((xy[1] == 0) == ext->in_base_subfield(v));
            if (xy[1] == 0) CHECK(ext->to_base(v) == xy[0]);
            seen.insert(v);
        }
        CHECK(seen.size() == ext->size());
    }
}

TEST_CASE("element serialization") {
    auto gf4 = make_field(2, 2);
    CHECK(gf4->digit_string(0) == "00");
    CHECK(gf4->digit_string(1) == "10");
    CHECK(gf4->digit_string(2) == "01");
    CHECK(gf4->digit_string(3) == "11");
    for (std::uint32_t v = 0; v < 4; ++v) CHECK(gf4->parse_digit_string(gf4->digit_string(v)) == v);

    // Multi-decimal characteristic uses comma-separated digits.
    auto big = make_field(11, 2);
    CHECK(big->digit_string(10) == "10,0");
    CHECK(big->digit_string(11) == "0,1");
    for (std::uint32_t v : {0u, 1u, 10u, 11u, 120u}) CHECK(big->parse_digit_string(big->digit_string(v)) == v);

    CHECK_THROWS_AS(gf4->parse_digit_string("0"), Error);   // wrong length
    CHECK_THROWS_AS(gf4->parse_digit_string("20"), Error);  // digit >= p
    CHECK_THROWS_AS(gf4->parse_digit_string("ab"), Error);

    // The enumeration order is exactly the digit-string order.
    for (auto f : {make_field(2, 2), make_field(3, 2), make_field(2, 3)}) {
        for (std::uint32_t r = 0; r + 1 < f->size(); ++r) {
            const auto da = f->digits_of(f->element_by_rank(r));
            const auto db = f->digits_of(f->element_by_rank(r + 1));
            CHECK(da < db); // little-endian digit tuples, constant term first
        }
    }
}

TEST_CASE("element wrapper") {
    auto gf4 = quadratic_extension(make_field(2, 1));
    auto gf9 = quadratic_extension(make_field(3, 1));
    Element w(gf4, 2);
    CHECK((w * w).value() == 3);
    CHECK((w + w).is_zero());
    CHECK((-w + w).is_zero());
    CHECK(w.inverse() * w == Element(gf4, 1));
    CHECK(w.conjugate().value() == 3);
    CHECK(!w.in_base_subfield());
    CHECK(Element(gf4, 1).in_base_subfield());
    CHECK(w.digits() == "01");
    CHECK_THROWS_AS(w + Element(gf9, 1), Error);
    CHECK_THROWS_AS(Element(gf4, 7), Error);
}
