#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vsch/field.hpp"
#include "vsch/unipoly.hpp"

using namespace vsch;

namespace {

// Small random elements of a generic function field (polynomials of bounded
// support, with an occasional algebraic-generator part for genus 2).
FieldElem random_generic(const FieldDescriptor* f, Rng& rng) {
    ZpPoly num(f->p(), f->poly_nvars());
    const int terms = 1 + static_cast<int>(rng.below(3));
    for (int t = 0; t < terms; ++t) {
        ExpVec m = ExpVec::zero(f->poly_nvars());
        uint32_t deg = 0;
        for (int v = 0; v < f->poly_nvars(); ++v) {
            const uint16_t e = static_cast<uint16_t>(rng.below(2));
            m.e[static_cast<size_t>(v)] = e;
            deg += e;
        }
        m.deg = deg;
        num.add_term(m, static_cast<int64_t>(rng.below(f->p())));
    }
    num.normalize();
    FieldElem e = f->from_poly(num);
    if (f->kind() == FieldDescriptor::Kind::GenericG2 && rng.below(2) == 0)
        e = e + f->g2_k00() * f->from_int(static_cast<int64_t>(1 + rng.below(f->p() - 1)));
    return e;
}

void check_axiom_triple(const FieldElem& a, const FieldElem& b, const FieldElem& c) {
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == a.field()->zero());
    CHECK(a + a.field()->zero() == a);
    CHECK(a * a.field()->one() == a);
    if (!a.is_zero()) {
        CHECK(a * a.inverse() == a.field()->one());
        CHECK((b / a) * a == b);
    }
}

} // namespace

TEST_CASE("prime field axioms, exhaustively") {
    for (uint32_t p : {3u, 5u, 7u}) {
        const FieldDescriptor* f = FieldDescriptor::prime(p);
        REQUIRE(f->order() == p);
        for (uint64_t i = 0; i < p; ++i)
            for (uint64_t j = 0; j < p; ++j)
                for (uint64_t k = 0; k < p; ++k)
                    check_axiom_triple(f->element_at(i), f->element_at(j), f->element_at(k));
        CHECK(f->from_int(-1) == f->from_int(static_cast<int64_t>(p) - 1));
        CHECK(f->from_int(static_cast<int64_t>(p)) == f->zero());
    }
}

TEST_CASE("canonical extension moduli are the first irreducibles") {
    CHECK(FieldDescriptor::extension(3, 2)->modulus() == std::vector<uint32_t>{1, 0, 1});
    CHECK(FieldDescriptor::extension(5, 2)->modulus() == std::vector<uint32_t>{2, 0, 1});
    CHECK(FieldDescriptor::extension(7, 2)->modulus() == std::vector<uint32_t>{1, 0, 1});
    for (uint32_t p : {3u, 5u, 7u}) {
        for (int n : {2, 3, 4}) {
            const FieldDescriptor* f = FieldDescriptor::extension(p, n);
            const auto& mod = f->modulus();
            REQUIRE(static_cast<int>(mod.size()) == n + 1);
            CHECK(mod.back() == 1);
            // Cross-check irreducibility with the univariate factorizer.
            const FieldDescriptor* base = FieldDescriptor::prime(p);
            std::vector<FieldElem> cs;
            for (uint32_t c : mod) cs.push_back(base->from_int(c));
            CHECK(UniPoly(base, cs).is_irreducible());
        }
    }
}

TEST_CASE("pinned modulus returns the interned descriptor") {
    CHECK(FieldDescriptor::extension_with_modulus(3, {1, 0, 1}) ==
          FieldDescriptor::extension(3, 2));
    CHECK_THROWS(FieldDescriptor::extension_with_modulus(5, {1, 0, 1}));  // reducible
}

TEST_CASE("finite enumeration round trip") {
    for (uint32_t p : {3u, 5u}) {
        const FieldDescriptor* f = FieldDescriptor::extension(p, 3);
        REQUIRE(f->order() == static_cast<uint64_t>(p) * p * p);
        for (uint64_t i = 0; i < f->order(); ++i) CHECK(f->index_of(f->element_at(i)) == i);
        CHECK(f->element_at(0) == f->zero());
        CHECK(f->element_at(1) == f->one());
    }
}

TEST_CASE("extension field axioms on random triples") {
    for (uint32_t p : {3u, 5u, 7u}) {
        const FieldDescriptor* f = FieldDescriptor::extension(p, 4);
        Rng rng(17 * p);
        for (int it = 0; it < 1000; ++it)
            check_axiom_triple(f->random_element(rng), f->random_element(rng),
                               f->random_element(rng));
    }
}

TEST_CASE("frobenius is the p-power automorphism") {
    for (uint32_t p : {3u, 5u, 7u}) {
        const FieldDescriptor* f = FieldDescriptor::extension(p, 4);
        Rng rng(99 + p);
        for (int it = 0; it < 100; ++it) {
            FieldElem a = f->random_element(rng), b = f->random_element(rng);
            CHECK(a.frobenius() == a.pow(p));
            CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
            CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
            FieldElem r = a;
            for (int i = 0; i < 4; ++i) r = r.frobenius();
            CHECK(r == a);
        }
    }
}

TEST_CASE("square roots are canonical and counted") {
    for (uint32_t p : {3u, 5u, 7u}) {
        const FieldDescriptor* f = FieldDescriptor::extension(p, 2);
        const uint64_t q = f->order();
        uint64_t squares = 0;
        for (uint64_t i = 0; i < q; ++i) {
            FieldElem a = f->element_at(i);
            auto r = sqrt_element(a);
            const bool is_square = a.is_zero() || a.pow((q - 1) / 2).is_one();
            CHECK(r.has_value() == is_square);
            if (r) {
                ++squares;
                CHECK(*r * *r == a);
                CHECK(f->index_of(*r) <= f->index_of(-*r));
            }
        }
        CHECK(squares == (q - 1) / 2 + 1);
    }
}

TEST_CASE("canonical square root of -1") {
    CHECK(!FieldDescriptor::prime(3)->mu0().has_value());
    CHECK(!FieldDescriptor::prime(7)->mu0().has_value());
    auto m5 = FieldDescriptor::prime(5)->mu0();
    REQUIRE(m5.has_value());
    CHECK(*m5 == FieldDescriptor::prime(5)->from_int(2));
    for (uint32_t p : {3u, 5u, 7u}) {
        const FieldDescriptor* f = FieldDescriptor::extension(p, 2);
        auto m = f->mu0();
        REQUIRE(m.has_value());  // q = p^2 is 1 mod 4 for odd p
        CHECK(*m * *m == f->from_int(-1));
        CHECK(f->index_of(*m) <= f->index_of(-*m));
    }
}

TEST_CASE("genus-2 function field: algebraic generator and reduction") {
    for (uint32_t p : {3u, 5u, 7u}) {
        const FieldDescriptor* f = FieldDescriptor::generic_g2(p);
        REQUIRE(f->poly_nvars() == 3);
        FieldElem k00 = f->g2_k00();
        CHECK(k00 * k00 == f->from_poly(f->g2_disc()));
        // 1/k00 = k00 / W.
        CHECK(k00.inverse() == k00 / f->from_poly(f->g2_disc()));
        // (k01^2 - 1) / (k01 - 1) reduces to k01 + 1.
        ZpPoly k01 = ZpPoly::variable(p, 3, 0);
        ZpPoly one = ZpPoly::constant(p, 3, 1);
        CHECK(f->from_fraction(k01 * k01 - one, k01 - one) == f->from_poly(k01 + one));
        Rng rng(5 + p);
        for (int it = 0; it < 50; ++it)
            check_axiom_triple(random_generic(f, rng), random_generic(f, rng),
                               random_generic(f, rng));
        // Denominator clearing produces denominator-free elements.
        for (int it = 0; it < 20; ++it) {
            FieldElem a = random_generic(f, rng), b = random_generic(f, rng);
            if (b.is_zero()) continue;
            FieldElem q = a / b;
            FieldElem cleared = q.times_poly(q.denominator_poly());
            CHECK(cleared.denominator_poly().is_one());
        }
    }
}

TEST_CASE("genus-3 function field axioms") {
    const FieldDescriptor* f = FieldDescriptor::generic_g3(3);
    REQUIRE(f->poly_nvars() == 14);
    REQUIRE(f->var_names().size() == 14);
    Rng rng(41);
    for (int it = 0; it < 30; ++it)
        check_axiom_triple(random_generic(f, rng), random_generic(f, rng),
                           random_generic(f, rng));
}

TEST_CASE("random elements are deterministic per seed") {
    const FieldDescriptor* f = FieldDescriptor::extension(7, 3);
    Rng a(123), b(123);
    for (int i = 0; i < 32; ++i) CHECK(f->random_element(a) == f->random_element(b));
}
