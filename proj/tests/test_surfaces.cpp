#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vsch/surfaces.hpp"

using namespace vsch;

namespace {

// c * (l0^4 + l1^4 + w * l0^2 l1^2) in two variables.
MPoly binary_quartic(const FieldDescriptor* f, const FieldElem& c, const FieldElem& w) {
    MPoly out(f, 2);
    ExpVec m40 = ExpVec::unit(2, 0, 4), m04 = ExpVec::unit(2, 1, 4);
    ExpVec m22 = ExpVec::zero(2);
    m22.e[0] = m22.e[1] = 2;
    m22.deg = 4;
    out.add_term(m40, c);
    out.add_term(m04, c);
    out.add_term(m22, c * w);
    out.normalize();
    return out;
}

FieldElem k_of(const KummerSurface& s, const HElem& a0) {
    switch (a0.index()) {
        case 1: return s.k01;
        case 2: return s.k10;
        default: return s.k11;
    }
}

} // namespace

TEST_CASE("quartic is invariant under the full coordinate group") {
    const FieldDescriptor* f = FieldDescriptor::extension(5, 2);
    Rng rng(5);
    auto s = random_kummer(f, rng);
    REQUIRE(s.has_value());
    MPoly k = kummer_equation(*s);
    CHECK(k.total_degree() == 4);
    CHECK(k.is_homogeneous());
    for (const HElem& a : all_of_h(2)) {
        CHECK(h_translate(k, 2, a) == k);
        CHECK(char_act(k, 2, a) == k);
    }
}

TEST_CASE("coordinate-line restrictions pin the pairwise coefficient convention") {
    const FieldDescriptor* f = FieldDescriptor::prime(7);
    KummerSurface s{f, f->from_int(1), f->from_int(3), f->from_int(4), f->from_int(5)};
    MPoly k = kummer_equation(s);
    // On {y10 = y11 = 0}: y00^4 + y01^4 + k01 y00^2 y01^2.
    MPoly sub = k.substitute({MPoly::variable(f, 4, 0), MPoly::variable(f, 4, 1),
                              MPoly(f, 4), MPoly(f, 4)});
    ExpVec m22 = ExpVec::zero(4);
    m22.e[0] = m22.e[1] = 2;
    m22.deg = 4;
    CHECK(sub.coeff_of(m22) == s.k01);
    // On {y01 = y11 = 0}: coefficient of y00^2 y10^2 is k10.
    MPoly sub2 = k.substitute({MPoly::variable(f, 4, 0), MPoly(f, 4),
                               MPoly::variable(f, 4, 2), MPoly(f, 4)});
    ExpVec n22 = ExpVec::zero(4);
    n22.e[0] = n22.e[2] = 2;
    n22.deg = 4;
    CHECK(sub2.coeff_of(n22) == s.k10);
    // The monomial y00^2 y01^2 appears in exactly one pairwise block.
    CHECK(k.coeff_of(m22) == s.k01);
}

TEST_CASE("parameter relation and validation") {
    for (uint32_t p : {3u, 5u, 7u}) {
        const FieldDescriptor* f = FieldDescriptor::extension(p, 2);
        Rng rng(p);
        int built = 0;
        for (int it = 0; it < 60 && built < 25; ++it) {
            FieldElem k01 = f->random_element(rng), k10 = f->random_element(rng),
                      k11 = f->random_element(rng);
            auto k00 = solve_k00(k01, k10, k11);
            if (!k00) continue;
            ++built;
            CHECK(f->index_of(*k00) <= f->index_of(-*k00));  // canonical root
            KummerSurface s{f, *k00, k01, k10, k11};
            CHECK(kummer_relation_residual(s).is_zero());
        }
        CHECK(built >= 25);
        // Sampled surfaces always validate and are deterministic per seed.
        Rng r1(42), r2(42);
        auto a = random_kummer(f, r1), b = random_kummer(f, r2);
        REQUIRE(a.has_value());
        CHECK(validate_kummer(*a));
        CHECK(kummer_relation_residual(*a).is_zero());
        CHECK((a->k00 == b->k00 && a->k01 == b->k01 && a->k10 == b->k10 && a->k11 == b->k11));
    }
    // A degenerate tuple (k01 = 2) is rejected even when the relation holds.
    const FieldDescriptor* f7 = FieldDescriptor::extension(7, 2);
    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        FieldElem k10 = f7->random_element(rng), k11 = f7->random_element(rng);
        auto k00 = solve_k00(f7->from_int(2), k10, k11);
        if (!k00) continue;
        KummerSurface s{f7, *k00, f7->from_int(2), k10, k11};
        CHECK(kummer_relation_residual(s).is_zero());
        CHECK(!validate_kummer(s));
        break;
    }
}

TEST_CASE("generic surface satisfies the relation by construction") {
    for (uint32_t p : {3u, 5u, 7u}) {
        KummerSurface s = generic_kummer(p);
        CHECK(kummer_relation_residual(s).is_zero());
        CHECK(s.k00 * s.k00 == s.field->from_poly(s.field->g2_disc()));
    }
}

TEST_CASE("twist raises every parameter to the p-th power") {
    const FieldDescriptor* f = FieldDescriptor::extension(5, 3);
    Rng rng(19);
    auto s = random_kummer(f, rng);
    REQUIRE(s.has_value());
    KummerSurface t = frobenius_twist(*s);
    CHECK(t.k00 == s->k00.pow(5));
    CHECK(t.k01 == s->k01.pow(5));
    CHECK(validate_kummer(t));
    CHECK(kummer_relation_residual(t).is_zero());
}

TEST_CASE("restriction of the quartic matches the parameter chart on every component") {
    for (uint32_t p : {3u, 5u, 7u}) {
        const FieldDescriptor* f = FieldDescriptor::extension(p, 2);
        Rng rng(400 + p);
        int surfaces = 0;
        while (surfaces < 100) {
            auto s = random_kummer(f, rng);
            REQUIRE(s.has_value());
            ++surfaces;
            MPoly k = kummer_equation(*s);
            for (const TauLift& lift : all_components(2)) {
                FieldElem w = omega(*s, lift.tau);
                FieldElem c = f->one();
                if (!lift.tau.a0.is_zero()) {
                    FieldElem chi = f->from_int(pairing(lift.tau.a0s, lift.tau.a0));
                    c = f->from_int(2) + chi * k_of(*s, lift.tau.a0);
                }
                CHECK(eigen_restrict(k, 2, lift) == binary_quartic(f, c, w));
            }
        }
    }
}

TEST_CASE("genus-3 quartic invariances") {
    const FieldDescriptor* f = FieldDescriptor::extension(3, 4);
    Rng rng(23);
    auto c = random_coble(f, rng);
    REQUIRE(c.has_value());
    MPoly q = coble_equation(*c);
    CHECK(q.total_degree() == 4);
    CHECK(q.is_homogeneous());
    for (const HElem& astar : all_of_h(3)) CHECK(char_act(q, 3, astar) == q);
    // Translations permute the gamma/delta data; invariance holds only for 0.
    CHECK(h_translate(q, 3, HElem(0, 3)) == q);
}

TEST_CASE("genus-3 restriction decomposes as scale times a surface quartic") {
    const FieldDescriptor* f = FieldDescriptor::extension(3, 4);
    Rng rng(29);
    int done = 0;
    while (done < 20) {
        auto c = random_coble(f, rng);
        REQUIRE(c.has_value());
        MPoly q = coble_equation(*c);
        bool usable = true;
        for (const TauLift& lift : all_components(3)) {
            CobleRestriction cr;
            try {
                cr = coble_restrict(*c, lift);
            } catch (const std::domain_error&) {
                usable = false;  // degenerate specialization; sample another
                break;
            }
            CHECK(!cr.scale.is_zero());
            CHECK(eigen_restrict(q, 3, lift) ==
                  kummer_equation(cr.surf).times_elem(cr.scale));
        }
        if (usable) ++done;
    }
    // Generic coefficients restrict the same way.
    CobleQuartic gen = generic_coble(3);
    MPoly gq = coble_equation(gen);
    for (const TauLift& lift : all_components(3)) {
        CobleRestriction cr = coble_restrict(gen, lift);
        CHECK(eigen_restrict(gq, 3, lift) == kummer_equation(cr.surf).times_elem(cr.scale));
    }
}
