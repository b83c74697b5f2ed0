#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "vsch/theta.hpp"

using namespace vsch;

namespace {

MPoly random_poly(const FieldDescriptor* f, int nvars, uint32_t maxdeg, int terms, Rng& rng) {
    MPoly a(f, nvars);
    for (int t = 0; t < terms; ++t) {
        ExpVec m = ExpVec::zero(nvars);
        uint32_t deg = 0;
        for (int v = 0; v < nvars; ++v) {
            const uint16_t e = static_cast<uint16_t>(rng.below(maxdeg + 1));
            m.e[static_cast<size_t>(v)] = e;
            deg += e;
        }
        m.deg = deg;
        a.add_term(m, f->random_element(rng));
    }
    a.normalize();
    return a;
}

// Independent re-derivation of the fold multiplier: mu^2 = chi_{a0s}(a0),
// the branch chooses the sign, and the component applies s * mu^p * chi(t).
FieldElem fold_factor(const FieldDescriptor* f, uint32_t p, const TauLift& lift,
                      const HElem& t) {
    FieldElem mu = f->one();
    if (pairing(lift.tau.a0s, lift.tau.a0) == -1) {
        REQUIRE(f->mu0().has_value());
        mu = *f->mu0();
    }
    if (!lift.mu_plus) mu = -mu;
    FieldElem v = mu.pow(p);
    if (!lift.sign_plus) v = -v;
    if (pairing(lift.tau.a0s, t) == -1) v = -v;
    return v;
}

} // namespace

TEST_CASE("pairing and kernels of characters") {
    for (int g : {2, 3}) {
        for (const HElem& astar : all_of_h(g)) {
            auto ker = character_kernel(astar);
            CHECK(is_subgroup(ker));
            if (astar.is_zero())
                CHECK(ker.size() == static_cast<size_t>(1 << g));
            else
                CHECK(ker.size() == static_cast<size_t>(1 << (g - 1)));
            for (const HElem& a : all_of_h(g))
                for (const HElem& b : all_of_h(g))
                    CHECK(pairing(astar, a) * pairing(astar, b) == pairing(astar, a + b));
        }
    }
}

TEST_CASE("component inventory counts") {
    CHECK(all_taus(2).size() == 15);
    CHECK(all_taus(3).size() == 63);
    CHECK(all_components(2).size() == 27);
    CHECK(all_components(3).size() == 119);
    int unfolded = 0;
    for (const TauLift& lift : all_components(2)) {
        if (lift.tau.a0.is_zero()) {
            ++unfolded;
            CHECK(lift.sign_plus);  // the '-' side carries no equation
        }
    }
    CHECK(unfolded == 3);
}

TEST_CASE("fold transversals are subgroups meeting every coset once") {
    for (int g : {2, 3}) {
        for (const HElem& a0 : nonzero_of_h(g)) {
            auto tr = fold_transversal(g, a0);
            CHECK(tr.size() == static_cast<size_t>(1 << (g - 1)));
            CHECK(is_subgroup(tr));
            std::map<uint8_t, int> hit;
            for (const HElem& t : tr) {
                ++hit[t.index()];
                ++hit[(t + a0).index()];
            }
            for (const HElem& b : all_of_h(g)) CHECK(hit[b.index()] == 1);
        }
    }
}

TEST_CASE("surviving sets of unfolded components") {
    for (int g : {2, 3}) {
        for (const HElem& a0s : nonzero_of_h(g)) {
            Tau tau{HElem(0, static_cast<uint8_t>(g)), a0s};
            auto plus = surviving_set(g, tau, true);
            auto minus = surviving_set(g, tau, false);
            CHECK(plus.size() == static_cast<size_t>(1 << (g - 1)));
            CHECK(minus.size() == static_cast<size_t>(1 << (g - 1)));
            for (const HElem& b : plus) CHECK(pairing(a0s, b) == 1);
            for (const HElem& b : minus) CHECK(pairing(a0s, b) == -1);
        }
    }
}

TEST_CASE("restriction agrees with evaluation at embedded points") {
    for (int g : {2, 3}) {
        for (uint32_t p : {3u, 5u, 7u}) {
            const FieldDescriptor* f = FieldDescriptor::extension(p, 2);
            Rng rng(100 * static_cast<uint32_t>(g) + p);
            const int nv = 1 << g, nl = 1 << (g - 1);
            for (const TauLift& lift : all_components(g)) {
                MPoly poly = random_poly(f, nv, 2, 5, rng);
                MPoly restricted = eigen_restrict(poly, g, lift);
                auto support = lambda_support(g, lift);
                REQUIRE(static_cast<int>(support.size()) == nl);
                for (int trial = 0; trial < 4; ++trial) {
                    std::vector<FieldElem> lambda;
                    for (int i = 0; i < nl; ++i) lambda.push_back(f->random_element(rng));
                    std::vector<FieldElem> y(static_cast<size_t>(nv), f->zero());
                    for (int i = 0; i < nl; ++i) {
                        const HElem t = support[static_cast<size_t>(i)];
                        y[t.index()] = lambda[static_cast<size_t>(i)];
                        if (!lift.tau.a0.is_zero())
                            y[(t + lift.tau.a0).index()] =
                                fold_factor(f, p, lift, t) * lambda[static_cast<size_t>(i)];
                    }
                    CHECK(restricted.eval(lambda) == poly.eval(y));
                }
            }
        }
    }
}

TEST_CASE("translations and character twists act correctly") {
    const FieldDescriptor* f = FieldDescriptor::extension(3, 2);
    Rng rng(77);
    for (int g : {2, 3}) {
        const int nv = 1 << g;
        for (int it = 0; it < 100; ++it) {
            MPoly a = random_poly(f, nv, 2, 4, rng);
            MPoly b = random_poly(f, nv, 2, 4, rng);
            HElem alpha(static_cast<uint8_t>(rng.below(static_cast<uint64_t>(nv))),
                        static_cast<uint8_t>(g));
            HElem beta(static_cast<uint8_t>(rng.below(static_cast<uint64_t>(nv))),
                       static_cast<uint8_t>(g));
            // Involution, group action, and ring homomorphism.
            CHECK(h_translate(h_translate(a, g, alpha), g, alpha) == a);
            CHECK(h_translate(h_translate(a, g, alpha), g, beta) ==
                  h_translate(a, g, alpha + beta));
            CHECK(h_translate(a * b, g, alpha) ==
                  h_translate(a, g, alpha) * h_translate(b, g, alpha));
            CHECK(char_act(a * b, g, alpha) == char_act(a, g, alpha) * char_act(b, g, alpha));
            CHECK(char_act(char_act(a, g, alpha), g, alpha) == a);
            // Evaluation semantics of the translation.
            std::vector<FieldElem> pt;
            for (int i = 0; i < nv; ++i) pt.push_back(f->random_element(rng));
            std::vector<FieldElem> moved;
            for (int i = 0; i < nv; ++i)
                moved.push_back(pt[HElem(static_cast<uint8_t>(i), static_cast<uint8_t>(g))
                                       .operator+(alpha)
                                       .index()]);
            CHECK(h_translate(a, g, alpha).eval(pt) == a.eval(moved));
        }
    }
}

TEST_CASE("invariant basis counts, order and invariance") {
    const std::map<std::pair<int, uint32_t>, size_t> expected{
        {{2, 3}, 5},  {{2, 5}, 14}, {{2, 7}, 30},
        {{3, 3}, 15}, {{3, 5}, 92}, {{3, 7}, 373}};
    for (const auto& [key, count] : expected) {
        const auto [g, p] = key;
        const FieldDescriptor* f = FieldDescriptor::prime(p);
        auto basis = invariant_basis(g, p, f);
        CHECK(basis.size() == count);
        // First element is y_0^p.
        ExpVec y0p = ExpVec::unit(1 << g, 0, static_cast<uint16_t>(p));
        CHECK(basis[0].mono.leading().first == y0p);
        CHECK(basis[0].mono.leading().second.is_one());
        for (const BasisElem& b : basis) {
            CHECK(b.mono.total_degree() == p);
            CHECK(b.mono.term_count() == 1);
            // Invariance under every character twist.
            for (const HElem& astar : all_of_h(g))
                CHECK(char_act(b.mono, g, astar) == b.mono);
        }
    }
    // Genus 3, characteristic 3: family split is 8 + 0 + 7.
    auto b33 = invariant_basis(3, 3, FieldDescriptor::prime(3));
    int na = 0, nb = 0, nc = 0;
    for (const BasisElem& b : b33) (b.family == 'A' ? na : b.family == 'B' ? nb : nc)++;
    CHECK(na == 8);
    CHECK(nb == 0);
    CHECK(nc == 7);
}

TEST_CASE("closed-form folded images match the generic restriction, exhaustively") {
    for (uint32_t p : {3u, 5u, 7u}) {
        const FieldDescriptor* f = FieldDescriptor::extension(p, 2);
        auto basis = invariant_basis(2, p, f);
        for (const TauLift& lift : all_components(2)) {
            if (lift.tau.a0.is_zero()) continue;
            for (const BasisElem& b : basis) {
                if (b.family == 'A')
                    CHECK(eigen_restrict(b.mono, 2, lift) == folded_a_image(f, p, lift, b.f));
                else if (b.family == 'B')
                    CHECK(eigen_restrict(b.mono, 2, lift) == folded_b_image(f, p, lift, b.f));
            }
        }
    }
}

TEST_CASE("family monomials vanish on the minus side of unfolded components") {
    for (int g : {2, 3}) {
        for (uint32_t p : {3u, 5u, 7u}) {
            const FieldDescriptor* f = FieldDescriptor::extension(p, 2);
            auto basis = invariant_basis(g, p, f);
            for (const HElem& a0s : nonzero_of_h(g)) {
                TauLift minus{Tau{HElem(0, static_cast<uint8_t>(g)), a0s}, false, true};
                for (const BasisElem& b : basis)
                    CHECK(eigen_restrict(b.mono, g, minus).is_zero());
            }
        }
    }
}

TEST_CASE("degree-p form count versus component capacity") {
    DimsCheck d23 = dims_check(2, 3);
    CHECK(d23.forms_dim == 20);
    CHECK(d23.components_dim == 120);
    CHECK(d23.bounded);
    for (uint32_t p : {3u, 5u, 7u}) {
        CHECK(dims_check(2, p).bounded);
        CHECK(dims_check(3, p).bounded);
    }
    CHECK(!dims_check(2, 11).bounded);
    CHECK(!dims_check(3, 13).bounded);
}
