#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vsch/gb.hpp"
#include "vsch/surfaces.hpp"

using namespace vsch;

namespace {

MPoly var(const FieldDescriptor* f, int n, int i) { return MPoly::variable(f, n, i); }

MPoly random_poly(const FieldDescriptor* f, int nvars, uint32_t maxdeg, int terms,
                  Rng& rng) {
    MPoly out(f, nvars);
    for (int t = 0; t < terms; ++t) {
        ExpVec m = ExpVec::zero(nvars);
        uint32_t left = maxdeg;
        for (int v = 0; v < nvars; ++v) {
            uint16_t e = static_cast<uint16_t>(rng.below(left + 1));
            m.e[v] = e;
            m.deg += e;
            left -= e;
        }
        out.add_term(m, f->random_element(rng));
    }
    out.normalize();
    return out;
}

} // namespace

TEST_CASE("reduced bases of pinned ideals") {
    const FieldDescriptor* f = FieldDescriptor::prime(5);
    {
        std::vector<MPoly> gb = groebner_basis({var(f, 2, 0) + var(f, 2, 1), var(f, 2, 0)});
        REQUIRE(gb.size() == 2);
        CHECK(gb[0] == var(f, 2, 1));
        CHECK(gb[1] == var(f, 2, 0));
    }
    {
        // Cyclic-3: reduced grevlex basis {x+y+z, y^2+yz+z^2, z^3-1}.
        const FieldDescriptor* f7 = FieldDescriptor::prime(7);
        MPoly x = var(f7, 3, 0), y = var(f7, 3, 1), z = var(f7, 3, 2);
        MPoly one = MPoly::constant(f7, 3, f7->one());
        std::vector<MPoly> gb =
            groebner_basis({x + y + z, x * y + y * z + z * x, x * y * z - one});
        REQUIRE(gb.size() == 3);
        CHECK(gb[0] == x + y + z);
        CHECK(gb[1] == y * y + y * z + z * z);
        CHECK(gb[2] == z * z * z - one);
    }
    CHECK(groebner_basis({}).empty());
    {
        std::vector<MPoly> gb = groebner_basis({MPoly::constant(f, 2, f->from_int(3))});
        REQUIRE(gb.size() == 1);
        CHECK(gb[0] == MPoly::constant(f, 2, f->one()));
    }
}

TEST_CASE("normal form is a canonical ideal-membership witness") {
    const FieldDescriptor* f = FieldDescriptor::extension(5, 2);
    Rng rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<MPoly> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_poly(f, 3, 2, 3, rng));
        std::vector<MPoly> gb = groebner_basis(gens);
        if (gb.size() == 1 && gb[0].total_degree() == 0) continue;  // unit ideal
        for (const MPoly& g : gens) CHECK(normal_form(g, gb).is_zero());
        MPoly a = random_poly(f, 3, 3, 4, rng), b = random_poly(f, 3, 3, 4, rng);
        // Random combinations lie in the ideal.
        MPoly comb = a * gens[0] + b * gens[1];
        CHECK(in_ideal(comb, gb));
        // Remainders are canonical representatives.
        MPoly ra = normal_form(a, gb);
        CHECK(normal_form(ra, gb) == ra);
        CHECK(in_ideal(a - ra, gb));
        MPoly rb = normal_form(b, gb);
        CHECK(normal_form(a + b, gb) == normal_form(ra + rb, gb));
        CHECK(normal_form(a * b, gb) == normal_form(ra * rb, gb));
    }
}

TEST_CASE("the reduced basis is a canonical form for the ideal") {
    const FieldDescriptor* f = FieldDescriptor::extension(3, 3);
    Rng rng(17);
    int done = 0;
    while (done < 50) {
        std::vector<MPoly> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_poly(f, 3, 2, 3, rng));
        std::vector<MPoly> gb1 = groebner_basis(gens);
        // Same ideal, different presentation: row operations and unit scales.
        std::vector<MPoly> tgens = {gens[0] + var(f, 3, 0) * gens[1],
                                    gens[1].times_elem(f->from_int(2)),
                                    gens[2] + gens[0], gens[1] + gens[2]};
        std::vector<MPoly> gb2 = groebner_basis(tgens);
        CHECK(ideal_equal(gb1, gb2));
        CHECK(gb1 == gb2);  // canonical: literally identical vectors
        std::vector<MPoly> gb3 = groebner_basis(gb1);
        CHECK(gb1 == gb3);  // idempotent
        ++done;
    }
}

TEST_CASE("budget exhaustion raises the dedicated error") {
    const FieldDescriptor* f = FieldDescriptor::prime(7);
    Rng rng(5);
    std::vector<MPoly> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(random_poly(f, 4, 3, 5, rng));
    GbOptions tiny;
    tiny.budget = 3;
    try {
        groebner_basis(gens, tiny);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK(e.spent() >= 3);
    }
    CHECK(default_gb_budget() >= 1000000);
}

TEST_CASE("series data of pinned quotients") {
    const FieldDescriptor* f = FieldDescriptor::prime(7);
    {
        // Rational normal cubic in P^3: dimension 1, degree 3.
        MPoly x = var(f, 4, 0), y = var(f, 4, 1), z = var(f, 4, 2), w = var(f, 4, 3);
        std::vector<MPoly> gb = groebner_basis({x * z - y * y, x * w - y * z, y * w - z * z});
        REQUIRE(gb.size() == 3);
        HilbertData h = hilbert_data(gb, 4);
        CHECK(h.krull == 2);
        CHECK(h.dim_projective == 1);
        CHECK(h.degree == 3);
        CHECK(h.numerator == std::vector<int64_t>({1, 0, -3, 2}));
    }
    {
        // Empty projective locus.
        std::vector<MPoly> gb = groebner_basis({var(f, 3, 0), var(f, 3, 1), var(f, 3, 2)});
        HilbertData h = hilbert_data(gb, 3);
        CHECK(h.krull == 0);
        CHECK(h.dim_projective == -1);
        CHECK(h.degree == 0);
    }
    {
        // Quadric cone in P^2: a conic, dimension 1, degree 2.
        MPoly q = var(f, 3, 0) * var(f, 3, 0) + var(f, 3, 1) * var(f, 3, 1) +
                  var(f, 3, 2) * var(f, 3, 2);
        HilbertData h = hilbert_data(groebner_basis({q}), 3);
        CHECK(h.krull == 2);
        CHECK(h.dim_projective == 1);
        CHECK(h.degree == 2);
    }
    {
        // Two points of P^1.
        HilbertData h = hilbert_data(groebner_basis({var(f, 2, 0) * var(f, 2, 1)}), 2);
        CHECK(h.dim_projective == 0);
        CHECK(h.degree == 2);
    }
    {
        // Zero ideal: all of P^2.
        HilbertData h = hilbert_data({}, 3);
        CHECK(h.krull == 3);
        CHECK(h.dim_projective == 2);
        CHECK(h.degree == 1);
    }
}

TEST_CASE("saturation by a variable and by the irrelevant ideal") {
    const FieldDescriptor* f = FieldDescriptor::prime(5);
    MPoly x = var(f, 2, 0), y = var(f, 2, 1);
    {
        std::vector<MPoly> sat = saturate_by_var({x * x * y, x * y * y}, 0);
        REQUIRE(sat.size() == 1);
        CHECK(sat[0] == y);
        std::vector<MPoly> sat_all = saturate_irrelevant({x * x * y, x * y * y});
        REQUIRE(sat_all.size() == 1);
        CHECK(sat_all[0] == x * y);
    }
    // Saturation only grows the ideal, and is idempotent.
    const FieldDescriptor* f9 = FieldDescriptor::extension(3, 2);
    Rng rng(31);
    int done = 0;
    while (done < 15) {
        std::vector<MPoly> gens;
        for (int i = 0; i < 2; ++i) {
            MPoly g = random_poly(f9, 3, 2, 3, rng);
            // Make homogeneous of degree 2: strip off-degree terms.
            MPoly h(f9, 3);
            for (const auto& [m, c] : g.terms())
                if (m.deg == 2) h.add_term(m, c);
            h.normalize();
            if (!h.is_zero()) gens.push_back(h);
        }
        if (gens.size() < 2) continue;
        ++done;
        std::vector<MPoly> sat = saturate_irrelevant(gens);
        for (const MPoly& g : gens) CHECK(normal_form(g, sat).is_zero());
        CHECK(saturate_irrelevant(sat) == sat);
    }
}

TEST_CASE("intersections of homogeneous ideals") {
    const FieldDescriptor* f = FieldDescriptor::prime(5);
    MPoly x = var(f, 3, 0), y = var(f, 3, 1), z = var(f, 3, 2);
    {
        std::vector<MPoly> meet = ideal_intersect({x}, {y});
        REQUIRE(meet.size() == 1);
        CHECK(meet[0] == x * y);
    }
    {
        std::vector<MPoly> meet = ideal_intersect({x, y}, {z});
        REQUIRE(meet.size() == 2);
        CHECK(ideal_equal(meet, groebner_basis({x * z, y * z})));
    }
    CHECK(ideal_intersect({}, {x}).empty());
    CHECK(ideal_intersect({x}, {}).empty());
    // I J is contained in the intersection, which is contained in both.
    const FieldDescriptor* f9 = FieldDescriptor::extension(3, 2);
    Rng rng(41);
    int done = 0;
    while (done < 10) {
        auto homog = [&](uint32_t d) {
            MPoly g = random_poly(f9, 3, d, 4, rng), h(f9, 3);
            for (const auto& [m, c] : g.terms())
                if (m.deg == d) h.add_term(m, c);
            h.normalize();
            return h;
        };
        MPoly a = homog(2), b = homog(2), c = homog(1);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        ++done;
        std::vector<MPoly> gi = groebner_basis({a, c});
        std::vector<MPoly> gj = groebner_basis({b});
        std::vector<MPoly> meet = ideal_intersect({a, c}, {b});
        for (const MPoly& m : meet) {
            CHECK(in_ideal(m, gi));
            CHECK(in_ideal(m, gj));
        }
        std::vector<MPoly> gbm = groebner_basis(meet);
        CHECK(in_ideal(a * b, gbm));
        CHECK(in_ideal(c * b, gbm));
    }
}

TEST_CASE("singular locus of a generic quartic surface model is 16 points") {
    const FieldDescriptor* f = FieldDescriptor::extension(5, 4);
    Rng rng(55);
    auto s = random_kummer(f, rng);
    REQUIRE(s.has_value());
    MPoly k = kummer_equation(*s);
    std::vector<MPoly> gens = {k, k.partial(0), k.partial(1), k.partial(2), k.partial(3)};
    std::vector<MPoly> gb_raw = groebner_basis(gens);
    HilbertData raw = hilbert_data(gb_raw, 4);
    std::vector<MPoly> gb_sat = groebner_basis(saturate_irrelevant(gens));
    HilbertData sat = hilbert_data(gb_sat, 4);
    // Nodes of the classical 16-nodal quartic; the unsaturated ideal computes
    // the same projective dimension and degree.
    CHECK(sat.dim_projective == 0);
    CHECK(sat.degree == 16);
    CHECK(raw.dim_projective == 0);
    CHECK(raw.degree == 16);
}
