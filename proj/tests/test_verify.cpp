#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <initializer_list>

#include "json.hpp"
#include "vsch/gb.hpp"
#include "vsch/json_io.hpp"
#include "vsch/verify.hpp"

using namespace vsch;

namespace {

KummerSurface sample_surface(uint32_t p, int ext, uint64_t seed) {
    const FieldDescriptor* f = FieldDescriptor::extension(p, ext);
    Rng rng(seed);
    auto s = random_kummer(f, rng);
    REQUIRE(s.has_value());
    return *s;
}

MPoly xvar(const FieldDescriptor* f, int nvars, int i) {
    return MPoly::variable(f, nvars, i);
}

Irreducibility cert(const MPoly& s, uint64_t seed) {
    Rng rng(seed);
    return irreducibility_certificate(s, rng);
}

std::vector<MPoly> all_forms(const VerschiebungMap& m) {
    std::vector<MPoly> forms;
    for (const HElem& a : all_of_h(m.g)) forms.push_back(m.form(a));
    return forms;
}

} // namespace

TEST_CASE("irreducibility certificate decides the pinned cases") {
    const FieldDescriptor* f3 = FieldDescriptor::prime(3);
    const FieldDescriptor* f7 = FieldDescriptor::prime(7);

    // Linear forms are always absolutely irreducible.
    CHECK(cert(xvar(f3, 3, 0) + xvar(f3, 3, 1).times_elem(f3->from_int(2)), 1) ==
          Irreducibility::AbsolutelyIrreducible);

    // Quadrics are decided by rank: 1 = doubled hyperplane, 2 = hyperplane
    // pair (x^2 + y^2 splits only over the quadratic extension of F_3),
    // >= 3 = irreducible.
    MPoly l01 = xvar(f3, 2, 0) + xvar(f3, 2, 1);
    CHECK(cert(l01 * l01, 2) == Irreducibility::Reducible);
    MPoly sum2 = xvar(f3, 2, 0) * xvar(f3, 2, 0) + xvar(f3, 2, 1) * xvar(f3, 2, 1);
    CHECK(cert(sum2, 3) == Irreducibility::Reducible);
    MPoly cone = xvar(f7, 3, 0) * xvar(f7, 3, 2) - xvar(f7, 3, 1) * xvar(f7, 3, 1);
    CHECK(cert(cone, 4) == Irreducibility::AbsolutelyIrreducible);
    MPoly sum4(f7, 4);
    for (int i = 0; i < 4; ++i) sum4 = sum4 + xvar(f7, 4, i) * xvar(f7, 4, i);
    CHECK(cert(sum4, 5) == Irreducibility::AbsolutelyIrreducible);

    // A nodal quartic surface: the singular locus is finite, which already
    // forces absolute irreducibility in P^3.
    CHECK(cert(kummer_equation(sample_surface(3, 4, 10)), 6) ==
          Irreducibility::AbsolutelyIrreducible);
    CHECK(cert(kummer_equation(sample_surface(5, 2, 11)), 7) ==
          Irreducibility::AbsolutelyIrreducible);
    CHECK(cert(kummer_equation(sample_surface(7, 2, 12)), 8) ==
          Irreducibility::AbsolutelyIrreducible);

    // The criterion is one-sided above degree 2: a visibly split quartic is
    // reported Inconclusive (its singular locus contains a curve), never
    // misclassified.
    MPoly q1 = xvar(f7, 4, 0) * xvar(f7, 4, 1) - xvar(f7, 4, 2) * xvar(f7, 4, 3);
    CHECK(cert(q1 * sum4, 9) == Irreducibility::Inconclusive);

    // Degenerate inputs are refused rather than guessed.
    CHECK(cert(MPoly(f3, 2), 10) == Irreducibility::Inconclusive);
    MPoly affine = xvar(f3, 2, 0) * xvar(f3, 2, 0) + xvar(f3, 2, 1);
    CHECK(cert(affine, 11) == Irreducibility::Inconclusive);

    // Generic coefficients certify through full-degree specializations.
    for (uint32_t p : {3u, 5u, 7u})
        CHECK(cert(kummer_equation(generic_kummer(p)), 20 + p) ==
              Irreducibility::AbsolutelyIrreducible);
}

TEST_CASE("pullback of the twisted quartic splits off the expected square") {
    Rng rng(2);
    KummerSurface gen3 = generic_kummer(3);
    VerschiebungMap mgen3 = synth_verschiebung(gen3);
    {
        // Characteristic 3, generic parameters: the square root of the
        // cofactor is the original quartic itself.
        FactorizationReport rep = pullback_factorization(mgen3, gen3, rng);
        CHECK(rep.ok());
        CHECK(rep.p == 3);
        REQUIRE(rep.factor.has_value());
        CHECK(*rep.factor == kummer_equation(gen3));
        CHECK(rep.notes.empty());
        CHECK(!rep.surface_id.empty());
    }
    for (uint64_t i = 0; i < 3; ++i) {
        // Finite characteristic-3 specializations keep the identification.
        KummerSurface s = sample_surface(3, 4, 500 + i);
        VerschiebungMap m = synth_verschiebung(s);
        FactorizationReport rep = pullback_factorization(m, s, rng);
        CHECK(rep.ok());
        REQUIRE(rep.factor.has_value());
        CHECK(*rep.factor == kummer_equation(s));
    }
    for (uint32_t p : {5u, 7u}) {
        for (uint64_t i = 0; i < 2; ++i) {
            KummerSurface s = sample_surface(p, 2, 600 * p + i);
            VerschiebungMap m = synth_verschiebung(s);
            FactorizationReport rep = pullback_factorization(m, s, rng);
            CHECK(rep.ok());
            REQUIRE(rep.factor.has_value());
            CHECK(rep.factor->total_degree() == 2 * p - 2);
            CHECK(rep.factor->is_homogeneous());
        }
    }
    // Mixing coefficient fields is rejected up front.
    CHECK_THROWS_AS(pullback_factorization(mgen3, sample_surface(3, 2, 99), rng),
                    std::invalid_argument);
}

TEST_CASE("the solved forms send surface points onto the twisted surface") {
    for (uint32_t p : {3u, 5u, 7u}) {
        KummerSurface s = sample_surface(p, p == 3 ? 4 : 2, 700 + p);
        const FieldDescriptor* f = s.field;
        VerschiebungMap m = synth_verschiebung(s);
        const std::vector<MPoly> forms = all_forms(m);
        // The degree-p forms map the coefficient-twisted quartic onto the
        // original one (the pullback of the original splits off the twist).
        const MPoly src = kummer_equation(frobenius_twist(s));
        const MPoly dst = kummer_equation(s);
        Rng rng(800 + p);
        int checked = 0, guard = 0;
        while (checked < 100) {
            REQUIRE(++guard < 4000);
            const FieldElem a1 = f->random_element(rng), a2 = f->random_element(rng),
                            a3 = f->random_element(rng);
            // Slice the quartic along the first coordinate and solve for its
            // rational points on that line.
            std::vector<FieldElem> qc(5, f->zero());
            for (const auto& [mono, c] : src.terms())
                qc[mono.e[0]] = qc[mono.e[0]] +
                                c * a1.pow(mono.e[1]) * a2.pow(mono.e[2]) * a3.pow(mono.e[3]);
            for (const FieldElem& r : UniPoly(f, qc).roots(rng)) {
                const std::vector<FieldElem> pt{r, a1, a2, a3};
                REQUIRE(src.eval(pt).is_zero());
                std::vector<FieldElem> img;
                bool all_zero = true;
                for (const MPoly& v : forms) {
                    img.push_back(v.eval(pt));
                    all_zero = all_zero && img.back().is_zero();
                }
                if (all_zero) continue;  // base-locus point: no image to test
                CHECK(dst.eval(img).is_zero());
                ++checked;
            }
        }
    }
}

TEST_CASE("the polar quartic has the base locus as its singular locus") {
    // Characteristic 3 only: the forms are the partials of the detected
    // quartic G, and G = sum_a y_a V_a (Euler, since deg G = 4 = 1 mod 3),
    // so the singular ideal (G, partials) equals the forms ideal exactly.
    for (uint64_t i = 0; i < 5; ++i) {
        KummerSurface s = sample_surface(3, 2, 900 + i);
        VerschiebungMap m = synth_verschiebung(s);
        auto g = polar_detector(m);
        REQUIRE(g.has_value());
        CHECK(*g == kummer_equation(s));
        const std::vector<MPoly> forms = all_forms(m);
        MPoly euler(s.field, 4);
        for (int a = 0; a < 4; ++a) euler = euler + xvar(s.field, 4, a) * forms[static_cast<size_t>(a)];
        CHECK(euler == *g);
        std::vector<MPoly> base = groebner_basis(saturate_irrelevant(forms));
        CHECK(normal_form(*g, base).is_zero());
        std::vector<MPoly> sing = groebner_basis(saturate_irrelevant(singular_locus_ideal(*g)));
        CHECK(ideal_equal(sing, base));
    }
    {
        const FieldDescriptor* f3 = FieldDescriptor::prime(3);
        Rng rng(77);
        auto c = random_coble(f3, rng);
        REQUIRE(c.has_value());
        VerschiebungMap m = synth_verschiebung(*c);
        auto g = polar_detector(m);
        REQUIRE(g.has_value());
        CHECK(*g == coble_equation(*c));
        const std::vector<MPoly> forms = all_forms(m);
        MPoly euler(f3, 8);
        for (int a = 0; a < 8; ++a) euler = euler + xvar(f3, 8, a) * forms[static_cast<size_t>(a)];
        CHECK(euler == *g);
        try {
            std::vector<MPoly> base = groebner_basis(forms);
            std::vector<MPoly> sing = groebner_basis(singular_locus_ideal(*g));
            CHECK(ideal_equal(sing, base));
        } catch (const BudgetError& e) {
            MESSAGE("eight-variable basis run stopped by budget after ", e.spent(), " steps");
        }
    }
}

TEST_CASE("artifact serialization is canonical, versioned and timing-free") {
    using nlohmann::json;
    Rng rng(5);
    {
        KummerSurface s = sample_surface(5, 2, 50);
        const std::string text = surface_to_json(s);
        CHECK(json::parse(text).at("schema_version").get<int>() == kSchemaVersion);
        KummerSurface back = surface_from_json(text);
        CHECK(surface_to_json(back) == text);
        CHECK(surface_to_json(generic_kummer(7)) ==
              surface_to_json(surface_from_json(surface_to_json(generic_kummer(7)))));
    }
    {
        const FieldDescriptor* f81 = FieldDescriptor::extension(3, 4);
        Rng crng(51);
        auto c = random_coble(f81, crng);
        REQUIRE(c.has_value());
        const std::string text = coble_to_json(*c);
        CHECK(coble_to_json(coble_from_json(text)) == text);
    }
    {
        KummerSurface s = sample_surface(3, 2, 52);
        VerschiebungMap m = synth_verschiebung(s);
        FactorizationReport rep = pullback_factorization(m, s, rng);
        REQUIRE(rep.ok());
        const std::string with_factor = factorization_to_json(rep);
        const std::string without = factorization_to_json(rep, false);
        CHECK(with_factor == factorization_to_json(rep));  // byte-deterministic
        json jf = json::parse(with_factor);
        CHECK(jf.contains("factor"));
        CHECK(jf.at("irreducibility").get<std::string>() == "absolutely-irreducible");
        CHECK(jf.at("divisible").get<bool>());
        CHECK_FALSE(json::parse(without).contains("factor"));

        CertifyReport cr = certify(m, s);
        json jc = json::parse(certification_to_json(cr));
        CHECK(jc.at("checked").get<int>() == 30);
        CHECK(jc.at("failures").get<int>() == 0);
        CHECK(jc.at("ok").get<bool>());
    }
    {
        const FieldDescriptor* f7 = FieldDescriptor::prime(7);
        std::vector<EcOracleReport> reports;
        for (int64_t mu : {3, 5})
            reports.push_back(verify_mul_by_p({f7, f7->from_int(mu)}));
        json je = json::parse(ec_oracle_to_json(reports, f7));
        CHECK(je.at("reports").size() == 2);
        for (const auto& r : je.at("reports")) CHECK(r.at("failures").get<uint64_t>() == 0);
    }
    {
        CurveExperiment ce;
        ce.index = 0;
        ce.seed = 99;
        ce.p = 5;
        ce.ext_degree = 2;
        ce.surface = sample_surface(5, 2, 53);
        ce.elapsed_ms = 12345;
        const std::vector<CurveExperiment> curves{ce};
        const std::string plain = experiment_to_json(curves, 5, 2, 99);
        CHECK(plain == experiment_to_json(curves, 5, 2, 99));
        CHECK(plain.find("elapsed_ms") == std::string::npos);
        CHECK(experiment_to_json(curves, 5, 2, 99, true).find("elapsed_ms") !=
              std::string::npos);
        CHECK(json::parse(plain).at("curve_count").get<int>() == 1);
    }
}

TEST_CASE("experiment campaign pins the singular geometry of the factor") {
    // Degree-quartic fields: the generic singular length holds over the
    // degree-4 extension; curves over F_25 or F_49 are often special (excess
    // length, and over F_49 the singular scheme can meet the twist).
    const std::vector<CurveExperiment> run = run_experiment(5, 4, 2, 4242, 2);
    REQUIRE(run.size() == 2);
    for (const auto& ce : run) {
        INFO("curve ", ce.index, " notes ", ce.notes.empty() ? "" : ce.notes.front());
        CHECK(ce.ok());
        CHECK(ce.sing_h_degree == 96);
        CHECK(ce.factorization.ok());
        CHECK(ce.node_preimage_dim == 1);
        CHECK(ce.surface.has_value());
    }
    // Scheduling independence: one worker reproduces the same artifact bytes.
    const std::vector<CurveExperiment> again = run_experiment(5, 4, 2, 4242, 1);
    CHECK(experiment_to_json(run, 5, 4, 4242) == experiment_to_json(again, 5, 4, 4242));
    CHECK_THROWS_AS(run_experiment(3, 2, 1, 1), std::invalid_argument);
    CHECK(run_experiment(5, 2, 0, 1).empty());
}
