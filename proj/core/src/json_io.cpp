#include "vsch/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace vsch {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json zp_to_json(const ZpPoly& a) {
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : a.terms()) {
        ordered_json e = ordered_json::array();
        for (int i = 0; i < a.nvars(); ++i) e.push_back(m.e[static_cast<size_t>(i)]);
        terms.push_back(ordered_json{{"e", e}, {"c", c}});
    }
    return ordered_json{{"nvars", a.nvars()}, {"terms", terms}};
}

ZpPoly zp_from_json(uint32_t p, const ordered_json& j) {
    const int nvars = j.at("nvars").get<int>();
    ZpPoly a(p, nvars);
    for (const auto& t : j.at("terms")) {
        const auto& e = t.at("e");
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("coefficient polynomial exponent arity mismatch");
        ExpVec m = ExpVec::zero(nvars);
        uint32_t deg = 0;
        for (int i = 0; i < nvars; ++i) {
            m.e[static_cast<size_t>(i)] = e[static_cast<size_t>(i)].get<uint16_t>();
            deg += m.e[static_cast<size_t>(i)];
        }
        m.deg = deg;
        a.add_term(m, t.at("c").get<int64_t>());
    }
    a.normalize();
    return a;
}

ordered_json elem_to_node(const FieldElem& e) {
    const FieldDescriptor* f = e.field();
    switch (f->kind()) {
        case FieldDescriptor::Kind::Prime:
            return e.prime_value();
        case FieldDescriptor::Kind::Extension: {
            ordered_json a = ordered_json::array();
            for (int i = 0; i < f->ext_degree(); ++i)
                a.push_back(e.ext_coeffs()[static_cast<size_t>(i)]);
            return a;
        }
        case FieldDescriptor::Kind::GenericG2: {
            const G2Rep& r = e.g2();
            return ordered_json{
                {"n0", zp_to_json(r.n0)}, {"n1", zp_to_json(r.n1)}, {"d", zp_to_json(r.d)}};
        }
        default: {
            const G3Rep& r = e.g3();
            return ordered_json{{"num", zp_to_json(r.num)}, {"den", zp_to_json(r.den)}};
        }
    }
}

FieldElem elem_from_node(const FieldDescriptor* f, const ordered_json& j) {
    switch (f->kind()) {
        case FieldDescriptor::Kind::Prime:
            return f->from_int(j.get<int64_t>());
        case FieldDescriptor::Kind::Extension: {
            if (static_cast<int>(j.size()) != f->ext_degree())
                throw std::invalid_argument("extension element arity mismatch");
            uint64_t index = 0, scale = 1;
            for (int i = 0; i < f->ext_degree(); ++i) {
                index += j[static_cast<size_t>(i)].get<uint64_t>() % f->p() * scale;
                scale *= f->p();
            }
            return f->element_at(index);
        }
        case FieldDescriptor::Kind::GenericG2: {
            ZpPoly n0 = zp_from_json(f->p(), j.at("n0"));
            ZpPoly n1 = zp_from_json(f->p(), j.at("n1"));
            ZpPoly d = zp_from_json(f->p(), j.at("d"));
            return f->from_fraction(n0, d) + f->from_fraction(n1, d) * f->g2_k00();
        }
        default:
            return f->from_fraction(zp_from_json(f->p(), j.at("num")),
                                    zp_from_json(f->p(), j.at("den")));
    }
}

ordered_json field_to_node(const FieldDescriptor* f) {
    switch (f->kind()) {
        case FieldDescriptor::Kind::Prime:
            return ordered_json{{"kind", "prime"}, {"p", f->p()}};
        case FieldDescriptor::Kind::Extension:
            return ordered_json{{"kind", "extension"},
                                {"p", f->p()},
                                {"degree", f->ext_degree()},
                                {"modulus", f->modulus()}};
        case FieldDescriptor::Kind::GenericG2:
            return ordered_json{{"kind", "generic-g2"}, {"p", f->p()}};
        default:
            return ordered_json{{"kind", "generic-g3"}, {"p", f->p()}};
    }
}

const FieldDescriptor* field_from_node(const ordered_json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const uint32_t p = j.at("p").get<uint32_t>();
    if (kind == "prime") return FieldDescriptor::prime(p);
    if (kind == "extension")
        return FieldDescriptor::extension_with_modulus(
            p, j.at("modulus").get<std::vector<uint32_t>>());
    if (kind == "generic-g2") return FieldDescriptor::generic_g2(p);
    if (kind == "generic-g3") return FieldDescriptor::generic_g3(p);
    throw std::invalid_argument("unknown field kind: " + kind);
}

ordered_json poly_to_node(const MPoly& a) {
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : a.terms()) {
        ordered_json e = ordered_json::array();
        for (int i = 0; i < a.nvars(); ++i) e.push_back(m.e[static_cast<size_t>(i)]);
        terms.push_back(ordered_json{{"e", e}, {"c", elem_to_node(c)}});
    }
    return ordered_json{{"nvars", a.nvars()}, {"terms", terms}};
}

MPoly poly_from_node(const FieldDescriptor* f, const ordered_json& j) {
    const int nvars = j.at("nvars").get<int>();
    MPoly a(f, nvars);
    for (const auto& t : j.at("terms")) {
        const auto& e = t.at("e");
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("polynomial exponent arity mismatch");
        ExpVec m = ExpVec::zero(nvars);
        uint32_t deg = 0;
        for (int i = 0; i < nvars; ++i) {
            m.e[static_cast<size_t>(i)] = e[static_cast<size_t>(i)].get<uint16_t>();
            deg += m.e[static_cast<size_t>(i)];
        }
        m.deg = deg;
        a.add_term(m, elem_from_node(f, t.at("c")));
    }
    a.normalize();
    return a;
}

ordered_json parse(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

void require_version(const ordered_json& j) {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw std::invalid_argument("unsupported schema version");
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string field_to_json(const FieldDescriptor* f) { return dump(field_to_node(f)); }
const FieldDescriptor* field_from_json(const std::string& text) {
    return field_from_node(parse(text));
}

std::string elem_to_json(const FieldElem& e) { return dump(elem_to_node(e)); }
FieldElem elem_from_json(const FieldDescriptor* f, const std::string& text) {
    return elem_from_node(f, parse(text));
}

std::string poly_to_json(const MPoly& p) { return dump(poly_to_node(p)); }
MPoly poly_from_json(const FieldDescriptor* f, const std::string& text) {
    return poly_from_node(f, parse(text));
}

std::string map_to_json(const VerschiebungMap& m) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["genus"] = m.g;
    j["char"] = m.p;
    j["field"] = field_to_node(m.field);
    j["normalization"] = "coefficient of y_0^p equals 1";
    ordered_json labels = ordered_json::array();
    for (const BasisElem& b : m.basis) labels.push_back(b.label);
    j["basis"] = labels;
    ordered_json coeffs = ordered_json::array();
    for (const FieldElem& c : m.coeffs) coeffs.push_back(elem_to_node(c));
    j["coefficients"] = coeffs;
    ordered_json forms;
    for (const HElem& a : all_of_h(m.g)) forms[a.str()] = poly_to_node(m.form(a));
    j["forms"] = forms;
    ordered_json comps = ordered_json::array();
    for (size_t i = 0; i < m.components.size(); ++i) {
        const TauLift& lift = m.components[i];
        ordered_json c{{"a0", lift.tau.a0.str()},
                       {"a0s", lift.tau.a0s.str()},
                       {"sign", lift.sign_plus ? "+" : "-"}};
        if (i < m.scales.size()) c["scale"] = elem_to_node(m.scales[i]);
        comps.push_back(c);
    }
    j["components"] = comps;
    j["convention_log"] = m.convention_log;
    return dump(j);
}

VerschiebungMap map_from_json(const std::string& text) {
    ordered_json j = parse(text);
    require_version(j);
    VerschiebungMap m;
    m.g = j.at("genus").get<int>();
    m.p = j.at("char").get<uint32_t>();
    m.field = field_from_node(j.at("field"));
    m.basis = invariant_basis(m.g, m.p, m.field);
    const auto& labels = j.at("basis");
    if (labels.size() != m.basis.size())
        throw std::invalid_argument("basis size mismatch");
    for (size_t i = 0; i < m.basis.size(); ++i)
        if (labels[i].get<std::string>() != m.basis[i].label)
            throw std::invalid_argument("basis label mismatch: " + labels[i].get<std::string>());
    for (const auto& c : j.at("coefficients")) m.coeffs.push_back(elem_from_node(m.field, c));
    if (m.coeffs.size() != m.basis.size())
        throw std::invalid_argument("coefficient count mismatch");
    for (const auto& c : j.at("components")) {
        TauLift lift{Tau{HElem(static_cast<uint8_t>(std::stoul(c.at("a0").get<std::string>(), nullptr, 2)),
                              static_cast<uint8_t>(m.g)),
                         HElem(static_cast<uint8_t>(std::stoul(c.at("a0s").get<std::string>(), nullptr, 2)),
                               static_cast<uint8_t>(m.g))},
                     c.at("sign").get<std::string>() == "+", true};
        m.components.push_back(lift);
        if (c.contains("scale")) m.scales.push_back(elem_from_node(m.field, c.at("scale")));
    }
    for (const auto& line : j.at("convention_log"))
        m.convention_log.push_back(line.get<std::string>());
    return m;
}

std::string surface_to_json(const KummerSurface& s) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["field"] = field_to_node(s.field);
    j["k01"] = elem_to_node(s.k01);
    j["k10"] = elem_to_node(s.k10);
    j["k11"] = elem_to_node(s.k11);
    j["k00"] = elem_to_node(s.k00);
    return dump(j);
}

KummerSurface surface_from_json(const std::string& text) {
    ordered_json j = parse(text);
    require_version(j);
    const FieldDescriptor* f = field_from_node(j.at("field"));
    KummerSurface s;
    s.field = f;
    s.k01 = elem_from_node(f, j.at("k01"));
    s.k10 = elem_from_node(f, j.at("k10"));
    s.k11 = elem_from_node(f, j.at("k11"));
    if (j.contains("k00"))
        s.k00 = elem_from_node(f, j.at("k00"));
    else {
        auto k00 = solve_k00(s.k01, s.k10, s.k11);
        if (!k00) throw std::invalid_argument("surface parameters admit no k00 over this field");
        s.k00 = *k00;
    }
    return s;
}

std::string coble_to_json(const CobleQuartic& c) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["field"] = field_to_node(c.field);
    ordered_json gamma, delta;
    for (unsigned a = 1; a < 8; ++a) {
        gamma[HElem(static_cast<uint8_t>(a), 3).str()] = elem_to_node(c.gamma[a]);
        delta[HElem(static_cast<uint8_t>(a), 3).str()] = elem_to_node(c.delta[a]);
    }
    j["gamma"] = gamma;
    j["delta"] = delta;
    return dump(j);
}

CobleQuartic coble_from_json(const std::string& text) {
    ordered_json j = parse(text);
    require_version(j);
    const FieldDescriptor* f = field_from_node(j.at("field"));
    CobleQuartic c;
    c.field = f;
    c.gamma[0] = f->zero();
    c.delta[0] = f->zero();
    for (unsigned a = 1; a < 8; ++a) {
        const std::string key = HElem(static_cast<uint8_t>(a), 3).str();
        c.gamma[a] = elem_from_node(f, j.at("gamma").at(key));
        c.delta[a] = elem_from_node(f, j.at("delta").at(key));
    }
    return c;
}

std::string factorization_to_json(const FactorizationReport& r, bool include_factor) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["char"] = r.p;
    j["genus"] = r.genus;
    j["surface"] = r.surface_id;
    j["divisible"] = r.divisible;
    j["square"] = r.square;
    j["degree_ok"] = r.degree_ok;
    j["irreducibility"] = irreducibility_name(r.irreducibility);
    j["ok"] = r.ok();
    if (include_factor && r.factor) j["factor"] = poly_to_node(*r.factor);
    j["notes"] = r.notes;
    return dump(j);
}

std::string certification_to_json(const CertifyReport& r) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["checked"] = r.checked;
    j["failures"] = r.failures;
    j["ok"] = r.ok();
    j["notes"] = r.notes;
    return dump(j);
}

std::string experiment_to_json(const std::vector<CurveExperiment>& curves, uint32_t p,
                               int ext_degree, uint64_t seed, bool include_timings) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["char"] = p;
    j["ext_degree"] = ext_degree;
    j["seed"] = seed;
    j["curve_count"] = curves.size();
    bool all_ok = !curves.empty();
    ordered_json results = ordered_json::array();
    for (const CurveExperiment& ce : curves) {
        ordered_json r;
        r["index"] = ce.index;
        r["seed"] = ce.seed;
        if (ce.surface) {
            r["surface"] = ordered_json{{"k01", elem_to_node(ce.surface->k01)},
                                        {"k10", elem_to_node(ce.surface->k10)},
                                        {"k11", elem_to_node(ce.surface->k11)},
                                        {"k00", elem_to_node(ce.surface->k00)}};
        }
        r["all_components_ordinary"] = ce.all_components_ordinary;
        r["factorization"] = ordered_json{
            {"divisible", ce.factorization.divisible},
            {"square", ce.factorization.square},
            {"degree_ok", ce.factorization.degree_ok},
            {"irreducibility", irreducibility_name(ce.factorization.irreducibility)}};
        r["sing_h_zero_dimensional"] = ce.sing_h_zero_dimensional;
        r["sing_h_degree"] = ce.sing_h_degree;
        r["base_locus_contained"] = ce.base_locus_contained;
        r["containment_strict"] = ce.containment_strict;
        r["disjoint_from_twist"] = ce.disjoint_from_twist;
        r["inside_node_preimage"] = ce.inside_node_preimage;
        r["node_preimage_dim"] = ce.node_preimage_dim;
        r["budget_exceeded"] = ce.budget_exceeded;
        r["ok"] = ce.ok();
        r["notes"] = ce.notes;
        if (include_timings) r["elapsed_ms"] = ce.elapsed_ms;
        all_ok = all_ok && ce.ok();
        results.push_back(r);
    }
    j["results"] = results;
    j["all_ok"] = all_ok;
    return dump(j);
}

std::string ec_oracle_to_json(const std::vector<EcOracleReport>& reports,
                              const FieldDescriptor* f) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["field"] = field_to_node(f);
    uint64_t failures = 0;
    ordered_json rs = ordered_json::array();
    for (const EcOracleReport& r : reports) {
        rs.push_back(ordered_json{{"mu", elem_to_node(r.mu)},
                                  {"ordinary", r.ordinary},
                                  {"points_checked", r.points_checked},
                                  {"failures", r.failures},
                                  {"p_torsion_points", r.p_torsion_points}});
        failures += static_cast<uint64_t>(r.failures);
    }
    j["reports"] = rs;
    j["total_failures"] = failures;
    return dump(j);
}

} // namespace vsch
