#include "vsch/synth.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace vsch {

namespace {

struct ExpLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const { return cmp_grevlex(a, b) < 0; }
};

MPoly mono_of(const FieldDescriptor* f, int nvars, std::initializer_list<int> exps,
              const FieldElem& c) {
    ExpVec m = ExpVec::zero(nvars);
    int i = 0;
    uint32_t d = 0;
    for (int e : exps) {
        m.e[static_cast<size_t>(i++)] = static_cast<uint16_t>(e);
        d += static_cast<uint32_t>(e);
    }
    m.deg = d;
    return MPoly::monomial(f, nvars, m, c);
}

} // namespace

MPoly VerschiebungMap::v0() const {
    MPoly acc(field, 1 << g);
    for (size_t b = 0; b < basis.size(); ++b) {
        if (coeffs[b].is_zero()) continue;
        const auto& [m, c] = basis[b].mono.leading();
        acc.add_term(m, c * coeffs[b]);
    }
    acc.normalize();
    return acc;
}

MPoly VerschiebungMap::form(HElem alpha) const { return h_translate(v0(), g, alpha); }

std::vector<RestrictionTarget> build_targets(const KummerSurface& s) {
    std::vector<RestrictionTarget> out;
    for (const TauLift& lift : all_components(2)) {
        FieldElem om = omega(s, lift.tau);
        out.push_back({lift, kummer_line_q0(s.field, om)});
    }
    return out;
}

std::vector<RestrictionTarget> build_targets(const CobleQuartic& c) {
    if (c.field->p() != 3)
        throw std::invalid_argument("genus-3 targets are pinned for characteristic 3 only");
    std::vector<RestrictionTarget> out;
    for (const TauLift& lift : all_components(3)) {
        CobleRestriction cr = coble_restrict(c, lift);
        out.push_back({lift, known_v0_g2p3(cr.surf)});
    }
    return out;
}

namespace {

// Shared constraint assembly: eliminate the per-component scale through the
// lambda_0^p coefficient (the targets are normalized there), solve the
// homogeneous system for the basis coefficients, then recover the scales.
VerschiebungMap solve_from_targets(int g, const FieldDescriptor* f,
                                   const std::vector<RestrictionTarget>& targets,
                                   SynthInfo* info) {
    const uint32_t p = f->p();
    VerschiebungMap m;
    m.g = g;
    m.p = p;
    m.field = f;
    m.basis = invariant_basis(g, p, f);
    const int n = static_cast<int>(m.basis.size());
    const int nlam = 1 << (g - 1);
    const ExpVec l0p = ExpVec::unit(nlam, 0, static_cast<uint16_t>(p));

    std::vector<std::vector<FieldElem>> rows;
    std::vector<std::vector<std::pair<int, FieldElem>>> heads;  // per component
    for (const RestrictionTarget& t : targets) {
        m.components.push_back(t.lift);
        if (t.form.coeff_of(l0p) != f->one())
            throw std::logic_error("component target is not normalized at lambda_0^p");
        std::vector<std::pair<int, FieldElem>> head;
        std::map<ExpVec, std::vector<std::pair<int, FieldElem>>, ExpLess> buckets;
        for (int b = 0; b < n; ++b) {
            MPoly r = eigen_restrict(m.basis[static_cast<size_t>(b)].mono, g, t.lift);
            if (r.is_zero()) continue;
            const auto& [mono, c] = r.leading();
            if (mono == l0p)
                head.push_back({b, c});
            else
                buckets[mono].push_back({b, c});
        }
        for (const auto& [mono, c] : t.form.terms())
            if (mono != l0p) buckets.emplace(mono, std::vector<std::pair<int, FieldElem>>{});
        for (const auto& [mono, entries] : buckets) {
            std::vector<FieldElem> row(static_cast<size_t>(n), f->zero());
            for (const auto& [b, c] : entries) row[static_cast<size_t>(b)] = c;
            FieldElem tm = t.form.coeff_of(mono);
            if (!tm.is_zero())
                for (const auto& [b, hc] : head)
                    row[static_cast<size_t>(b)] = row[static_cast<size_t>(b)] - tm * hc;
            bool nonzero = false;
            for (const FieldElem& e : row)
                if (!e.is_zero()) {
                    nonzero = true;
                    break;
                }
            if (nonzero) rows.push_back(std::move(row));
        }
        heads.push_back(std::move(head));
    }

    LinearSolution sol = solve_linear(
        f, rows, std::vector<FieldElem>(rows.size(), f->zero()));
    if (info) {
        info->rows = static_cast<int>(rows.size());
        info->cols = n;
        info->rank = sol.rank;
        info->kernel_dim = static_cast<int>(sol.nullspace.size());
    }
    if (sol.nullspace.empty())
        throw std::domain_error("restriction constraints admit no nontrivial solution");
    if (sol.nullspace.size() > 1)
        throw std::domain_error("restriction constraints do not determine the map");
    const std::vector<FieldElem>& kern = sol.nullspace.front();
    if (kern[0].is_zero())
        throw std::domain_error("solution has vanishing leading coefficient");
    FieldElem inv = kern[0].inverse();
    for (int b = 0; b < n; ++b) m.coeffs.push_back(kern[static_cast<size_t>(b)] * inv);
    for (const auto& head : heads) {
        FieldElem sc = f->zero();
        for (const auto& [b, hc] : head) sc = sc + hc * m.coeffs[static_cast<size_t>(b)];
        m.scales.push_back(sc);
    }
    m.convention_log.push_back("normalization: coefficient of y_0^p set to 1");
    return m;
}

// Residual checks shared by certify() and the certification-style solvers.
// Returns the re-derived scale of each constrained component.
std::vector<FieldElem> check_components(const VerschiebungMap& m,
                                        const std::vector<RestrictionTarget>& targets,
                                        CertifyReport& rep) {
    const MPoly v = m.v0();
    const int nlam = 1 << (m.g - 1);
    const ExpVec l0p = ExpVec::unit(nlam, 0, static_cast<uint16_t>(m.p));
    std::vector<FieldElem> scales;
    for (const RestrictionTarget& t : targets) {
        MPoly r = eigen_restrict(v, m.g, t.lift);
        FieldElem sc = r.coeff_of(l0p);
        ++rep.checked;
        if (sc.is_zero() || r != t.form.times_elem(sc)) {
            ++rep.failures;
            rep.notes.push_back("component (" + t.lift.tau.a0.str() + "," +
                                t.lift.tau.a0s.str() + "," +
                                (t.lift.sign_plus ? "+" : "-") +
                                ") restriction is not a nonzero multiple of its target");
        }
        scales.push_back(sc);
    }
    for (const Tau& tau : all_taus(m.g)) {
        if (!tau.a0.is_zero()) continue;
        TauLift minus{tau, false, true};
        MPoly r = eigen_restrict(v, m.g, minus);
        ++rep.checked;
        if (!r.is_zero()) {
            ++rep.failures;
            rep.notes.push_back("component (" + tau.a0.str() + "," + tau.a0s.str() +
                                ",-) restriction does not vanish");
        }
    }
    return scales;
}

// Exact solution of the generic char-7 genus-2 system: the function-field
// elimination is out of reach, but each coefficient is a polynomial of
// degree at most 7 in the parameters, linear in k00.  Solve many finite
// specializations (both square roots of the parameter relation, so the two
// polynomial components separate), interpolate exactly, and re-certify the
// interpolated map against the generic targets, which makes the result
// independent of the sampling.
VerschiebungMap solve_generic_g2p7(SynthInfo* info) {
    static std::mutex mx;
    static std::optional<VerschiebungMap> cache;
    static SynthInfo cached_info;
    std::lock_guard<std::mutex> lk(mx);
    if (cache) {
        if (info) *info = cached_info;
        return *cache;
    }

    const FieldDescriptor* gen = FieldDescriptor::generic_g2(7);
    const FieldDescriptor* fin = FieldDescriptor::extension(7, 4);
    Rng rng(0xA5117E57u);

    // Numerator degrees in (k01, k10, k11) reach 9 for the even part and 7
    // for the odd part; fit with one degree of headroom and a sample margin.
    // The final generic certification makes any fitting error fatal rather
    // than silent.
    const int kNumSamples = 260;
    std::vector<std::array<FieldElem, 4>> pts;  // k01, k10, k11, k00
    std::vector<std::vector<FieldElem>> plus_coeffs, minus_coeffs;
    SynthInfo finite_info;
    while (static_cast<int>(pts.size()) < kNumSamples) {
        FieldElem k01 = fin->random_element(rng);
        FieldElem k10 = fin->random_element(rng);
        FieldElem k11 = fin->random_element(rng);
        auto k00 = solve_k00(k01, k10, k11);
        if (!k00 || k00->is_zero()) continue;
        KummerSurface sp{fin, *k00, k01, k10, k11};
        KummerSurface sm{fin, -*k00, k01, k10, k11};
        if (!validate_kummer(sp) || !validate_kummer(sm)) continue;
        try {
            VerschiebungMap mp = solve_from_targets(2, fin, build_targets(sp), &finite_info);
            VerschiebungMap mm = solve_from_targets(2, fin, build_targets(sm), nullptr);
            pts.push_back({k01, k10, k11, *k00});
            plus_coeffs.push_back(mp.coeffs);
            minus_coeffs.push_back(mm.coeffs);
        } catch (const std::domain_error&) {
            continue;
        }
    }

    // Monomial supports of the two polynomial components.
    auto monomials_up_to = [](uint32_t d) {
        std::vector<ExpVec> out;
        for (uint16_t i = 0; i <= d; ++i)
            for (uint16_t j = 0; i + j <= d; ++j)
                for (uint16_t l = 0; i + j + l <= d; ++l) {
                    ExpVec m = ExpVec::zero(3);
                    m.e[0] = i;
                    m.e[1] = j;
                    m.e[2] = l;
                    m.deg = static_cast<uint32_t>(i + j + l);
                    out.push_back(m);
                }
        return out;
    };
    const std::vector<ExpVec> m0 = monomials_up_to(9), m1 = monomials_up_to(8);
    auto vandermonde = [&](const std::vector<ExpVec>& ms) {
        std::vector<std::vector<FieldElem>> a;
        for (const auto& pt : pts) {
            std::vector<FieldElem> row;
            for (const ExpVec& m : ms) {
                FieldElem v = fin->one();
                for (int var = 0; var < 3; ++var)
                    for (uint16_t e = 0; e < m.e[static_cast<size_t>(var)]; ++e)
                        v = v * pt[static_cast<size_t>(var)];
                row.push_back(v);
            }
            a.push_back(std::move(row));
        }
        return a;
    };
    const auto a0 = vandermonde(m0), a1 = vandermonde(m1);

    VerschiebungMap m;
    m.g = 2;
    m.p = 7;
    m.field = gen;
    m.basis = invariant_basis(2, 7, gen);
    const FieldElem half = fin->from_int(2).inverse();
    auto to_zp_poly = [&](const std::vector<ExpVec>& ms, const std::vector<FieldElem>& vals) {
        ZpPoly poly(7, 3);
        for (size_t i = 0; i < ms.size(); ++i) {
            if (vals[i].is_zero()) continue;
            const auto& ext = vals[i].ext_coeffs();
            for (size_t k = 1; k < 4; ++k)
                if (ext[k] != 0)
                    throw std::logic_error("interpolated coefficient leaves the prime field");
            poly.add_term(ms[i], ext[0]);
        }
        poly.normalize();
        return poly;
    };
    for (size_t b = 0; b < m.basis.size(); ++b) {
        std::vector<FieldElem> rhs0, rhs1;
        for (size_t i = 0; i < pts.size(); ++i) {
            FieldElem cp = plus_coeffs[i][b], cm = minus_coeffs[i][b];
            rhs0.push_back((cp + cm) * half);
            rhs1.push_back((cp - cm) * half / pts[i][3]);
        }
        LinearSolution s0 = solve_linear(fin, a0, rhs0);
        LinearSolution s1 = solve_linear(fin, a1, rhs1);
        if (s0.status != LinearSolution::Status::Unique ||
            s1.status != LinearSolution::Status::Unique)
            throw std::logic_error("coefficient interpolation was not uniquely determined");
        m.coeffs.push_back(gen->from_poly(to_zp_poly(m0, s0.particular)) +
                           gen->from_poly(to_zp_poly(m1, s1.particular)) * gen->g2_k00());
    }
    for (const TauLift& lift : all_components(2)) m.components.push_back(lift);

    CertifyReport rep;
    std::vector<FieldElem> scales = check_components(m, build_targets(generic_kummer(7)), rep);
    if (!rep.ok())
        throw std::logic_error("interpolated char-7 map failed generic certification");
    m.scales = std::move(scales);
    m.convention_log.push_back("normalization: coefficient of y_0^p set to 1");
    m.convention_log.push_back(
        "char-7 generic coefficients interpolated from 260 finite specializations "
        "and re-certified against the generic component targets");
    cached_info = finite_info;
    cached_info.kernel_dim = 1;
    cache = m;
    if (info) *info = cached_info;
    return m;
}

} // namespace

VerschiebungMap synth_verschiebung(const KummerSurface& s, SynthInfo* info) {
    if (s.field->kind() == FieldDescriptor::Kind::GenericG2 && s.field->p() == 7)
        return solve_generic_g2p7(info);
    return solve_from_targets(2, s.field, build_targets(s), info);
}

VerschiebungMap synth_verschiebung(const CobleQuartic& c, SynthInfo* info) {
    if (c.field->p() != 3)
        throw std::invalid_argument("genus-3 synthesis is pinned for characteristic 3 only");
    if (c.field->generic()) {
        VerschiebungMap m = map_from_v0(3, known_v0_g3p3(c));
        CertifyReport rep;
        std::vector<FieldElem> scales = check_components(m, build_targets(c), rep);
        if (!rep.ok())
            throw std::logic_error("generic genus-3 certification failed");
        m.scales = std::move(scales);
        m.convention_log.push_back(
            "generic genus-3 coefficients taken from the pinned closed form and "
            "certified against all component targets");
        if (info) {
            info->rows = 0;
            info->cols = static_cast<int>(m.basis.size());
            info->rank = 0;
            info->kernel_dim = 1;
        }
        return m;
    }
    return solve_from_targets(3, c.field, build_targets(c), info);
}

CertifyReport certify(const VerschiebungMap& m, const KummerSurface& s) {
    if (m.field != s.field)
        throw std::invalid_argument("map and surface live over different fields");
    CertifyReport rep;
    check_components(m, build_targets(s), rep);
    return rep;
}

CertifyReport certify(const VerschiebungMap& m, const CobleQuartic& c) {
    if (m.field != c.field)
        throw std::invalid_argument("map and quartic live over different fields");
    CertifyReport rep;
    check_components(m, build_targets(c), rep);
    return rep;
}

MPoly known_v0_g2p3(const KummerSurface& s) {
    const FieldDescriptor* f = s.field;
    const FieldElem two = f->from_int(2);
    return mono_of(f, 4, {3, 0, 0, 0}, f->one()) +
           mono_of(f, 4, {1, 2, 0, 0}, two * s.k01) +
           mono_of(f, 4, {1, 0, 2, 0}, two * s.k10) +
           mono_of(f, 4, {1, 0, 0, 2}, two * s.k11) +
           mono_of(f, 4, {0, 1, 1, 1}, two * s.k00);
}

MPoly known_v0_g2p5(const KummerSurface& s) {
    const FieldDescriptor* f = s.field;
    const FieldElem one = f->one(), two = f->from_int(2), three = f->from_int(3);
    const FieldElem k00 = s.k00, k01 = s.k01, k10 = s.k10, k11 = s.k11;
    auto family_a = [&](const FieldElem& k) { return k * k + two; };
    return mono_of(f, 4, {5, 0, 0, 0}, one) +
           mono_of(f, 4, {3, 2, 0, 0}, k01 * family_a(k01)) +
           mono_of(f, 4, {3, 0, 2, 0}, k10 * family_a(k10)) +
           mono_of(f, 4, {3, 0, 0, 2}, k11 * family_a(k11)) +
           mono_of(f, 4, {1, 4, 0, 0}, family_a(k01)) +
           mono_of(f, 4, {1, 0, 4, 0}, family_a(k10)) +
           mono_of(f, 4, {1, 0, 0, 4}, family_a(k11)) +
           mono_of(f, 4, {1, 2, 2, 0},
                   three * k11 * (k00 * k00 + k11 * k11) + k01 * k10 * (one - k11 * k11)) +
           mono_of(f, 4, {1, 2, 0, 2},
                   three * k10 * (k00 * k00 + k10 * k10) + k01 * k11 * (one - k10 * k10)) +
           mono_of(f, 4, {1, 0, 2, 2},
                   three * k01 * (k00 * k00 + k01 * k01) + k10 * k11 * (one - k01 * k01)) +
           mono_of(f, 4, {2, 1, 1, 1},
                   two * k00 * (k00 * k00 + one) - k00 * k01 * k10 * k11) +
           mono_of(f, 4, {0, 3, 1, 1}, k00 * (k01 + three * k10 * k11)) +
           mono_of(f, 4, {0, 1, 3, 1}, k00 * (k10 + three * k01 * k11)) +
           mono_of(f, 4, {0, 1, 1, 3}, k00 * (k11 + three * k01 * k10));
}

MPoly known_v0_g3p3(const CobleQuartic& c) {
    const FieldDescriptor* f = c.field;
    const FieldElem two = f->from_int(2);
    MPoly v(f, 8);
    v.add_term(ExpVec::unit(8, 0, 3), f->one());
    for (unsigned b = 1; b < 8; ++b) {
        ExpVec m = ExpVec::unit(8, 0, 1);
        m.e[b] = 2;
        m.deg = 3;
        v.add_term(m, two * c.gamma[b]);
    }
    for (unsigned astar = 1; astar < 8; ++astar) {
        ExpVec m = ExpVec::zero(8);
        for (const HElem& beta : character_kernel(HElem(astar, 3)))
            if (!beta.is_zero()) m.e[beta.index()] = 1;
        m.deg = 3;
        v.add_term(m, c.delta[astar]);
    }
    v.normalize();
    return v;
}

VerschiebungMap map_from_v0(int g, const MPoly& v0) {
    const FieldDescriptor* f = v0.field();
    VerschiebungMap m;
    m.g = g;
    m.p = v0.total_degree();
    m.field = f;
    m.basis = invariant_basis(g, m.p, f);
    m.coeffs.assign(m.basis.size(), f->zero());
    std::map<ExpVec, size_t, ExpLess> index;
    for (size_t b = 0; b < m.basis.size(); ++b)
        index[m.basis[b].mono.leading().first] = b;
    for (const auto& [mono, c] : v0.terms()) {
        auto it = index.find(mono);
        if (it == index.end())
            throw std::invalid_argument("form has a term outside the invariant basis");
        m.coeffs[it->second] = c;
    }
    for (const TauLift& lift : all_components(g)) m.components.push_back(lift);
    return m;
}

std::pair<int, int> rhat_rank(int g, uint32_t p, const FieldDescriptor* f) {
    std::vector<BasisElem> basis = invariant_basis(g, p, f);
    const int n = static_cast<int>(basis.size());
    std::vector<std::vector<FieldElem>> rows(static_cast<size_t>(n));
    int ncols = 0;
    std::vector<TauLift> comps = all_components(g);
    for (size_t j = 0; j < comps.size(); ++j) {
        std::map<ExpVec, int, ExpLess> col_of;
        std::vector<std::pair<int, std::pair<int, FieldElem>>> entries;  // (col, (row, val))
        for (int b = 0; b < n; ++b) {
            MPoly r = eigen_restrict(basis[static_cast<size_t>(b)].mono, g, comps[j]);
            if (r.is_zero()) continue;
            const auto& [mono, c] = r.leading();
            auto it = col_of.find(mono);
            int col;
            if (it == col_of.end()) {
                col = ncols + static_cast<int>(col_of.size());
                col_of[mono] = col;
            } else {
                col = it->second;
            }
            entries.push_back({col, {b, c}});
        }
        ncols += static_cast<int>(col_of.size());
        for (auto& row : rows) row.resize(static_cast<size_t>(ncols), f->zero());
        for (const auto& [col, rv] : entries)
            rows[static_cast<size_t>(rv.first)][static_cast<size_t>(col)] = rv.second;
    }
    return {n, matrix_rank(f, rows)};
}

std::optional<MPoly> polar_detector(const VerschiebungMap& m) {
    const FieldDescriptor* f = m.field;
    const int nv = 1 << m.g;
    const uint32_t p = m.p;
    const MPoly v = m.v0();
    std::vector<MPoly> forms;
    for (const HElem& alpha : all_of_h(m.g)) forms.push_back(h_translate(v, m.g, alpha));

    std::map<ExpVec, FieldElem, ExpLess> coeff_of_g;
    const std::vector<HElem> hs = all_of_h(m.g);
    for (size_t ai = 0; ai < hs.size(); ++ai) {
        const int var = static_cast<int>(hs[ai].index());
        for (const auto& [mono, c] : forms[ai].terms()) {
            const uint32_t t = (mono.e[static_cast<size_t>(var)] + 1u) % p;
            if (t == 0) return std::nullopt;  // the derivative cannot produce this term
            ExpVec up = mono.plus(ExpVec::unit(nv, var, 1));
            FieldElem cand = c / f->from_int(static_cast<int64_t>(t));
            auto [it, inserted] = coeff_of_g.emplace(up, cand);
            if (!inserted && it->second != cand) return std::nullopt;
        }
    }
    // Completeness: every partial of every candidate term must reproduce the
    // corresponding coefficient, including the vanishing ones.
    for (const auto& [up, gv] : coeff_of_g) {
        for (size_t ai = 0; ai < hs.size(); ++ai) {
            const int var = static_cast<int>(hs[ai].index());
            const uint16_t e = up.e[static_cast<size_t>(var)];
            if (e == 0) continue;
            ExpVec down = ExpVec::unit(nv, var, 1).quotient_of(up);
            FieldElem expect = gv * f->from_int(static_cast<int64_t>(e % p));
            if (forms[ai].coeff_of(down) != expect) return std::nullopt;
        }
    }
    MPoly g(f, nv);
    for (const auto& [mono, c] : coeff_of_g) g.add_term(mono, c);
    g.normalize();
    return g;
}

} // namespace vsch
