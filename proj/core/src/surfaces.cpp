#include "vsch/surfaces.hpp"

#include <stdexcept>

namespace vsch {

namespace {

ExpVec exp_of(int nvars, std::initializer_list<std::pair<int, int>> ve) {
    ExpVec m = ExpVec::zero(nvars);
    for (auto [v, e] : ve) {
        m.e[v] = static_cast<uint16_t>(m.e[v] + e);
        m.deg += static_cast<uint32_t>(e);
    }
    return m;
}

// sum over <a>-cosets of y_t^2 y_{t+a}^2
MPoly pair_quartic(const FieldDescriptor* f, int g, HElem a) {
    const int n = 1 << g;
    MPoly q(f, n);
    for (int t = 0; t < n; ++t) {
        int u = t ^ a.bits;
        if (t < u) q.add_term(exp_of(n, {{t, 2}, {u, 2}}), f->one());
    }
    q.normalize();
    return q;
}

MPoly power_sum(const FieldDescriptor* f, int g, int e) {
    const int n = 1 << g;
    MPoly s(f, n);
    for (int v = 0; v < n; ++v) s.add_term(ExpVec::unit(n, v, static_cast<uint16_t>(e)), f->one());
    s.normalize();
    return s;
}

} // namespace

MPoly kummer_equation(const KummerSurface& s) {
    const FieldDescriptor* f = s.field;
    MPoly k = power_sum(f, 2, 4);
    k = k + MPoly::monomial(f, 4, exp_of(4, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}),
                            f->from_int(2) * s.k00);
    k = k + pair_quartic(f, 2, HElem(1, 2)).times_elem(s.k01);
    k = k + pair_quartic(f, 2, HElem(2, 2)).times_elem(s.k10);
    k = k + pair_quartic(f, 2, HElem(3, 2)).times_elem(s.k11);
    return k;
}

FieldElem kummer_relation_residual(const KummerSurface& s) {
    const FieldDescriptor* f = s.field;
    return f->from_int(4) + s.k01 * s.k10 * s.k11 - s.k01 * s.k01 - s.k10 * s.k10 -
           s.k11 * s.k11 + s.k00 * s.k00;
}

bool validate_kummer(const KummerSurface& s) {
    const FieldDescriptor* f = s.field;
    if (!kummer_relation_residual(s).is_zero()) return false;
    const FieldElem two = f->from_int(2);
    for (const FieldElem* k : {&s.k01, &s.k10, &s.k11})
        if ((*k - two).is_zero() || (*k + two).is_zero()) return false;
    // Eight corner expressions: each of the four sign patterns below, plus
    // and minus k00, must be nonzero.
    const FieldElem sums[4] = {
        s.k01 + s.k10 + s.k11 + two,
        s.k01 + s.k10 - s.k11 - two,
        s.k01 - s.k10 + s.k11 - two,
        -s.k01 + s.k10 + s.k11 - two,
    };
    for (const FieldElem& v : sums) {
        if ((v + s.k00).is_zero() || (v - s.k00).is_zero()) return false;
    }
    return true;
}

FieldElem omega(const KummerSurface& s, const Tau& tau) {
    const FieldDescriptor* f = s.field;
    const FieldElem two = f->from_int(2);
    auto frac = [&](const FieldElem& num, const FieldElem& den) { return (two * num) / den; };
    const int a = tau.a0.bits;
    const int c = tau.a0s.bits;
    if (a == 0) {
        switch (c) {
            case 1: return s.k10;
            case 2: return s.k01;
            case 3: return s.k11;
        }
        throw std::invalid_argument("tau must be nonzero");
    }
    if (a == 1) {
        switch (c) {
            case 0: return frac(s.k00 + s.k10 + s.k11, two + s.k01);
            case 1: return frac(-s.k00 + s.k10 - s.k11, two - s.k01);
            case 2: return frac(-s.k00 + s.k10 + s.k11, two + s.k01);
            case 3: return frac(s.k00 + s.k10 - s.k11, two - s.k01);
        }
    }
    if (a == 2) {
        switch (c) {
            case 0: return frac(s.k00 + s.k01 + s.k11, two + s.k10);
            case 1: return frac(-s.k00 + s.k01 + s.k11, two + s.k10);
            case 2: return frac(-s.k00 + s.k01 - s.k11, two - s.k10);
            case 3: return frac(s.k00 + s.k01 - s.k11, two - s.k10);
        }
    }
    switch (c) {
        case 0: return frac(s.k00 + s.k01 + s.k10, two + s.k11);
        case 1: return frac(s.k00 + s.k01 - s.k10, two - s.k11);
        case 2: return frac(-s.k00 + s.k01 - s.k10, two - s.k11);
        case 3: return frac(-s.k00 + s.k01 + s.k10, two + s.k11);
    }
    throw std::invalid_argument("bad tau");
}

KummerSurface frobenius_twist(const KummerSurface& s) {
    return {s.field, s.k00.frobenius(), s.k01.frobenius(), s.k10.frobenius(),
            s.k11.frobenius()};
}

KummerSurface generic_kummer(uint32_t p) {
    const FieldDescriptor* f = FieldDescriptor::generic_g2(p);
    return {f, f->g2_k00(), f->poly_var(0), f->poly_var(1), f->poly_var(2)};
}

std::optional<FieldElem> solve_k00(const FieldElem& k01, const FieldElem& k10,
                                   const FieldElem& k11) {
    const FieldDescriptor* f = k01.field();
    FieldElem w = k01 * k01 + k10 * k10 + k11 * k11 - k01 * k10 * k11 - f->from_int(4);
    return sqrt_element(w);
}

std::optional<KummerSurface> random_kummer(const FieldDescriptor* f, Rng& rng, int max_tries) {
    for (int t = 0; t < max_tries; ++t) {
        KummerSurface s;
        s.field = f;
        s.k01 = f->random_element(rng);
        s.k10 = f->random_element(rng);
        s.k11 = f->random_element(rng);
        auto k00 = solve_k00(s.k01, s.k10, s.k11);
        if (!k00) continue;
        s.k00 = *k00;
        if (validate_kummer(s)) return s;
    }
    return std::nullopt;
}

MPoly coble_equation(const CobleQuartic& c) {
    const FieldDescriptor* f = c.field;
    MPoly q = power_sum(f, 3, 4);
    for (const HElem& a : nonzero_of_h(3))
        q = q + pair_quartic(f, 3, a).times_elem(c.gamma[a.bits]);
    for (const HElem& astar : nonzero_of_h(3)) {
        ExpVec in_ker = ExpVec::zero(8);
        ExpVec out_ker = ExpVec::zero(8);
        for (int b = 0; b < 8; ++b) {
            ExpVec& side = pairing(astar, HElem(static_cast<unsigned>(b), 3)) == 1 ? in_ker : out_ker;
            side.e[b] = 1;
            side.deg += 1;
        }
        MPoly pterm(f, 8);
        pterm.add_term(in_ker, c.delta[astar.bits]);
        pterm.add_term(out_ker, c.delta[astar.bits]);
        pterm.normalize();
        q = q + pterm;
    }
    return q;
}

CobleQuartic generic_coble(uint32_t p) {
    const FieldDescriptor* f = FieldDescriptor::generic_g3(p);
    CobleQuartic c;
    c.field = f;
    for (int b = 1; b <= 7; ++b) {
        c.gamma[b] = f->poly_var(b - 1);
        c.delta[b] = f->poly_var(7 + b - 1);
    }
    c.gamma[0] = f->zero();
    c.delta[0] = f->zero();
    return c;
}

CobleQuartic frobenius_twist(const CobleQuartic& c) {
    CobleQuartic r;
    r.field = c.field;
    r.gamma[0] = c.field->zero();
    r.delta[0] = c.field->zero();
    for (int b = 1; b <= 7; ++b) {
        r.gamma[b] = c.gamma[b].frobenius();
        r.delta[b] = c.delta[b].frobenius();
    }
    return r;
}

std::optional<CobleQuartic> random_coble(const FieldDescriptor* f, Rng& rng, int max_tries) {
    const FieldElem two = f->from_int(2);
    for (int t = 0; t < max_tries; ++t) {
        CobleQuartic c;
        c.field = f;
        c.gamma[0] = f->zero();
        c.delta[0] = f->zero();
        bool ok = true;
        for (int b = 1; b <= 7; ++b) {
            c.gamma[b] = f->random_element(rng);
            c.delta[b] = f->random_element(rng);
            if ((c.gamma[b] - two).is_zero() || (c.gamma[b] + two).is_zero()) ok = false;
        }
        if (ok) return c;
    }
    return std::nullopt;
}

CobleRestriction coble_restrict(const CobleQuartic& c, const TauLift& lift) {
    const FieldDescriptor* f = c.field;
    MPoly r = eigen_restrict(coble_equation(c), 3, lift);

    FieldElem scale = r.coeff_of(ExpVec::unit(4, 0, 4));
    if (scale.is_zero()) throw std::domain_error("degenerate component restriction");

    KummerSurface s;
    s.field = f;
    s.k01 = r.coeff_of(exp_of(4, {{0, 2}, {1, 2}})) / scale;
    s.k10 = r.coeff_of(exp_of(4, {{0, 2}, {2, 2}})) / scale;
    s.k11 = r.coeff_of(exp_of(4, {{0, 2}, {3, 2}})) / scale;
    s.k00 = r.coeff_of(exp_of(4, {{0, 1}, {1, 1}, {2, 1}, {3, 1}})) / (scale + scale);

    if (kummer_equation(s).times_elem(scale) != r)
        throw std::logic_error("component restriction is not of Kummer shape");
    return {s, scale};
}

} // namespace vsch
