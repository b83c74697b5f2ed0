#include "vsch/theta.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace vsch {

std::vector<Tau> all_taus(int g) {
    std::vector<Tau> out;
    for (const HElem& a : all_of_h(g))
        for (const HElem& s : all_of_h(g)) {
            if (a.is_zero() && s.is_zero()) continue;
            out.push_back({a, s});
        }
    return out;
}

std::vector<TauLift> all_components(int g) {
    std::vector<TauLift> out;
    for (const Tau& t : all_taus(g)) {
        out.push_back({t, true, true});
        if (!t.a0.is_zero()) out.push_back({t, false, true});
    }
    return out;
}

std::vector<HElem> fold_transversal(int g, HElem a0) {
    if (a0.is_zero()) throw std::logic_error("fold_transversal needs a0 != 0");
    std::vector<HElem> t;
    for (const HElem& b : all_of_h(g)) {
        HElem other = b + a0;
        if (b.bits < other.bits) t.push_back(b);
    }
    if (!is_subgroup(t)) throw std::logic_error("transversal is not a subgroup");
    return t;  // all_of_h is ascending, so t is sorted
}

std::vector<HElem> surviving_set(int g, const Tau& tau, bool plus) {
    if (!tau.a0.is_zero()) throw std::logic_error("surviving_set needs a0 == 0");
    if (tau.a0s.is_zero()) throw std::logic_error("tau must be nonzero");
    std::vector<HElem> s;
    for (const HElem& b : all_of_h(g))
        if ((pairing(tau.a0s, b) == 1) == plus) s.push_back(b);
    return s;
}

std::vector<HElem> lambda_support(int g, const TauLift& lift) {
    return lift.tau.a0.is_zero() ? surviving_set(g, lift.tau, lift.sign_plus)
                                 : fold_transversal(g, lift.tau.a0);
}

std::vector<std::string> lambda_names(int g) {
    std::vector<std::string> v;
    for (int i = 0; i < (1 << (g - 1)); ++i) v.push_back("l" + std::to_string(i));
    return v;
}

namespace {

// Branch value mu with mu^2 = chi(a0) = -1, required only by monomials that
// fold an odd number of coordinates; even folds contribute mu^2 powers that
// stay in the base field.
FieldElem fold_mu_sqrt(const FieldDescriptor* f, const TauLift& lift) {
    auto m = f->mu0();
    if (!m)
        throw std::domain_error(
            "component needs a square root of -1 that the field lacks");
    return lift.mu_plus ? *m : -*m;
}

} // namespace

MPoly eigen_restrict(const MPoly& poly, int g, const TauLift& lift) {
    const FieldDescriptor* f = poly.field();
    const int nin = 1 << g;
    const int nout = 1 << (g - 1);
    assert(poly.nvars() == nin);
    MPoly out(f, nout, poly.order());

    if (lift.tau.a0.is_zero()) {
        std::vector<HElem> surv = surviving_set(g, lift.tau, lift.sign_plus);
        std::array<int, 8> pos;
        pos.fill(-1);
        for (size_t i = 0; i < surv.size(); ++i) pos[surv[i].bits] = static_cast<int>(i);
        for (const auto& [m, c] : poly.terms()) {
            ExpVec nm = ExpVec::zero(nout);
            bool dead = false;
            for (int v = 0; v < nin && !dead; ++v) {
                if (!m.e[v]) continue;
                if (pos[v] < 0) dead = true;
                else nm.e[pos[v]] = static_cast<uint16_t>(nm.e[pos[v]] + m.e[v]);
            }
            if (dead) continue;
            nm.deg = m.deg;
            out.add_term(nm, c);
        }
        out.normalize();
        return out;
    }

    const HElem a0 = lift.tau.a0;
    std::vector<HElem> tr = fold_transversal(g, a0);
    std::array<int, 8> pos;
    pos.fill(-1);
    for (size_t i = 0; i < tr.size(); ++i) pos[tr[i].bits] = static_cast<int>(i);

    // Fold rule y_{t+a0} = s * mu^p * chi(t) * y_t with mu^2 = chi(a0).  The
    // sign part s * chi(t) is tracked per variable; the mu part depends only
    // on the total folded multiplicity of the monomial.  Even multiplicities
    // reduce to powers of mu^2 = chi(a0) in the base field, so a square root
    // of -1 is demanded only when an odd fold actually occurs.
    const int chi = pairing(lift.tau.a0s, lift.tau.a0);
    const bool sign_minus = !lift.sign_plus;
    std::array<bool, 8> neg_sign{};  // per-variable sign part is -1
    for (int v = 0; v < nin; ++v) {
        if (pos[v] >= 0) continue;
        HElem t = HElem(static_cast<unsigned>(v), static_cast<unsigned>(g)) + a0;
        neg_sign[v] = (pairing(lift.tau.a0s, t) == 1) == sign_minus;
    }

    for (const auto& [m, c] : poly.terms()) {
        ExpVec nm = ExpVec::zero(nout);
        uint32_t folded = 0;
        bool neg = false;
        for (int v = 0; v < nin; ++v) {
            if (!m.e[v]) continue;
            int target = pos[v];
            if (target < 0) {
                HElem b(static_cast<unsigned>(v), static_cast<unsigned>(g));
                target = pos[(b + a0).bits];
                folded += m.e[v];
                if (neg_sign[v] && (m.e[v] & 1)) neg = !neg;
            }
            nm.e[target] = static_cast<uint16_t>(nm.e[target] + m.e[v]);
        }
        nm.deg = m.deg;
        FieldElem nc = neg ? -c : c;
        if (chi == 1) {
            // mu = +-1; mu^(p*folded) flips the sign on the minus branch for
            // odd multiplicities (p is odd).
            if (!lift.mu_plus && (folded & 1)) nc = -nc;
        } else {
            unsigned k = (f->p() % 4u) * (folded % 4u) % 4u;  // mu^4 = 1
            if (k == 2) {
                nc = -nc;
            } else if (k == 1 || k == 3) {
                FieldElem mu = fold_mu_sqrt(f, lift);
                nc = nc * (k == 1 ? mu : -mu);  // mu^3 = -mu
            }
        }
        out.add_term(nm, nc);
    }
    out.normalize();
    return out;
}

MPoly h_translate(const MPoly& poly, int g, HElem alpha) {
    const int n = 1 << g;
    assert(poly.nvars() == n);
    MPoly out(poly.field(), n, poly.order());
    for (const auto& [m, c] : poly.terms()) {
        ExpVec nm = ExpVec::zero(n);
        for (int v = 0; v < n; ++v) nm.e[v ^ alpha.bits] = m.e[v];
        nm.deg = m.deg;
        out.add_term(nm, c);
    }
    out.normalize();
    return out;
}

MPoly char_act(const MPoly& poly, int g, HElem astar) {
    const int n = 1 << g;
    assert(poly.nvars() == n);
    MPoly out(poly.field(), n, poly.order());
    for (const auto& [m, c] : poly.terms()) {
        int sign = 1;
        for (int v = 0; v < n; ++v)
            if (m.e[v] % 2 && pairing(astar, HElem(static_cast<unsigned>(v),
                                                   static_cast<unsigned>(g))) == -1)
                sign = -sign;
        out.add_term(m, sign == 1 ? c : -c);
    }
    out.normalize();
    return out;
}

namespace {

void compositions_rec(int slots, int total, std::array<uint8_t, 8>& cur, int at,
                      std::vector<std::array<uint8_t, 8>>& out) {
    if (at == slots - 1) {
        cur[at] = static_cast<uint8_t>(total);
        out.push_back(cur);
        return;
    }
    for (int v = total; v >= 0; --v) {
        cur[at] = static_cast<uint8_t>(v);
        compositions_rec(slots, total - v, cur, at + 1, out);
    }
}

std::vector<std::array<uint8_t, 8>> compositions(int slots, int total) {
    std::vector<std::array<uint8_t, 8>> out;
    std::array<uint8_t, 8> cur{};
    compositions_rec(slots, total, cur, 0, out);
    return out;
}

std::string f_label(int slots, const std::array<uint8_t, 8>& f) {
    std::string s = "[";
    for (int i = 0; i < slots; ++i) {
        if (i) s += ",";
        s += std::to_string(static_cast<int>(f[i]));
    }
    return s + "]";
}

MPoly doubled_monomial(const FieldDescriptor* field, int n,
                       const std::vector<int>& ones, const std::array<uint8_t, 8>& f) {
    ExpVec m = ExpVec::zero(n);
    for (int v : ones) {
        m.e[v] = static_cast<uint16_t>(m.e[v] + 1);
        m.deg += 1;
    }
    for (int i = 0; i < n; ++i) {
        m.e[i] = static_cast<uint16_t>(m.e[i] + 2 * f[i]);
        m.deg += 2u * f[i];
    }
    return MPoly::monomial(field, n, m, field->one());
}

} // namespace

std::vector<BasisElem> invariant_basis(int g, uint32_t p, const FieldDescriptor* field) {
    const int n = 1 << g;
    std::vector<BasisElem> out;

    // Family A: y_0 times a square, total degree p.
    for (const auto& f : compositions(n, static_cast<int>(p - 1) / 2)) {
        BasisElem e;
        e.family = 'A';
        e.astar = HElem(0, static_cast<unsigned>(g));
        e.f = f;
        e.mono = doubled_monomial(field, n, {0}, f);
        e.label = "A" + f_label(n, f);
        out.push_back(std::move(e));
    }

    // Family B: the product of all nonzero coordinates times a square.
    int bsum = (static_cast<int>(p) - n + 1);
    if (bsum >= 0) {
        std::vector<int> ones;
        for (int v = 1; v < n; ++v) ones.push_back(v);
        for (const auto& f : compositions(n, bsum / 2)) {
            BasisElem e;
            e.family = 'B';
            e.astar = HElem(0, static_cast<unsigned>(g));
            e.f = f;
            e.mono = doubled_monomial(field, n, ones, f);
            e.label = "B" + f_label(n, f);
            out.push_back(std::move(e));
        }
    }

    // Family C (g = 3): per character, the product over its kernel's nonzero
    // elements times a square.
    if (g == 3) {
        for (const HElem& astar : nonzero_of_h(g)) {
            std::vector<int> ones;
            for (const HElem& b : character_kernel(astar))
                if (!b.is_zero()) ones.push_back(static_cast<int>(b.bits));
            for (const auto& f : compositions(n, static_cast<int>(p - 3) / 2)) {
                BasisElem e;
                e.family = 'C';
                e.astar = astar;
                e.f = f;
                e.mono = doubled_monomial(field, n, ones, f);
                e.label = "C" + astar.str() + f_label(n, f);
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

MPoly folded_a_image(const FieldDescriptor* field, [[maybe_unused]] uint32_t p,
                     const TauLift& lift, const std::array<uint8_t, 8>& f) {
    const HElem a0 = lift.tau.a0;
    const HElem a0s = lift.tau.a0s;
    std::vector<HElem> tr = fold_transversal(2, a0);
    const HElem alpha = tr[1];
    int chi_a0 = pairing(a0s, a0);
    int fa0 = f[a0.bits], fboth = f[(alpha + a0).bits];
    int sign = ((fa0 + fboth) % 2 && chi_a0 == -1) ? -1 : 1;
    ExpVec m = ExpVec::zero(2);
    m.e[0] = static_cast<uint16_t>(1 + 2 * (f[0] + fa0));
    m.e[1] = static_cast<uint16_t>(2 * (f[alpha.bits] + fboth));
    m.deg = m.e[0] + m.e[1];
    assert(m.deg == p);
    return MPoly::monomial(field, 2, m, field->from_int(sign));
}

MPoly folded_b_image(const FieldDescriptor* field, [[maybe_unused]] uint32_t p,
                     const TauLift& lift, const std::array<uint8_t, 8>& f) {
    const HElem a0 = lift.tau.a0;
    const HElem a0s = lift.tau.a0s;
    std::vector<HElem> tr = fold_transversal(2, a0);
    const HElem alpha = tr[1];
    int chi_a0 = pairing(a0s, a0);
    int chi_alpha = pairing(a0s, alpha);
    int fa0 = f[a0.bits], fboth = f[(alpha + a0).bits];
    int sign = chi_alpha;
    if ((1 + fa0 + fboth) % 2 && chi_a0 == -1) sign = -sign;
    ExpVec m = ExpVec::zero(2);
    m.e[0] = static_cast<uint16_t>(1 + 2 * (f[0] + fa0));
    m.e[1] = static_cast<uint16_t>(2 * (1 + f[alpha.bits] + fboth));
    m.deg = m.e[0] + m.e[1];
    assert(m.deg == p);
    return MPoly::monomial(field, 2, m, field->from_int(sign));
}

namespace {

uint64_t binom(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

DimsCheck dims_check(int g, uint32_t p) {
    const uint64_t n = 1ull << g;
    const uint64_t half = 1ull << (g - 1);
    DimsCheck d;
    d.forms_dim = binom(n + p - 1, n - 1);
    d.components_dim = 2 * ((1ull << (2 * g)) - 1) * binom(half + p - 1, half - 1);
    d.bounded = d.forms_dim <= d.components_dim;
    return d;
}

} // namespace vsch
