#include "vsch/verify.hpp"

#include "vsch/ellp.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace vsch {

std::string irreducibility_name(Irreducibility v) {
    switch (v) {
        case Irreducibility::AbsolutelyIrreducible: return "absolutely-irreducible";
        case Irreducibility::Reducible: return "reducible";
        default: return "inconclusive";
    }
}

std::vector<MPoly> singular_locus_ideal(const MPoly& s) {
    std::vector<MPoly> gens{s};
    for (int v = 0; v < s.nvars(); ++v) gens.push_back(s.partial(v));
    return gens;
}

namespace {

// Rank of the symmetric matrix of a quadratic form (char != 2).
int quadratic_form_rank(const MPoly& s) {
    const FieldDescriptor* f = s.field();
    const int n = s.nvars();
    const FieldElem half = f->from_int(2).inverse();
    std::vector<std::vector<FieldElem>> m(static_cast<size_t>(n),
                                          std::vector<FieldElem>(static_cast<size_t>(n), f->zero()));
    for (const auto& [mono, c] : s.terms()) {
        int i = -1, j = -1;
        for (int v = 0; v < n; ++v) {
            if (mono.e[static_cast<size_t>(v)] == 2) i = j = v;
            else if (mono.e[static_cast<size_t>(v)] == 1) (i < 0 ? i : j) = v;
        }
        if (i == j)
            m[static_cast<size_t>(i)][static_cast<size_t>(i)] = c;
        else {
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = c * half;
            m[static_cast<size_t>(j)][static_cast<size_t>(i)] = c * half;
        }
    }
    return matrix_rank(f, m);
}

// Evaluate the parameters of a generic genus-2 coefficient at a concrete
// surface over fin; nullopt when a denominator vanishes there.
std::optional<MPoly> specialize_g2(const MPoly& s, const FieldDescriptor* fin,
                                   const KummerSurface& at) {
    const std::vector<FieldElem> pt{at.k01, at.k10, at.k11};
    MPoly out(fin, s.nvars(), s.order());
    for (const auto& [mono, c] : s.terms()) {
        const G2Rep& r = c.g2();
        FieldElem den = eval_poly(r.d, fin, pt);
        if (den.is_zero()) return std::nullopt;
        FieldElem num = eval_poly(r.n0, fin, pt) + eval_poly(r.n1, fin, pt) * at.k00;
        out.add_term(mono, num / den);
    }
    out.normalize();
    return out;
}

} // namespace

Irreducibility irreducibility_certificate(const MPoly& s, Rng& rng) {
    if (s.is_zero() || !s.is_homogeneous()) return Irreducibility::Inconclusive;
    const FieldDescriptor* f = s.field();
    const uint32_t d = s.total_degree();
    if (d == 0) return Irreducibility::Inconclusive;
    if (d == 1) return Irreducibility::AbsolutelyIrreducible;
    if (d == 2) {
        // rank 1: a doubled hyperplane; rank 2: two distinct hyperplanes
        // (possibly conjugate); rank >= 3: irreducible quadric.
        return quadratic_form_rank(s) >= 3 ? Irreducibility::AbsolutelyIrreducible
                                           : Irreducibility::Reducible;
    }
    if (f->finite()) {
        if (s.nvars() < 3) return Irreducibility::Inconclusive;
        try {
            HilbertData h = hilbert_data(groebner_basis(singular_locus_ideal(s)), s.nvars());
            if (h.dim_projective <= s.nvars() - 4) return Irreducibility::AbsolutelyIrreducible;
        } catch (const BudgetError&) {
        }
        return Irreducibility::Inconclusive;
    }
    if (f->kind() != FieldDescriptor::Kind::GenericG2) return Irreducibility::Inconclusive;
    const FieldDescriptor* fin = FieldDescriptor::extension(f->p(), 4);
    int full_degree_samples = 0;
    for (int tries = 0; tries < 64 && full_degree_samples < 3; ++tries) {
        auto surf = random_kummer(fin, rng);
        if (!surf) continue;
        auto sp = specialize_g2(s, fin, *surf);
        if (!sp || sp->is_zero() || sp->total_degree() != d) continue;
        ++full_degree_samples;
        if (irreducibility_certificate(*sp, rng) == Irreducibility::AbsolutelyIrreducible)
            return Irreducibility::AbsolutelyIrreducible;
    }
    return Irreducibility::Inconclusive;
}

FactorizationReport pullback_factorization(const VerschiebungMap& v, const KummerSurface& k,
                                           Rng& rng) {
    if (v.g != 2) throw std::invalid_argument("pullback factorization is a genus-2 pipeline");
    if (v.field != k.field) throw std::invalid_argument("map and surface field mismatch");
    FactorizationReport rep;
    rep.p = v.p;
    rep.genus = v.g;
    rep.surface_id = "k01=" + k.k01.str() + " k10=" + k.k10.str() + " k11=" + k.k11.str() +
                     " k00=" + k.k00.str() + " over " + k.field->name();

    const MPoly v0 = v.v0();
    std::vector<MPoly> forms;
    for (const HElem& a : all_of_h(2)) forms.push_back(h_translate(v0, 2, a));
    MPoly pulled = kummer_equation(k).substitute(forms);
    if (pulled.total_degree() != 4 * v.p) {
        rep.notes.push_back("pullback degree is not 4p");
        return rep;
    }
    MPoly twisted = kummer_equation(frobenius_twist(k));
    auto quotient = pulled.exact_divide(twisted);
    rep.divisible = quotient.has_value();
    if (!rep.divisible) {
        rep.notes.push_back("twisted quartic does not divide the pullback");
        return rep;
    }
    auto root = quotient->sqrt();
    rep.square = root.has_value();
    if (!rep.square) {
        rep.notes.push_back("quotient is not a perfect square");
        return rep;
    }
    rep.factor = *root;
    rep.degree_ok = root->total_degree() == 2 * v.p - 2;
    if (!rep.degree_ok) rep.notes.push_back("square root degree is not 2p-2");
    rep.irreducibility = irreducibility_certificate(*root, rng);
    return rep;
}

namespace {

bool all_reduce_to_zero(const std::vector<MPoly>& gens, const std::vector<MPoly>& gb) {
    for (const MPoly& g : gens)
        if (!normal_form(g, gb).is_zero()) return false;
    return true;
}

CurveExperiment run_single_curve(uint32_t p, int ext_degree, int index, uint64_t seed,
                                 const GbOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    CurveExperiment ce;
    ce.index = index;
    ce.seed = seed;
    ce.p = p;
    ce.ext_degree = ext_degree;
    Rng rng(seed);
    const FieldDescriptor* f = FieldDescriptor::extension(p, ext_degree);
    auto surf = random_kummer(f, rng);
    if (!surf) {
        ce.notes.push_back("no valid surface found");
        return ce;
    }
    ce.surface = *surf;
    int supersingular = 0;
    for (const Tau& t : all_taus(2))
        if (!is_ordinary(EllipticModel{f, mu_of_omega(omega(*surf, t))})) ++supersingular;
    ce.all_components_ordinary = supersingular == 0;
    if (supersingular > 0)
        ce.notes.push_back(std::to_string(supersingular) +
                           " supersingular component modulus(es); the singular scheme of the "
                           "factor degenerates and its degree exceeds the ordinary value");
    try {
        VerschiebungMap m = synth_verschiebung(*surf);
        ce.factorization = pullback_factorization(m, *surf, rng);
        if (!ce.factorization.square) return ce;
        const MPoly& h = *ce.factorization.factor;

        const MPoly v0 = m.v0();
        std::vector<MPoly> forms;
        for (const HElem& a : all_of_h(2)) forms.push_back(h_translate(v0, 2, a));

        // (a) the singular scheme of the factor: dimension and length.
        std::vector<MPoly> sing_sat = saturate_irrelevant(singular_locus_ideal(h), opt);
        std::vector<MPoly> gb_sing = groebner_basis(sing_sat, opt);
        HilbertData hs = hilbert_data(gb_sing, 4);
        ce.sing_h_zero_dimensional = hs.dim_projective == 0;
        ce.sing_h_degree = static_cast<int64_t>(hs.degree);

        // (b)/(c) base locus of the four forms versus Sing(H).
        std::vector<MPoly> gb_base = groebner_basis(saturate_irrelevant(forms, opt), opt);
        ce.base_locus_contained = all_reduce_to_zero(gb_sing, gb_base);
        ce.containment_strict = !all_reduce_to_zero(gb_base, gb_sing);

        // (d) Sing(H) against the twisted quartic.
        std::vector<MPoly> meet = gb_sing;
        meet.push_back(kummer_equation(frobenius_twist(*surf)));
        ce.disjoint_from_twist = hilbert_data(groebner_basis(meet, opt), 4).dim_projective == -1;

        // (e)/(f) preimage of the sixteen nodes under the forms.
        std::vector<MPoly> nodes =
            groebner_basis(saturate_irrelevant(singular_locus_ideal(kummer_equation(*surf)), opt), opt);
        std::vector<MPoly> pulled_nodes;
        for (const MPoly& n : nodes) pulled_nodes.push_back(n.substitute(forms));
        ce.inside_node_preimage = all_reduce_to_zero(pulled_nodes, gb_sing);
        ce.node_preimage_dim = hilbert_data(groebner_basis(pulled_nodes, opt), 4).dim_projective;
    } catch (const BudgetError& e) {
        ce.budget_exceeded = true;
        ce.notes.push_back("ideal computation budget exceeded after " +
                           std::to_string(e.spent()) + " steps");
    } catch (const std::exception& e) {
        ce.notes.push_back(std::string("error: ") + e.what());
    }
    ce.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    return ce;
}

} // namespace

std::vector<CurveExperiment> run_experiment(uint32_t p, int ext_degree, int n_curves,
                                            uint64_t seed, int workers, uint64_t gb_budget) {
    if (p != 5 && p != 7)
        throw std::invalid_argument("experiment campaign supports characteristics 5 and 7");
    if (n_curves <= 0) return {};
    GbOptions opt;
    opt.budget = gb_budget;
    std::vector<CurveExperiment> out(static_cast<size_t>(n_curves));
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n_curves) return;
            out[static_cast<size_t>(i)] =
                run_single_curve(p, ext_degree, i, Rng::derive(seed, static_cast<uint64_t>(i)), opt);
        }
    };
    int nw = workers > 0 ? workers
                         : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    nw = std::min(nw, n_curves);
    std::vector<std::thread> pool;
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

} // namespace vsch
