#include "vsch/gb.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

namespace vsch {

uint64_t default_gb_budget() {
    if (const char* s = std::getenv("VSCH_GB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<uint64_t>(v);
    }
    return 2'000'000;
}

namespace {

struct Reducer {
    uint64_t budget;
    uint64_t spent = 0;

    // Full division remainder; every lead cancellation costs one step.
    MPoly reduce(MPoly work, const std::vector<MPoly>& basis) {
        MPoly rem(work.field(), work.nvars(), work.order());
        while (!work.is_zero()) {
            const auto& [m, c] = work.leading();
            bool cancelled = false;
            for (const MPoly& g : basis) {
                if (g.is_zero()) continue;
                const ExpVec& lm = g.leading().first;
                if (!lm.divides(m)) continue;
                if (++spent > budget) throw BudgetError(spent);
                work = work - g.mono_times(lm.quotient_of(m), c);
                cancelled = true;
                break;
            }
            if (!cancelled) {
                rem.add_term(m, c);
                work = work - MPoly::monomial(work.field(), work.nvars(), m, c,
                                              work.order());
            }
        }
        rem.normalize();
        return rem;
    }
};

MPoly make_monic(const MPoly& f) {
    return f.times_elem(f.leading().second.inverse());
}

struct PairKey {
    ExpVec lcm;
    int i, j;
};

struct PairLess {
    MonoOrder ord;
    bool operator()(const PairKey& a, const PairKey& b) const {
        int c = cmp_mono(ord, a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// Keep only lead-minimal elements, then reduce every tail against the rest;
// input must already generate its ideal as a Groebner basis.
std::vector<MPoly> interreduce(std::vector<MPoly> g) {
    std::vector<MPoly> in;
    for (MPoly& f : g)
        if (!f.is_zero()) in.push_back(make_monic(f));
    std::sort(in.begin(), in.end(), [](const MPoly& a, const MPoly& b) {
        return cmp_mono(a.order(), a.leading().first, b.leading().first) < 0;
    });
    std::vector<MPoly> minimal;
    for (const MPoly& f : in) {
        bool redundant = false;
        for (const MPoly& kept : minimal)
            if (kept.leading().first.divides(f.leading().first)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(f);
    }
    Reducer red{UINT64_MAX};
    std::vector<MPoly> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MPoly r = red.reduce(minimal[i], others);
        if (!r.is_zero()) out.push_back(make_monic(r));
    }
    std::sort(out.begin(), out.end(), [](const MPoly& a, const MPoly& b) {
        return cmp_mono(a.order(), a.leading().first, b.leading().first) < 0;
    });
    return out;
}

std::vector<MPoly> buchberger(std::vector<MPoly> gens, MonoOrder ord, uint64_t budget) {
    const FieldDescriptor* f = nullptr;
    std::vector<MPoly> basis;
    for (MPoly& g : gens) {
        if (g.is_zero()) continue;
        f = g.field();
        basis.push_back(make_monic(g.order() == ord ? g : g.with_order(ord)));
    }
    if (basis.empty()) return {};
    if (!f->finite())
        throw std::invalid_argument("Groebner engine requires a finite coefficient field");

    PairLess less{ord};
    std::set<PairKey, PairLess> queue(less);
    std::set<std::pair<int, int>> pending;
    auto push_pair = [&](int i, int j) {
        PairKey k{basis[static_cast<size_t>(i)].leading().first.lcm(
                      basis[static_cast<size_t>(j)].leading().first),
                  i, j};
        queue.insert(k);
        pending.insert({i, j});
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j)
        for (int i = 0; i < j; ++i) push_pair(i, j);

    Reducer red{budget == 0 ? default_gb_budget() : budget};
    while (!queue.empty()) {
        PairKey k = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({k.i, k.j});

        const ExpVec& li = basis[static_cast<size_t>(k.i)].leading().first;
        const ExpVec& lj = basis[static_cast<size_t>(k.j)].leading().first;
        if (li.coprime_with(lj)) continue;  // S-poly reduces to zero

        bool chained = false;
        for (int m = 0; m < static_cast<int>(basis.size()) && !chained; ++m) {
            if (m == k.i || m == k.j) continue;
            if (!basis[static_cast<size_t>(m)].leading().first.divides(k.lcm)) continue;
            auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending.count(key(k.i, m)) && !pending.count(key(k.j, m))) chained = true;
        }
        if (chained) continue;

        const MPoly& gi = basis[static_cast<size_t>(k.i)];
        const MPoly& gj = basis[static_cast<size_t>(k.j)];
        MPoly s = gi.mono_times(li.quotient_of(k.lcm), f->one()) -
                  gj.mono_times(lj.quotient_of(k.lcm), f->one());
        MPoly r = red.reduce(std::move(s), basis);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r));
        int idx = static_cast<int>(basis.size()) - 1;
        for (int i = 0; i < idx; ++i) push_pair(i, idx);
    }
    return interreduce(std::move(basis));
}

// Reindex the variables of every term; perm[i] is the new slot of old
// variable i.  nvars_out may differ from the input arity.
MPoly permute_vars(const MPoly& a, const std::vector<int>& perm, int nvars_out,
                   MonoOrder ord) {
    MPoly out(a.field(), nvars_out, ord);
    for (const auto& [m, c] : a.terms()) {
        ExpVec nm = ExpVec::zero(nvars_out);
        for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
            nm.e[static_cast<size_t>(perm[static_cast<size_t>(i)])] = m.e[static_cast<size_t>(i)];
        }
        nm.deg = m.deg;
        out.add_term(nm, c);
    }
    out.normalize();
    return out;
}

} // namespace

std::vector<MPoly> groebner_basis(std::vector<MPoly> gens, const GbOptions& opt) {
    return buchberger(std::move(gens), opt.order, opt.budget);
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis) {
    Reducer red{UINT64_MAX};
    return red.reduce(f, basis);
}

bool in_ideal(const MPoly& f, const std::vector<MPoly>& gb) {
    return normal_form(f, gb).is_zero();
}

bool ideal_equal(const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

namespace {

using Series = std::vector<int64_t>;  // dense coefficients in t, low first

Series series_add(const Series& a, const Series& b) {
    Series r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Series series_shift(const Series& a, uint32_t k) {
    if (a.empty()) return {};
    Series r(a.size() + k, 0);
    for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

Series series_mul(const Series& a, const Series& b) {
    if (a.empty() || b.empty()) return {};
    Series r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<ExpVec> minimalize(std::vector<ExpVec> ms) {
    std::sort(ms.begin(), ms.end(),
              [](const ExpVec& a, const ExpVec& b) { return a.deg < b.deg; });
    std::vector<ExpVec> out;
    for (const ExpVec& m : ms) {
        bool redundant = false;
        for (const ExpVec& kept : out)
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

Series monomial_numerator(std::vector<ExpVec> gens, int nvars) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    for (const ExpVec& m : gens)
        if (m.deg == 0) return {};  // unit ideal
    bool coprime = true;
    for (size_t i = 0; i < gens.size() && coprime; ++i)
        for (size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime_with(gens[j])) coprime = false;
    if (coprime) {
        Series r{1};
        for (const ExpVec& m : gens) {
            Series f(m.deg + 1, 0);
            f[0] = 1;
            f[m.deg] -= 1;
            r = series_mul(r, f);
        }
        return r;
    }
    int pivot = 0, best = -1;
    for (int v = 0; v < nvars; ++v) {
        int count = 0;
        for (const ExpVec& m : gens)
            if (m.e[static_cast<size_t>(v)] > 0) ++count;
        if (count > best) {
            best = count;
            pivot = v;
        }
    }
    // I + (x_pivot): the pivot variable plus all generators avoiding it.
    std::vector<ExpVec> plus{ExpVec::unit(nvars, static_cast<uint16_t>(pivot), 1)};
    for (const ExpVec& m : gens)
        if (m.e[static_cast<size_t>(pivot)] == 0) plus.push_back(m);
    // I : x_pivot: divide each generator by its pivot factor once.
    std::vector<ExpVec> quot;
    for (ExpVec m : gens) {
        if (m.e[static_cast<size_t>(pivot)] > 0) {
            m.e[static_cast<size_t>(pivot)] -= 1;
            m.deg -= 1;
        }
        quot.push_back(m);
    }
    return series_add(monomial_numerator(std::move(plus), nvars),
                      series_shift(monomial_numerator(std::move(quot), nvars), 1));
}

int64_t series_at_one(const Series& s) {
    int64_t v = 0;
    for (int64_t c : s) v += c;
    return v;
}

Series divide_one_minus_t(const Series& s) {
    // s = (1 - t) q  =>  q_i = s_i + q_{i-1}
    Series q(s.size() ? s.size() - 1 : 0, 0);
    int64_t carry = 0;
    for (size_t i = 0; i < q.size(); ++i) {
        carry += s[i];
        q[i] = carry;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    return q;
}

} // namespace

HilbertData hilbert_data(const std::vector<MPoly>& gb, int nvars) {
    std::vector<ExpVec> leads;
    for (const MPoly& g : gb)
        if (!g.is_zero()) leads.push_back(g.leading().first);
    HilbertData out;
    out.numerator = monomial_numerator(std::move(leads), nvars);
    if (out.numerator.empty()) {  // unit ideal: zero ring
        out.krull = -1;
        out.dim_projective = -1;
        out.degree = 0;
        return out;
    }
    Series reduced = out.numerator;
    int cancelled = 0;
    while (!reduced.empty() && series_at_one(reduced) == 0) {
        reduced = divide_one_minus_t(reduced);
        ++cancelled;
    }
    out.krull = nvars - cancelled;
    out.dim_projective = std::max(out.krull - 1, -1);
    int64_t deg = series_at_one(reduced);
    out.degree = out.krull >= 1 ? static_cast<uint64_t>(deg) : 0;
    return out;
}

std::vector<MPoly> saturate_by_var(const std::vector<MPoly>& gens, int var,
                                   const GbOptions& opt) {
    if (gens.empty()) return {};
    const int n = gens[0].nvars();
    for (const MPoly& g : gens)
        if (!g.is_homogeneous())
            throw std::invalid_argument("variable saturation requires homogeneous input");
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::swap(perm[static_cast<size_t>(var)], perm[static_cast<size_t>(n - 1)]);
    std::vector<MPoly> permuted;
    for (const MPoly& g : gens)
        permuted.push_back(permute_vars(g, perm, n, MonoOrder::Grevlex));
    std::vector<MPoly> gb = groebner_basis(std::move(permuted), {MonoOrder::Grevlex, opt.budget});
    std::vector<MPoly> stripped;
    for (const MPoly& g : gb) {
        uint16_t shared = UINT16_MAX;
        for (const auto& [m, c] : g.terms())
            shared = std::min(shared, m.e[static_cast<size_t>(n - 1)]);
        MPoly h(g.field(), n, MonoOrder::Grevlex);
        for (const auto& [m, c] : g.terms()) {
            ExpVec nm = m;
            nm.e[static_cast<size_t>(n - 1)] =
                static_cast<uint16_t>(nm.e[static_cast<size_t>(n - 1)] - shared);
            nm.deg -= shared;
            h.add_term(nm, c);
        }
        h.normalize();
        // Undo the swap (it is its own inverse) and rebuild the basis in the
        // original variable order.
        stripped.push_back(permute_vars(h, perm, n, opt.order));
    }
    return groebner_basis(std::move(stripped), opt);
}

std::vector<MPoly> ideal_intersect(const std::vector<MPoly>& a,
                                   const std::vector<MPoly>& b,
                                   const GbOptions& opt) {
    if (a.empty() || b.empty()) return {};  // empty set generates the zero ideal
    const FieldDescriptor* f = a[0].field();
    const int n = a[0].nvars();
    std::vector<int> shift(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) shift[static_cast<size_t>(i)] = i + 1;
    MPoly t = MPoly::variable(f, n + 1, 0, MonoOrder::ElimFirst);
    MPoly one_minus_t = MPoly::constant(f, n + 1, 1, MonoOrder::ElimFirst) - t;
    std::vector<MPoly> lifted;
    for (const MPoly& g : a)
        lifted.push_back(t * permute_vars(g, shift, n + 1, MonoOrder::ElimFirst));
    for (const MPoly& g : b)
        lifted.push_back(one_minus_t * permute_vars(g, shift, n + 1, MonoOrder::ElimFirst));
    std::vector<MPoly> gb = groebner_basis(std::move(lifted), {MonoOrder::ElimFirst, opt.budget});
    std::vector<int> unshift(static_cast<size_t>(n) + 1);
    unshift[0] = n;  // t is dropped below; park it in the unused top slot
    for (int i = 1; i <= n; ++i) unshift[static_cast<size_t>(i)] = i - 1;
    std::vector<MPoly> kept;
    for (const MPoly& g : gb) {
        bool t_free = true;
        for (const auto& [m, c] : g.terms())
            if (m.e[0] != 0) {
                t_free = false;
                break;
            }
        if (!t_free) continue;
        MPoly h = permute_vars(g, unshift, n + 1, opt.order);
        MPoly down(f, n, opt.order);
        for (const auto& [m, c] : h.terms()) {
            ExpVec nm = ExpVec::zero(n);
            for (int i = 0; i < n; ++i) nm.e[static_cast<size_t>(i)] = m.e[static_cast<size_t>(i)];
            nm.deg = m.deg;
            down.add_term(nm, c);
        }
        down.normalize();
        kept.push_back(down);
    }
    return interreduce(std::move(kept));
}

std::vector<MPoly> saturate_irrelevant(const std::vector<MPoly>& gens,
                                       const GbOptions& opt) {
    if (gens.empty()) return {};
    const int n = gens[0].nvars();
    std::vector<MPoly> acc = saturate_by_var(gens, 0, opt);
    for (int v = 1; v < n; ++v)
        acc = ideal_intersect(acc, saturate_by_var(gens, v, opt), opt);
    return acc;
}

} // namespace vsch
