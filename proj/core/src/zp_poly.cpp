#include "vsch/zp_poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace vsch {

namespace {

uint32_t mod_pos(int64_t c, uint32_t p) {
    int64_t r = c % static_cast<int64_t>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
    // p <= 7, so a tiny scan is fine and branch-free of edge cases.
    for (uint32_t x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw std::domain_error("inverse of zero residue");
}

} // namespace

ZpPoly ZpPoly::constant(uint32_t p, int nvars, int64_t c) {
    ZpPoly r(p, nvars);
    uint32_t cc = mod_pos(c, p);
    if (cc) r.t_.push_back({ExpVec::zero(nvars), cc});
    return r;
}

ZpPoly ZpPoly::variable(uint32_t p, int nvars, int i) {
    ZpPoly r(p, nvars);
    r.t_.push_back({ExpVec::unit(nvars, i, 1), 1});
    return r;
}

ZpPoly ZpPoly::monomial(uint32_t p, const ExpVec& m, int64_t c) {
    ZpPoly r(p, m.n);
    uint32_t cc = mod_pos(c, p);
    if (cc) r.t_.push_back({m, cc});
    return r;
}

void ZpPoly::add_term(const ExpVec& m, int64_t c) {
    uint32_t cc = mod_pos(c, p_);
    if (cc) t_.push_back({m, cc});
}

void ZpPoly::normalize() {
    std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) {
        return cmp_grevlex(a.first, b.first) > 0;
    });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const Term& t : t_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second = (out.back().second + t.second) % p_;
        } else {
            out.push_back(t);
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.second == 0; }),
              out.end());
    t_ = std::move(out);
}

ZpPoly ZpPoly::operator+(const ZpPoly& o) const {
    assert(p_ == o.p_ && n_ == o.n_);
    ZpPoly r(p_, n_);
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = cmp_grevlex(t_[i].first, o.t_[j].first);
        if (c > 0) {
            r.t_.push_back(t_[i++]);
        } else if (c < 0) {
            r.t_.push_back(o.t_[j++]);
        } else {
            uint32_t s = (t_[i].second + o.t_[j].second) % p_;
            if (s) r.t_.push_back({t_[i].first, s});
            ++i; ++j;
        }
    }
    while (i < t_.size()) r.t_.push_back(t_[i++]);
    while (j < o.t_.size()) r.t_.push_back(o.t_[j++]);
    return r;
}

ZpPoly ZpPoly::operator-() const {
    ZpPoly r(p_, n_);
    r.t_.reserve(t_.size());
    for (const Term& t : t_) r.t_.push_back({t.first, p_ - t.second});
    return r;
}

ZpPoly ZpPoly::operator-(const ZpPoly& o) const { return *this + (-o); }

ZpPoly ZpPoly::scaled(uint32_t c) const {
    c %= p_;
    if (c == 0) return ZpPoly(p_, n_);
    if (c == 1) return *this;
    ZpPoly r(p_, n_);
    r.t_.reserve(t_.size());
    for (const Term& t : t_) r.t_.push_back({t.first, (t.second * c) % p_});
    return r;
}

ZpPoly ZpPoly::mono_times(const ExpVec& m, uint32_t c) const {
    c %= p_;
    if (c == 0) return ZpPoly(p_, n_);
    ZpPoly r(p_, n_);
    r.t_.reserve(t_.size());
    for (const Term& t : t_)
        r.t_.push_back({t.first.plus(m), (t.second * c) % p_});
    return r;
}

ZpPoly ZpPoly::operator*(const ZpPoly& o) const {
    assert(p_ == o.p_ && n_ == o.n_);
    if (t_.empty() || o.t_.empty()) return ZpPoly(p_, n_);
    if (o.t_.size() == 1) return mono_times(o.t_[0].first, o.t_[0].second);
    if (t_.size() == 1) return o.mono_times(t_[0].first, t_[0].second);
    // Map-based accumulation keeps this simple; operand sizes in this
    // project stay modest (hundreds of terms).
    std::map<ExpVec, uint32_t, decltype([](const ExpVec& a, const ExpVec& b) {
                 return cmp_grevlex(a, b) > 0;
             })>
        acc;
    for (const Term& a : t_)
        for (const Term& b : o.t_) {
            ExpVec m = a.first.plus(b.first);
            uint32_t c = (a.second * b.second) % p_;
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(m, c);
            } else {
                it->second = (it->second + c) % p_;
            }
        }
    ZpPoly r(p_, n_);
    r.t_.reserve(acc.size());
    for (const auto& [m, c] : acc)
        if (c) r.t_.push_back({m, c});
    return r;
}

ZpPoly ZpPoly::pow(uint32_t k) const {
    ZpPoly r = constant(p_, n_, 1);
    ZpPoly b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

std::optional<ZpPoly> ZpPoly::exact_div(const ZpPoly& b) const {
    assert(p_ == b.p_ && n_ == b.n_);
    if (b.t_.empty()) return std::nullopt;
    ZpPoly rem = *this;
    ZpPoly q(p_, n_);
    const ExpVec& lb = b.t_.front().first;
    uint32_t ilc = inv_mod(b.t_.front().second, p_);
    while (!rem.t_.empty()) {
        const Term& lt = rem.t_.front();
        if (!lb.divides(lt.first)) return std::nullopt;
        ExpVec m = lb.quotient_of(lt.first);
        uint32_t c = (lt.second * ilc) % p_;
        q.t_.push_back({m, c});
        rem = rem - b.mono_times(m, c);
    }
    // Quotient terms were produced in strictly descending order already.
    return q;
}

int ZpPoly::degree_in(int var) const {
    int d = 0;
    for (const Term& t : t_) d = std::max(d, static_cast<int>(t.first.e[var]));
    return d;
}

std::vector<ZpPoly> ZpPoly::coeffs_in_var(int var) const {
    std::vector<ZpPoly> cs(static_cast<size_t>(degree_in(var)) + 1, ZpPoly(p_, n_));
    for (const Term& t : t_) {
        ExpVec m = t.first;
        int d = m.e[var];
        m.deg -= m.e[var];
        m.e[var] = 0;
        cs[d].t_.push_back({m, t.second});
    }
    for (ZpPoly& c : cs) c.normalize();
    return cs;
}

ZpPoly ZpPoly::join_in_var(uint32_t p, int nvars, int var, const std::vector<ZpPoly>& cs) {
    ZpPoly r(p, nvars);
    for (size_t d = 0; d < cs.size(); ++d)
        for (const Term& t : cs[d].t_) {
            ExpVec m = t.first;
            m.e[var] = static_cast<uint16_t>(m.e[var] + d);
            m.deg += static_cast<uint32_t>(d);
            r.t_.push_back({m, t.second});
        }
    r.normalize();
    return r;
}

ZpPoly ZpPoly::monic() const {
    if (t_.empty()) return *this;
    return scaled(inv_mod(t_.front().second, p_));
}

namespace {

// Content (gcd of coefficients) of `a` viewed as univariate in `var`.
ZpPoly content_in(const ZpPoly& a, int var);

// Recursive multivariate gcd by primitive pseudo-remainder sequences.
ZpPoly gcd_rec(ZpPoly a, ZpPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant())
        return ZpPoly::constant(a.p(), a.nvars(), 1);

    // Pick the main variable: lowest index present in either operand.
    int var = -1;
    for (int i = 0; i < a.nvars() && var < 0; ++i)
        if (a.contains_var(i) || b.contains_var(i)) var = i;
    if (var < 0) return ZpPoly::constant(a.p(), a.nvars(), 1);

    if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
        // One operand is free of the main variable: gcd divides the content.
        ZpPoly ca = a.degree_in(var) == 0 ? a : content_in(a, var);
        ZpPoly cb = b.degree_in(var) == 0 ? b : content_in(b, var);
        return gcd_rec(ca, cb);
    }

    ZpPoly ca = content_in(a, var);
    ZpPoly cb = content_in(b, var);
    ZpPoly cg = gcd_rec(ca, cb);
    a = *a.exact_div(ca);
    b = *b.exact_div(cb);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);

    // Primitive PRS: pseudo-divide, keep only the primitive part.
    while (true) {
        int da = a.degree_in(var);
        int db = b.degree_in(var);
        // prem(a, b) wrt var: lc(b)^(da-db+1) * a  reduced by b.
        std::vector<ZpPoly> acs = a.coeffs_in_var(var);
        std::vector<ZpPoly> bcs = b.coeffs_in_var(var);
        ZpPoly lcb = bcs.back();
        ZpPoly r = a;
        int steps = da - db + 1;
        for (int s = 0; s < steps && !r.is_zero() && r.degree_in(var) >= db; ++s) {
            std::vector<ZpPoly> rcs = r.coeffs_in_var(var);
            int dr = static_cast<int>(rcs.size()) - 1;
            ZpPoly lcr = rcs.back();
            // r <- lcb * r - lcr * x^(dr-db) * b
            ZpPoly shift = ZpPoly::monomial(a.p(), ExpVec::unit(a.nvars(), var, dr - db), 1);
            r = lcb * r - lcr * shift * b;
        }
        if (!r.is_zero() && r.degree_in(var) >= db)
            throw std::logic_error("pseudo-division did not reduce degree");
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            // PRS terminated in a nonzero element free of var: the gcd has
            // degree 0 in var, so only the content contribution survives.
            return cg.monic();
        }
        a = std::move(b);
        ZpPoly cr = content_in(r, var);
        b = *r.exact_div(cr);
    }
    ZpPoly cb2 = content_in(b, var);
    ZpPoly prim = *b.exact_div(cb2);
    return (cg * prim).monic();
}

ZpPoly content_in(const ZpPoly& a, int var) {
    std::vector<ZpPoly> cs = a.coeffs_in_var(var);
    ZpPoly g(a.p(), a.nvars());
    for (const ZpPoly& c : cs) {
        if (c.is_zero()) continue;
        g = gcd_rec(g, c);
        if (g.is_one()) break;
    }
    return g;
}

} // namespace

ZpPoly ZpPoly::gcd(const ZpPoly& a, const ZpPoly& b) {
    assert(a.p() == b.p() && a.nvars() == b.nvars());
    return gcd_rec(a, b);
}

std::optional<ZpPoly> ZpPoly::sqrt() const {
    if (t_.empty()) return ZpPoly(p_, n_);
    const Term& lt = t_.front();
    for (int i = 0; i < n_; ++i)
        if (lt.first.e[i] % 2) return std::nullopt;
    // Leading coefficient must be a square mod p.
    uint32_t s0 = 0;
    for (uint32_t x = 1; x <= p_ / 2; ++x)
        if ((x * x) % p_ == lt.second) { s0 = x; break; }
    if (!s0) return std::nullopt;
    ExpVec half = ExpVec::zero(n_);
    for (int i = 0; i < n_; ++i) half.e[i] = static_cast<uint16_t>(lt.first.e[i] / 2);
    half.deg = lt.first.deg / 2;

    ZpPoly s = monomial(p_, half, s0);
    ZpPoly rem = *this - s * s;
    // Each step matches the current leading term of the remainder: with
    // S the partial root, the next term t satisfies 2*LT(S)*t = LT(rem).
    uint32_t twice_lc_inv = inv_mod((2 * s0) % p_, p_);
    while (!rem.is_zero()) {
        const Term& rt = rem.t_.front();
        if (!half.divides(rt.first)) return std::nullopt;
        ExpVec m = half.quotient_of(rt.first);
        // t must be strictly smaller than LT(S); otherwise no square root.
        if (cmp_grevlex(m, half) >= 0) return std::nullopt;
        uint32_t c = (rt.second * twice_lc_inv) % p_;
        ZpPoly t = monomial(p_, m, c);
        rem = rem - s.mono_times(m, (2 * c) % p_) - t * t;
        s = s + t;
    }
    return s;
}

ZpPoly ZpPoly::exponent_scaled(uint32_t k) const {
    ZpPoly r(p_, n_);
    r.t_.reserve(t_.size());
    for (const Term& t : t_) {
        ExpVec m = t.first;
        for (int i = 0; i < n_; ++i) m.e[i] = static_cast<uint16_t>(m.e[i] * k);
        m.deg = t.first.deg * k;
        r.t_.push_back({m, t.second});
    }
    // Scaling exponents by a positive k preserves the grevlex order.
    return r;
}

std::string ZpPoly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < t_.size(); ++i) {
        const auto& [m, c] = t_[i];
        if (i) out += " + ";
        bool printed = false;
        if (c != 1 || m.deg == 0) {
            out += std::to_string(c);
            printed = true;
        }
        for (int v = 0; v < n_; ++v) {
            if (!m.e[v]) continue;
            if (printed) out += "*";
            out += v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v);
            if (m.e[v] > 1) out += "^" + std::to_string(m.e[v]);
            printed = true;
        }
    }
    return out;
}

} // namespace vsch
