#include "vsch/unipoly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace vsch {

UniPoly::UniPoly(const FieldDescriptor* f, std::vector<FieldElem> coeffs)
    : f_(f), c_(std::move(coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool UniPoly::equal_coeffs(const UniPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

UniPoly UniPoly::constant(const FieldDescriptor* f, const FieldElem& c) {
    UniPoly p(f);
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

UniPoly UniPoly::x(const FieldDescriptor* f) {
    UniPoly p(f);
    p.c_ = {f->zero(), f->one()};
    return p;
}

UniPoly UniPoly::monomial(const FieldDescriptor* f, int deg, const FieldElem& c) {
    UniPoly p(f);
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, f->zero());
    p.c_.back() = c;
    return p;
}

bool UniPoly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

FieldElem UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return f_->zero();
    return c_[static_cast<size_t>(i)];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    assert(f_ == o.f_);
    UniPoly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), f_->zero());
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size() && i < o.c_.size()) r.c_[i] = c_[i] + o.c_[i];
        else if (i < c_.size()) r.c_[i] = c_[i];
        else r.c_[i] = o.c_[i];
    }
    r.trim();
    return r;
}

UniPoly UniPoly::operator-() const {
    UniPoly r(f_);
    r.c_.reserve(c_.size());
    for (const FieldElem& c : c_) r.c_.push_back(-c);
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    assert(f_ == o.f_);
    if (c_.empty() || o.c_.empty()) return UniPoly(f_);
    UniPoly r(f_);
    r.c_.assign(c_.size() + o.c_.size() - 1, f_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

UniPoly UniPoly::times_elem(const FieldElem& c) const {
    if (c.is_zero()) return UniPoly(f_);
    UniPoly r(f_);
    r.c_.reserve(c_.size());
    for (const FieldElem& a : c_) r.c_.push_back(a * c);
    r.trim();
    return r;
}

UniPoly UniPoly::shifted(int k) const {
    if (c_.empty()) return *this;
    UniPoly r(f_);
    r.c_.assign(static_cast<size_t>(k), f_->zero());
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

UniPoly UniPoly::substitute_power(uint32_t k) const {
    if (k == 0) throw std::invalid_argument("power must be positive");
    UniPoly r(f_);
    if (c_.empty()) return r;
    r.c_.assign((c_.size() - 1) * k + 1, f_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    r.trim();
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    assert(a.f_ == b.f_);
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    const FieldDescriptor* f = a.f_;
    UniPoly q(f), r = a;
    if (r.degree() < b.degree()) return {q, r};
    q.c_.assign(static_cast<size_t>(r.degree() - b.degree()) + 1, f->zero());
    FieldElem ilc = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        FieldElem c = r.leading() * ilc;
        q.c_[static_cast<size_t>(shift)] = c;
        // r -= c * x^shift * b
        for (int i = 0; i <= b.degree(); ++i) {
            size_t k = static_cast<size_t>(i + shift);
            r.c_[k] = r.c_[k] - c * b.c_[static_cast<size_t>(i)];
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

UniPoly UniPoly::monic() const {
    if (c_.empty() || c_.back().is_one()) return *this;
    return times_elem(c_.back().inverse());
}

UniPoly UniPoly::derivative() const {
    UniPoly r(f_);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * f_->from_int(static_cast<int64_t>(i)));
    r.trim();
    return r;
}

FieldElem UniPoly::eval(const FieldElem& at) const {
    FieldElem acc = f_->zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

UniPoly UniPoly::pow_mod(uint64_t e, const UniPoly& m) const {
    UniPoly r = constant(f_, f_->one()) % m;
    UniPoly b = *this % m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

UniPoly UniPoly::frobenius_power(const UniPoly& m, int steps) {
    const FieldDescriptor* f = m.field();
    UniPoly t = x(f) % m;
    for (int i = 0; i < steps; ++i) t = t.pow_mod(f->order(), m);
    return t;
}

namespace {

// p-th root of a polynomial of the shape g(x^p): coefficients are q/p-th
// powers (Frobenius inverse on the field).
UniPoly pth_root(const UniPoly& a) {
    const FieldDescriptor* f = a.field();
    uint64_t p = f->p();
    uint64_t inv_frob = f->order() / p;  // x -> x^(q/p) inverts x -> x^p
    std::vector<FieldElem> cs;
    for (int i = 0; i <= a.degree(); i += static_cast<int>(p))
        cs.push_back(a.coeff(i).pow(inv_frob));
    return UniPoly(f, std::move(cs));
}

} // namespace

std::vector<std::pair<UniPoly, int>> UniPoly::squarefree_decomposition() const {
    if (!f_->finite()) throw std::logic_error("factorization needs a finite field");
    std::vector<std::pair<UniPoly, int>> out;
    if (degree() < 1) return out;
    const int p = static_cast<int>(f_->p());

    // Recursive char-p squarefree split: strip gcd(f, f'), recurse on the
    // p-th power part.
    UniPoly f = monic();
    UniPoly d = f.derivative();
    if (d.is_zero()) {
        // f = h(x^p) = (pth_root h-ish)^p
        auto inner = pth_root(f).squarefree_decomposition();
        for (auto& [g, m] : inner) out.push_back({g, m * p});
        return out;
    }
    UniPoly c = gcd(f, d);
    UniPoly w = f / c;  // product of squarefree factors with multiplicity not divisible by p
    int mult = 1;
    while (!w.is_one()) {
        UniPoly y = gcd(w, c);
        UniPoly part = w / y;
        if (part.degree() > 0) out.push_back({part.monic(), mult});
        w = y;
        c = c / y;
        ++mult;
    }
    if (c.degree() > 0) {
        auto inner = pth_root(c).squarefree_decomposition();
        for (auto& [g, m] : inner) out.push_back({g, m * p});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

namespace {

// Distinct-degree decomposition of a squarefree monic polynomial.
std::vector<std::pair<UniPoly, int>> distinct_degree(const UniPoly& f0) {
    const FieldDescriptor* fd = f0.field();
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly f = f0;
    UniPoly h = UniPoly::x(fd) % f;
    int d = 0;
    while (f.degree() > 0 && 2 * (d + 1) <= f.degree()) {
        ++d;
        h = h.pow_mod(fd->order(), f);
        UniPoly g = UniPoly::gcd(h - UniPoly::x(fd), f);
        if (g.degree() > 0) {
            out.push_back({g, d});
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.push_back({f, f.degree()});
    return out;
}

// Split a squarefree product of irreducibles of equal degree d.
void equal_degree(const UniPoly& f, int d, Rng& rng, std::vector<UniPoly>& out) {
    const FieldDescriptor* fd = f.field();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    while (true) {
        // Random element of the quotient ring.
        std::vector<FieldElem> cs;
        for (int i = 0; i < f.degree(); ++i) cs.push_back(fd->random_element(rng));
        UniPoly a(fd, std::move(cs));
        if (a.degree() < 1) continue;
        UniPoly g = UniPoly::gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
        // b = norm-like product a^(1 + q + ... + q^(d-1)), then b^((q-1)/2)
        // is +-1 on each irreducible factor's residue field.
        UniPoly b = a % f;
        UniPoly acc = b;
        for (int i = 1; i < d; ++i) {
            acc = acc.pow_mod(fd->order(), f);
            acc = (acc * b) % f;
        }
        UniPoly t = acc.pow_mod((fd->order() - 1) / 2, f);
        t = t - UniPoly::constant(fd, fd->one());
        g = UniPoly::gcd(t, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

bool factor_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const FieldDescriptor* f = a.field();
    for (int i = a.degree(); i >= 0; --i) {
        uint64_t ia = f->index_of(a.coeff(i));
        uint64_t ib = f->index_of(b.coeff(i));
        if (ia != ib) return ia < ib;
    }
    return false;
}

} // namespace

std::vector<std::pair<UniPoly, int>> UniPoly::factor(Rng& rng) const {
    std::vector<std::pair<UniPoly, int>> out;
    for (const auto& [sf, mult] : squarefree_decomposition()) {
        for (const auto& [prod, d] : distinct_degree(sf)) {
            std::vector<UniPoly> irr;
            equal_degree(prod, d, rng, irr);
            for (UniPoly& g : irr) out.push_back({std::move(g), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return factor_less(a.first, b.first);
    });
    return out;
}

bool UniPoly::is_irreducible() const {
    if (!f_->finite()) throw std::logic_error("irreducibility test needs a finite field");
    if (degree() < 1) return false;
    if (degree() == 1) return true;
    UniPoly f = monic();
    UniPoly h = x(f_) % f;
    for (int d = 1; 2 * d <= degree(); ++d) {
        h = h.pow_mod(f_->order(), f);
        UniPoly g = gcd(h - x(f_), f);
        if (!g.is_one()) return false;
    }
    return true;
}

std::vector<FieldElem> UniPoly::roots(Rng& rng) const {
    std::vector<FieldElem> out;
    if (degree() < 1) return out;
    // Distinct roots live in gcd(f, x^q - x).
    UniPoly f = monic();
    UniPoly xq = x(f_).pow_mod(f_->order(), f);
    UniPoly lin = gcd(xq - x(f_), f);
    if (lin.degree() >= 1) {
        std::vector<UniPoly> irr;
        equal_degree(lin, 1, rng, irr);
        for (const UniPoly& g : irr) out.push_back(-g.coeff(0));
    }
    std::sort(out.begin(), out.end(), [this](const FieldElem& a, const FieldElem& b) {
        return f_->index_of(a) < f_->index_of(b);
    });
    return out;
}

std::string UniPoly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[i].str() + ")";
        if (i == 1) s += "*x";
        else if (i > 1) s += "*x^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

UniPoly to_unipoly(const MPoly& p) {
    if (p.nvars() != 1) throw std::logic_error("to_unipoly needs one variable");
    std::vector<FieldElem> cs(p.total_degree() + 1, p.field()->zero());
    for (const auto& [m, c] : p.terms()) cs[m.e[0]] = c;
    return UniPoly(p.field(), std::move(cs));
}

MPoly to_mpoly(const UniPoly& p) {
    MPoly r(p.field(), 1);
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero())
            r.add_term(ExpVec::unit(1, 0, static_cast<uint16_t>(i)), p.coeff(i));
    r.normalize();
    return r;
}

} // namespace vsch
