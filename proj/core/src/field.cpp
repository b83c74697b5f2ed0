#include "vsch/field.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <stdexcept>

namespace vsch {

namespace {

uint32_t inv_mod_p(uint32_t a, uint32_t p) {
    a %= p;
    for (uint32_t x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw std::domain_error("inverse of zero residue");
}

// ---- tiny dense F_p[x] helpers used only for modulus certification ----

using UPoly = std::vector<uint32_t>;  // coeffs, low degree first, trimmed

void utrim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly umod(UPoly a, const UPoly& m, uint32_t p) {
    utrim(a);
    while (a.size() >= m.size()) {
        uint32_t c = (a.back() * inv_mod_p(m.back(), p)) % p;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[shift + i] = (a[shift + i] + p * p - c * m[i] % p * 1u) % p;
        utrim(a);
    }
    return a;
}

UPoly umul(const UPoly& a, const UPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    utrim(r);
    return r;
}

UPoly ugcd(UPoly a, UPoly b, uint32_t p) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = umod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^d) mod m by d successive p-th powers.
UPoly u_frob_power(int d, const UPoly& m, uint32_t p) {
    UPoly t = {0, 1};  // x
    t = umod(t, m, p);
    for (int step = 0; step < d; ++step) {
        // t^p mod m by square-and-multiply on exponent p
        UPoly r = {1};
        UPoly b = t;
        uint32_t k = p;
        while (k) {
            if (k & 1) r = umod(umul(r, b, p), m, p);
            b = umod(umul(b, b, p), m, p);
            k >>= 1;
        }
        t = std::move(r);
    }
    return t;
}

// A monic polynomial of degree n >= 2 is irreducible over F_p exactly when
// it shares no factor with x^(p^d) - x for every d <= n/2 (any nontrivial
// factorization contains a factor of degree at most n/2).
bool u_is_irreducible(const UPoly& m, uint32_t p) {
    int n = static_cast<int>(m.size()) - 1;
    for (int d = 1; 2 * d <= n; ++d) {
        UPoly t = u_frob_power(d, m, p);
        // t - x
        if (t.size() < 2) t.resize(2, 0);
        t[1] = (t[1] + p - 1) % p;
        utrim(t);
        UPoly g = ugcd(m, t, p);
        if (g.size() > 1) return false;
    }
    return true;
}

ZpPoly g2_w_poly(uint32_t p) {
    // k01^2 + k10^2 + k11^2 - k01*k10*k11 - 4 in variables (k01,k10,k11)
    ZpPoly w(p, 3);
    for (int i = 0; i < 3; ++i) w.add_term(ExpVec::unit(3, i, 2), 1);
    ExpVec m = ExpVec::zero(3);
    for (int i = 0; i < 3; ++i) m.e[i] = 1;
    m.deg = 3;
    w.add_term(m, -1);
    w.add_term(ExpVec::zero(3), -4);
    w.normalize();
    return w;
}

std::recursive_mutex g_registry_mutex;

} // namespace

// ------------------------------------------------------------------
// descriptor factories / registry
// ------------------------------------------------------------------

struct RegistryEntry {
    std::unique_ptr<FieldDescriptor> d;
};

static std::vector<std::unique_ptr<FieldDescriptor>>& registry() {
    static std::vector<std::unique_ptr<FieldDescriptor>> r;
    return r;
}

void FieldDescriptor::build_extension_tables() {
    // red_[k] = coefficients of x^{n+k} mod modulus, k = 0..n-2.
    red_.assign(static_cast<size_t>(std::max(0, n_ - 1)), {});
    if (n_ < 2) return;
    std::array<uint8_t, 12> base{};
    for (int i = 0; i < n_; ++i)
        base[i] = static_cast<uint8_t>((p_ - mod_[i] % p_) % p_);
    red_[0] = base;
    for (int k = 1; k + 1 < n_; ++k) {
        const auto& prev = red_[k - 1];
        std::array<uint8_t, 12> cur{};
        uint32_t carry = prev[n_ - 1];
        cur[0] = static_cast<uint8_t>((carry * base[0]) % p_);
        for (int i = 1; i < n_; ++i)
            cur[i] = static_cast<uint8_t>((prev[i - 1] + carry * base[i]) % p_);
        red_[k] = cur;
    }
}

static void check_char(uint32_t p) {
    if (p != 3 && p != 5 && p != 7)
        throw std::invalid_argument("characteristic must be 3, 5 or 7");
}

const FieldDescriptor* FieldDescriptor::prime(uint32_t p) {
    check_char(p);
    std::lock_guard<std::recursive_mutex> lk(g_registry_mutex);
    for (auto& e : registry())
        if (e->kind_ == Kind::Prime && e->p_ == p) return e.get();
    auto d = std::unique_ptr<FieldDescriptor>(new FieldDescriptor());
    d->kind_ = Kind::Prime;
    d->p_ = p;
    d->n_ = 1;
    registry().push_back(std::move(d));
    FieldDescriptor* f = registry().back().get();
    if (p % 4 == 1) f->mu0_ = sqrt_element(f->from_int(-1));
    return f;
}

const FieldDescriptor* FieldDescriptor::extension(uint32_t p, int n) {
    check_char(p);
    if (n < 1 || n > 10) throw std::invalid_argument("extension degree out of range");
    if (n == 1) return prime(p);
    // Canonical modulus: first irreducible in base-p counter order.
    uint64_t limit = 1;
    for (int i = 0; i < n; ++i) limit *= p;
    for (uint64_t v = 0; v < limit; ++v) {
        std::vector<uint32_t> coeffs(n + 1, 0);
        uint64_t t = v;
        for (int i = 0; i < n; ++i) {
            coeffs[i] = static_cast<uint32_t>(t % p);
            t /= p;
        }
        coeffs[n] = 1;
        if (u_is_irreducible(coeffs, p)) return extension_with_modulus(p, coeffs);
    }
    throw std::logic_error("no irreducible modulus found");  // unreachable
}

const FieldDescriptor* FieldDescriptor::extension_with_modulus(
    uint32_t p, const std::vector<uint32_t>& coeffs) {
    check_char(p);
    int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 2 || n > 10 || coeffs.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree 2..10");
    for (uint32_t c : coeffs)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!u_is_irreducible(coeffs, p))
        throw std::invalid_argument("modulus is not irreducible");
    std::lock_guard<std::recursive_mutex> lk(g_registry_mutex);
    for (auto& e : registry())
        if (e->kind_ == Kind::Extension && e->p_ == p && e->mod_ == coeffs)
            return e.get();
    auto d = std::unique_ptr<FieldDescriptor>(new FieldDescriptor());
    d->kind_ = Kind::Extension;
    d->p_ = p;
    d->n_ = n;
    d->mod_ = coeffs;
    d->build_extension_tables();
    registry().push_back(std::move(d));
    FieldDescriptor* f = registry().back().get();
    if (f->order() % 4 == 1) f->mu0_ = sqrt_element(f->from_int(-1));
    return f;
}

const FieldDescriptor* FieldDescriptor::generic_g2(uint32_t p) {
    check_char(p);
    std::lock_guard<std::recursive_mutex> lk(g_registry_mutex);
    for (auto& e : registry())
        if (e->kind_ == Kind::GenericG2 && e->p_ == p) return e.get();
    auto d = std::unique_ptr<FieldDescriptor>(new FieldDescriptor());
    d->kind_ = Kind::GenericG2;
    d->p_ = p;
    d->n_ = 1;
    d->w_ = g2_w_poly(p);
    registry().push_back(std::move(d));
    FieldDescriptor* f = registry().back().get();
    if (p % 4 == 1) {
        auto m = prime(p)->mu0();
        f->mu0_ = f->from_int(static_cast<int64_t>(m->prime_value()));
    }
    return f;
}

const FieldDescriptor* FieldDescriptor::generic_g3(uint32_t p) {
    check_char(p);
    std::lock_guard<std::recursive_mutex> lk(g_registry_mutex);
    for (auto& e : registry())
        if (e->kind_ == Kind::GenericG3 && e->p_ == p) return e.get();
    auto d = std::unique_ptr<FieldDescriptor>(new FieldDescriptor());
    d->kind_ = Kind::GenericG3;
    d->p_ = p;
    d->n_ = 1;
    registry().push_back(std::move(d));
    FieldDescriptor* f = registry().back().get();
    if (p % 4 == 1) {
        auto m = prime(p)->mu0();
        f->mu0_ = f->from_int(static_cast<int64_t>(m->prime_value()));
    }
    return f;
}

uint64_t FieldDescriptor::order() const {
    if (!finite()) throw std::logic_error("order() of a non-finite field");
    uint64_t q = 1;
    for (int i = 0; i < n_; ++i) q *= p_;
    return q;
}

int FieldDescriptor::poly_nvars() const {
    if (kind_ == Kind::GenericG2) return 3;
    if (kind_ == Kind::GenericG3) return 14;
    throw std::logic_error("poly_nvars() of a finite field");
}

std::vector<std::string> FieldDescriptor::var_names() const {
    if (kind_ == Kind::GenericG2) return {"k01", "k10", "k11"};
    if (kind_ == Kind::GenericG3) {
        std::vector<std::string> names;
        for (char prefix : {'g', 'd'})
            for (int b = 1; b <= 7; ++b) {
                std::string s(1, prefix);
                s += static_cast<char>('0' + ((b >> 2) & 1));
                s += static_cast<char>('0' + ((b >> 1) & 1));
                s += static_cast<char>('0' + (b & 1));
                names.push_back(s);
            }
        return names;
    }
    throw std::logic_error("var_names() of a finite field");
}

std::string FieldDescriptor::name() const {
    switch (kind_) {
        case Kind::Prime: return "F" + std::to_string(p_);
        case Kind::Extension:
            return "F" + std::to_string(p_) + "^" + std::to_string(n_);
        case Kind::GenericG2: return "Frac(F" + std::to_string(p_) + "[k])";
        case Kind::GenericG3: return "Frac(F" + std::to_string(p_) + "[gamma,delta])";
    }
    return "?";
}

// ------------------------------------------------------------------
// element construction
// ------------------------------------------------------------------

FieldElem FieldElem::make_prime(const FieldDescriptor* f, uint32_t v) {
    FieldElem e;
    e.f_ = f;
    e.v_ = v % f->p();
    return e;
}

FieldElem FieldElem::make_ext(const FieldDescriptor* f, const std::array<uint8_t, 12>& c) {
    FieldElem e;
    e.f_ = f;
    e.ext_ = c;
    return e;
}

FieldElem FieldElem::make_g2(const FieldDescriptor* f, ZpPoly n0, ZpPoly n1, ZpPoly d) {
    if (d.is_zero()) throw std::domain_error("zero denominator");
    if (n0.is_zero() && n1.is_zero()) {
        d = ZpPoly::constant(f->p(), 3, 1);
    } else if (d.is_constant()) {
        uint32_t s = inv_mod_p(d.leading_coeff(), f->p());
        n0 = n0.scaled(s);
        n1 = n1.scaled(s);
        d = ZpPoly::constant(f->p(), 3, 1);
    } else {
        auto q0 = n0.exact_div(d);
        auto q1 = q0 ? n1.exact_div(d) : std::optional<ZpPoly>{};
        if (q0 && q1) {
            n0 = *q0;
            n1 = *q1;
            d = ZpPoly::constant(f->p(), 3, 1);
        } else {
            ZpPoly g = ZpPoly::gcd(ZpPoly::gcd(n0, n1), d);
            if (!g.is_one()) {
                n0 = *n0.exact_div(g);
                n1 = *n1.exact_div(g);
                d = *d.exact_div(g);
            }
            uint32_t lc = d.leading_coeff();
            if (lc != 1) {
                uint32_t s = inv_mod_p(lc, f->p());
                n0 = n0.scaled(s);
                n1 = n1.scaled(s);
                d = d.scaled(s);
            }
        }
    }
    FieldElem e;
    e.f_ = f;
    e.g2_ = std::make_shared<const G2Rep>(G2Rep{std::move(n0), std::move(n1), std::move(d)});
    return e;
}

FieldElem FieldElem::make_g3(const FieldDescriptor* f, ZpPoly num, ZpPoly den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num.is_zero()) {
        den = ZpPoly::constant(f->p(), 14, 1);
    } else if (den.is_constant()) {
        num = num.scaled(inv_mod_p(den.leading_coeff(), f->p()));
        den = ZpPoly::constant(f->p(), 14, 1);
    } else {
        auto q = num.exact_div(den);
        if (q) {
            num = *q;
            den = ZpPoly::constant(f->p(), 14, 1);
        } else {
            ZpPoly g = ZpPoly::gcd(num, den);
            if (!g.is_one()) {
                num = *num.exact_div(g);
                den = *den.exact_div(g);
            }
            uint32_t lc = den.leading_coeff();
            if (lc != 1) {
                uint32_t s = inv_mod_p(lc, f->p());
                num = num.scaled(s);
                den = den.scaled(s);
            }
        }
    }
    FieldElem e;
    e.f_ = f;
    e.g3_ = std::make_shared<const G3Rep>(G3Rep{std::move(num), std::move(den)});
    return e;
}

FieldElem FieldDescriptor::zero() const { return from_int(0); }
FieldElem FieldDescriptor::one() const { return from_int(1); }

FieldElem FieldDescriptor::from_int(int64_t c) const {
    int64_t r = c % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    uint32_t v = static_cast<uint32_t>(r);
    switch (kind_) {
        case Kind::Prime: return FieldElem::make_prime(this, v);
        case Kind::Extension: {
            std::array<uint8_t, 12> a{};
            a[0] = static_cast<uint8_t>(v);
            return FieldElem::make_ext(this, a);
        }
        case Kind::GenericG2:
            return FieldElem::make_g2(this, ZpPoly::constant(p_, 3, v), ZpPoly(p_, 3),
                                      ZpPoly::constant(p_, 3, 1));
        case Kind::GenericG3:
            return FieldElem::make_g3(this, ZpPoly::constant(p_, 14, v),
                                      ZpPoly::constant(p_, 14, 1));
    }
    throw std::logic_error("bad kind");
}

FieldElem FieldDescriptor::element_at(uint64_t index) const {
    if (kind_ == Kind::Prime) return FieldElem::make_prime(this, static_cast<uint32_t>(index % p_));
    if (kind_ == Kind::Extension) {
        std::array<uint8_t, 12> a{};
        uint64_t t = index;
        for (int i = 0; i < n_; ++i) {
            a[i] = static_cast<uint8_t>(t % p_);
            t /= p_;
        }
        return FieldElem::make_ext(this, a);
    }
    throw std::logic_error("element_at() of a non-finite field");
}

uint64_t FieldDescriptor::index_of(const FieldElem& a) const {
    if (kind_ == Kind::Prime) return a.v_;
    if (kind_ == Kind::Extension) {
        uint64_t idx = 0;
        for (int i = n_ - 1; i >= 0; --i) idx = idx * p_ + a.ext_[i];
        return idx;
    }
    throw std::logic_error("index_of() of a non-finite field");
}

FieldElem FieldDescriptor::random_element(Rng& rng) const {
    return element_at(rng.below(order()));
}

FieldElem FieldDescriptor::from_fraction(const ZpPoly& num, const ZpPoly& den) const {
    if (kind_ == Kind::GenericG2)
        return FieldElem::make_g2(this, num, ZpPoly(p_, 3), den);
    if (kind_ == Kind::GenericG3) return FieldElem::make_g3(this, num, den);
    throw std::logic_error("from_fraction() of a finite field");
}

FieldElem FieldDescriptor::from_poly(const ZpPoly& num) const {
    return from_fraction(num, ZpPoly::constant(p_, poly_nvars(), 1));
}

FieldElem FieldDescriptor::poly_var(int i) const {
    return from_poly(ZpPoly::variable(p_, poly_nvars(), i));
}

FieldElem FieldDescriptor::g2_k00() const {
    if (kind_ != Kind::GenericG2) throw std::logic_error("g2_k00() needs the g2 field");
    return FieldElem::make_g2(this, ZpPoly(p_, 3), ZpPoly::constant(p_, 3, 1),
                              ZpPoly::constant(p_, 3, 1));
}

// ------------------------------------------------------------------
// element operations
// ------------------------------------------------------------------

bool FieldElem::is_zero() const {
    assert(f_);
    switch (f_->kind()) {
        case FieldDescriptor::Kind::Prime: return v_ == 0;
        case FieldDescriptor::Kind::Extension: {
            for (int i = 0; i < f_->ext_degree(); ++i)
                if (ext_[i]) return false;
            return true;
        }
        case FieldDescriptor::Kind::GenericG2:
            return g2_->n0.is_zero() && g2_->n1.is_zero();
        case FieldDescriptor::Kind::GenericG3: return g3_->num.is_zero();
    }
    return false;
}

bool FieldElem::is_one() const {
    assert(f_);
    switch (f_->kind()) {
        case FieldDescriptor::Kind::Prime: return v_ == 1;
        case FieldDescriptor::Kind::Extension: {
            if (ext_[0] != 1) return false;
            for (int i = 1; i < f_->ext_degree(); ++i)
                if (ext_[i]) return false;
            return true;
        }
        case FieldDescriptor::Kind::GenericG2:
            return g2_->n1.is_zero() && g2_->d.is_one() && g2_->n0.is_one();
        case FieldDescriptor::Kind::GenericG3:
            return g3_->den.is_one() && g3_->num.is_one();
    }
    return false;
}

bool FieldElem::operator==(const FieldElem& o) const {
    assert(f_ == o.f_);
    switch (f_->kind()) {
        case FieldDescriptor::Kind::Prime: return v_ == o.v_;
        case FieldDescriptor::Kind::Extension: {
            for (int i = 0; i < f_->ext_degree(); ++i)
                if (ext_[i] != o.ext_[i]) return false;
            return true;
        }
        case FieldDescriptor::Kind::GenericG2:
            return g2_->n0 == o.g2_->n0 && g2_->n1 == o.g2_->n1 && g2_->d == o.g2_->d;
        case FieldDescriptor::Kind::GenericG3:
            return g3_->num == o.g3_->num && g3_->den == o.g3_->den;
    }
    return false;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    assert(f_ && f_ == o.f_);
    switch (f_->kind()) {
        case FieldDescriptor::Kind::Prime:
            return make_prime(f_, (v_ + o.v_) % f_->p());
        case FieldDescriptor::Kind::Extension: {
            std::array<uint8_t, 12> c{};
            for (int i = 0; i < f_->ext_degree(); ++i)
                c[i] = static_cast<uint8_t>((ext_[i] + o.ext_[i]) % f_->p());
            return make_ext(f_, c);
        }
        case FieldDescriptor::Kind::GenericG2: {
            const G2Rep& a = *g2_;
            const G2Rep& b = *o.g2_;
            if (a.d == b.d)
                return make_g2(f_, a.n0 + b.n0, a.n1 + b.n1, a.d);
            return make_g2(f_, a.n0 * b.d + b.n0 * a.d, a.n1 * b.d + b.n1 * a.d, a.d * b.d);
        }
        case FieldDescriptor::Kind::GenericG3: {
            const G3Rep& a = *g3_;
            const G3Rep& b = *o.g3_;
            if (a.den == b.den) return make_g3(f_, a.num + b.num, a.den);
            return make_g3(f_, a.num * b.den + b.num * a.den, a.den * b.den);
        }
    }
    throw std::logic_error("bad kind");
}

FieldElem FieldElem::operator-() const {
    assert(f_);
    switch (f_->kind()) {
        case FieldDescriptor::Kind::Prime:
            return make_prime(f_, (f_->p() - v_) % f_->p());
        case FieldDescriptor::Kind::Extension: {
            std::array<uint8_t, 12> c{};
            for (int i = 0; i < f_->ext_degree(); ++i)
                c[i] = static_cast<uint8_t>((f_->p() - ext_[i]) % f_->p());
            return make_ext(f_, c);
        }
        case FieldDescriptor::Kind::GenericG2:
            return make_g2(f_, -g2_->n0, -g2_->n1, g2_->d);
        case FieldDescriptor::Kind::GenericG3:
            return make_g3(f_, -g3_->num, g3_->den);
    }
    throw std::logic_error("bad kind");
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    assert(f_ && f_ == o.f_);
    switch (f_->kind()) {
        case FieldDescriptor::Kind::Prime:
            return make_prime(f_, (v_ * o.v_) % f_->p());
        case FieldDescriptor::Kind::Extension: {
            int n = f_->ext_degree();
            uint32_t p = f_->p();
            uint32_t acc[23] = {0};
            for (int i = 0; i < n; ++i) {
                if (!ext_[i]) continue;
                for (int j = 0; j < n; ++j)
                    acc[i + j] += static_cast<uint32_t>(ext_[i]) * o.ext_[j];
            }
            for (int k = 2 * n - 2; k >= n; --k) {
                uint32_t c = acc[k] % p;
                if (!c) continue;
                const auto& row = f_->red_[k - n];
                for (int i = 0; i < n; ++i) acc[i] += c * row[i];
            }
            std::array<uint8_t, 12> c{};
            for (int i = 0; i < n; ++i) c[i] = static_cast<uint8_t>(acc[i] % p);
            return make_ext(f_, c);
        }
        case FieldDescriptor::Kind::GenericG2: {
            const G2Rep& a = *g2_;
            const G2Rep& b = *o.g2_;
            if (a.n1.is_zero() && b.n1.is_zero())
                return make_g2(f_, a.n0 * b.n0, ZpPoly(f_->p(), 3), a.d * b.d);
            ZpPoly r0 = a.n0 * b.n0 + a.n1 * b.n1 * f_->g2_disc();
            ZpPoly r1 = a.n0 * b.n1 + a.n1 * b.n0;
            return make_g2(f_, std::move(r0), std::move(r1), a.d * b.d);
        }
        case FieldDescriptor::Kind::GenericG3:
            return make_g3(f_, g3_->num * o.g3_->num, g3_->den * o.g3_->den);
    }
    throw std::logic_error("bad kind");
}

FieldElem FieldElem::inverse() const {
    assert(f_);
    if (is_zero()) throw std::domain_error("inverse of zero");
    switch (f_->kind()) {
        case FieldDescriptor::Kind::Prime:
            return make_prime(f_, inv_mod_p(v_, f_->p()));
        case FieldDescriptor::Kind::Extension:
            return pow(f_->order() - 2);
        case FieldDescriptor::Kind::GenericG2: {
            const G2Rep& a = *g2_;
            ZpPoly norm = a.n0 * a.n0 - a.n1 * a.n1 * f_->g2_disc();
            return make_g2(f_, a.n0 * a.d, -(a.n1 * a.d), std::move(norm));
        }
        case FieldDescriptor::Kind::GenericG3:
            return make_g3(f_, g3_->den, g3_->num);
    }
    throw std::logic_error("bad kind");
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::pow(uint64_t k) const {
    assert(f_);
    FieldElem r = f_->one();
    FieldElem b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

FieldElem FieldElem::frobenius() const {
    assert(f_);
    uint32_t p = f_->p();
    switch (f_->kind()) {
        case FieldDescriptor::Kind::Prime: return *this;
        case FieldDescriptor::Kind::Extension: return pow(p);
        case FieldDescriptor::Kind::GenericG2: {
            const G2Rep& a = *g2_;
            // (k00)^p = k00 * W^((p-1)/2) since k00^2 = W.
            ZpPoly wpow = f_->g2_disc().pow((p - 1) / 2);
            return make_g2(f_, a.n0.exponent_scaled(p), a.n1.exponent_scaled(p) * wpow,
                           a.d.exponent_scaled(p));
        }
        case FieldDescriptor::Kind::GenericG3:
            return make_g3(f_, g3_->num.exponent_scaled(p), g3_->den.exponent_scaled(p));
    }
    throw std::logic_error("bad kind");
}

ZpPoly FieldElem::denominator_poly() const {
    assert(f_);
    switch (f_->kind()) {
        case FieldDescriptor::Kind::GenericG2: return g2_->d;
        case FieldDescriptor::Kind::GenericG3: return g3_->den;
        default: return ZpPoly::constant(f_->p(), 1, 1);
    }
}

FieldElem FieldElem::times_poly(const ZpPoly& m) const {
    assert(f_);
    switch (f_->kind()) {
        case FieldDescriptor::Kind::GenericG2:
            return make_g2(f_, g2_->n0 * m, g2_->n1 * m, g2_->d);
        case FieldDescriptor::Kind::GenericG3:
            return make_g3(f_, g3_->num * m, g3_->den);
        default:
            throw std::logic_error("times_poly() on a finite-field element");
    }
}

std::string FieldElem::str() const {
    if (!f_) return "<null>";
    switch (f_->kind()) {
        case FieldDescriptor::Kind::Prime: return std::to_string(v_);
        case FieldDescriptor::Kind::Extension: {
            std::string s = "[";
            for (int i = 0; i < f_->ext_degree(); ++i) {
                if (i) s += ",";
                s += std::to_string(static_cast<int>(ext_[i]));
            }
            return s + "]";
        }
        case FieldDescriptor::Kind::GenericG2: {
            std::vector<std::string> nm = f_->var_names();
            std::string s = "(" + g2_->n0.str(nm);
            if (!g2_->n1.is_zero()) s += " + (" + g2_->n1.str(nm) + ")*k00";
            s += ")";
            if (!g2_->d.is_one()) s += "/(" + g2_->d.str(nm) + ")";
            return s;
        }
        case FieldDescriptor::Kind::GenericG3: {
            std::vector<std::string> nm = f_->var_names();
            std::string s = "(" + g3_->num.str(nm) + ")";
            if (!g3_->den.is_one()) s += "/(" + g3_->den.str(nm) + ")";
            return s;
        }
    }
    return "?";
}

// ------------------------------------------------------------------
// square roots
// ------------------------------------------------------------------

std::optional<FieldElem> sqrt_element(const FieldElem& a) {
    const FieldDescriptor* f = a.field();
    if (!f) throw std::logic_error("sqrt of a null element");
    if (a.is_zero()) return f->zero();

    if (f->finite()) {
        uint64_t q = f->order();
        if (a.pow((q - 1) / 2) != f->one()) return std::nullopt;
        FieldElem r = f->zero();
        if (q % 4 == 3) {
            r = a.pow((q + 1) / 4);
        } else {
            // Tonelli-Shanks with the first non-residue in index order.
            uint64_t t = q - 1;
            int s = 0;
            while (t % 2 == 0) {
                t /= 2;
                ++s;
            }
            FieldElem z = f->zero();
            for (uint64_t i = 2; i < q; ++i) {
                FieldElem c = f->element_at(i);
                if (c.pow((q - 1) / 2) == -f->one()) {
                    z = c;
                    break;
                }
            }
            FieldElem c = z.pow(t);
            r = a.pow((t + 1) / 2);
            FieldElem u = a.pow(t);
            int m = s;
            while (!u.is_one()) {
                int i = 0;
                FieldElem w = u;
                while (!w.is_one()) {
                    w = w * w;
                    ++i;
                }
                FieldElem b = c;
                for (int j = 0; j < m - i - 1; ++j) b = b * b;
                m = i;
                c = b * b;
                u = u * c;
                r = r * b;
            }
        }
        FieldElem nr = -r;
        return f->index_of(r) <= f->index_of(nr) ? r : nr;
    }

    if (f->kind() == FieldDescriptor::Kind::GenericG2) {
        const G2Rep& g = a.g2();
        if (!g.n1.is_zero()) return std::nullopt;
        auto sn = g.n0.sqrt();
        auto sd = g.d.sqrt();
        if (!sn || !sd) return std::nullopt;
        return FieldElem::make_g2(f, *sn, ZpPoly(f->p(), 3), *sd);
    }
    const G3Rep& g = a.g3();
    auto sn = g.num.sqrt();
    auto sd = g.den.sqrt();
    if (!sn || !sd) return std::nullopt;
    return FieldElem::make_g3(f, *sn, *sd);
}

} // namespace vsch
