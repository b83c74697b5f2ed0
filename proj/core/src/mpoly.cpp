#include "vsch/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace vsch {

MPoly MPoly::constant(const FieldDescriptor* f, int nvars, const FieldElem& c, MonoOrder ord) {
    MPoly r(f, nvars, ord);
    if (!c.is_zero()) r.t_.push_back({ExpVec::zero(nvars), c});
    return r;
}

MPoly MPoly::constant(const FieldDescriptor* f, int nvars, int64_t c, MonoOrder ord) {
    return constant(f, nvars, f->from_int(c), ord);
}

MPoly MPoly::variable(const FieldDescriptor* f, int nvars, int i, MonoOrder ord) {
    MPoly r(f, nvars, ord);
    r.t_.push_back({ExpVec::unit(nvars, i, 1), f->one()});
    return r;
}

MPoly MPoly::monomial(const FieldDescriptor* f, int nvars, const ExpVec& m, const FieldElem& c,
                      MonoOrder ord) {
    MPoly r(f, nvars, ord);
    if (!c.is_zero()) r.t_.push_back({m, c});
    return r;
}

uint32_t MPoly::total_degree() const {
    uint32_t d = 0;
    for (const Term& t : t_) d = std::max(d, t.first.deg);
    return d;
}

bool MPoly::is_homogeneous() const {
    for (const Term& t : t_)
        if (t.first.deg != t_.front().first.deg) return false;
    return true;
}

MPoly MPoly::with_order(MonoOrder ord) const {
    MPoly r = *this;
    r.ord_ = ord;
    std::sort(r.t_.begin(), r.t_.end(), [ord](const Term& a, const Term& b) {
        return cmp_mono(ord, a.first, b.first) > 0;
    });
    return r;
}

void MPoly::add_term(const ExpVec& m, const FieldElem& c) {
    if (!c.is_zero()) t_.push_back({m, c});
}

void MPoly::normalize() {
    MonoOrder ord = ord_;
    std::sort(t_.begin(), t_.end(), [ord](const Term& a, const Term& b) {
        return cmp_mono(ord, a.first, b.first) > 0;
    });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (Term& t : t_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second = out.back().second + t.second;
        } else {
            out.push_back(std::move(t));
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.second.is_zero(); }),
              out.end());
    t_ = std::move(out);
}

MPoly MPoly::operator+(const MPoly& o) const {
    assert(f_ == o.f_ && n_ == o.n_ && ord_ == o.ord_);
    MPoly r(f_, n_, ord_);
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = cmp_mono(ord_, t_[i].first, o.t_[j].first);
        if (c > 0) {
            r.t_.push_back(t_[i++]);
        } else if (c < 0) {
            r.t_.push_back(o.t_[j++]);
        } else {
            FieldElem s = t_[i].second + o.t_[j].second;
            if (!s.is_zero()) r.t_.push_back({t_[i].first, std::move(s)});
            ++i; ++j;
        }
    }
    while (i < t_.size()) r.t_.push_back(t_[i++]);
    while (j < o.t_.size()) r.t_.push_back(o.t_[j++]);
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(f_, n_, ord_);
    r.t_.reserve(t_.size());
    for (const Term& t : t_) r.t_.push_back({t.first, -t.second});
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

bool MPoly::operator==(const MPoly& o) const {
    if (f_ != o.f_ || n_ != o.n_) return false;
    if (ord_ != o.ord_) return with_order(MonoOrder::Grevlex).t_ == o.with_order(MonoOrder::Grevlex).t_;
    return t_ == o.t_;
}

MPoly MPoly::times_elem(const FieldElem& c) const {
    if (c.is_zero()) return MPoly(f_, n_, ord_);
    if (c.is_one()) return *this;
    MPoly r(f_, n_, ord_);
    r.t_.reserve(t_.size());
    for (const Term& t : t_) {
        FieldElem v = t.second * c;
        if (!v.is_zero()) r.t_.push_back({t.first, std::move(v)});
    }
    return r;
}

MPoly MPoly::mono_times(const ExpVec& m, const FieldElem& c) const {
    if (c.is_zero()) return MPoly(f_, n_, ord_);
    MPoly r(f_, n_, ord_);
    r.t_.reserve(t_.size());
    for (const Term& t : t_) {
        FieldElem v = t.second * c;
        if (!v.is_zero()) r.t_.push_back({t.first.plus(m), std::move(v)});
    }
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    assert(f_ == o.f_ && n_ == o.n_ && ord_ == o.ord_);
    if (t_.empty() || o.t_.empty()) return MPoly(f_, n_, ord_);
    if (o.t_.size() == 1) return mono_times(o.t_[0].first, o.t_[0].second);
    if (t_.size() == 1) return o.mono_times(t_[0].first, t_[0].second);
    MPoly r(f_, n_, ord_);
    r.t_.reserve(t_.size() * o.t_.size());
    for (const Term& a : t_)
        for (const Term& b : o.t_)
            r.t_.push_back({a.first.plus(b.first), a.second * b.second});
    r.normalize();
    return r;
}

MPoly MPoly::pow(uint32_t k) const {
    MPoly r = constant(f_, n_, 1, ord_);
    MPoly b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    assert(static_cast<int>(images.size()) == n_);
    if (t_.empty()) {
        if (images.empty()) return MPoly(f_, 0, ord_);
        return MPoly(images[0].field(), images[0].nvars(), images[0].order());
    }
    const FieldDescriptor* nf = images[0].field();
    int nn = images[0].nvars();
    MonoOrder nord = images[0].order();
    std::vector<std::vector<MPoly>> pows(n_);
    for (int i = 0; i < n_; ++i) pows[i].push_back(constant(nf, nn, 1, nord));
    MPoly acc(nf, nn, nord);
    for (const Term& t : t_) {
        MPoly prod = constant(nf, nn, t.second, nord);
        for (int i = 0; i < n_; ++i) {
            int e = t.first.e[i];
            if (!e) continue;
            while (static_cast<int>(pows[i].size()) <= e)
                pows[i].push_back(pows[i].back() * images[i]);
            prod = prod * pows[i][e];
        }
        acc = acc + prod;
    }
    return acc;
}

FieldElem MPoly::eval(const std::vector<FieldElem>& point) const {
    assert(static_cast<int>(point.size()) == n_);
    FieldElem acc = f_->zero();
    std::vector<std::vector<FieldElem>> pows(n_);
    for (int i = 0; i < n_; ++i) pows[i].push_back(f_->one());
    for (const Term& t : t_) {
        FieldElem prod = t.second;
        for (int i = 0; i < n_; ++i) {
            int e = t.first.e[i];
            if (!e) continue;
            while (static_cast<int>(pows[i].size()) <= e)
                pows[i].push_back(pows[i].back() * point[i]);
            prod = prod * pows[i][e];
        }
        acc = acc + prod;
    }
    return acc;
}

MPoly MPoly::partial(int var) const {
    MPoly r(f_, n_, ord_);
    for (const Term& t : t_) {
        int e = t.first.e[var];
        if (!e) continue;
        FieldElem c = t.second * f_->from_int(e);
        if (c.is_zero()) continue;
        ExpVec m = t.first;
        m.e[var] = static_cast<uint16_t>(e - 1);
        m.deg -= 1;
        r.t_.push_back({m, std::move(c)});
    }
    // Term order is preserved by lowering one fixed variable? Not in
    // general for grevlex ties, so re-sort to stay canonical.
    r.normalize();
    return r;
}

std::optional<MPoly> MPoly::exact_divide(const MPoly& b) const {
    assert(f_ == b.f_ && n_ == b.n_ && ord_ == b.ord_);
    if (b.t_.empty()) return std::nullopt;
    MPoly rem = *this;
    MPoly q(f_, n_, ord_);
    const ExpVec& lb = b.t_.front().first;
    FieldElem ilc = b.t_.front().second.inverse();
    while (!rem.t_.empty()) {
        const Term& lt = rem.t_.front();
        if (!lb.divides(lt.first)) return std::nullopt;
        ExpVec m = lb.quotient_of(lt.first);
        FieldElem c = lt.second * ilc;
        q.t_.push_back({m, c});
        rem = rem - b.mono_times(m, c);
    }
    return q;
}

std::optional<MPoly> MPoly::sqrt() const {
    if (t_.empty()) return MPoly(f_, n_, ord_);
    const Term& lt = t_.front();
    for (int i = 0; i < n_; ++i)
        if (lt.first.e[i] % 2) return std::nullopt;
    auto s0 = sqrt_element(lt.second);
    if (!s0) return std::nullopt;
    ExpVec half = ExpVec::zero(n_);
    for (int i = 0; i < n_; ++i) half.e[i] = static_cast<uint16_t>(lt.first.e[i] / 2);
    half.deg = lt.first.deg / 2;

    MPoly s = monomial(f_, n_, half, *s0, ord_);
    MPoly rem = *this - s * s;
    FieldElem twice_lc_inv = (f_->from_int(2) * *s0).inverse();
    while (!rem.is_zero()) {
        const Term& rt = rem.t_.front();
        if (!half.divides(rt.first)) return std::nullopt;
        ExpVec m = half.quotient_of(rt.first);
        if (cmp_mono(ord_, m, half) >= 0) return std::nullopt;
        FieldElem c = rt.second * twice_lc_inv;
        MPoly t = monomial(f_, n_, m, c, ord_);
        rem = rem - s.mono_times(m, c + c) - t * t;
        s = s + t;
    }
    return s;
}

MPoly MPoly::coeff_frobenius() const {
    MPoly r(f_, n_, ord_);
    r.t_.reserve(t_.size());
    for (const Term& t : t_) r.t_.push_back({t.first, t.second.frobenius()});
    return r;
}

MPoly MPoly::map_coeffs(const FieldDescriptor* nf,
                        const std::function<FieldElem(const FieldElem&)>& fn) const {
    MPoly r(nf, n_, ord_);
    r.t_.reserve(t_.size());
    for (const Term& t : t_) {
        FieldElem c = fn(t.second);
        if (!c.is_zero()) r.t_.push_back({t.first, std::move(c)});
    }
    return r;
}

FieldElem MPoly::coeff_of(const ExpVec& m) const {
    for (const Term& t : t_)
        if (t.first == m) return t.second;
    return f_->zero();
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < t_.size(); ++i) {
        const auto& [m, c] = t_[i];
        if (i) out += " + ";
        out += "(" + c.str() + ")";
        for (int v = 0; v < n_; ++v) {
            if (!m.e[v]) continue;
            out += "*";
            out += v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v);
            if (m.e[v] > 1) out += "^" + std::to_string(m.e[v]);
        }
    }
    return out;
}

FieldElem eval_poly(const ZpPoly& poly, const FieldDescriptor* f,
                    const std::vector<FieldElem>& point) {
    if (poly.p() != f->p()) throw std::logic_error("characteristic mismatch");
    FieldElem acc = f->zero();
    std::vector<std::vector<FieldElem>> pows(point.size());
    for (size_t i = 0; i < point.size(); ++i) pows[i].push_back(f->one());
    for (const auto& [m, c] : poly.terms()) {
        FieldElem prod = f->from_int(c);
        for (int i = 0; i < poly.nvars(); ++i) {
            int e = m.e[i];
            if (!e) continue;
            while (static_cast<int>(pows[i].size()) <= e)
                pows[i].push_back(pows[i].back() * point[i]);
            prod = prod * pows[i][e];
        }
        acc = acc + prod;
    }
    return acc;
}

// ------------------------------------------------------------------
// exact linear algebra
// ------------------------------------------------------------------

namespace {

size_t elem_weight(const FieldElem& e) {
    const FieldDescriptor* f = e.field();
    switch (f->kind()) {
        case FieldDescriptor::Kind::GenericG2:
            return e.g2().n0.term_count() + e.g2().n1.term_count() + e.g2().d.term_count();
        case FieldDescriptor::Kind::GenericG3:
            return e.g3().num.term_count() + e.g3().den.term_count();
        default: return 1;
    }
}

// Multiply each generic row through by the lcm of its denominators so the
// fraction-free elimination below only ever sees polynomial entries.
void clear_row_denominators(const FieldDescriptor* f, std::vector<FieldElem>& row) {
    if (!f->generic()) return;
    ZpPoly l = ZpPoly::constant(f->p(), f->poly_nvars(), 1);
    for (const FieldElem& e : row) {
        if (e.is_zero()) continue;
        ZpPoly d = e.denominator_poly();
        if (d.is_one()) continue;
        ZpPoly g = ZpPoly::gcd(l, d);
        l = l * *d.exact_div(g);
    }
    if (l.is_one()) return;
    for (FieldElem& e : row)
        if (!e.is_zero()) e = e.times_poly(l);
}

struct Echelon {
    std::vector<std::vector<FieldElem>> m;  // rows, b appended as last column
    std::vector<int> pivot_cols;            // per pivot row, ascending rows
    std::vector<int> free_cols;
    int ncols = 0;  // coefficient columns (excluding b)
};

// Forward elimination; fraction-free on generic fields, plain Gaussian on
// finite ones.  Rows are left in upper-echelon shape with the pivot of row
// k in column pivot_cols[k].
Echelon forward_eliminate(const FieldDescriptor* f, std::vector<std::vector<FieldElem>> m,
                          int ncols) {
    Echelon e;
    e.ncols = ncols;
    const bool bareiss = f->generic();
    FieldElem prev = f->one();
    size_t r = 0;
    for (int c = 0; c < ncols && r < m.size(); ++c) {
        size_t best = m.size();
        size_t best_w = 0;
        for (size_t i = r; i < m.size(); ++i) {
            if (m[i][c].is_zero()) continue;
            size_t w = elem_weight(m[i][c]);
            if (best == m.size() || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best == m.size()) {
            e.free_cols.push_back(c);
            continue;
        }
        std::swap(m[r], m[best]);
        const FieldElem piv = m[r][c];
        FieldElem piv_inv = bareiss ? f->one() : piv.inverse();
        for (size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c].is_zero()) continue;
            if (bareiss) {
                FieldElem q = m[i][c];
                for (size_t j = c; j < m[i].size(); ++j) {
                    FieldElem num = piv * m[i][j] - q * m[r][j];
                    m[i][j] = num.is_zero() ? num : num / prev;
                }
            } else {
                FieldElem q = m[i][c] * piv_inv;
                for (size_t j = c; j < m[i].size(); ++j){
                    if (m[r][j].is_zero()) continue;
                    m[i][j] = m[i][j] - q * m[r][j];
                }
            }
        }
        if (bareiss) prev = piv;
        e.pivot_cols.push_back(c);
        ++r;
    }
    for (int c = static_cast<int>(e.pivot_cols.size()) + static_cast<int>(e.free_cols.size());
         c < ncols; ++c)
        e.free_cols.push_back(c);
    e.m = std::move(m);
    return e;
}

// Solve the echelon system for given free-variable values and rhs column.
std::vector<FieldElem> back_substitute(const FieldDescriptor* f, const Echelon& e,
                                       const std::vector<FieldElem>& free_vals, bool use_b) {
    std::vector<FieldElem> x(e.ncols, f->zero());
    for (size_t k = 0; k < e.free_cols.size(); ++k) x[e.free_cols[k]] = free_vals[k];
    for (int k = static_cast<int>(e.pivot_cols.size()) - 1; k >= 0; --k) {
        int pc = e.pivot_cols[k];
        FieldElem acc = use_b ? e.m[k].back() : f->zero();
        for (int j = pc + 1; j < e.ncols; ++j) {
            if (e.m[k][j].is_zero() || x[j].is_zero()) continue;
            acc = acc - e.m[k][j] * x[j];
        }
        x[pc] = acc.is_zero() ? acc : acc / e.m[k][pc];
    }
    return x;
}

} // namespace

LinearSolution solve_linear(const FieldDescriptor* f, std::vector<std::vector<FieldElem>> a,
                            std::vector<FieldElem> b) {
    assert(a.size() == b.size());
    const int ncols = a.empty() ? 0 : static_cast<int>(a[0].size());
    for (size_t i = 0; i < a.size(); ++i) {
        a[i].push_back(b[i]);
        clear_row_denominators(f, a[i]);
    }
    Echelon e = forward_eliminate(f, std::move(a), ncols);

    LinearSolution out;
    out.rank = static_cast<int>(e.pivot_cols.size());
    for (size_t i = e.pivot_cols.size(); i < e.m.size(); ++i) {
        if (!e.m[i].back().is_zero()) {
            out.status = LinearSolution::Status::Inconsistent;
            return out;
        }
    }
    std::vector<FieldElem> zeros(e.free_cols.size(), f->zero());
    out.particular = back_substitute(f, e, zeros, true);
    for (size_t k = 0; k < e.free_cols.size(); ++k) {
        std::vector<FieldElem> vals(e.free_cols.size(), f->zero());
        vals[k] = f->one();
        out.nullspace.push_back(back_substitute(f, e, vals, false));
    }
    out.status = e.free_cols.empty() ? LinearSolution::Status::Unique
                                     : LinearSolution::Status::Parametric;
    return out;
}

int matrix_rank(const FieldDescriptor* f, std::vector<std::vector<FieldElem>> a) {
    if (a.empty()) return 0;
    const int ncols = static_cast<int>(a[0].size());
    for (auto& row : a) clear_row_denominators(f, row);
    Echelon e = forward_eliminate(f, std::move(a), ncols);
    return static_cast<int>(e.pivot_cols.size());
}

} // namespace vsch
