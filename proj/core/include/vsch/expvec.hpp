#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <stdexcept>

namespace vsch {

// Exponent vector of a monomial in up to kMaxVars variables.  Total degree is
// cached.  All polynomial layers (coefficient polynomials over F_p and the
// main sparse polynomials over a field) share this type.
struct ExpVec {
    static constexpr int kMaxVars = 16;

    std::array<uint16_t, kMaxVars> e{};
    uint32_t deg = 0;
    uint8_t n = 0;

    static ExpVec zero(int nvars) {
        ExpVec v;
        v.n = static_cast<uint8_t>(nvars);
        return v;
    }
    static ExpVec unit(int nvars, int i, uint16_t k = 1) {
        ExpVec v = zero(nvars);
        v.e[static_cast<size_t>(i)] = k;
        v.deg = k;
        return v;
    }

    uint16_t operator[](size_t i) const { return e[i]; }

    ExpVec plus(const ExpVec& o) const {
        ExpVec r = *this;
        for (int i = 0; i < n; ++i) r.e[i] = static_cast<uint16_t>(e[i] + o.e[i]);
        r.deg = deg + o.deg;
        return r;
    }
    bool divides(const ExpVec& o) const {
        for (int i = 0; i < n; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // o / this; caller guarantees divisibility.
    ExpVec quotient_of(const ExpVec& o) const {
        ExpVec r = zero(n);
        for (int i = 0; i < n; ++i) r.e[i] = static_cast<uint16_t>(o.e[i] - e[i]);
        r.deg = o.deg - deg;
        return r;
    }
    ExpVec lcm(const ExpVec& o) const {
        ExpVec r = zero(n);
        uint32_t d = 0;
        for (int i = 0; i < n; ++i) {
            r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
            d += r.e[i];
        }
        r.deg = d;
        return r;
    }
    ExpVec gcd(const ExpVec& o) const {
        ExpVec r = zero(n);
        uint32_t d = 0;
        for (int i = 0; i < n; ++i) {
            r.e[i] = e[i] < o.e[i] ? e[i] : o.e[i];
            d += r.e[i];
        }
        r.deg = d;
        return r;
    }
    bool coprime_with(const ExpVec& o) const {
        for (int i = 0; i < n; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
    bool is_constant() const { return deg == 0; }

    bool operator==(const ExpVec& o) const {
        if (n != o.n || deg != o.deg) return false;
        for (int i = 0; i < n; ++i)
            if (e[i] != o.e[i]) return false;
        return true;
    }
    bool operator!=(const ExpVec& o) const { return !(*this == o); }

    size_t hash() const {
        size_t h = n;
        for (int i = 0; i < n; ++i) h = h * 1000003u + e[i];
        return h;
    }
};

// Graded reverse lexicographic order: higher total degree wins; on a tie the
// monomial with the smaller exponent at the last differing variable wins.
inline int cmp_grevlex(const ExpVec& a, const ExpVec& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int i = a.n - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

// Block order eliminating variable 0: compare its exponent first, then
// grevlex on the remaining variables.  Used internally for ideal
// intersections via an auxiliary variable.
inline int cmp_elim_first(const ExpVec& a, const ExpVec& b) {
    if (a.e[0] != b.e[0]) return a.e[0] < b.e[0] ? -1 : 1;
    uint32_t da = a.deg - a.e[0], db = b.deg - b.e[0];
    if (da != db) return da < db ? -1 : 1;
    for (int i = a.n - 1; i >= 1; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

enum class MonoOrder : uint8_t { Grevlex, ElimFirst };

inline int cmp_mono(MonoOrder o, const ExpVec& a, const ExpVec& b) {
    return o == MonoOrder::Grevlex ? cmp_grevlex(a, b) : cmp_elim_first(a, b);
}

} // namespace vsch

template <> struct std::hash<vsch::ExpVec> {
    size_t operator()(const vsch::ExpVec& v) const { return v.hash(); }
};
