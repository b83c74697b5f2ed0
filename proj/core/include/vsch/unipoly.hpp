#pragma once

#include <utility>
#include <vector>

#include "vsch/field.hpp"
#include "vsch/mpoly.hpp"
#include "vsch/rng.hpp"

namespace vsch {

// Dense univariate polynomial over a field.  Coefficients are stored low
// degree first and kept trimmed (no trailing zeros); the zero polynomial has
// an empty coefficient vector and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const FieldDescriptor* f) : f_(f) {}
    UniPoly(const FieldDescriptor* f, std::vector<FieldElem> coeffs);

    static UniPoly constant(const FieldDescriptor* f, const FieldElem& c);
    static UniPoly x(const FieldDescriptor* f);
    static UniPoly monomial(const FieldDescriptor* f, int deg, const FieldElem& c);

    const FieldDescriptor* field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    FieldElem coeff(int i) const;
    const FieldElem& leading() const { return c_.back(); }
    const std::vector<FieldElem>& coeffs() const { return c_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const { return f_ == o.f_ && equal_coeffs(o); }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly times_elem(const FieldElem& c) const;
    UniPoly shifted(int k) const;  // multiply by x^k
    UniPoly substitute_power(uint32_t k) const;  // x -> x^k

    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    UniPoly operator%(const UniPoly& o) const { return divmod(*this, o).second; }
    UniPoly operator/(const UniPoly& o) const { return divmod(*this, o).first; }
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic result

    UniPoly monic() const;
    UniPoly derivative() const;
    FieldElem eval(const FieldElem& at) const;
    UniPoly pow_mod(uint64_t e, const UniPoly& m) const;
    // x^(q^steps) mod m via iterated q-th powers (no big exponents needed).
    static UniPoly frobenius_power(const UniPoly& m, int steps);

    // --- finite-field factorization ---
    // f = prod_i out[i].first ^ out[i].second with squarefree monic parts.
    std::vector<std::pair<UniPoly, int>> squarefree_decomposition() const;
    // Monic irreducible factors with multiplicity, deterministic order
    // (sorted by degree, then by coefficient indices); rng drives the
    // equal-degree splits only.
    std::vector<std::pair<UniPoly, int>> factor(Rng& rng) const;
    bool is_irreducible() const;  // deterministic, no rng
    std::vector<FieldElem> roots(Rng& rng) const;  // distinct, sorted by index

    std::string str() const;

private:
    const FieldDescriptor* f_ = nullptr;
    std::vector<FieldElem> c_;

    void trim();
    bool equal_coeffs(const UniPoly& o) const;
};

// View a single-variable MPoly as a UniPoly.
UniPoly to_unipoly(const MPoly& p);
MPoly to_mpoly(const UniPoly& p);

} // namespace vsch
