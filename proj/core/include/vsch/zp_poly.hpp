#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vsch/expvec.hpp"

namespace vsch {

// Sparse multivariate polynomial over the prime field F_p (p odd, p <= 7).
// Terms are kept sorted in descending grevlex order with coefficients in
// [1, p).  This is the coefficient arithmetic underlying the rational
// function fields; it provides exact division, a recursive primitive-PRS
// gcd, and a square root by descending coefficient matching.
class ZpPoly {
public:
    using Term = std::pair<ExpVec, uint32_t>;

    ZpPoly() : p_(3), n_(1) {}
    ZpPoly(uint32_t p, int nvars) : p_(p), n_(static_cast<uint8_t>(nvars)) {}

    static ZpPoly zero(uint32_t p, int nvars) { return ZpPoly(p, nvars); }
    static ZpPoly constant(uint32_t p, int nvars, int64_t c);
    static ZpPoly variable(uint32_t p, int nvars, int i);
    static ZpPoly monomial(uint32_t p, const ExpVec& m, int64_t c);

    uint32_t p() const { return p_; }
    int nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.deg == 0); }
    bool is_one() const { return t_.size() == 1 && t_[0].first.deg == 0 && t_[0].second == 1; }
    size_t term_count() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }
    uint32_t total_degree() const { return t_.empty() ? 0 : t_.front().first.deg; }

    const Term& leading() const { return t_.front(); }

    ZpPoly operator+(const ZpPoly& o) const;
    ZpPoly operator-(const ZpPoly& o) const;
    ZpPoly operator-() const;
    ZpPoly operator*(const ZpPoly& o) const;
    bool operator==(const ZpPoly& o) const { return p_ == o.p_ && t_ == o.t_; }
    bool operator!=(const ZpPoly& o) const { return !(*this == o); }

    ZpPoly scaled(uint32_t c) const;            // multiply by scalar
    ZpPoly mono_times(const ExpVec& m, uint32_t c) const;
    ZpPoly pow(uint32_t k) const;

    // Quotient when the division is exact, std::nullopt otherwise.
    std::optional<ZpPoly> exact_div(const ZpPoly& b) const;

    // Monic-normalized gcd (leading grevlex coefficient 1); gcd(0,0) = 0.
    static ZpPoly gcd(const ZpPoly& a, const ZpPoly& b);

    // S with S*S == *this, monic-normalized sign choice, if a square.
    std::optional<ZpPoly> sqrt() const;

    // Substitute every variable i by its image under x_i -> x_i^k
    // (the Frobenius on coefficients when k = p).
    ZpPoly exponent_scaled(uint32_t k) const;

    int degree_in(int var) const;
    bool contains_var(int var) const { return degree_in(var) > 0; }

    // Monic normalization: divide by the leading coefficient (nonzero input).
    ZpPoly monic() const;
    uint32_t leading_coeff() const { return t_.empty() ? 0 : t_.front().second; }

    // Evaluate coefficients of *this viewed as univariate in `var`:
    // result[d] = coefficient polynomial of var^d (with var's slot zeroed).
    std::vector<ZpPoly> coeffs_in_var(int var) const;
    static ZpPoly join_in_var(uint32_t p, int nvars, int var, const std::vector<ZpPoly>& cs);

    void add_term(const ExpVec& m, int64_t c); // accumulate; re-sorts lazily via normalize()
    void normalize();                          // sort + combine + drop zeros

    std::string str(const std::vector<std::string>& names) const;

private:
    uint32_t p_;
    uint8_t n_;
    std::vector<Term> t_;

    friend class FieldElem;
};

} // namespace vsch
