#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vsch/rng.hpp"
#include "vsch/zp_poly.hpp"

namespace vsch {

class FieldElem;
class FieldDescriptor;

// Element of the quadratic extension Frac(F_p[k01,k10,k11])[k00]/(k00^2 - W):
// represents (n0 + n1*k00)/d with n0, n1, d in F_p[k01,k10,k11],
// gcd(gcd(n0,n1), d) = 1 and d monic.  W has odd total degree, hence is not
// a square, so the extension is a field and norms n0^2 - n1^2*W vanish only
// at zero.
struct G2Rep {
    ZpPoly n0, n1, d;
};

// Element of Frac(F_p[gamma_*, delta_*]) (14 variables), num/den reduced,
// den monic.
struct G3Rep {
    ZpPoly num, den;
};

class FieldElem {
public:
    FieldElem() = default;

    const FieldDescriptor* field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem inverse() const;
    FieldElem pow(uint64_t k) const;
    FieldElem frobenius() const;  // x -> x^p

    // Raw views used by serialization and by denominator-clearing code.
    uint32_t prime_value() const { return v_; }
    const std::array<uint8_t, 12>& ext_coeffs() const { return ext_; }
    const G2Rep& g2() const { return *g2_; }
    const G3Rep& g3() const { return *g3_; }
    ZpPoly denominator_poly() const;      // d / den / constant 1
    FieldElem times_poly(const ZpPoly& m) const;

    std::string str() const;

private:
    const FieldDescriptor* f_ = nullptr;
    uint32_t v_ = 0;
    std::array<uint8_t, 12> ext_{};
    std::shared_ptr<const G2Rep> g2_;
    std::shared_ptr<const G3Rep> g3_;

    static FieldElem make_prime(const FieldDescriptor* f, uint32_t v);
    static FieldElem make_ext(const FieldDescriptor* f, const std::array<uint8_t, 12>& c);
    static FieldElem make_g2(const FieldDescriptor* f, ZpPoly n0, ZpPoly n1, ZpPoly d);
    static FieldElem make_g3(const FieldDescriptor* f, ZpPoly num, ZpPoly den);

    friend class FieldDescriptor;
    friend std::optional<FieldElem> sqrt_element(const FieldElem& a);
};

// Interned descriptor of a coefficient field.  Pointers returned by the
// factories are unique per mathematical field and stable for the process
// lifetime, so descriptor identity can be compared by pointer.
class FieldDescriptor {
public:
    enum class Kind { Prime, Extension, GenericG2, GenericG3 };

    static const FieldDescriptor* prime(uint32_t p);
    // Degree-n extension with the canonical modulus: the lexicographically
    // first monic irreducible of degree n (coefficient vector read as a
    // base-p integer, low degree least significant).
    static const FieldDescriptor* extension(uint32_t p, int n);
    // Same but with a caller-pinned monic modulus c0 + c1 x + ... + x^n
    // (coeffs.size() == n+1, coeffs.back() == 1); verified irreducible.
    static const FieldDescriptor* extension_with_modulus(uint32_t p,
                                                         const std::vector<uint32_t>& coeffs);
    static const FieldDescriptor* generic_g2(uint32_t p);
    static const FieldDescriptor* generic_g3(uint32_t p);

    Kind kind() const { return kind_; }
    uint32_t p() const { return p_; }
    int ext_degree() const { return n_; }
    bool finite() const { return kind_ == Kind::Prime || kind_ == Kind::Extension; }
    bool generic() const { return !finite(); }
    uint64_t order() const;  // finite fields only
    const std::vector<uint32_t>& modulus() const { return mod_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(int64_t c) const;

    // Deterministic enumeration of a finite field: index = sum coeff_i p^i.
    FieldElem element_at(uint64_t index) const;
    uint64_t index_of(const FieldElem& a) const;
    FieldElem random_element(Rng& rng) const;

    // Canonical square root of -1 (the root with the smaller enumeration
    // index), when the field has one.
    std::optional<FieldElem> mu0() const { return mu0_; }

    // --- generic function fields ---
    int poly_nvars() const;                         // 3 (g2) or 14 (g3)
    std::vector<std::string> var_names() const;     // polynomial variable names
    FieldElem from_fraction(const ZpPoly& num, const ZpPoly& den) const;
    FieldElem from_poly(const ZpPoly& num) const;
    FieldElem poly_var(int i) const;
    FieldElem g2_k00() const;            // the algebraic generator k00
    const ZpPoly& g2_disc() const { return w_; }  // k00^2 equals this

    std::string name() const;

private:
    FieldDescriptor() = default;
    void build_extension_tables();

    Kind kind_ = Kind::Prime;
    uint32_t p_ = 3;
    int n_ = 1;
    std::vector<uint32_t> mod_;                      // monic modulus coeffs (ext)
    std::vector<std::array<uint8_t, 12>> red_;       // x^{n+k} reduced, k=0..n-2
    ZpPoly w_;                                       // g2 only
    std::optional<FieldElem> mu0_;

    friend class FieldElem;
    friend std::optional<FieldElem> sqrt_element(const FieldElem& a);
};

// Canonical square root: for finite fields the Tonelli-Shanks root folded to
// min(r, -r) in enumeration-index order; for generic fields only elements
// that are visibly squares of polynomial fractions (componentwise square
// roots exist) are handled, otherwise nullopt.
std::optional<FieldElem> sqrt_element(const FieldElem& a);

} // namespace vsch
