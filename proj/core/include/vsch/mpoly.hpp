#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vsch/expvec.hpp"
#include "vsch/field.hpp"

namespace vsch {

// Sparse multivariate polynomial with coefficients in an arbitrary
// FieldDescriptor field.  Terms are kept sorted descending in the attached
// monomial order; the order is part of the value and must agree between
// operands of binary operations.
class MPoly {
public:
    using Term = std::pair<ExpVec, FieldElem>;

    MPoly() = default;
    MPoly(const FieldDescriptor* f, int nvars, MonoOrder ord = MonoOrder::Grevlex)
        : f_(f), n_(static_cast<uint8_t>(nvars)), ord_(ord) {}

    static MPoly constant(const FieldDescriptor* f, int nvars, const FieldElem& c,
                          MonoOrder ord = MonoOrder::Grevlex);
    static MPoly constant(const FieldDescriptor* f, int nvars, int64_t c,
                          MonoOrder ord = MonoOrder::Grevlex);
    static MPoly variable(const FieldDescriptor* f, int nvars, int i,
                          MonoOrder ord = MonoOrder::Grevlex);
    static MPoly monomial(const FieldDescriptor* f, int nvars, const ExpVec& m,
                          const FieldElem& c, MonoOrder ord = MonoOrder::Grevlex);

    const FieldDescriptor* field() const { return f_; }
    int nvars() const { return n_; }
    MonoOrder order() const { return ord_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.deg == 0); }
    size_t term_count() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }
    uint32_t total_degree() const;
    bool is_homogeneous() const;
    const Term& leading() const { return t_.front(); }

    MPoly with_order(MonoOrder ord) const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly times_elem(const FieldElem& c) const;
    MPoly mono_times(const ExpVec& m, const FieldElem& c) const;
    MPoly pow(uint32_t k) const;

    // Replace variable i by images[i]; the result lives in the images' ring.
    MPoly substitute(const std::vector<MPoly>& images) const;
    FieldElem eval(const std::vector<FieldElem>& point) const;
    MPoly partial(int var) const;

    std::optional<MPoly> exact_divide(const MPoly& b) const;
    std::optional<MPoly> sqrt() const;

    MPoly coeff_frobenius() const;  // p-th power each coefficient
    MPoly map_coeffs(const FieldDescriptor* nf,
                     const std::function<FieldElem(const FieldElem&)>& fn) const;

    FieldElem coeff_of(const ExpVec& m) const;  // zero if absent

    void add_term(const ExpVec& m, const FieldElem& c);  // accumulate, call normalize()
    void normalize();

    std::string str(const std::vector<std::string>& names) const;

private:
    const FieldDescriptor* f_ = nullptr;
    uint8_t n_ = 0;
    MonoOrder ord_ = MonoOrder::Grevlex;
    std::vector<Term> t_;
};

// Evaluate an F_p coefficient polynomial at a point with entries in f.
FieldElem eval_poly(const ZpPoly& poly, const FieldDescriptor* f,
                    const std::vector<FieldElem>& point);

// Exact dense linear solve A x = b.  Finite fields use ordinary Gaussian
// elimination; generic function fields clear row denominators and run
// fraction-free (Bareiss) elimination so entries stay polynomial.
struct LinearSolution {
    enum class Status { Unique, Parametric, Inconsistent };
    Status status = Status::Inconsistent;
    int rank = 0;
    std::vector<FieldElem> particular;             // valid unless Inconsistent
    std::vector<std::vector<FieldElem>> nullspace;  // basis of solutions of Ax=0
};

LinearSolution solve_linear(const FieldDescriptor* f,
                            std::vector<std::vector<FieldElem>> a,
                            std::vector<FieldElem> b);

int matrix_rank(const FieldDescriptor* f, std::vector<std::vector<FieldElem>> a);

} // namespace vsch
