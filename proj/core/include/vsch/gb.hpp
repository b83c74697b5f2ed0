#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vsch/mpoly.hpp"

namespace vsch {

// Thrown when a Groebner run exceeds its reduction-step budget.  Callers
// surface this as a distinct process exit code so a stuck computation is
// distinguishable from a failed verdict.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(uint64_t spent)
        : std::runtime_error("reduction-step budget exhausted"), spent_(spent) {}
    uint64_t spent() const { return spent_; }

private:
    uint64_t spent_;
};

struct GbOptions {
    MonoOrder order = MonoOrder::Grevlex;
    // Upper bound on elementary lead-term cancellations performed while
    // reducing S-polynomials.  0 means "use default_gb_budget()".
    uint64_t budget = 0;
};

// Default budget: VSCH_GB_BUDGET environment variable if set, else 2e6.
uint64_t default_gb_budget();

// Buchberger with the normal (minimal-lcm) selection strategy and the
// coprime-lead and chain skip criteria; returns the reduced basis, monic and
// sorted ascending by lead monomial.  The reduced basis is canonical for the
// ideal and order, so ideal equality is vector equality.  Finite coefficient
// fields only.
std::vector<MPoly> groebner_basis(std::vector<MPoly> gens, const GbOptions& opt = {});

// Remainder of full multivariate division of f by the (not necessarily
// Groebner) set `basis`; deterministic: always cancels with the first
// divisor in basis order.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis);

bool in_ideal(const MPoly& f, const std::vector<MPoly>& gb);
// Both arguments must be reduced bases as produced by groebner_basis with
// the same order.
bool ideal_equal(const std::vector<MPoly>& a, const std::vector<MPoly>& b);

// Hilbert series data of R/I from the lead terms of a Groebner basis:
// series = numerator(t) / (1-t)^nvars with the numerator computed by the
// pivot-variable recursion on the lead-term ideal.  `krull` is the Krull
// dimension of R/I (-1 for the zero ring), `dim_projective` the dimension
// of the projective zero locus (-1 when empty) and `degree` its degree
// (numerator value at 1 after cancelling all (1-t) factors; 0 when empty).
struct HilbertData {
    std::vector<int64_t> numerator;
    int krull = 0;
    int dim_projective = -1;
    uint64_t degree = 0;
};
HilbertData hilbert_data(const std::vector<MPoly>& gb, int nvars);

// I : x_var^infinity for homogeneous I, by the reverse-lex trick: permute
// x_var last, take a grevlex basis, strip the trailing-variable power from
// each element, permute back and rebuild the basis.
std::vector<MPoly> saturate_by_var(const std::vector<MPoly>& gens, int var,
                                   const GbOptions& opt = {});

// Intersection of two homogeneous ideals via an auxiliary elimination
// variable placed first.
std::vector<MPoly> ideal_intersect(const std::vector<MPoly>& a,
                                   const std::vector<MPoly>& b,
                                   const GbOptions& opt = {});

// Saturation with respect to the irrelevant ideal (x_0, ..., x_{n-1}):
// the intersection of I : x_i^infinity over all variables.
std::vector<MPoly> saturate_irrelevant(const std::vector<MPoly>& gens,
                                       const GbOptions& opt = {});

} // namespace vsch
