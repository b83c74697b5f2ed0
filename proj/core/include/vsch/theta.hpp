#pragma once

#include <array>
#include <string>
#include <vector>

#include "vsch/heis.hpp"
#include "vsch/mpoly.hpp"

namespace vsch {

// A fixed-locus label: translation part a0 and character part a0s,
// not both zero.
struct Tau {
    HElem a0;
    HElem a0s;
};
inline bool operator==(const Tau& a, const Tau& b) { return a.a0 == b.a0 && a.a0s == b.a0s; }

// One of the (up to two) components lying over a Tau.  sign_plus selects the
// component; mu_plus selects the square-root branch used by folds of odd
// total multiplicity (all polynomials handled here fold evenly, where the
// branch cancels out).
struct TauLift {
    Tau tau;
    bool sign_plus = true;
    bool mu_plus = true;
};

std::vector<Tau> all_taus(int g);
// Components carrying equations: both signs when a0 != 0, only '+' when
// a0 == 0 (every family monomial vanishes identically on the '-' side).
std::vector<TauLift> all_components(int g);

// Coset representatives of <a0> in H, sorted ascending (a0 != 0).  This is
// the set of beta with a zero bit at a0's highest set bit, hence always a
// subgroup, and the sorted-position map to (Z/2)^(g-1) is a group
// isomorphism.
std::vector<HElem> fold_transversal(int g, HElem a0);
// Surviving variables of an unfolded component (a0 == 0): the kernel of the
// character for '+', its complement coset for '-'.
std::vector<HElem> surviving_set(int g, const Tau& tau, bool plus);
// The beta indexing the lambda variables of a component.
std::vector<HElem> lambda_support(int g, const TauLift& lift);
std::vector<std::string> lambda_names(int g);

// Restrict a polynomial in the y_beta to a component: for a0 != 0 fold
// y_{t+a0} = s * mu^p * chi(t) * y_t onto the transversal, for a0 == 0 drop
// the non-surviving variables; kept representatives map to lambda variables
// in sorted order.  Output lives in 2^(g-1) variables.
MPoly eigen_restrict(const MPoly& poly, int g, const TauLift& lift);

// Translation y_beta -> y_{beta+alpha} and character twist
// y_beta -> chi(beta) * y_beta.
MPoly h_translate(const MPoly& poly, int g, HElem alpha);
MPoly char_act(const MPoly& poly, int g, HElem astar);

// Degree-p monomial families spanning the ansatz space, in a fixed order
// (family A, then B, then C; within a family, exponent vectors in
// first-slot-descending composition order).
struct BasisElem {
    char family;
    HElem astar;                // used by family C only
    std::array<uint8_t, 8> f;   // doubled-exponent vector, indexed by beta
    MPoly mono;
    std::string label;
};
std::vector<BasisElem> invariant_basis(int g, uint32_t p, const FieldDescriptor* field);

// Closed-form images of the two g=2 families on a folded component,
// maintained independently of eigen_restrict as a term-by-term cross-check.
MPoly folded_a_image(const FieldDescriptor* field, uint32_t p, const TauLift& lift,
                     const std::array<uint8_t, 8>& f);
MPoly folded_b_image(const FieldDescriptor* field, uint32_t p, const TauLift& lift,
                     const std::array<uint8_t, 8>& f);

// Dimension comparison that powers the small-characteristic bound: the space
// of degree-p forms versus the total size of the component restrictions.
struct DimsCheck {
    uint64_t forms_dim;
    uint64_t components_dim;
    bool bounded;  // forms_dim <= components_dim
};
DimsCheck dims_check(int g, uint32_t p);

} // namespace vsch
