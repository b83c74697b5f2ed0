#pragma once

#include <array>
#include <optional>

#include "vsch/mpoly.hpp"
#include "vsch/theta.hpp"

namespace vsch {

// Quartic Kummer model in the four theta coordinates, parametrized by
// (k00, k01, k10, k11) subject to one cubic relation and a set of
// nondegeneracy inequations.
struct KummerSurface {
    const FieldDescriptor* field = nullptr;
    FieldElem k00, k01, k10, k11;
};

// S + 2*k00*P + k01*Q_01 + k10*Q_10 + k11*Q_11 in variables
// (y00, y01, y10, y11); Q_a sums y_b^2 y_{b+a}^2 over the <a>-cosets.
MPoly kummer_equation(const KummerSurface& s);

// 4 + k01 k10 k11 - k01^2 - k10^2 - k11^2 + k00^2 (zero on valid surfaces).
FieldElem kummer_relation_residual(const KummerSurface& s);
// Relation holds and all fourteen nondegeneracy expressions are nonzero.
bool validate_kummer(const KummerSurface& s);

// Modulus of the induced elliptic quotient attached to a component, as a
// pinned 15-entry chart in the parameters.
FieldElem omega(const KummerSurface& s, const Tau& tau);

KummerSurface frobenius_twist(const KummerSurface& s);
KummerSurface generic_kummer(uint32_t p);

// Solve k00^2 = k01^2 + k10^2 + k11^2 - k01 k10 k11 - 4 (canonical root).
std::optional<FieldElem> solve_k00(const FieldElem& k01, const FieldElem& k10,
                                   const FieldElem& k11);
// Uniformly drawn valid surface over a finite field, or nullopt if none is
// found within max_tries draws.
std::optional<KummerSurface> random_kummer(const FieldDescriptor* f, Rng& rng,
                                           int max_tries = 8192);

// Quartic genus-3 model in the eight theta coordinates with parameters
// gamma (indexed by nonzero alpha) and delta (indexed by nonzero characters).
struct CobleQuartic {
    const FieldDescriptor* field = nullptr;
    std::array<FieldElem, 8> gamma;  // entry 0 unused
    std::array<FieldElem, 8> delta;  // entry 0 unused
};

// S + sum_a gamma_a Q_a + sum_c delta_c P_c where Q_a sums y_b^2 y_{b+a}^2
// over the four <a>-cosets and P_c is the product of the coordinates in
// ker(c) plus the product of those outside.
MPoly coble_equation(const CobleQuartic& c);

CobleQuartic generic_coble(uint32_t p);
CobleQuartic frobenius_twist(const CobleQuartic& c);
// Random parameters with every fold denominator 2 +- gamma_a nonzero.
std::optional<CobleQuartic> random_coble(const FieldDescriptor* f, Rng& rng,
                                         int max_tries = 8192);

// Restriction of the quartic to a component, written as
// scale * (Kummer equation with the returned parameters) in the lambda
// variables.  The decomposition is re-verified exactly; throws domain_error
// when the leading scale vanishes (degenerate specialization).
struct CobleRestriction {
    KummerSurface surf;
    FieldElem scale;
};
CobleRestriction coble_restrict(const CobleQuartic& c, const TauLift& lift);

} // namespace vsch
