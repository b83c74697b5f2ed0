#pragma once

#include <vector>

#include "vsch/mpoly.hpp"
#include "vsch/unipoly.hpp"

namespace vsch {

// Legendre-type model y^2 = x (x - 1) (x - mu) with mu != 0, 1.
struct EllipticModel {
    const FieldDescriptor* field = nullptr;
    FieldElem mu;
};

struct ECPoint {
    bool inf = true;
    FieldElem x, y;
};

bool on_curve(const EllipticModel& e, const ECPoint& p);
ECPoint ec_neg(const EllipticModel& e, const ECPoint& p);
ECPoint ec_add(const EllipticModel& e, const ECPoint& p, const ECPoint& q);
ECPoint ec_mul(const EllipticModel& e, const ECPoint& p, uint64_t k);
// All affine points, x in enumeration order (finite fields).
std::vector<ECPoint> enumerate_points(const EllipticModel& e);

// Coefficient of x^(p-1) in (x(x-1)(x-mu))^((p-1)/2), univariate in mu.
ZpPoly hasse_poly(uint32_t p);
FieldElem hasse_invariant(const EllipticModel& e);
bool is_ordinary(const EllipticModel& e);

// Pinned degree-p rational pair with x([p]P) = N(x(P)^p) / D(x(P)^p).
struct VerschiebungPair {
    UniPoly n, d;
};
VerschiebungPair verschiebung_pair(const EllipticModel& e);
// Same displays with mu kept symbolic: bivariate over F_p, u = var0,
// mu = var1.
struct VerschiebungPairSymbolic {
    ZpPoly n, d;
};
VerschiebungPairSymbolic verschiebung_pair_symbolic(uint32_t p);

// Exhaustive group-law verification of the pinned pair on one curve.
struct EcOracleReport {
    FieldElem mu;
    bool ordinary = false;
    uint64_t points_checked = 0;
    uint64_t failures = 0;
    uint64_t p_torsion_points = 0;  // affine points with [p]P = infinity
};
EcOracleReport verify_mul_by_p(const EllipticModel& e);

// Degree-p binary forms giving multiplication by p on the quotient line in
// the lambda frame with modulus omega; the companion is the coordinate swap
// of the principal form up to a characteristic-dependent sign.
MPoly kummer_line_q0(const FieldDescriptor* f, const FieldElem& om);
MPoly kummer_line_q1(const FieldDescriptor* f, const FieldElem& om);
// The companion sign, fixed once per characteristic by a symbolic
// frame-change identity against the pinned rational pair, then cached.
int companion_convention(uint32_t p);
FieldElem mu_of_omega(const FieldElem& om);

} // namespace vsch
