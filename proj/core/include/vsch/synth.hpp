#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vsch/ellp.hpp"
#include "vsch/surfaces.hpp"
#include "vsch/theta.hpp"

namespace vsch {

// A solved system of degree-p equations: the invariant form V_0 expanded in
// the monomial basis, together with one proportionality scale per
// constrained component of the fixed locus.  The remaining forms are
// coordinate translates of V_0.
struct VerschiebungMap {
    int g = 2;
    uint32_t p = 3;
    const FieldDescriptor* field = nullptr;
    std::vector<BasisElem> basis;
    std::vector<FieldElem> coeffs;      // parallel to basis
    std::vector<TauLift> components;    // all_components(g)
    std::vector<FieldElem> scales;      // parallel to components (may be empty)
    std::vector<std::string> convention_log;

    MPoly v0() const;
    MPoly form(HElem alpha) const;  // translate of v0 by alpha
};

// The degree-p form a component restriction must be proportional to.
struct RestrictionTarget {
    TauLift lift;
    MPoly form;  // in the lambda variables, coefficient 1 on lambda_0^p
};

// Genus 2: the principal multiplication form on each component line, with
// modulus given by the parameter chart.
std::vector<RestrictionTarget> build_targets(const KummerSurface& s);
// Genus 3 (p = 3): the char-3 genus-2 solution shape evaluated at the
// restricted parameters of each component.
std::vector<RestrictionTarget> build_targets(const CobleQuartic& c);

struct SynthInfo {
    int rows = 0;
    int cols = 0;
    int rank = 0;
    int kernel_dim = 0;
};

// Solve the restriction constraints for V_0 (normalized so the y_0^p
// coefficient is 1) and the per-component scales.  Finite and generic
// coefficient fields; the generic char-7 genus-2 case is solved by exact
// interpolation through finite specializations and then re-certified
// against the generic targets, and its result is cached.
VerschiebungMap synth_verschiebung(const KummerSurface& s, SynthInfo* info = nullptr);
// Genus 3, p = 3 only.  Over the generic field the pinned closed form is
// certified against the targets instead of running function-field
// elimination; finite fields run the full solve.
VerschiebungMap synth_verschiebung(const CobleQuartic& c, SynthInfo* info = nullptr);

// Re-derivation of every component identity for an existing map: each
// constrained component restriction must be a nonzero multiple of its
// target, and each unconstrained component restriction must vanish.
// Scales are re-derived from scratch (the map's stored scales are ignored).
struct CertifyReport {
    int checked = 0;
    int failures = 0;
    std::vector<std::string> notes;
    bool ok() const { return failures == 0 && checked > 0; }
};
CertifyReport certify(const VerschiebungMap& m, const KummerSurface& s);
CertifyReport certify(const VerschiebungMap& m, const CobleQuartic& c);

// Pinned closed-form solutions, used as independent cross-checks of the
// solver (and as the certified candidate in the generic genus-3 path).
MPoly known_v0_g2p3(const KummerSurface& s);
MPoly known_v0_g2p5(const KummerSurface& s);
MPoly known_v0_g3p3(const CobleQuartic& c);
// Expand a given V_0 over the invariant basis; throws when a term lies
// outside the basis span.
VerschiebungMap map_from_v0(int g, const MPoly& v0);

// (basis dimension, exact rank) of the joint restriction matrix, columns
// indexed by the image monomials across all constrained components.  Full
// rank means the restriction constraints determine V_0 uniquely.
std::pair<int, int> rhat_rank(int g, uint32_t p, const FieldDescriptor* f);

// Reconstruct the degree-(p+1) form G with dG/dy_alpha = V_alpha for all
// alpha, or nullopt when the coefficient relations are inconsistent.
std::optional<MPoly> polar_detector(const VerschiebungMap& m);

} // namespace vsch
