#pragma once

#include <string>
#include <vector>

#include "vsch/ellp.hpp"
#include "vsch/synth.hpp"
#include "vsch/verify.hpp"

namespace vsch {

// Versioned, canonical JSON text for every artifact the tools exchange:
// keys appear in a fixed order, polynomial terms in their stored
// (descending) monomial order, and no timing or host data is included, so
// identical inputs produce byte-identical files.  Parsing failures raise
// std::invalid_argument.

inline constexpr int kSchemaVersion = 1;

std::string field_to_json(const FieldDescriptor* f);
const FieldDescriptor* field_from_json(const std::string& text);

// Element values carry no field tag of their own; the field is supplied by
// the surrounding document.
std::string elem_to_json(const FieldElem& e);
FieldElem elem_from_json(const FieldDescriptor* f, const std::string& text);

std::string poly_to_json(const MPoly& p);
MPoly poly_from_json(const FieldDescriptor* f, const std::string& text);

std::string map_to_json(const VerschiebungMap& m);
VerschiebungMap map_from_json(const std::string& text);

std::string surface_to_json(const KummerSurface& s);
KummerSurface surface_from_json(const std::string& text);

std::string coble_to_json(const CobleQuartic& c);
CobleQuartic coble_from_json(const std::string& text);

std::string factorization_to_json(const FactorizationReport& r, bool include_factor = true);
std::string certification_to_json(const CertifyReport& r);
std::string experiment_to_json(const std::vector<CurveExperiment>& curves, uint32_t p,
                               int ext_degree, uint64_t seed, bool include_timings = false);
std::string ec_oracle_to_json(const std::vector<EcOracleReport>& reports,
                              const FieldDescriptor* f);

} // namespace vsch
