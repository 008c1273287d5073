#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qnogo/hilbert.hpp"
#include "qnogo/ks_gleason.hpp"

namespace qnogo {

// JSON grammars (documented in the README):
//   matrix  {"dim": d, "entries": [[[re,im], ...d...], ...d...]}   row-major
//   state   {"dim": d, "amplitudes": [[re,im], ...d...]}
//   set     {"dim": d, "vectors": [[x, ...] | [[re,im], ...], ...], "labels": [...]?}
//   obslist {"dim": d, "observables": [{"label"?: s, "entries": ...}, ...]}
// Parsers reject non-square grids, wrong lengths and non-finite numbers.

Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);

StateVector state_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const StateVector& psi);

VectorSet vector_set_from_json(const nlohmann::json& j);
nlohmann::json vector_set_to_json(const VectorSet& set);

struct LabelledObservables {
    std::vector<Observable> observables;
    std::vector<std::string> labels;
};
LabelledObservables observables_from_json(const nlohmann::json& j);

/// Parses the file as JSON; wraps any parse failure in ParseError.
nlohmann::json load_json_file(const std::string& path);

Matrix load_matrix_file(const std::string& path);
StateVector load_state_file(const std::string& path);
VectorSet load_vector_set_file(const std::string& path);
LabelledObservables load_observables_file(const std::string& path);

}  // namespace qnogo
