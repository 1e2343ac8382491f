#pragma once

#include "qlogic/identical.hpp"
#include "qlogic/qset.hpp"
#include "qlogic/qspace.hpp"
#include "qlogic/state_set.hpp"

#include <json.hpp>

namespace qlogic::io {

using Json = nlohmann::json;

// {"rows": N, "cols": M, "data": [[re, im], ...]} in row-major order.
Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// {"dim": N, "amps": [[re, im], ...]}
Json to_json(const Ket& k);
Ket ket_from_json(const Json& j);

// {"variant": "top"|"bottom"|"vpolytope"|"face"|"join"|"meet", "dim": N,
//  "generators": [matrix...], "projector": matrix, "children": [set, set]}
Json to_json(const StateSet& s);
StateSet state_set_from_json(const Json& j);

// {"stats": "b"|"f", "terms": [{"modes": [...], "re": x, "im": y}, ...]}
Json to_json(const QVector& v);
QVector qvector_from_json(const Json& j);

// {"counts": {"k1": 2, ...}}
Json to_json(const PureQset& x);
PureQset qset_from_json(const Json& j);

// {"sign", "n", "samples", "seed", "purity_min", "purity_max", "purity_mean"}
Json to_json(const PurityScan& s);

/// Thrown for malformed documents; distinct from domain violations.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qlogic::io
