#pragma once

// JSON forms of the core types. Output key order and term order are fixed so
// identical inputs serialize byte-identically.

#include <json.hpp>

#include "facs/lrcoef.hpp"
#include "facs/oracle.hpp"
#include "facs/ring.hpp"

namespace facs {

using Json = nlohmann::ordered_json;

Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json lrresult_to_json(const LRResult& r);
Json expansion_to_json(const Expansion& e);

} // namespace facs
