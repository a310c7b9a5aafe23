#pragma once

#include <json.hpp>

#include "ringdef/certificate.hpp"
#include "ringdef/verify.hpp"

namespace ringdef {

using Json = nlohmann::ordered_json;

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

// Timing is emitted only when include_timing is set, so identical runs
// serialize byte-identically.
Json report_to_json(const Report& r, bool include_timing = false);

}  // namespace ringdef
