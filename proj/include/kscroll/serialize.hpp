#pragma once

#include <json.hpp>

#include "kscroll/reproduce.hpp"
#include "kscroll/verdict.hpp"

namespace kscroll {

/// {status, reasons, certificate: [{name, value, relation, bound, provenance}], asserted, notes};
/// rationals as "p/q" strings.
nlohmann::ordered_json verdict_to_json(const Verdict& v);
nlohmann::ordered_json report_to_json(const Report& r);

}  // namespace kscroll
