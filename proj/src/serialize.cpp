#include "kscroll/serialize.hpp"

namespace kscroll {

using json = nlohmann::ordered_json;

json verdict_to_json(const Verdict& v)
{
    json reasons = json::array();
    for (auto r : v.reasons)
        reasons.push_back(std::string(to_string(r)));
    json certificate = json::array();
    for (const auto& c : v.certificate)
        certificate.push_back({{"name", c.name},
                               {"value", to_string(c.value)},
                               {"relation", std::string(to_string(c.relation))},
                               {"bound", to_string(c.bound)},
                               {"provenance", c.provenance}});
    json asserted = json::array();
    for (const auto& [h, note] : v.asserted.flags)
        asserted.push_back({{"hypothesis", std::string(to_string(h))}, {"note", note}});
    return {{"status", std::string(to_string(v.status))},
            {"reasons", reasons},
            {"certificate", certificate},
            {"asserted", asserted},
            {"notes", v.notes}};
}

json report_to_json(const Report& r)
{
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(
            {{"label", row.label}, {"computed", row.computed}, {"expected", row.expected}, {"ok", row.ok}});
    return {{"name", r.name}, {"ok", r.ok()}, {"rows", rows}};
}

}  // namespace kscroll
