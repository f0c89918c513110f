#include "kscroll/registry.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "kscroll/errors.hpp"

namespace kscroll {

using json = nlohmann::ordered_json;

namespace {

const std::set<std::string> kProvenanceTags{"paper", "derived", "user"};

std::pair<std::string, long> split_id(const std::string& id)
{
    std::size_t i = 0;
    while (i < id.size() && !std::isdigit(static_cast<unsigned char>(id[i])))
        ++i;
    std::size_t j = i;
    while (j < id.size() && std::isdigit(static_cast<unsigned char>(id[j])))
        ++j;
    if (i == j || j != id.size() || j - i > 9)
        return {id, -1};
    return {id.substr(0, i), std::stol(id.substr(i))};
}

std::string lower(std::string s)
{
    for (auto& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

// Field names used both as JSON keys and as provenance keys.
std::vector<std::string> populated_fields(const FamilyRecord& r)
{
    std::vector<std::string> out;
    if (r.triple)
        out.push_back("triple");
    if (r.degree)
        out.push_back("degree");
    if (r.branch)
        out.push_back("branch");
    if (!r.alternate_branches.empty())
        out.push_back("alternate_branches");
    if (r.p3_type)
        out.push_back("p3_type");
    if (r.line_component)
        out.push_back("line_component");
    if (!r.singular_locus.empty())
        out.push_back("singular_locus");
    if (!r.asserted.flags.empty())
        out.push_back("asserted");
    if (r.polystable)
        out.push_back("polystable");
    return out;
}

const std::set<std::string> kKnownFields{"triple",         "degree",         "branch",    "alternate_branches",
                                         "p3_type",        "line_component", "singular_locus", "asserted",
                                         "polystable"};

void check_branch_on_triple(const FamilyRecord& r, const std::string& field, const std::string& text)
{
    BranchPoly p = [&] {
        try {
            return parse(text);
        } catch (const Error& e) {
            throw SchemaError(r.id, field, e.what());
        }
    }();
    if (!r.triple)
        return;
    std::vector<ScrollTriple> candidates;
    try {
        candidates = infer_triple(observations(p), r.degree);
    } catch (const Error& e) {
        throw SchemaError(r.id, field, e.what());
    }
    if (std::find(candidates.begin(), candidates.end(), *r.triple) == candidates.end())
        throw SchemaError(r.id, field, "equation is not a section of the branch class on " + to_string(*r.triple));
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open registry '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class T>
T get_field(const json& j, const std::string& id, const char* field)
{
    try {
        return j.at(field).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(id, field, e.what());
    }
}

}  // namespace

bool FamilyIdLess::operator()(const std::string& a, const std::string& b) const
{
    const auto [pa, na] = split_id(a);
    const auto [pb, nb] = split_id(b);
    if (pa != pb)
        return pa < pb;
    if (na != nb)
        return na < nb;
    return a < b;
}

void validate(const FamilyRecord& r)
{
    if (r.id.empty())
        throw SchemaError("", "id", "must be non-empty");
    if (r.triple) {
        try {
            ScrollTriple::make(r.triple->d1, r.triple->d2, r.triple->d3);
        } catch (const Error& e) {
            throw SchemaError(r.id, "triple", e.what());
        }
    }
    if (r.degree) {
        if (*r.degree <= 0 || *r.degree % 2 != 0)
            throw SchemaError(r.id, "degree", "must be even and positive, got " + std::to_string(*r.degree));
        if (r.triple && *r.degree != 2 * r.triple->sum())
            throw SchemaError(r.id, "degree", "must equal 2(d1+d2+d3) = " + std::to_string(2 * r.triple->sum()));
    }
    if (r.branch)
        check_branch_on_triple(r, "branch", *r.branch);
    for (const auto& alt : r.alternate_branches)
        check_branch_on_triple(r, "alternate_branches", alt.text);
    if (r.line_component && (*r.line_component < 1 || *r.line_component > 3))
        throw SchemaError(r.id, "line_component", "must be 1, 2 or 3");
    if (r.polystable) {
        if (!r.triple || !r.branch)
            throw SchemaError(r.id, "polystable", "needs triple and branch");
        try {
            ToricValuation::make(*r.triple, r.polystable->futaki_valuation);
            parse(r.polystable->quotient.first, ParseMode::General);
            parse(r.polystable->quotient.second, ParseMode::General);
        } catch (const std::exception& e) {
            throw SchemaError(r.id, "polystable", e.what());
        }
    }
    for (const auto& f : populated_fields(r)) {
        auto it = r.provenance.find(f);
        if (it == r.provenance.end())
            throw SchemaError(r.id, f, "populated field has no provenance");
    }
    for (const auto& [field, prov] : r.provenance) {
        if (!kKnownFields.count(field))
            throw SchemaError(r.id, field, "provenance for an unknown field");
        if (!kProvenanceTags.count(prov.tag))
            throw SchemaError(r.id, field, "provenance tag must be paper, derived or user, got '" + prov.tag + "'");
    }
}

json record_to_json(const FamilyRecord& r)
{
    json j;
    j["id"] = r.id;
    if (r.triple)
        j["triple"] = {r.triple->d1, r.triple->d2, r.triple->d3};
    if (r.degree)
        j["degree"] = *r.degree;
    if (r.branch)
        j["branch"] = *r.branch;
    if (!r.alternate_branches.empty()) {
        json alts = json::array();
        for (const auto& a : r.alternate_branches)
            alts.push_back({{"text", a.text}, {"note", a.note}});
        j["alternate_branches"] = alts;
    }
    if (r.p3_type)
        j["p3_type"] = lower(std::string(to_string(*r.p3_type)));
    if (r.line_component)
        j["line_component"] = *r.line_component;
    if (!r.singular_locus.empty()) {
        json locus = json::array();
        for (const auto& d : r.singular_locus)
            locus.push_back(to_string(d));
        j["singular_locus"] = locus;
    }
    if (!r.asserted.flags.empty()) {
        json asserted = json::array();
        for (const auto& [h, note] : r.asserted.flags)
            asserted.push_back({{"hypothesis", std::string(to_string(h))}, {"note", note}});
        j["asserted"] = asserted;
    }
    if (r.polystable) {
        const auto& w = r.polystable->futaki_valuation;
        j["polystable"] = {{"futaki_valuation", {w[0], w[1], w[2]}},
                           {"quotient", {r.polystable->quotient.first, r.polystable->quotient.second}}};
    }
    json prov = json::object();
    for (const auto& [field, p] : r.provenance)
        prov[field] = {{"tag", p.tag}, {"note", p.note}};
    j["provenance"] = prov;
    return j;
}

FamilyRecord record_from_json(const json& j)
{
    if (!j.is_object())
        throw SchemaError("", "record", "must be an object");
    FamilyRecord r;
    r.id = get_field<std::string>(j, "", "id");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "id" && it.key() != "provenance" && !kKnownFields.count(it.key()))
            throw SchemaError(r.id, it.key(), "unknown field");
    try {
        if (j.contains("triple")) {
            const auto v = get_field<std::vector<int>>(j, r.id, "triple");
            if (v.size() != 3)
                throw SchemaError(r.id, "triple", "must have three entries");
            r.triple = ScrollTriple{v[0], v[1], v[2]};
        }
        if (j.contains("degree"))
            r.degree = get_field<int>(j, r.id, "degree");
        if (j.contains("branch"))
            r.branch = get_field<std::string>(j, r.id, "branch");
        if (j.contains("alternate_branches"))
            for (const auto& a : j.at("alternate_branches"))
                r.alternate_branches.push_back({a.at("text").get<std::string>(), a.value("note", std::string{})});
        if (j.contains("p3_type"))
            r.p3_type = parse_singularity(get_field<std::string>(j, r.id, "p3_type"));
        if (j.contains("line_component"))
            r.line_component = get_field<int>(j, r.id, "line_component");
        if (j.contains("singular_locus"))
            for (const auto& d : j.at("singular_locus"))
                r.singular_locus.push_back(DuValType::parse(d.get<std::string>()));
        if (j.contains("asserted"))
            for (const auto& a : j.at("asserted"))
                r.asserted.add(parse_hypothesis(a.at("hypothesis").get<std::string>()), a.value("note", std::string{}));
        if (j.contains("polystable")) {
            const auto& p = j.at("polystable");
            const auto w = p.at("futaki_valuation").get<std::vector<std::int64_t>>();
            const auto q = p.at("quotient").get<std::vector<std::string>>();
            if (w.size() != 3 || q.size() != 2)
                throw SchemaError(r.id, "polystable", "futaki_valuation needs 3 entries and quotient 2");
            r.polystable = PolystableData{{w[0], w[1], w[2]}, {q[0], q[1]}};
        }
        if (j.contains("provenance"))
            for (auto it = j.at("provenance").begin(); it != j.at("provenance").end(); ++it)
                r.provenance[it.key()] = {it.value().at("tag").get<std::string>(),
                                          it.value().value("note", std::string{})};
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception& e) {
        throw SchemaError(r.id, "record", e.what());
    }
    validate(r);
    return r;
}

json registry_to_json(const Registry& reg)
{
    json records = json::array();
    for (const auto& [id, r] : reg.records)
        records.push_back(record_to_json(r));
    return {{"version", reg.version}, {"records", records}};
}

Registry registry_from_json(const json& j)
{
    Registry reg;
    if (!j.is_object() || !j.contains("records") || !j.at("records").is_array())
        throw SchemaError("", "records", "top level must be {version, records: [...]}");
    reg.version = get_field<int>(j, "", "version");
    for (const auto& rj : j.at("records"))
        add_record(reg, record_from_json(rj));
    return reg;
}

std::string canonical_text(const Registry& reg)
{
    return registry_to_json(reg).dump(2) + "\n";
}

Registry load_registry(const std::filesystem::path& path)
{
    json j;
    try {
        j = json::parse(read_text(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("", "document", e.what());
    }
    return registry_from_json(j);
}

void save_registry(Registry& reg, const std::filesystem::path& path)
{
    ++reg.version;
    const std::string text = canonical_text(reg);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot write '" + tmp.string() + "'");
        out << text;
        if (!out.flush())
            throw Error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

void add_record(Registry& reg, FamilyRecord record)
{
    validate(record);
    if (reg.records.count(record.id))
        throw SchemaError(record.id, "id", "duplicate id");
    const std::string id = record.id;
    reg.records.emplace(id, std::move(record));
}

namespace {

FamilyRecord stub(int n)
{
    FamilyRecord r;
    r.id = "H" + std::to_string(n);
    return r;
}

void assert_stable_hypotheses(FamilyRecord& r)
{
    r.asserted.add(Hypothesis::ReductiveGroupActsWithoutFixedPointOnBase,
                   "reductive subgroup of Aut(X) acting on P^1 without fixed points, checked by hand for " + r.id);
    r.asserted.add(Hypothesis::BranchClassificationSupplied, "local type of S|F0 at p3 supplied by hand");
    r.asserted.add(Hypothesis::FiniteAutomorphisms, "Aut(X) finite for a general member of " + r.id);
    r.provenance["asserted"] = {"paper", "Proposition marseille: group G and finiteness of Aut(X)"};
}

FamilyRecord scroll_family(const std::string& id, ScrollTriple t, FieldProvenance triple_prov)
{
    FamilyRecord r;
    r.id = id;
    r.triple = t;
    r.degree = 2 * t.sum();
    r.provenance["triple"] = std::move(triple_prov);
    r.provenance["degree"] = {"derived", "(-K_X)^3 = 2(d1+d2+d3)"};
    return r;
}

}  // namespace

Registry default_registry()
{
    Registry reg;
    for (int n = 1; n <= 3; ++n)
        add_record(reg, stub(n));

    {
        auto r = scroll_family("H5", {2, 1, 0}, {"paper", "Example H5: d1=2, d2=1, d3=0"});
        r.branch = "(t1^6+t2^6)*x1^4 + x1*x3^3 + t1*t2*x2^4 + x2^2*x3^2";
        r.provenance["branch"] = {"paper", "Proposition marseille, H5 equation"};
        r.p3_type = SingularityKind::Smooth;
        r.provenance["p3_type"] = {"paper", "Proposition marseille: p3 is a smooth point for H5"};
        assert_stable_hypotheses(r);
        add_record(reg, std::move(r));
    }
    {
        auto r = scroll_family("H7", {2, 2, 0}, {"paper", "Example H7: d1=2, d2=2, d3=0"});
        r.branch = "(t1^4+t2^4)*x1^4 + t1^2*t2^2*x2^4 + x1^2*x3^2 + x2^2*x3^2";
        r.provenance["branch"] = {"paper", "Proposition marseille, H7 equation"};
        r.alternate_branches.push_back(
            {"(t1^4+t2^4)*x1^4 + t1^2*t2^2*x2^4 + x1*x2*x3^2", "Example H7 equation; not used for verdicts"});
        r.provenance["alternate_branches"] = {"paper", "Example H7 equation"};
        r.p3_type = SingularityKind::Node;
        r.provenance["p3_type"] = {"paper", "Proposition marseille: p3 is a node for H7, H8, H11"};
        assert_stable_hypotheses(r);
        add_record(reg, std::move(r));
    }
    {
        auto r = scroll_family("H8", {2, 2, 1}, {"derived", "infer_triple on the H8 equation; S(F0) = 17/20"});
        r.branch = "(t1^2+t2^2)*x1^4 + t1*t2*x2^4 + x1^2*x3^2 + x2^2*x3^2";
        r.provenance["branch"] = {"paper", "Proposition marseille, H8 equation"};
        r.p3_type = SingularityKind::Node;
        r.provenance["p3_type"] = {"paper", "Proposition marseille: p3 is a node for H7, H8, H11"};
        assert_stable_hypotheses(r);
        add_record(reg, std::move(r));
    }
    {
        auto r = scroll_family("H10", {3, 0, 0},
                               {"derived", "infer_triple on the H10 equation with degree 6; constants 1/4, 3/4, 5/2"});
        r.degree = 6;
        r.provenance["degree"] = {"derived", "degree 10 hypersurface in P(1,1,3,3,5): 10*27/45 = 6"};
        r.branch = "x1*(t1*x2^3 + t2*x3^3)";
        r.provenance["branch"] = {"paper", "Proposition 10-17: S = {x1(t1x2^3+t2x3^3)=0}"};
        r.polystable = PolystableData{{0, 1, -3}, {"t1*x2^3", "t2*x3^3"}};
        r.provenance["polystable"] = {"derived", "valuation e2+3u2 and the torus quotient (t1x2^3 : t2x3^3)"};
        r.asserted.add(Hypothesis::ReductiveGroupActsWithoutFixedPointOnBase, "two-torus plus swap of t1, t2");
        r.provenance["asserted"] = {"paper", "Proposition 10-17: two-dimensional torus action"};
        add_record(reg, std::move(r));
    }
    {
        auto r = scroll_family("H11", {3, 1, 0}, {"derived", "infer_triple on the corrected H11 equation"});
        r.branch = "(t1^8+t2^8)*x1^4 + t1*t2*x1^2*x3^2 + x1*x2*x3^2 + x2^4";
        r.provenance["branch"] = {"paper", "Proposition marseille, H11 equation, x1 exponent corrected to 2"};
        r.p3_type = SingularityKind::Node;
        r.provenance["p3_type"] = {"paper", "Proposition marseille: p3 is a node for H7, H8, H11"};
        assert_stable_hypotheses(r);
        add_record(reg, std::move(r));
    }
    {
        auto r = scroll_family("H12", {3, 1, 1}, {"derived", "infer_triple on the H12 equation; S(F0) = 9/10"});
        r.branch = "x1*((t1^6+t2^6)*x1^3 + x2^3 + x3^3)";
        r.provenance["branch"] = {"paper", "Proposition marseille, H12 equation"};
        r.line_component = 1;
        r.provenance["line_component"] = {"paper", "Proposition marseille: the line {x1=0} is a component of S|F0"};
        assert_stable_hypotheses(r);
        add_record(reg, std::move(r));
    }
    {
        auto r = scroll_family("H13", {3, 2, 0}, {"derived", "infer_triple on the H13 equation"});
        r.branch = "(t1^6+t2^6)*x1^4 + x1^2*x3^2 + t1*t2*x2^4 + x2^3*x3";
        r.provenance["branch"] = {"paper", "Proposition marseille, H13 equation"};
        r.p3_type = SingularityKind::Cusp;
        r.provenance["p3_type"] = {"paper", "Proposition marseille: p3 is a simple cusp for H13"};
        assert_stable_hypotheses(r);
        add_record(reg, std::move(r));
    }
    add_record(reg, scroll_family("H14", {3, 2, 1}, {"derived", "fiber integral 25/24 is reproduced on (3,2,1)"}));
    {
        auto r = scroll_family("H17", {4, 0, 0}, {"paper", "Proposition 10-17 proof: d1=4, d2=0, d3=0"});
        r.branch = "x1*(x2^3 + x3^3)";
        r.provenance["branch"] = {"paper", "Proposition 10-17: S = {x1(x2^3+x3^3)=0}"};
        r.polystable = PolystableData{{4, 0, 1}, {"x2", "x3"}};
        r.provenance["polystable"] = {"derived", "valuation u1 (fiber F1) and the torus quotient (x2 : x3)"};
        r.asserted.add(Hypothesis::ReductiveGroupActsWithoutFixedPointOnBase, "two-torus plus SL2 on the base");
        r.provenance["asserted"] = {"paper", "Proposition 10-17: two-dimensional torus action"};
        add_record(reg, std::move(r));
    }
    return reg;
}

}  // namespace kscroll
