// kscroll: exact K-stability invariants of hyperelliptic Fano 3-folds over scrolls.
// Exit status: 0 success, 1 computation error, 2 usage error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kscroll/branch.hpp"
#include "kscroll/errors.hpp"
#include "kscroll/flags.hpp"
#include "kscroll/registry.hpp"
#include "kscroll/reproduce.hpp"
#include "kscroll/serialize.hpp"
#include "kscroll/sweep.hpp"
#include "kscroll/verdict.hpp"

using namespace kscroll;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string registry_path;
    bool json = false;
    int decimal = -1;
};

std::vector<long> int_list(const std::string& text, std::size_t count, const char* what)
{
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size())
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + " expects " + std::to_string(count) + " comma-separated integers");
        }
    }
    if (out.size() != count)
        throw UsageError(std::string(what) + " expects " + std::to_string(count) + " comma-separated integers");
    return out;
}

ScrollTriple triple_arg(const std::string& text)
{
    const auto v = int_list(text, 3, "--triple");
    try {
        return ScrollTriple::make(static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]));
    } catch (const InvalidTriple& e) {
        throw UsageError(e.what());
    }
}

IVec3 vector_arg(const std::string& text, const char* what)
{
    const auto v = int_list(text, 3, what);
    return {v[0], v[1], v[2]};
}

Registry open_registry(const Globals& g)
{
    return g.registry_path.empty() ? default_registry() : load_registry(g.registry_path);
}

void emit_value(const Globals& g, json doc, const Rational& value)
{
    doc["value"] = to_string(value);
    if (g.decimal >= 0)
        doc["decimal"] = to_decimal(value, g.decimal);
    if (g.json) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::cout << to_string(value);
    if (g.decimal >= 0)
        std::cout << "  (" << to_decimal(value, g.decimal) << ")";
    std::cout << "\n";
}

void print_verdict(const Globals& g, const std::string& id, const Verdict& v)
{
    if (g.json) {
        json doc{{"id", id}};
        doc.update(verdict_to_json(v));
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::cout << id << ": " << to_string(v.status);
    for (std::size_t i = 0; i < v.reasons.size(); ++i)
        std::cout << (i == 0 ? " (" : ", ") << to_string(v.reasons[i]) << (i + 1 == v.reasons.size() ? ")" : "");
    std::cout << "\n";
    for (const auto& c : v.certificate)
        std::cout << "  " << c.name << ": " << to_string(c.value) << " " << to_string(c.relation) << " "
                  << to_string(c.bound) << "   [" << c.provenance << "]\n";
    for (const auto& [h, note] : v.asserted.flags)
        std::cout << "  asserted " << to_string(h) << (note.empty() ? "" : ": " + note) << "\n";
    for (const auto& n : v.notes)
        std::cout << "  note: " << n << "\n";
}

void print_record(const FamilyRecord& r)
{
    std::cout << r.id;
    if (r.triple)
        std::cout << "  " << to_string(*r.triple);
    if (r.degree)
        std::cout << "  degree " << *r.degree;
    if (r.branch)
        std::cout << "  S: " << *r.branch;
    std::cout << "\n";
}

int run(int argc, char** argv)
{
    CLI::App app{"Exact K-stability invariants of hyperelliptic Fano 3-folds"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--registry", g.registry_path, "registry JSON file (default: built-in registry)");
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--decimal", g.decimal, "also print a k-digit decimal rendering")->check(CLI::Range(0, 60));

    // svalue
    auto* svalue = app.add_subcommand("svalue", "S(M; E) for a torus-invariant divisor or toric valuation");
    std::string sv_triple, sv_divisor, sv_valuation;
    svalue->add_option("--triple", sv_triple, "d1,d2,d3")->required();
    auto* sv_div = svalue->add_option("--divisor", sv_divisor, "D1|D2|D3|F1|F2");
    auto* sv_val = svalue->add_option("--valuation", sv_valuation, "integer vector a,b,c");
    sv_div->excludes(sv_val);
    svalue->callback([&] {
        const ScrollTriple t = triple_arg(sv_triple);
        json doc{{"triple", {t.d1, t.d2, t.d3}}};
        Rational s;
        if (!sv_divisor.empty()) {
            RayName r;
            try {
                r = parse_ray(sv_divisor);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            doc["divisor"] = std::string(divisor_label(r));
            s = s_toric_valuation(t, tautological(), ToricValuation::of_ray(t, r));
        } else if (!sv_valuation.empty()) {
            const IVec3 w = vector_arg(sv_valuation, "--valuation");
            doc["valuation"] = {w[0], w[1], w[2]};
            s = s_toric_vector(t, tautological(), w);
        } else {
            throw UsageError("svalue needs --divisor or --valuation");
        }
        emit_value(g, doc, s);
    });

    // flag
    auto* flag = app.add_subcommand("flag", "S-values along torus-invariant flags of a fiber");
    flag->require_subcommand(1);
    std::string fl_triple;
    bool fl_point = false;
    flag->add_option("--triple", fl_triple, "d1,d2,d3")->required();
    flag->add_flag("--point-bound", fl_point, "bound at the terminal point instead of the curve value");
    auto* fl_line = flag->add_subcommand("line", "the line {x_i1 = 0}");
    int i1 = 0;
    fl_line->add_option("--i1", i1, "line index")->required()->check(CLI::Range(1, 3));
    auto* fl_blowup = flag->add_subcommand("blowup", "weighted blowup of {x1 = x2 = 0}");
    std::string weights;
    fl_blowup->add_option("--weights", weights, "a1,a2")->required();
    flag->callback([&] {
        const ScrollTriple t = triple_arg(fl_triple);
        json doc{{"triple", {t.d1, t.d2, t.d3}}, {"point_bound", fl_point}};
        Rational s;
        if (fl_line->parsed()) {
            doc["line"] = i1;
            s = fl_point ? s_line_point_bound(t, i1) : s_line(t, i1);
        } else {
            const auto w = int_list(weights, 2, "--weights");
            const int a1 = static_cast<int>(w[0]), a2 = static_cast<int>(w[1]);
            doc["weights"] = {a1, a2};
            try {
                s = fl_point ? s_blowup_point_bound(t, a1, a2) : s_blowup(t, a1, a2);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        emit_value(g, doc, s);
    });

    // avalue
    auto* avalue = app.add_subcommand("avalue", "log discrepancy of (F, S/2) along a toric valuation");
    std::string av_triple, av_branch, av_valuation;
    avalue->add_option("--triple", av_triple, "d1,d2,d3")->required();
    avalue->add_option("--branch", av_branch, "branch polynomial")->required();
    avalue->add_option("--valuation", av_valuation, "primitive integer vector a,b,c")->required();
    avalue->callback([&] {
        const ScrollTriple t = triple_arg(av_triple);
        const IVec3 w = vector_arg(av_valuation, "--valuation");
        const BranchPoly p = parse(av_branch);
        const PairLogDiscrepancy a = pair_log_discrepancy(ToricValuation::make(t, w), p);
        emit_value(g,
                   json{{"triple", {t.d1, t.d2, t.d3}},
                        {"valuation", {w[0], w[1], w[2]}},
                        {"ambient_a", to_string(a.ambient_a)},
                        {"branch_ord", to_string(a.branch_ord)}},
                   a.value);
    });

    // verdict
    auto* verdict = app.add_subcommand("verdict", "instability tests and certification");
    std::string vd_family, vd_triple, vd_branch, vd_p3;
    std::optional<int> vd_line, vd_degree;
    std::vector<std::string> vd_assert, vd_locus;
    bool vd_all = false;
    auto* opt_family = verdict->add_option("--family", vd_family, "registry id");
    auto* opt_triple = verdict->add_option("--triple", vd_triple, "d1,d2,d3");
    auto* opt_all = verdict->add_flag("--all", vd_all, "every registry record, in id order");
    opt_family->excludes(opt_triple)->excludes(opt_all);
    opt_triple->excludes(opt_all);
    verdict->add_option("--branch", vd_branch, "branch polynomial")->needs(opt_triple);
    verdict->add_option("--p3", vd_p3, "smooth|node|cusp")->needs(opt_triple);
    verdict->add_option("--line", vd_line, "index i with x_i dividing the branch")->needs(opt_triple);
    verdict->add_option("--degree", vd_degree, "(-K_X)^3")->needs(opt_triple);
    verdict->add_option("--singular-locus", vd_locus, "Du Val types, e.g. A7 E8")->needs(opt_triple);
    verdict->add_option("--assert", vd_assert, "asserted hypotheses")->needs(opt_triple);
    verdict->callback([&] {
        if (vd_all) {
            const auto rows = batch_verdict(open_registry(g));
            json table = json::array();
            for (const auto& row : rows) {
                if (g.json) {
                    json doc{{"id", row.id}};
                    if (row.verdict)
                        doc.update(verdict_to_json(*row.verdict));
                    else
                        doc["error"] = row.error;
                    table.push_back(doc);
                } else if (row.verdict) {
                    std::cout << row.id << "\t" << to_string(row.verdict->status);
                    for (auto r : row.verdict->reasons)
                        std::cout << " " << to_string(r);
                    std::cout << "\n";
                } else {
                    std::cout << row.id << "\terror: " << row.error << "\n";
                }
            }
            if (g.json)
                std::cout << table.dump(2) << "\n";
            return;
        }
        FamilyRecord record;
        if (!vd_family.empty()) {
            const Registry reg = open_registry(g);
            auto it = reg.records.find(vd_family);
            if (it == reg.records.end())
                throw UsageError("no family '" + vd_family + "' in the registry");
            record = it->second;
        } else if (!vd_triple.empty()) {
            record.id = "input";
            record.triple = triple_arg(vd_triple);
            record.degree = vd_degree;
            if (!vd_branch.empty())
                record.branch = vd_branch;
            try {
                if (!vd_p3.empty())
                    record.p3_type = parse_singularity(vd_p3);
                for (const auto& d : vd_locus)
                    record.singular_locus.push_back(DuValType::parse(d));
                for (const auto& h : vd_assert)
                    record.asserted.add(parse_hypothesis(h), "asserted on the command line");
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            record.line_component = vd_line;
        } else {
            throw UsageError("verdict needs --family, --triple or --all");
        }
        print_verdict(g, record.id, full_verdict(record));
    });

    // family
    auto* family = app.add_subcommand("family", "registry inspection and editing");
    family->require_subcommand(1);
    auto* fam_list = family->add_subcommand("list", "all records");
    auto* fam_show = family->add_subcommand("show", "one record");
    std::string show_id;
    fam_show->add_option("id", show_id)->required();
    auto* fam_add = family->add_subcommand("add", "validate a JSON record and add it to --registry");
    std::string add_text;
    fam_add->add_option("record", add_text, "record as JSON")->required();
    auto* fam_infer = family->add_subcommand("infer-triple", "scroll triples compatible with a branch polynomial");
    std::string infer_branch;
    std::optional<int> infer_degree;
    fam_infer->add_option("--branch", infer_branch)->required();
    fam_infer->add_option("--degree", infer_degree, "(-K_X)^3, narrows to d1+d2+d3 = degree/2");
    family->callback([&] {
        if (fam_list->parsed()) {
            const Registry reg = open_registry(g);
            if (g.json) {
                std::cout << registry_to_json(reg).dump(2) << "\n";
                return;
            }
            for (const auto& [id, r] : reg.records)
                print_record(r);
        } else if (fam_show->parsed()) {
            const Registry reg = open_registry(g);
            auto it = reg.records.find(show_id);
            if (it == reg.records.end())
                throw UsageError("no family '" + show_id + "' in the registry");
            std::cout << record_to_json(it->second).dump(2) << "\n";
        } else if (fam_add->parsed()) {
            if (g.registry_path.empty())
                throw UsageError("family add needs --registry");
            json j;
            try {
                j = json::parse(add_text);
            } catch (const nlohmann::json::parse_error& e) {
                throw UsageError(e.what());
            }
            Registry reg = load_registry(g.registry_path);
            add_record(reg, record_from_json(j));
            save_registry(reg, g.registry_path);
            std::cout << "added " << j.value("id", std::string{}) << " (version " << reg.version << ")\n";
        } else {
            const BranchPoly p = parse(infer_branch);
            const auto found = infer_triple(observations(p), infer_degree);
            if (g.json) {
                json out = json::array();
                for (const auto& t : found)
                    out.push_back({t.d1, t.d2, t.d3});
                std::cout << out.dump() << "\n";
                return;
            }
            for (const auto& t : found)
                std::cout << to_string(t) << "\n";
        }
    });

    // reproduce
    auto* repro = app.add_subcommand("reproduce", "recompute the reference constants and tables");
    std::string repro_name;
    int dmax = 8;
    repro->add_option("name", repro_name)->required()->check(CLI::IsMember(reproduction_names()));
    repro->add_option("--dmax", dmax, "largest d1 for lemma-toric")->check(CLI::Range(1, 30));
    int exit_code = 0;
    repro->callback([&] {
        const Report rep = reproduce(repro_name, dmax);
        if (g.json) {
            std::cout << report_to_json(rep).dump(2) << "\n";
        } else {
            for (const auto& r : rep.rows)
                std::cout << (r.ok ? "ok   " : "FAIL ") << r.label << ": " << r.computed << " (expected "
                          << r.expected << ")\n";
            std::cout << rep.name << ": " << (rep.ok() ? "all rows agree" : "mismatch") << "\n";
        }
        if (!rep.ok())
            exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
