#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kscroll/errors.hpp"
#include "kscroll/registry.hpp"

using namespace kscroll;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FamilyRecord h99()
{
    FamilyRecord r;
    r.id = "H99";
    r.triple = ScrollTriple{2, 1, 0};
    r.degree = 6;
    r.provenance["triple"] = {"user", "test"};
    r.provenance["degree"] = {"derived", "2(d1+d2+d3)"};
    return r;
}

fs::path scratch_dir()
{
    const fs::path dir = fs::temp_directory_path() / ("kscroll_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("ids sort naturally")
{
    FamilyIdLess less;
    CHECK(less("H2", "H10"));
    CHECK_FALSE(less("H10", "H2"));
    CHECK(less("H17", "T1_0_0"));
}

TEST_CASE("the default registry")
{
    const Registry reg = default_registry();
    for (const char* id : {"H1", "H5", "H7", "H10", "H14", "H17"})
        CHECK(reg.records.count(id) == 1);
    CHECK(reg.records.begin()->first == "H1");
    CHECK(reg.records.at("H7").alternate_branches.size() == 1);
    CHECK(reg.records.at("H14").provenance.at("triple").tag == "derived");
    for (const auto& [id, r] : reg.records)
        CHECK_NOTHROW(validate(r));
}

TEST_CASE("JSON round trip is canonical")
{
    const Registry reg = default_registry();
    const Registry back = registry_from_json(nlohmann::ordered_json::parse(canonical_text(reg)));
    CHECK(back == reg);
    CHECK(canonical_text(back) == canonical_text(reg));
}

TEST_CASE("save bumps the version and reloads equal")
{
    const fs::path dir = scratch_dir();
    const fs::path file = dir / "registry.json";
    Registry reg = default_registry();
    const int v0 = reg.version;
    save_registry(reg, file);
    CHECK(reg.version == v0 + 1);
    CHECK_FALSE(fs::exists(dir / "registry.json.tmp"));
    const Registry loaded = load_registry(file);
    CHECK(loaded == reg);
    add_record(reg, h99());
    save_registry(reg, file);
    CHECK(load_registry(file).version == v0 + 2);
    CHECK(load_registry(file).records.count("H99") == 1);
    fs::remove_all(dir);
}

TEST_CASE("schema violations")
{
    Registry reg = default_registry();
    auto bad_degree = h99();
    bad_degree.degree = 7;
    CHECK_THROWS_AS(add_record(reg, bad_degree), SchemaError);

    auto wrong_sum = h99();
    wrong_sum.degree = 8;
    CHECK_THROWS_AS(validate(wrong_sum), SchemaError);

    auto no_prov = h99();
    no_prov.provenance.erase("degree");
    CHECK_THROWS_AS(validate(no_prov), SchemaError);

    auto bad_tag = h99();
    bad_tag.provenance["degree"].tag = "folklore";
    CHECK_THROWS_AS(validate(bad_tag), SchemaError);

    auto branch = h99();
    branch.branch = "x1*(x2^3 + x3^3)";
    branch.provenance["branch"] = {"user", "test"};
    CHECK_THROWS_AS(validate(branch), SchemaError);

    auto line = h99();
    line.line_component = 4;
    line.provenance["line_component"] = {"user", "test"};
    CHECK_THROWS_AS(validate(line), SchemaError);

    CHECK_NOTHROW(validate(reg.records.at("H10")));
    CHECK_THROWS_AS(add_record(reg, reg.records.at("H10")), SchemaError);

    auto j = record_to_json(h99());
    j["colour"] = "blue";
    CHECK_THROWS_AS(record_from_json(j), SchemaError);
}

TEST_CASE("the shipped data file is the canonical default registry")
{
    const fs::path file = fs::path(KSCROLL_DATA_DIR) / "registry.json";
    REQUIRE(fs::exists(file));
    const Registry loaded = load_registry(file);
    CHECK(slurp(file) == canonical_text(loaded));
    CHECK(loaded.records == default_registry().records);
}
