#include <doctest.h>

#include "kscroll/sweep.hpp"

using namespace kscroll;

namespace {

Registry padded()
{
    Registry reg = default_registry();
    for (const auto& t : triples_up_to(6)) {
        FamilyRecord r;
        r.id = "T" + std::to_string(t.d1) + "_" + std::to_string(t.d2) + "_" + std::to_string(t.d3);
        r.triple = t;
        r.degree = 2 * t.sum();
        r.provenance["triple"] = {"user", "sweep"};
        r.provenance["degree"] = {"derived", "2(d1+d2+d3)"};
        add_record(reg, r);
    }
    return reg;
}

}  // namespace

TEST_CASE("triples_up_to")
{
    CHECK(triples_up_to(1).size() == 3);
    CHECK(triples_up_to(8).size() == 164);
    const auto ts = triples_up_to(4);
    CHECK(std::is_sorted(ts.begin(), ts.end(), [](const ScrollTriple& a, const ScrollTriple& b) {
        return std::tie(a.d1, a.d2, a.d3) < std::tie(b.d1, b.d2, b.d3);
    }));
}

TEST_CASE("closed-form sweep: parallel agrees with serial")
{
    const auto ts = triples_up_to(7);
    const auto serial = closed_form_sweep(ts, Execution::Serial);
    const auto parallel = closed_form_sweep(ts, Execution::Parallel);
    CHECK(serial == parallel);
    CHECK(closed_form_sweep(ts, Execution::Parallel) == parallel);
    CHECK(serial.size() == 5 * ts.size());
    for (const auto& row : serial)
        CHECK(row.equal());
}

TEST_CASE("batch verdict: parallel agrees with serial")
{
    const Registry reg = padded();
    const auto serial = batch_verdict(reg, Execution::Serial);
    const auto parallel = batch_verdict(reg, Execution::Parallel);
    REQUIRE(serial.size() == reg.records.size());
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CAPTURE(serial[i].id);
        CHECK(serial[i].id == parallel[i].id);
        CHECK(serial[i].error == parallel[i].error);
        CHECK(serial[i].verdict == parallel[i].verdict);
        CHECK(serial[i].error.empty());
    }
}
