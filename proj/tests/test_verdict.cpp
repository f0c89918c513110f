#include <doctest.h>

#include <random>

#include "kscroll/errors.hpp"
#include "kscroll/registry.hpp"
#include "kscroll/sweep.hpp"
#include "kscroll/verdict.hpp"

#include "random_inputs.hpp"

using namespace kscroll;

namespace {

AssertedHypotheses both()
{
    AssertedHypotheses a;
    a.add(Hypothesis::ReductiveGroupActsWithoutFixedPointOnBase, "test");
    a.add(Hypothesis::FiniteAutomorphisms, "test");
    return a;
}

const char* kH5 = "(t1^6+t2^6)*x1^4 + x1*x3^3 + t1*t2*x2^4 + x2^2*x3^2";
const char* kH13 = "(t1^6+t2^6)*x1^4 + x1^2*x3^2 + t1*t2*x2^4 + x2^3*x3";
const char* kH10 = "x1*(t1*x2^3 + t2*x3^3)";

}  // namespace

TEST_CASE("toric instability")
{
    CHECK_FALSE(check_toric_instability(ScrollTriple{2, 1, 0}));
    CHECK_FALSE(check_toric_instability(ScrollTriple{4, 0, 0}));
    const auto v = check_toric_instability(ScrollTriple{3, 3, 1});
    REQUIRE(v);
    CHECK(v->status == Status::KUnstable);
    CHECK(v->has_reason(InstabilityReason::ToricFiber));
    CHECK(v->certificate.front().value == rat(34, 28));
    CHECK(v->revalidate());

    // every d1 >= 5, d2 >= 3 triple fires
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
        const int d1 = testing::uniform(rng, 5, 12);
        const int d2 = testing::uniform(rng, 3, d1);
        CHECK(check_toric_instability(ScrollTriple::make(d1, d2, testing::uniform(rng, 0, d2))));
    }
}

TEST_CASE("alpha instability")
{
    CHECK(check_alpha_instability(ScrollTriple{5, 0, 0}));
    CHECK(check_alpha_instability(ScrollTriple{6, 2, 1}));
    CHECK_FALSE(check_alpha_instability(ScrollTriple{4, 0, 0}));
}

TEST_CASE("Du Val orders and the volume test")
{
    CHECK(duval_group_order(DuValType::make(DuValType::Kind::A, 1)) == 2);
    CHECK(duval_group_order(DuValType::parse("D5")) == 12);
    CHECK(duval_group_order(DuValType::parse("E8")) == 120);
    CHECK(Rational(27, duval_group_order(DuValType::parse("E6"))) == rat(9, 8));
    CHECK_THROWS(DuValType::parse("D3"));
    CHECK_THROWS(DuValType::parse("E9"));
    CHECK(to_string(DuValType::parse("a7")) == "A7");

    std::vector<DuValType> chain;
    for (int n = 1; n <= 8; ++n)
        chain.push_back(DuValType::make(DuValType::Kind::A, n));
    chain.push_back(DuValType::parse("E6"));
    chain.push_back(DuValType::parse("E7"));
    chain.push_back(DuValType::parse("E8"));
    for (std::size_t i = 1; i < chain.size(); ++i)
        CHECK(Rational(64, duval_group_order(chain[i])) < Rational(64, duval_group_order(chain[i - 1])));

    CHECK_FALSE(check_volume_instability(8, {DuValType::parse("A7")}));
    CHECK(check_volume_instability(10, {DuValType::parse("A7")}));
    CHECK(check_volume_instability(6, {DuValType::parse("E8")}));
    CHECK_FALSE(check_volume_instability(4, {DuValType::parse("A1")}));
    CHECK_FALSE(check_volume_instability(4, {}));
}

TEST_CASE("divisibility obstruction")
{
    CHECK(check_divisibility_obstruction(ScrollTriple{4, 1, 1}));
    CHECK_FALSE(check_divisibility_obstruction(ScrollTriple{4, 0, 0}));
    CHECK_FALSE(check_divisibility_obstruction(ScrollTriple{3, 1, 1}));
    CHECK_FALSE(check_divisibility_obstruction(ScrollTriple{4, 1, 1}, 4));
}

TEST_CASE("fiber beta")
{
    const auto v = check_fiber_beta(ScrollTriple{3, 2, 1});
    REQUIRE(v);
    CHECK(v->find("S_X(F) lower bound")->value == rat(25, 24));
    CHECK_FALSE(check_fiber_beta(ScrollTriple{2, 1, 0}));
    CHECK_FALSE(check_fiber_beta(ScrollTriple{1, 1, 1}));
}

TEST_CASE("certify_stable on H5, H13 and H12")
{
    const auto h5 = certify_stable(ScrollTriple{2, 1, 0}, parse(kH5), SingularityKind::Smooth, std::nullopt, both());
    CHECK(h5.status == Status::KStableCertified);
    CHECK(h5.revalidate());
    CHECK(h5.find("p3 (smooth) | A/S(F0 > E(1,1))")->value == 2);
    CHECK(h5.find("p3 (smooth) | A/S(F0 > E(1,1) > q)")->value == rat(6, 5));
    CHECK(h5.find("general point | A/S(F0)")->value == rat(12, 7));

    const auto h13 = certify_stable(ScrollTriple{3, 2, 0}, parse(kH13), SingularityKind::Cusp, std::nullopt, both());
    CHECK(h13.status == Status::KStableCertified);
    CHECK(h13.find("p3 (cusp) | A/S(F0 > E(3,2))")->value == rat(20, 19));
    CHECK(h13.find("p3 (cusp) | A/S(F0 > E(3,2) > q)")->value == rat(5, 3));

    const auto h12 =
        certify_stable(ScrollTriple{3, 1, 1}, parse("x1*((t1^6+t2^6)*x1^3 + x2^3 + x3^3)"), std::nullopt, 1, both());
    CHECK(h12.status == Status::KStableCertified);
    CHECK(h12.find("point on l1 | A/S(F0 > l1)")->value == rat(5, 4));
}

TEST_CASE("certify_stable never certifies without its hypotheses or data")
{
    const auto t = ScrollTriple::make(2, 1, 0);
    const BranchPoly p = parse(kH5);
    AssertedHypotheses one;
    one.add(Hypothesis::FiniteAutomorphisms, "test");
    const auto missing = certify_stable(t, p, SingularityKind::Smooth, std::nullopt, one);
    CHECK(missing.status == Status::Inconclusive);
    CHECK(missing.revalidate());
    CHECK(std::any_of(missing.notes.begin(), missing.notes.end(), [](const std::string& n) {
        return n.find("ReductiveGroupActsWithoutFixedPointOnBase") != std::string::npos;
    }));
    CHECK(certify_stable(t, p, std::nullopt, std::nullopt, both()).status == Status::Inconclusive);
    CHECK(certify_stable(t, p, SingularityKind::Explicit, std::nullopt, both()).status == Status::Inconclusive);
    CHECK_THROWS_AS(certify_stable(t, p, std::nullopt, 2, both()), PreconditionFailed);
    CHECK_THROWS_AS(certify_stable(ScrollTriple{2, 2, 0}, p, SingularityKind::Smooth, std::nullopt, both()),
                    PreconditionFailed);
    // H14 is unstable, so the certifier refuses
    const auto h14 = certify_stable(ScrollTriple{3, 2, 1}, parse("t1^4*x1^4 + x2^4 + t1*x1*x2^3"),
                                    SingularityKind::Smooth, std::nullopt, both());
    CHECK(h14.status == Status::Inconclusive);
}

TEST_CASE("certify_stable is monotone in A-values")
{
    const auto t = ScrollTriple::make(2, 2, 0);
    auto classes = stable_point_classes(t, parse("(t1^4+t2^4)*x1^4 + t1^2*t2^2*x2^4 + x1^2*x3^2 + x2^2*x3^2"),
                                        SingularityKind::Node, std::nullopt);
    REQUIRE(certify_from_point_classes(classes, both()).status == Status::KStableCertified);
    for (auto& c : classes)
        for (auto& e : c.entries) {
            const Rational saved = e.a;
            e.a += rat(1, 3);
            CHECK(certify_from_point_classes(classes, both()).status == Status::KStableCertified);
            e.a = saved;
        }
    // lowering the node value to 3/4 breaks the strict bound at E
    classes.back().entries[1].a = rat(3, 4);
    const auto weak = certify_from_point_classes(classes, both());
    CHECK(weak.status == Status::Inconclusive);
    CHECK(weak.revalidate());
}

TEST_CASE("certify_polystable")
{
    const auto h10 = ScrollTriple::make(3, 0, 0);
    const auto ok = certify_polystable(h10, parse(kH10), {0, 1, -3}, {"t1*x2^3", "t2*x3^3"}, {});
    CHECK(ok.status == Status::KPolystableCertified);
    CHECK(ok.revalidate());

    const auto wrong = certify_polystable(h10, parse(kH10), {0, 1, -2}, {"t1*x2^3", "t2*x3^3"}, {});
    CHECK(wrong.status == Status::Inconclusive);
    CHECK(wrong.revalidate());
    const auto* item = wrong.find("A(E_w) against S(M;E_w), w = (0,1,-2)");
    REQUIRE(item);
    CHECK(item->value == 2);
    CHECK(item->bound == rat(7, 4));

    const auto h17 = certify_polystable(ScrollTriple{4, 0, 0}, parse("x1*(x2^3 + x3^3)"), {4, 0, 1}, {"x2", "x3"}, {});
    CHECK(h17.status == Status::KPolystableCertified);

    CHECK_THROWS_AS(certify_polystable(ScrollTriple{2, 2, 0}, parse("(t1^4+t2^4)*x1^4 + t1^2*t2^2*x2^4 + x1*x2*x3^2"),
                                       {0, 1, -3}, {"x2", "x3"}, {}),
                    PreconditionFailed);
    CHECK_THROWS_AS(certify_polystable(h10, parse(kH10), {0, 1, -3}, {"x2", "t1*x3"}, {}), PreconditionFailed);
}

TEST_CASE("full_verdict on the shipped registry")
{
    const Registry reg = default_registry();
    const std::map<std::string, Status> expected{
        {"H5", Status::KStableCertified},      {"H7", Status::KStableCertified},
        {"H8", Status::KStableCertified},      {"H11", Status::KStableCertified},
        {"H12", Status::KStableCertified},     {"H13", Status::KStableCertified},
        {"H10", Status::KPolystableCertified}, {"H17", Status::KPolystableCertified},
        {"H14", Status::KUnstable},            {"H1", Status::Inconclusive},
        {"H2", Status::Inconclusive},          {"H3", Status::Inconclusive}};
    for (const auto& [id, status] : expected) {
        CAPTURE(id);
        const Verdict v = full_verdict(reg.records.at(id));
        CHECK(v.status == status);
        CHECK(v.revalidate());
    }
    const Verdict h14 = full_verdict(reg.records.at("H14"));
    CHECK(h14.has_reason(InstabilityReason::FiberBeta));
    CHECK(h14.has_reason(InstabilityReason::ToricFiber));
}

TEST_CASE("triples with d1 >= 5 and no branch data are alpha-unstable")
{
    for (const auto& t : triples_up_to(9)) {
        if (t.d1 < 5)
            continue;
        FamilyRecord r;
        r.id = "T";
        r.triple = t;
        const Verdict v = full_verdict(r);
        CHECK(v.status == Status::KUnstable);
        CHECK(v.has_reason(InstabilityReason::AlphaBound));
    }
}

TEST_CASE("volume data alone decides")
{
    FamilyRecord r;
    r.id = "V";
    r.degree = 10;
    r.singular_locus = {DuValType::parse("A7")};
    CHECK(full_verdict(r).has_reason(InstabilityReason::NormalizedVolume));
}

TEST_CASE("mutual exclusion and re-validation on random inputs")
{
    std::mt19937_64 rng(20261016);
    int certified = 0;
    for (int k = 0; k < 200; ++k) {
        const auto in = testing::random_stable_input(rng, 10);
        const bool unstable = !triple_instability_reasons(in.triple).empty();
        for (const auto& v : testing::certifier_verdicts(in)) {
            CHECK(v.revalidate());
            CHECK(v.status != Status::KUnstable);
            if (unstable)
                CHECK(v.status == Status::Inconclusive);
            if (v.status != Status::Inconclusive)
                ++certified;
        }
    }
    CHECK(certified > 0);
}

TEST_CASE("enum names round-trip")
{
    for (auto s : {Status::KUnstable, Status::KStableCertified, Status::KPolystableCertified, Status::Inconclusive})
        CHECK(parse_status(to_string(s)) == s);
    for (auto r : {Relation::Less, Relation::LessEqual, Relation::Equal, Relation::GreaterEqual, Relation::Greater})
        CHECK(parse_relation(to_string(r)) == r);
    CHECK(parse_reason("FiberBeta") == InstabilityReason::FiberBeta);
    CHECK_THROWS(parse_status("stable"));
}
