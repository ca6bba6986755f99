#include "doctest.h"

#include <algorithm>
#include <atomic>
#include <set>

#include "cfgspace/oracle.hpp"

using namespace cfgspace;

namespace {

const RingSpec g32(3, 2);
const RingSpec z3(3, 1);

Point pt(std::vector<int> comps, const RingSpec& spec = g32) {
    return Point::of(RingElem(spec, std::move(comps)));
}

} // namespace

TEST_CASE("enumeration sizes and order") {
    CHECK(enumerate_points(z3, 1).size() == 3);
    CHECK(enumerate_points(g32, 1).size() == 9);
    CHECK(enumerate_points(g32, 2).size() == 81);
    CHECK(enumerate_bool(2).size() == 4);
    CHECK(enumerate_ring(g32).size() == 9);

    const auto pts = enumerate_points(g32, 1);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(pts.front() == pt({0, 0}));
    CHECK(pts.back() == pt({2, 2}));

    OracleLimits tiny;
    tiny.max_universe = 10;
    CHECK_THROWS_AS(enumerate_points(g32, 2, tiny), LimitError);
    OracleLimits no_bool;
    no_bool.max_omega_enum = 1;
    CHECK_THROWS_AS(enumerate_bool(2, no_bool), LimitError);
}

TEST_CASE("member enumeration by two independent routes") {
    CHECK(enumerate_members(PointedSpace(pt({0, 0}), {pt({1, 0})})) ==
          std::vector<Point>{pt({0, 0}), pt({1, 0})});
    CHECK(enumerate_members(PointedSpace::ambient(g32, 1)).size() == 9);
    CHECK(enumerate_members(PointedSpace(pt({2, 1}), {})) == std::vector<Point>{pt({2, 1})});
    CHECK(enumerate_members(PointedSpace::empty_space(g32, 1)).empty());

    // the convex closure of {0,(1,1),(1,2)} is the 6-element product {0,1}x{0,1,2}
    const PointedSpace X(pt({0, 0}), {pt({1, 1}), pt({1, 2})});
    CHECK(enumerate_members(X).size() == 6);
}

TEST_CASE("member sets of subspaces of GF(3)^2 are the per-atom products") {
    // census: 7 x 7 nonempty products plus the empty set is 50
    std::set<std::vector<Point>> member_sets;
    const auto pts = enumerate_points(g32, 1);
    for (unsigned mask = 1; mask < 512; ++mask) {
        std::vector<Point> subset;
        for (unsigned b = 0; b < 9; ++b)
            if (mask & (1u << b)) subset.push_back(pts[b]);
        const PointedSpace S(subset.front(), {subset.begin() + 1, subset.end()});
        member_sets.insert(enumerate_members(S));
    }
    CHECK(member_sets.size() == 49);
}

TEST_CASE("sampler determinism and validity") {
    Sampler a(5);
    Sampler b(5);
    for (int i = 0; i < 20; ++i) {
        CHECK(a.point(g32, 2) == b.point(g32, 2));
        CHECK(a.uniform(0, 100) == b.uniform(0, 100));
    }
    Sampler s(9);
    for (int i = 0; i < 50; ++i) {
        const Partition part = s.partition(2, 3);
        CHECK(part.is_complete());
        const PointedSpace X = s.space(g32, 1, 4);
        CHECK_FALSE(X.is_empty());
        const RefMap f = s.contractive_map(X, 2);
        CHECK(check_extensible<Point>(f.domain, f.base_image, f.images));
    }
}

TEST_CASE("theorem suite passes on the smallest rings") {
    OracleLimits limits;
    limits.samples = 8;
    for (const RingSpec spec : {RingSpec(2, 1), RingSpec(3, 1)}) {
        const OracleReport report = run_theorem_suite(spec, 1, limits, 42);
        CHECK(report.all_pass());
        CHECK(report.checks.size() == 10);
        for (const OracleCheck& c : report.checks) {
            INFO(c.name, ": ", c.counterexample);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("suite reports are reproducible for a fixed seed") {
    OracleLimits limits;
    limits.samples = 5;
    const OracleReport a = run_theorem_suite(z3, 1, limits, 7);
    const OracleReport b = run_theorem_suite(z3, 1, limits, 7);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].universe == b.checks[i].universe);
        CHECK(a.checks[i].pass == b.checks[i].pass);
    }
}

TEST_CASE("suite respects cancellation") {
    std::atomic_bool flag{true};
    OracleLimits limits;
    limits.samples = 5;
    const OracleReport report = run_theorem_suite(g32, 1, limits, 1, CancelToken(&flag));
    CHECK_FALSE(report.all_pass()); // every check aborts with a cancellation note
}
