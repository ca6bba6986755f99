#include "doctest.h"

#include <random>

#include "cfgspace/boolean_ring.hpp"

using namespace cfgspace;

namespace {

BoolElem atoms(std::initializer_list<int> a, int omega) {
    return BoolElem::from_atoms(a, omega);
}

} // namespace

TEST_CASE("boolean arithmetic on atom sets") {
    CHECK(atoms({0}, 2) + atoms({1}, 2) == atoms({0, 1}, 2));
    CHECK(atoms({0, 1}, 2) + atoms({0}, 2) == atoms({1}, 2));
    CHECK(join(atoms({0}, 2), atoms({0, 1}, 2)) == atoms({0, 1}, 2));
    CHECK(leq(atoms({0}, 2), atoms({0, 1}, 2)));
    CHECK_FALSE(leq(atoms({0, 1}, 2), atoms({0}, 2)));
    CHECK(atoms({0}, 2) * atoms({0, 1}, 2) == atoms({0}, 2));
    CHECK_THROWS_AS(atoms({0}, 2) + atoms({0}, 3), DimensionError);
}

TEST_CASE("complement") {
    CHECK(atoms({0}, 2).complement() == atoms({1}, 2));
    CHECK(BoolElem::zero(3).complement() == BoolElem::one(3));
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        const BoolElem a(rng() & 0xF, 4);
        CHECK(a.complement().complement() == a);
        CHECK((a + a.complement()) == BoolElem::one(4));
        CHECK((a * a.complement()).is_zero());
    }
}

TEST_CASE("partitions") {
    CHECK(is_partition({atoms({0}, 2), atoms({1}, 2)}, true));
    CHECK_FALSE(is_partition({atoms({0}, 2), atoms({0, 1}, 2)}, false));
    CHECK_FALSE(is_partition({atoms({0}, 2)}, true));
    CHECK(is_partition({atoms({0}, 2)}, false));
    CHECK_FALSE(is_partition({}, true));
    CHECK(is_partition({}, false));

    CHECK_THROWS_AS(Partition::complete({atoms({0}, 2)}), PartitionError);
    const Partition p = Partition::complete({atoms({0}, 2), atoms({1}, 2)});
    CHECK(p.is_complete());
    CHECK(p.size() == 2);
}

TEST_CASE("ring axioms hold on sampled triples") {
    std::mt19937 rng(11);
    const int omega = 5;
    const auto rand_elem = [&] { return BoolElem(rng() & 0x1F, omega); };
    for (int i = 0; i < 200; ++i) {
        const BoolElem a = rand_elem();
        const BoolElem b = rand_elem();
        const BoolElem c = rand_elem();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * a == a);
        CHECK((a + a).is_zero());
        // join is definable from ring operations
        CHECK(join(a, b) == a + b + a * b);
        // De Morgan
        CHECK(join(a, b).complement() == a.complement() * b.complement());
        // the identity forcing alpha_2(B) = 0 when d(x, y) = x + y
        CHECK(((a + b) * (b + c) * (a + c)).is_zero());
    }
}
