#include "doctest.h"
#include "letlab/snapshots.hpp"

using namespace letlab;

TEST_CASE("the six values and their snapshots") {
    CHECK(snapshot_of(Value6::T) == Snapshot{1, 0, 1});
    CHECK(snapshot_of(Value6::T0) == Snapshot{1, 0, 0});
    CHECK(snapshot_of(Value6::B) == Snapshot{1, 1, 0});
    CHECK(snapshot_of(Value6::N) == Snapshot{0, 0, 0});
    CHECK(snapshot_of(Value6::F0) == Snapshot{0, 1, 0});
    CHECK(snapshot_of(Value6::F) == Snapshot{0, 1, 1});
    for (Value6 v : kAllValues) {
        CHECK(value6_of(snapshot_of(v)) == v);
        CHECK(value6_from_string(to_string(v)) == v);
    }
}

TEST_CASE("designated values are exactly T, T0, b") {
    CHECK(is_designated(Value6::T));
    CHECK(is_designated(Value6::T0));
    CHECK(is_designated(Value6::B));
    CHECK(!is_designated(Value6::N));
    CHECK(!is_designated(Value6::F0));
    CHECK(!is_designated(Value6::F));

    const BooleanAlgebra two(2);
    CHECK(!is_designated(two, Snapshot{0b01, 0, 0}));  // first coordinate below the top
    CHECK(is_designated(two, Snapshot{0b11, 0, 0}));
}

TEST_CASE("snapshot domain over the two-element algebra is the six values") {
    const auto domain = snapshot_domain(BooleanAlgebra(1));
    CHECK(domain.size() == 6);
    for (Value6 v : kAllValues) {
        bool found = false;
        for (const Snapshot& z : domain)
            if (z == snapshot_of(v)) found = true;
        CHECK(found);
    }
    // the excluded triples
    for (const Snapshot& z : domain) {
        CHECK(!(z == Snapshot{0, 0, 1}));
        CHECK(!(z == Snapshot{1, 1, 1}));
    }
}

TEST_CASE("snapshot domain sizes") {
    CHECK(snapshot_domain(BooleanAlgebra(0)).size() == 1);  // degenerate: only (0,0,0)
    CHECK(snapshot_domain(BooleanAlgebra(0))[0] == Snapshot{0, 0, 0});
    // frozen by enumerating all 64 triples and filtering by both constraints
    CHECK(snapshot_domain(BooleanAlgebra(2)).size() == 36);
    CHECK(snapshot_domain(BooleanAlgebra(3)).size() == 216);
}

TEST_CASE("every snapshot satisfies the two constraints") {
    for (int atoms = 0; atoms <= 2; ++atoms) {
        const BooleanAlgebra algebra(atoms);
        std::size_t raw = 0;
        for (const Snapshot& z : snapshot_domain(algebra)) {
            ++raw;
            CHECK(algebra.leq(z.cls, algebra.join(z.pos, z.neg)));
            CHECK(algebra.meet(algebra.meet(z.pos, z.neg), z.cls) == algebra.bottom());
        }
        CHECK(raw == snapshot_domain(algebra).size());
    }
}

TEST_CASE("snapshot printing uses element names") {
    const BooleanAlgebra two(2);
    CHECK(to_string(two, Snapshot{0b11, 0, 0b01}) == "(1,0,{a0})");
}
