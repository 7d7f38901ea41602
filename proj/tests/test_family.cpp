#include "doctest.h"

#include "secdom/family.hpp"

using namespace secdom;

TEST_CASE("family names round-trip") {
    for (Family f : {Family::p2xpn, Family::p2xcn, Family::m2n, Family::p3xpn, Family::p3xcn})
        CHECK(parse_family(family_name(f)) == f);
    CHECK_FALSE(parse_family("p4xpn").has_value());
    CHECK_FALSE(parse_family("").has_value());
}

TEST_CASE("layout is copy-major") {
    const FamilyInstance inst{Family::p3xcn, 4};
    CHECK(inst.rows() == 3);
    CHECK(inst.vertex_count() == 12);
    CHECK(inst.vertex_id(1, 1) == 0);
    CHECK(inst.vertex_id(1, 3) == 2);
    CHECK(inst.vertex_id(2, 1) == 3);
    CHECK(inst.vertex_id(4, 3) == 11);
    for (int id = 0; id < inst.vertex_count(); ++id)
        CHECK(inst.vertex_id(inst.copy_of(id), inst.row_of(id)) == id);
}

TEST_CASE("validity ranges") {
    CHECK(FamilyInstance{Family::p2xpn, 2}.in_range());
    CHECK_FALSE(FamilyInstance{Family::p2xpn, 1}.in_range());
    CHECK(FamilyInstance{Family::p2xcn, 3}.in_range());
    CHECK_FALSE(FamilyInstance{Family::p2xcn, 2}.in_range());
    CHECK(FamilyInstance{Family::m2n, 3}.in_range());
    CHECK_FALSE(FamilyInstance{Family::m2n, 2}.in_range());
    CHECK(FamilyInstance{Family::p3xpn, 2}.in_range());
    CHECK(FamilyInstance{Family::p3xcn, 3}.in_range());
    CHECK_THROWS_AS((FamilyInstance{Family::p3xcn, 2}.validate()), InvalidSizeError);
}

TEST_CASE("cyclic flag") {
    CHECK_FALSE(FamilyInstance{Family::p2xpn, 4}.cyclic());
    CHECK_FALSE(FamilyInstance{Family::p3xpn, 4}.cyclic());
    CHECK(FamilyInstance{Family::p2xcn, 4}.cyclic());
    CHECK(FamilyInstance{Family::m2n, 4}.cyclic());
    CHECK(FamilyInstance{Family::p3xcn, 4}.cyclic());
}
