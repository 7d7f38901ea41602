#include "doctest.h"

#include "secdom/formulas.hpp"

using namespace secdom;

TEST_CASE("gamma_s_formula frozen values") {
    CHECK(gamma_s_formula({Family::p2xcn, 16}).value == 12);
    CHECK(gamma_s_formula({Family::p2xcn, 16}).case_label == "n = 0 mod 8");
    CHECK(gamma_s_formula({Family::m2n, 12}).value == 9);
    CHECK(gamma_s_formula({Family::m2n, 12}).case_label == "n = 4 mod 8");
    CHECK(gamma_s_formula({Family::p3xpn, 10}).value == 11);
    CHECK(gamma_s_formula({Family::p3xpn, 10}).case_label == "n <= 8 or n = 10");
    CHECK(gamma_s_formula({Family::p3xcn, 7}).value == 8);
    CHECK(gamma_s_formula({Family::p3xcn, 7}).case_label == "n = 4, 7");

    CHECK(gamma_s_formula({Family::p2xpn, 2}).value == 2);
    CHECK(gamma_s_formula({Family::p2xpn, 8}).value == 7);
    CHECK(gamma_s_formula({Family::p2xcn, 8}).value == 6);
    CHECK(gamma_s_formula({Family::m2n, 4}).value == 3);
    CHECK(gamma_s_formula({Family::p3xcn, 8}).value == 9);

    CHECK_THROWS_AS(gamma_s_formula({Family::p2xpn, 1}), InvalidSizeError);
    CHECK_THROWS_AS(gamma_s_formula({Family::m2n, 2}), InvalidSizeError);
}

TEST_CASE("winter_formula hand evaluations") {
    CHECK(winter_formula(8) == 6);
    CHECK(winter_formula(9) == 7);
    CHECK(winter_formula(12) == 10);
    CHECK_THROWS_AS(winter_formula(2), InvalidSizeError);
}

TEST_CASE("winter coincides with the p2xcn value everywhere") {
    for (int n = 3; n <= 100000; ++n)
        CHECK(winter_formula(n) == gamma_s_formula({Family::p2xcn, n}).value);
}

TEST_CASE("upper_bound_formula") {
    CHECK(upper_bound_formula({Family::p2xpn, 9}) == 7);
    CHECK(upper_bound_formula({Family::p3xpn, 5}) == 7);
    CHECK(upper_bound_formula({Family::p2xcn, 8}) == 6);
    CHECK(upper_bound_formula({Family::m2n, 4}) == 3);
    CHECK(upper_bound_formula({Family::p3xcn, 5}) == 6);
    CHECK_THROWS_AS(upper_bound_formula({Family::p2xcn, 7}), NotApplicableError);
    CHECK_THROWS_AS(upper_bound_formula({Family::m2n, 8}), NotApplicableError);
}

TEST_CASE("formula is at most the pattern bound, with the documented equality exceptions") {
    for (int n = 2; n <= 100000; ++n) {
        for (Family f : {Family::p2xpn, Family::p2xcn, Family::m2n, Family::p3xpn, Family::p3xcn}) {
            const FamilyInstance inst{f, n};
            if (!inst.in_range())
                continue;
            if ((f == Family::p2xcn && n % 8 != 0) || (f == Family::m2n && n % 8 != 4))
                continue; // bound not applicable
            const int value = gamma_s_formula(inst).value;
            const int bound = upper_bound_formula(inst);
            CHECK(value <= bound);
            const bool strict_expected = (f == Family::p3xpn && ((n >= 2 && n <= 8) || n == 10)) ||
                                         (f == Family::p3xcn && (n == 4 || n == 7));
            CHECK((value < bound) == strict_expected);
        }
    }
}

TEST_CASE("cycle formula drops below the path formula exactly at n = 0 mod 8") {
    for (int n = 3; n <= 100000; ++n) {
        const int path = gamma_s_formula({Family::p2xpn, n}).value;
        const int cycle = gamma_s_formula({Family::p2xcn, n}).value;
        if (n % 8 == 0)
            CHECK(cycle == path - 1);
        else
            CHECK(cycle == path);
    }
}

TEST_CASE("cross-family consistency on the shared 2x3 grid") {
    CHECK(gamma_s_formula({Family::p3xpn, 2}).value == 3);
    CHECK(gamma_s_formula({Family::p2xpn, 3}).value == 3);
}
