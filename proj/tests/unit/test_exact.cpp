#include <doctest.h>

#include "cyclespec/errors.hpp"
#include "cyclespec/exact.hpp"

using namespace cyclespec;

TEST_CASE("rational formatting and parsing") {
    CHECK(to_string(Rational(240, 43)) == "240/43");
    CHECK(to_string(Rational(6, 2)) == "3");
    CHECK(parse_rational("5/2") == Rational(5, 2));
    CHECK(parse_rational("2.5") == Rational(5, 2));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK_THROWS(parse_rational("-1"));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("power gate is exact at the boundary") {
    // 2 * 64^1.5 = 1024 exactly.
    CHECK(meets_power_gate(1024, 64, 2, 2));
    CHECK_FALSE(meets_power_gate(1023, 64, 2, 2));
    // K_300, k=2: 8 * 300^1.5 ~ 41569.2
    CHECK(meets_power_gate(44850, 300, 8, 2));
    CHECK(meets_power_gate(41570, 300, 8, 2));
    CHECK_FALSE(meets_power_gate(41569, 300, 8, 2));
    // K_100, k=2: 8 * 1000
    CHECK_FALSE(meets_power_gate(4950, 100, 8, 2));
    CHECK(meets_power_gate(8000, 100, 8, 2));
    // 16 * 400^(4/3) ~ 47155.6
    CHECK(meets_power_gate(47156, 400, 16, 3));
    CHECK_FALSE(meets_power_gate(47155, 400, 16, 3));
}

TEST_CASE("root threshold") {
    CHECK(meets_root_threshold(16, 64, 2, 2));
    CHECK_FALSE(meets_root_threshold(15, 64, 2, 2));
    CHECK(meets_root_threshold(6, 27, 2, 3));
    CHECK_FALSE(meets_root_threshold(5, 27, 2, 3));
    CHECK(power_gate_value(64, 2, 2) == doctest::Approx(1024.0));
}
