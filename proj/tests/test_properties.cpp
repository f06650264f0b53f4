#include <doctest.h>

#include "support/properties.hpp"

using namespace eisen::testing;

TEST_SUITE("properties") {

TEST_CASE("Dumas slope condition against the polygon") {
    const auto out = property_dumas_polygon(0x5eed0001, 1000);
    CHECK_MESSAGE(out.ok(), out.first_failure);
}

TEST_CASE("distinct-degree multisets") {
    const auto out = property_ddf_degrees(0x5eed0002, 500);
    CHECK_MESSAGE(out.ok(), out.first_failure);
}

TEST_CASE("derivation") {
    const auto out = property_derivation(0x5eed0003, 100);
    CHECK_MESSAGE(out.ok(), out.first_failure);
}

TEST_CASE("ring laws") {
    const auto out = property_ring_laws(0x5eed0004, 200);
    CHECK_MESSAGE(out.ok(), out.first_failure);
}

TEST_CASE("irreducibility soundness") {
    const auto out = property_soundness(0x5eed0005, 1000);
    CHECK_MESSAGE(out.ok(), out.first_failure);
}

TEST_CASE("arithmetic identities") {
    const auto out = property_arithmetic();
    CHECK_MESSAGE(out.ok(), out.first_failure);
}

TEST_CASE("naive factor search finds planted factors") {
    const std::vector<eisen::Integer> f{7, 0, 1};     // x^2 + 7
    const std::vector<eisen::Integer> g{-9, 1};       // x - 9
    const auto h = multiply(f, g);
    const auto found = naive_factor(h, 2);
    REQUIRE(found.has_value());
    CHECK_FALSE(naive_factor(f, 1).has_value());
}

}
