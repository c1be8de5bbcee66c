#include <catch2/catch_amalgamated.hpp>

#include "wfm/verify.hpp"

using namespace wfm;

TEST_CASE("the verification grid covers the documented cells once each", "[verify]") {
    auto grid = acceptance_grid();
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = i + 1; j < grid.size(); ++j)
            REQUIRE(!(grid[i].m == grid[j].m && grid[i].n == grid[j].n &&
                      grid[i].A == grid[j].A));
    for (const GridInstance& I : grid) {
        REQUIRE((I.m == 1 || I.m == 2));
        REQUIRE(I.n >= 2);
        REQUIRE(I.n <= (I.m == 1 ? 4 : 3));
        REQUIRE(I.A.n() == I.n);
    }
    // all-1, all-1/2, mustata, mixed; several coincide per cell.
    REQUIRE(grid.size() >= 14);
}

TEST_CASE("fast verify suites pass and are seed-stable", "[verify]") {
    for (const char* name : {"mustata", "prefix", "morphisms", "mutation"}) {
        VerifyReport rep = run_verify_suite(name, 7);
        INFO(rep.suite);
        REQUIRE(rep.pass());
        REQUIRE(rep.failed() == 0);
        REQUIRE(!rep.checks.empty());
    }
    VerifyReport a = run_verify_suite("morphisms", 7);
    VerifyReport b = run_verify_suite("morphisms", 7);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        REQUIRE(a.checks[i].name == b.checks[i].name);
        REQUIRE(a.checks[i].pass == b.checks[i].pass);
        REQUIRE(a.checks[i].detail == b.checks[i].detail);
    }
}

TEST_CASE("unknown suite names are rejected", "[verify]") {
    REQUIRE_THROWS_AS(run_verify_suite("bogus", 1), InputError);
}

TEST_CASE("the default verify run covers the structural suites", "[verify]") {
    auto reports = run_default_verify(7);
    REQUIRE(reports.size() == 7);
    for (const VerifyReport& rep : reports) {
        INFO(rep.suite);
        REQUIRE(rep.pass());
    }
}
