#include "doctest.h"
#include "scld/constructions.hpp"
#include "scld/dynamic.hpp"
#include "scld/verify.hpp"

using namespace scld;

TEST_SUITE("dynamic") {
    TEST_CASE("x3 stage one") {
        const auto cfg = plan_session(x3_code(3), 2, 1);
        CHECK(cfg.users == 8);
        // Measured list size; M = 8 is only the guaranteed bound.
        CHECK(cfg.list_size == *is_hld(x3_code(3), 2).minimal_list_size);
        CHECK(cfg.list_size <= 8);
        const auto tr = run_two_stage(cfg, {2, 5}, 3);
        CHECK(tr.success);
        CHECK(tr.traced == CoalitionIndexSet{2, 5});
        CHECK(CoalitionIndexSet{2, 5}.is_subset_of(tr.candidates));
    }

    TEST_CASE("singleton coalition") {
        const auto cfg = plan_session(x3_code(3), 2, 1);
        const auto tr = run_two_stage(cfg, {4}, 9);
        CHECK(tr.success);
        CHECK(tr.traced == CoalitionIndexSet{4});
    }

    TEST_CASE("degenerate session") {
        const auto cfg = plan_session(1, 2, 1);
        CHECK(cfg.users == 1);
        const auto tr = run_two_stage(cfg, {0}, 1);
        CHECK(tr.success);
        CHECK(tr.traced == CoalitionIndexSet{0});
    }

    TEST_CASE("stage two codes are separable") {
        for (std::size_t w = 1; w <= 12; ++w) {
            const auto c = stage2_code(w, 2, w);
            CHECK(c.size() == w);
        }
        CHECK(stage2_code(5, 3, 1).size() == 5);
    }

    TEST_CASE("simulation") {
        const auto cfg = plan_session(64, 2, 42);
        CHECK(cfg.users == 64);
        CHECK(cfg.list_size <= 16);
        const auto runs = simulate(cfg, 30, 7);
        const auto s = summarize(runs);
        CHECK(s.trials == 30);
        CHECK(s.recovered == 30);
        for (const auto& tr : runs) {
            CHECK(tr.planted.is_subset_of(tr.candidates));
            CHECK(tr.candidates.size() <= cfg.list_size);
        }
        // Reproducible bytes.
        const auto again = simulate(cfg, 30, 7);
        for (std::size_t i = 0; i < runs.size(); ++i) CHECK(to_json(runs[i], i) == to_json(again[i], i));
        CHECK(to_json(s, cfg, false).find("seconds") == std::string::npos);
    }
}
