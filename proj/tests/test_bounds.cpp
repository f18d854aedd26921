#include <cmath>

#include "doctest.h"
#include "scld/bounds.hpp"

using namespace scld;
using namespace scld::bounds;

TEST_SUITE("bounds") {
    TEST_CASE("entropy") {
        CHECK(entropy(0.5) == doctest::Approx(1.0));
        CHECK(entropy(0) == 0);
        CHECK(entropy(1) == 0);
        CHECK(entropy(0.2) == doctest::Approx(0.721928).epsilon(1e-6));
        CHECK_THROWS(entropy(-0.1));
        CHECK_THROWS(entropy(1.5));
    }

    TEST_CASE("maximizer") {
        const auto m = maximize([](double x) { return -(x - 0.3141) * (x - 0.3141); }, 1e-3, 0.999);
        CHECK(m.arg == doctest::Approx(0.3141).epsilon(1e-7));
        CHECK(m.value == doctest::Approx(0).epsilon(1e-12));
    }

    TEST_CASE("separable rates") {
        CHECK(std::abs(rate_sc_lower(3).value - 0.13834) < 5e-5);
        CHECK(std::abs(rate_sc_lower(4).value - 0.06198) < 5e-5);
        CHECK(std::abs(rate_sc_lower(6).value - 0.02003) < 5e-5);
        const auto r = rate_sc_lower(3);
        CHECK(r.p_star > 0);
        CHECK(r.p_star < 1);
        CHECK(r.sc_witness.has_value());
    }

    TEST_CASE("optimizer finds the global maximum") {
        for (std::size_t t = 2; t <= 4; ++t) {
            const auto r = rate_sc_lower(t);
            CHECK(rate_sc(t, r.p_star) == doctest::Approx(r.value).epsilon(1e-12));
            for (int i = 1; i < 1000; ++i) CHECK(rate_sc(t, i / 1000.0) <= r.value + 1e-12);
        }
    }

    TEST_CASE("hld closed form") {
        const auto r = rate_hld_alpha_lower(2, 0.5);
        CHECK(r.p_star == doctest::Approx(0.2).epsilon(1e-12));
        CHECK(std::abs(r.value - 2 * (entropy(0.2) - 0.4)) < 1e-9);
        CHECK(std::abs(r.value - 0.643856) < 1e-6);
        for (std::size_t t = 2; t <= 10; ++t) {
            const auto x = rate_hld_alpha_lower(t, 0.3);
            REQUIRE(x.numeric_p_star);
            CHECK(std::abs(*x.numeric_p_star - x.p_star) < 1e-6);
            CHECK(hld_p_star(t) == doctest::Approx(x.p_star));
        }
        const double half = rate_hld_alpha_lower(2, 0.5).value;
        CHECK(rate_hld_alpha_lower(2, 0.99).value == doctest::Approx(50 * half).epsilon(1e-9));
        CHECK_THROWS(rate_hld_alpha_lower(2, 0.0));
        const auto big = rate_hld_alpha_lower(100, 0.01);
        CHECK(std::abs(big.value / (0.530738 / (100 * 0.99)) - 1) < 0.05);
    }

    TEST_CASE("scld with alpha") {
        CHECK(std::abs(rate_scld_alpha_lower(2, 0.5).value - 0.44452) < 5e-5);
        CHECK(std::abs(rate_scld_alpha_lower(3, 1.0 / 3).value - 0.13205) < 5e-5);
        CHECK(std::abs(rate_scld_alpha_lower(5, 0.2).value - 0.03105) < 5e-5);
        CHECK(rate_scld_alpha_lower(3, 1.0).value == doctest::Approx(rate_sc_lower(3).value));
    }

    TEST_CASE("constant list size") {
        const auto a = rate_scld_constL_lower(2, 3);
        CHECK(std::abs(a.value - 0.245655) < 1e-4);
        REQUIRE(a.z);
        CHECK(*a.z > 0);
        CHECK(*a.z < 1);
        CHECK(*a.z_residual < 1e-10);
        CHECK(std::abs(rate_scld_constL_lower(3, 8).value - 0.130601) < 1e-4);
        CHECK(std::abs(rate_scld_constL_lower(2, 7).value - 0.287402) < 1e-4);
        double prev = 0;
        for (std::size_t L = 3; L <= 7; ++L) {
            const double v = rate_scld_constL_lower(2, L).value;
            CHECK(v >= prev - 1e-12);
            prev = v;
        }
    }

    TEST_CASE("q-ary rates") {
        CHECK(rate_qary_scld(2, 3) == doctest::Approx(2.0 / 3));
        CHECK(rate_qary_scld(4, 5) == doctest::Approx(1.0 / 3));
        CHECK_THROWS(rate_qary_scld(3, 3));
    }

    TEST_CASE("two-stage trade-off") {
        const auto mr = tdtt_optimize(3, TdttMode::MaxRate);
        CHECK(std::abs(mr.value - 0.16778) < 2e-3);
        CHECK(std::abs(*mr.alpha - 0.406) < 5e-3);
        CHECK(mr.value == doctest::Approx(0.5 * rate_hld_alpha_lower(3, *mr.alpha).value).epsilon(1e-12));

        const auto lt = tdtt_optimize(3, TdttMode::LinearTime);
        CHECK(std::abs(lt.value - 0.16722) < 2e-3);
        CHECK(std::abs(*lt.alpha * *lt.beta - 1.0 / 3) < 1e-12);
        CHECK(lt.value == doctest::Approx(0.5 * rate_hld_alpha_lower(3, *lt.alpha).value).epsilon(1e-12));
        CHECK_FALSE(lt.interpretation.empty());
        CHECK(lt.candidates.size() == 2);
    }

    TEST_CASE("table csv") {
        const auto csv = table_csv(2);
        CHECK(csv.rfind("t,", 0) == 0);
        CHECK(csv.find("0.138") != std::string::npos);
        CHECK_THROWS(table_csv(7));
    }
}
