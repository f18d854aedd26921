#include <cmath>
#include <random>

#include "doctest.h"
#include "scld/constructions.hpp"
#include "scld/verify.hpp"

using namespace scld;

namespace {

std::size_t count_size(const PackingDesign& d, std::size_t s) {
    std::size_t k = 0;
    for (const auto& b : d.blocks) k += b.size() == s;
    return k;
}

std::size_t agreements(const Code& c, std::size_t a, std::size_t b) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < c.length(); ++i) k += c.codeword(a)[i] == c.codeword(b)[i];
    return k;
}

}  // namespace

TEST_SUITE("constructions") {
    TEST_CASE("projective planes") {
        const auto fano = projective_plane(2);
        CHECK(fano.v == 7);
        CHECK(fano.blocks.size() == 7);
        CHECK(count_size(fano, 3) == 7);
        std::vector<int> degree(7, 0);
        for (const auto& b : fano.blocks)
            for (auto p : b) ++degree[p];
        for (int d : degree) CHECK(d == 3);
        CHECK_NOTHROW(validate_packing(fano));

        const auto p3 = projective_plane(3);
        CHECK(p3.v == 13);
        CHECK(count_size(p3, 4) == 13);
        CHECK_THROWS(projective_plane(6));
    }

    TEST_CASE("truncated planes") {
        const auto t2 = truncate_plane(2);
        CHECK(t2.v == 6);
        CHECK(t2.blocks.size() == 6);
        CHECK(count_size(t2, 2) == 2);
        CHECK(count_size(t2, 3) == 4);
        const auto t3 = truncate_plane(3);
        CHECK(t3.v == 12);
        CHECK(count_size(t3, 3) == 3);
        CHECK(count_size(t3, 4) == 9);
        CHECK_NOTHROW(validate_packing(t3));
    }

    TEST_CASE("packing codes") {
        const auto full = packing_to_scld(projective_plane(2));
        CHECK(full.size() == 21);
        CHECK(full.length() == 2);
        const auto cut = packing_to_scld(truncate_plane(2));
        CHECK(cut.size() == 16);
        for (const auto& c : {full, cut}) {
            const auto r = is_scld(c, 2);
            CHECK(r.holds);
            CHECK(*r.minimal_list_size <= 3);
        }
        auto bad = projective_plane(2);
        bad.blocks.pop_back();
        CHECK_THROWS_WITH(packing_to_scld(bad), doctest::Contains("block count mismatch"));
    }

    TEST_CASE("polynomial frameproof codes") {
        const auto c = fpc_poly_eval(4, 4, 2);
        CHECK(c.size() == 16);
        CHECK(c.length() == 4);
        CHECK(is_frameproof(c, 2).holds);

        const auto rep = fpc_poly_eval(7, 2, 2);
        CHECK(rep.size() == 7);
        for (std::size_t i = 0; i < rep.size(); ++i) CHECK(rep.codeword(i)[0] == rep.codeword(i)[1]);
        CHECK_THROWS_WITH(fpc_poly_eval(2, 3, 2), doctest::Contains("not enough evaluation points"));
        CHECK_THROWS(fpc_poly_eval(3, 4, 2));

        for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
            for (std::size_t l = 2; l <= q; ++l) {
                for (std::size_t t = 2; t <= 3; ++t) {
                    const auto code = fpc_poly_eval(q, l, t);
                    const std::size_t k = (l + t - 1) / t;
                    for (std::size_t a = 0; a < code.size(); ++a)
                        for (std::size_t b = a + 1; b < code.size(); ++b) CHECK(agreements(code, a, b) <= k - 1);
                }
            }
        }
    }

    TEST_CASE("c4 frameproof code") {
        const auto c = fpc_construction4(5, 4);
        CHECK(c.size() == 1125);
        CHECK(c.alphabet() == 26);
        CHECK(c.length() == 4);
        const double q = 26;
        CHECK(2 * std::pow(q - 1, 2) * (1 - 1 / (2 * std::sqrt(q - 1))) == doctest::Approx(1125).epsilon(1e-12));
        CHECK_THROWS(fpc_construction4(4, 4));
        CHECK_THROWS(fpc_construction4(7, 5));

        std::mt19937_64 rng(99);
        std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
        for (int probe = 0; probe < 1000; ++probe) {
            std::size_t a = pick(rng), b = pick(rng), x = pick(rng);
            if (a == b || x == a || x == b) continue;
            CHECK_FALSE(covers(c.codeword(x), desc(c, a < b ? CoalitionIndexSet{a, b} : CoalitionIndexSet{b, a})));
        }
    }

    TEST_CASE("concatenation") {
        const auto outer = packing_to_scld(projective_plane(2));
        const auto cat = concatenate(fpc_poly_eval(4, 4, 2), outer);
        CHECK(cat.length() == 8);
        CHECK(cat.size() == 21);
        CHECK(cat.alphabet() == 4);
        const auto a = is_scld(cat, 2), o = is_scld(outer, 2);
        CHECK(a.holds);
        CHECK(*a.minimal_list_size <= *o.minimal_list_size);

        const auto rep = concatenate(fpc_poly_eval(7, 2, 2), outer);
        CHECK(rep.length() == 4);
        CHECK(rep.alphabet() == 7);
        CHECK(is_scld(rep, 2).holds);

        const auto small = Code::from_rows(2, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {1, 0, 1}});
        CHECK_THROWS_WITH(concatenate(small, outer), doctest::Contains("bijection impossible"));
    }

    TEST_CASE("x3 codes") {
        const auto c = x3_code(3);
        CHECK(c.size() == 8);
        CHECK(c.length() == 6);
        for (auto s : c.codeword(0)) CHECK(s == 0);
        CHECK(c.rate() == doctest::Approx(0.5));
        CHECK(is_scld(c, 2).holds);
        CHECK(is_scld(x3_code(4), 2).holds);
        CHECK(is_separable(x3_code(5), 2).holds);
        CHECK_THROWS(x3_code(1));
    }

    TEST_CASE("expurgation") {
        ExpurgationParams bin;
        bin.n = 30;
        bin.p = 0.2;
        bin.initial_size = 40;
        bin.seed = 5;
        const auto a = random_expurgated(bin);
        CHECK(is_separable(a.code, 2).holds);
        CHECK(a.report.final_size == a.code.size());
        CHECK(a.report.initial_size == 40);

        ExpurgationParams qary;
        qary.n = 20;
        qary.q = 5;
        qary.initial_size = 30;
        qary.target = ExpurgationTarget::Scld;
        qary.L = 3;
        qary.seed = 6;
        const auto b = random_expurgated(qary);
        const auto r = is_scld(b.code, 2);
        CHECK(r.holds);
        CHECK(*r.minimal_list_size <= 3);

        ExpurgationParams one = bin;
        one.initial_size = 1;
        CHECK(random_expurgated(one).code.size() == 1);

        ExpurgationParams filtered = bin;
        filtered.weight_filter = true;
        filtered.initial_size = 200;
        const auto f = random_expurgated(filtered);
        const std::size_t w = static_cast<std::size_t>(std::floor(0.2 * 31));
        for (std::size_t i = 0; i < f.code.size(); ++i) {
            std::size_t weight = 0;
            for (auto s : f.code.codeword(i)) weight += s;
            CHECK(weight == w);
        }

        // Same seed, same code.
        CHECK(random_expurgated(bin).code == a.code);
    }
}
