#include <random>
#include <unordered_set>

#include "doctest.h"
#include "oracles.hpp"
#include "scld/code.hpp"

using namespace scld;

namespace {

Code example_c1() { return Code::from_rows(2, {{0, 0, 1}, {1, 0, 1}, {1, 1, 0}}); }

}  // namespace

TEST_SUITE("code") {
    TEST_CASE("descendant examples") {
        const auto c = Code::from_rows(3, {{0, 1, 0}, {0, 0, 1}, {0, 1, 2}});
        CHECK(desc(c, {0, 1, 2}).sets() == std::vector<std::vector<Symbol>>{{0}, {0, 1}, {0, 1, 2}});
        CHECK(desc(c, {2}).sets() == std::vector<std::vector<Symbol>>{{0}, {1}, {2}});
        CHECK(desc(example_c1(), {0, 1}).sets() == std::vector<std::vector<Symbol>>{{0, 1}, {0}, {1}});
        CHECK_THROWS_WITH_AS(desc(c, CoalitionIndexSet{}), "empty coalition", ShapeError);
    }

    TEST_CASE("covers and residual") {
        const auto d = EvidenceVector::from_sets(3, {{0}, {0, 1}, {0, 1, 2}});
        const std::vector<Symbol> a{0, 1, 0}, b{1, 1, 0};
        CHECK(covers(a, d));
        CHECK_FALSE(covers(b, d));
        const auto e = EvidenceVector::from_sets(2, {{0, 1}, {0, 1}, {0}});
        const std::vector<Symbol> z{0, 0, 0};
        CHECK(covers(z, e));
        const std::vector<Symbol> short_word{0, 0};
        CHECK_THROWS_WITH_AS(covers(short_word, e), "shape error", ShapeError);

        const auto c1 = example_c1();
        CHECK(residual(c1, EvidenceVector::from_sets(2, {{0, 1}, {0}, {1}})) == CoalitionIndexSet{0, 1});
        CHECK(residual(c1, EvidenceVector::from_sets(2, {{0, 1}, {0, 1}, {0, 1}})).size() == 3);
    }

    TEST_CASE("code invariants") {
        CHECK_THROWS_WITH_AS(Code::from_rows(3, {{0, 3}}), doctest::Contains("symbol out of range"), ShapeError);
        CHECK_THROWS_WITH_AS(Code::from_rows(2, {{0, 1}, {0, 1}}), doctest::Contains("duplicate codeword"), ShapeError);
        CHECK_THROWS_AS(Code::from_rows(2, {{0, 1}, {0}}), ShapeError);
        CHECK_THROWS_AS(EvidenceVector::from_sets(2, {{0}, {}}), ShapeError);
        CHECK(example_c1().rate() == doctest::Approx(std::log2(3.0) / 3));
    }

    TEST_CASE("coalition enumeration") {
        auto count = [](std::size_t M, std::size_t t) {
            CoalitionEnumerator e(M, t);
            std::set<std::vector<std::size_t>> seen;
            std::vector<std::size_t> prev;
            std::size_t n = 0;
            while (e.next()) {
                std::vector<std::size_t> cur(e.current().begin(), e.current().end());
                CHECK(seen.insert(cur).second);
                if (!prev.empty()) CHECK((prev.size() < cur.size() || (prev.size() == cur.size() && prev < cur)));
                prev = cur;
                ++n;
            }
            return n;
        };
        CHECK(count(3, 2) == 6);
        CHECK(count(4, 2) == 10);
        CHECK(count(5, 3) == 25);
        CHECK(count(7, 7) == 127);
        CHECK(coalition_count(5, 3) == 25);
        CHECK(binomial(64, 32) == 1832624140942590534ull);
        CHECK(binomial(200, 100) == UINT64_MAX);
    }

    TEST_CASE("descendant properties on random codes") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 100; ++trial) {
            const auto c = oracle::random_code(rng, 2 + trial % 3, 1 + trial % 6, 2 + trial % 9);
            for (const auto& J : oracle::subsets(c.size(), 1, 3)) {
                const CoalitionIndexSet S(J);
                const auto d = desc(c, S);
                CHECK(d.sets() == [&] {
                    std::vector<std::vector<Symbol>> v;
                    for (const auto& s : oracle::desc(c, J)) v.emplace_back(s.begin(), s.end());
                    return v;
                }());
                for (auto j : J) CHECK(covers(c.codeword(j), d));
                CHECK(S.is_subset_of(residual(c, d)));
                CHECK(residual(c, d).size() == oracle::residual(c, oracle::desc(c, J)).size());
                // Adding a member only grows every position set.
                for (std::size_t extra = 0; extra < c.size(); ++extra) {
                    auto bigger = J;
                    bigger.push_back(extra);
                    const auto db = desc(c, CoalitionIndexSet(bigger));
                    for (std::size_t i = 0; i < c.length(); ++i) {
                        for (auto s : d.symbols(i)) CHECK(db.contains(i, s));
                    }
                }
            }
        }
    }

    TEST_CASE("wide alphabets use several words per position") {
        const auto c = Code::from_rows(200, {{0, 199}, {130, 64}, {63, 64}});
        const auto d = desc(c, {0, 1});
        CHECK(d.words_per_position() == 4);
        CHECK(d.symbols(0) == std::vector<Symbol>{0, 130});
        CHECK(d.symbols(1) == std::vector<Symbol>{64, 199});
        CHECK(residual(c, d) == CoalitionIndexSet{0, 1});
        CHECK(desc_equals(c, std::vector<std::size_t>{0, 1}, d));
        CHECK_FALSE(desc_equals(c, std::vector<std::size_t>{0, 2}, d));
    }

    TEST_CASE("evidence hashing separates distinct vectors") {
        std::unordered_set<std::uint64_t> hashes;
        const auto c = Code::from_rows(2, {{0, 0, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 1}, {0, 0, 1, 1}});
        std::set<std::vector<std::vector<Symbol>>> distinct;
        for (const auto& J : oracle::subsets(5, 1, 5)) {
            const auto d = desc(c, CoalitionIndexSet(J));
            if (distinct.insert(d.sets()).second) CHECK(hashes.insert(d.hash()).second);
        }
    }
}
