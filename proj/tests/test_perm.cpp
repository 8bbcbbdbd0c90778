#include "doctest.h"

#include "pident/perm.hpp"

#include <random>
#include <stdexcept>
#include <set>

using namespace pident;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}  // namespace

TEST_CASE("compose applies the right factor first") {
    CHECK(compose(P("213"), P("132")) == P("231"));
    CHECK(compose(Permutation::identity(3), P("312")) == P("312"));
    CHECK(compose(P("23451"), P("23451").inverse()).is_identity());
    CHECK_THROWS_AS(compose(P("21"), P("132")), std::invalid_argument);
}

TEST_CASE("sign") {
    CHECK(P("123").sign() == 1);
    CHECK(P("213").sign() == -1);
    CHECK(P("23451").sign() == 1);
    CHECK(P("321").sign() == -1);
}

TEST_CASE("lex rank and enumeration") {
    CHECK(P("123").lex_rank() == 1);
    CHECK(P("132").lex_rank() == 2);
    CHECK(P("321").lex_rank() == 6);

    auto s3 = enumerate(3);
    std::vector<std::string> text;
    for (const auto& p : s3) {
        text.push_back(p.to_string());
    }
    CHECK(text == std::vector<std::string>{"123", "132", "213", "231", "312", "321"});
    CHECK(enumerate(1).size() == 1);
    CHECK(enumerate(5).size() == 120);
    CHECK_THROWS(enumerate(11));

    for (int n = 1; n <= 6; ++n) {
        auto all = enumerate(n);
        for (std::size_t i = 0; i < all.size(); ++i) {
            REQUIRE(all[i].lex_rank() == i + 1);
            REQUIRE(Permutation::unrank(n, i + 1) == all[i]);
            if (i > 0) {
                REQUIRE(all[i - 1] < all[i]);
            }
        }
    }
}

TEST_CASE("group laws on random pairs") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 7; ++n) {
        std::uniform_int_distribution<std::uint64_t> pick(1, factorial(n));
        for (int trial = 0; trial < 50; ++trial) {
            auto p = Permutation::unrank(n, pick(rng));
            auto q = Permutation::unrank(n, pick(rng));
            auto id = Permutation::identity(n);
            CHECK((p * q).sign() == p.sign() * q.sign());
            CHECK(p * id == p);
            CHECK(id * p == p);
            CHECK((p * p.inverse()).is_identity());
        }
    }
}

TEST_CASE("parsing") {
    CHECK(P("2,1,3") == P("213"));
    auto ten = Permutation::parse("10,1,2,3,4,5,6,7,8,9");
    CHECK(ten.degree() == 10);
    CHECK(ten.to_string() == "10,1,2,3,4,5,6,7,8,9");
    CHECK_THROWS_AS(P("112"), std::invalid_argument);
    CHECK_THROWS_AS(P("13"), std::invalid_argument);
    CHECK_THROWS_AS(P("1a"), std::invalid_argument);
}

TEST_CASE("block groups") {
    auto g = block_group(4, {{1, 2}, {3, 4}}, 100);
    std::set<std::string> got;
    for (const auto& p : g) {
        got.insert(p.to_string());
    }
    CHECK(got == std::set<std::string>{"1234", "1243", "2134", "2143"});
    CHECK_THROWS_AS(block_group(5, {{1, 2, 3, 4, 5}}, 100), std::length_error);
}
