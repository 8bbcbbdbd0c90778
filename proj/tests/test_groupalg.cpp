#include "doctest.h"

#include "pident/groupalg.hpp"

#include <random>

using namespace pident;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

GroupAlgebraElement element(int n, std::initializer_list<std::pair<const char*, Rational>> terms) {
    GroupAlgebraElement x(n);
    for (const auto& [p, c] : terms) {
        x.add(P(p), c);
    }
    return x;
}

const Rational third(1, 3);
const Rational sixth(1, 6);

}  // namespace

TEST_CASE("basic group algebra arithmetic") {
    auto p = P("213");
    auto q = P("132");
    CHECK(multiply(GroupAlgebraElement(p), GroupAlgebraElement(q)) == GroupAlgebraElement(compose(p, q)));
    auto x = element(3, {{"123", 1}, {"213", 2}});
    CHECK((x - x).is_zero());
    CHECK(x.coeff(P("213")) == Rational(2));
    CHECK(x.coeff(P("321")) == Rational(0));
    CHECK_THROWS(multiply(x, GroupAlgebraElement(P("12"))));
}

TEST_CASE("n = 3 sums and idempotents") {
    auto tabs = standard_tableaux(Partition::parse("21"));
    CHECK(symmetric_sum(tabs[0]) == element(3, {{"123", 1}, {"213", 1}}));
    CHECK(alternating_sum(tabs[0]) == element(3, {{"123", 1}, {"321", -1}}));
    CHECK(symmetric_sum(tabs[1]) == element(3, {{"123", 1}, {"321", 1}}));
    CHECK(alternating_sum(tabs[1]) == element(3, {{"123", 1}, {"213", -1}}));
    CHECK(alternating_sum(Tableau::parse("123")) == GroupAlgebraElement(Permutation::identity(3)));

    CHECK(idempotent(tabs[0]) == element(3, {{"123", third}, {"213", third}, {"312", -third}, {"321", -third}}));
    CHECK(idempotent(tabs[1]) == element(3, {{"123", third}, {"213", -third}, {"231", -third}, {"321", third}}));
    CHECK(idempotent(Tableau::parse("1/2/3")) == element(3, {{"123", sixth},
                                                              {"132", -sixth},
                                                              {"213", -sixth},
                                                              {"231", sixth},
                                                              {"312", sixth},
                                                              {"321", -sixth}}));
    auto e = idempotent(tabs[0]);
    CHECK(e * e == e);
}

TEST_CASE("n = 3 matrix units") {
    Wedderburn mu(Partition::parse("21"));
    CHECK(mu.xi() == IntMatrix::identity(2));
    CHECK(mu.s(1, 2) == P("132"));
    CHECK(mu.s(2, 1) == P("132"));
    CHECK(mu.unit(1, 2) == element(3, {{"132", third}, {"231", third}, {"312", -third}, {"321", -third}}));
    CHECK(mu.unit(2, 1) == element(3, {{"132", third}, {"213", -third}, {"231", -third}, {"312", third}}));
    CHECK(mu.unit(1, 2) * mu.unit(2, 1) == mu.unit(1, 1));
    CHECK((mu.unit(1, 2) * mu.unit(1, 1)).is_zero());
    CHECK_THROWS_AS(mu.unit(3, 1), std::out_of_range);
}

TEST_CASE("psi for n = 3") {
    const std::int64_t psi6[6][6] = {{1, 2, 0, 0, 2, 1},   {1, 0, 2, 2, 0, -1},   {1, 2, 0, -2, -2, -1},
                                     {1, 0, 2, -2, -2, 1}, {1, -2, -2, 2, 0, 1},  {1, -2, -2, 0, 2, -1}};
    const std::int64_t inv[6][6] = {{1, 1, 1, 1, 1, 1},   {1, 0, 1, -1, 0, -1}, {0, 1, -1, 1, -1, 0},
                                    {0, 1, 0, -1, 1, -1}, {1, 0, -1, 0, -1, 1}, {1, -1, -1, 1, 1, -1}};
    RatMatrix psi = psi_matrix(3);
    RatMatrix expected(6, 6);
    RatMatrix expected_inv(6, 6);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            expected(i, j) = Rational(psi6[i][j], 6);
            expected_inv(i, j) = Rational(inv[i][j]);
        }
    }
    CHECK(psi == expected);
    CHECK(rational_inverse(psi) == expected_inv);
    CHECK(psi_matrix(1) == RatMatrix{{Rational(1)}});
    CHECK_THROWS(psi_matrix(6));
}

TEST_CASE("xi matrices") {
    CHECK(xi_matrix(Partition::parse("21")) == IntMatrix::identity(2));
    IntMatrix expected = IntMatrix::identity(5);
    expected(0, 4) = -1;
    CHECK(xi_matrix(Partition::parse("32")) == expected);
    CHECK(xi_matrix(Partition::parse("4")) == IntMatrix{{1}});
    for (int n = 1; n <= 7; ++n) {
        for (const auto& lambda : partitions(n)) {
            auto xi = xi_matrix(lambda);
            for (std::size_t i = 0; i < xi.rows(); ++i) {
                REQUIRE(xi(i, i) == 1);
                for (std::size_t j = 0; j < xi.cols(); ++j) {
                    REQUIRE((xi(i, j) == 0 || xi(i, j) == 1 || xi(i, j) == -1));
                    if (j < i) {
                        REQUIRE(xi(i, j) == 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("young symmetrizer products") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& lambda : partitions(n)) {
            auto tabs = standard_tableaux(lambda);
            std::vector<GroupAlgebraElement> d;
            for (const auto& t : tabs) {
                d.push_back(young_symmetrizer(t));
            }
            for (std::size_t i = 0; i < tabs.size(); ++i) {
                auto e = idempotent(tabs[i]);
                REQUIRE(e * e == e);
                for (std::size_t j = 0; j < i; ++j) {
                    REQUIRE((d[i] * d[j]).is_zero());
                }
            }
        }
    }
    // Different shapes annihilate each other.
    for (int n = 2; n <= 4; ++n) {
        auto parts = partitions(n);
        for (std::size_t a = 0; a < parts.size(); ++a) {
            for (std::size_t b = 0; b < parts.size(); ++b) {
                if (a == b) {
                    continue;
                }
                for (const auto& ta : standard_tableaux(parts[a])) {
                    for (const auto& tb : standard_tableaux(parts[b])) {
                        REQUIRE((young_symmetrizer(ta) * young_symmetrizer(tb)).is_zero());
                    }
                }
            }
        }
    }
    auto d3 = young_symmetrizer(Tableau::parse("123"));
    auto d21 = young_symmetrizer(Tableau::parse("12/3"));
    CHECK((d3 * d21).is_zero());
}

TEST_CASE("conjugating tableaux conjugates the sums") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 5; ++n) {
        std::uniform_int_distribution<std::uint64_t> pick(1, factorial(n));
        for (const auto& lambda : partitions(n)) {
            for (const auto& t : standard_tableaux(lambda)) {
                auto p = Permutation::unrank(n, pick(rng));
                auto pt = apply(p, t);
                auto conj_h = symmetric_sum(t).left_times(p).times(p.inverse());
                auto conj_v = alternating_sum(t).left_times(p).times(p.inverse());
                REQUIRE(symmetric_sum(pt) == conj_h);
                REQUIRE(alternating_sum(pt) == conj_v);
            }
        }
    }
}

TEST_CASE("matrix unit relations") {
    auto check_all = [](int n, std::size_t stride) {
        std::vector<Wedderburn> ws;
        for (const auto& lambda : partitions(n)) {
            ws.emplace_back(lambda);
        }
        std::size_t counter = 0;
        for (std::size_t a = 0; a < ws.size(); ++a) {
            for (std::size_t b = 0; b < ws.size(); ++b) {
                const std::size_t da = ws[a].dim();
                const std::size_t db = ws[b].dim();
                for (std::size_t i = 1; i <= da; ++i) {
                    for (std::size_t j = 1; j <= da; ++j) {
                        auto u = ws[a].unit(i, j);
                        for (std::size_t k = 1; k <= db; ++k) {
                            for (std::size_t l = 1; l <= db; ++l) {
                                if (counter++ % stride != 0) {
                                    continue;
                                }
                                auto prod = u * ws[b].unit(k, l);
                                if (a == b && j == k) {
                                    REQUIRE(prod == ws[a].unit(i, l));
                                } else {
                                    REQUIRE(prod.is_zero());
                                }
                            }
                        }
                    }
                }
            }
        }
    };
    for (int n = 1; n <= 4; ++n) {
        check_all(n, 1);
    }
    check_all(5, 97);

    // The units of all shapes sum to the identity.
    for (int n = 1; n <= 4; ++n) {
        GroupAlgebraElement sum(n);
        for (const auto& lambda : partitions(n)) {
            Wedderburn w(lambda);
            for (std::size_t i = 1; i <= w.dim(); ++i) {
                sum += w.unit(i, i);
            }
        }
        CHECK(sum == GroupAlgebraElement(Permutation::identity(n)));
    }
}

TEST_CASE("psi is invertible") {
    for (int n = 1; n <= 4; ++n) {
        auto psi = psi_matrix(n);
        CHECK(rational_rank(psi) == factorial(n));
    }
}
