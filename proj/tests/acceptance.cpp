// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.
#include "pident/clifton.hpp"
#include "pident/groupalg.hpp"
#include "pident/identities.hpp"
#include "pident/random.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace pident;

namespace {

constexpr Residue kBig = 2147483647;

// Collects the first few failure notes of one criterion.
struct Check {
    bool ok = true;
    std::ostringstream note;
    int notes = 0;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (notes++ < 4) {
                note << (notes > 1 ? "; " : "") << what;
            }
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<std::string(Check&)>& body) {
    Check c;
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        detail = body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!c.ok) {
        ++failures;
    }
    std::printf("[%s] %2d %s (%.2f s)", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs);
    if (!detail.empty()) {
        std::printf(" | %s", detail.c_str());
    }
    if (!c.ok) {
        std::printf(" | %s", c.note.str().c_str());
    }
    std::printf("\n");
    std::fflush(stdout);
}

Permutation P(const char* s) { return Permutation::parse(s); }
Partition L(const char* s) { return Partition::parse(s); }

GroupAlgebraElement element(int n, std::initializer_list<std::pair<const char*, Rational>> terms) {
    GroupAlgebraElement x(n);
    for (const auto& [p, c] : terms) {
        x.add(P(p), c);
    }
    return x;
}

using Sparse = std::vector<std::vector<std::pair<int, int>>>;

IntMatrix from_sparse(const Sparse& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (auto [c, v] : rows[i]) {
            m(i, c - 1) = v;
        }
    }
    return m;
}

IntMatrix rcf22() {
    IntMatrix m(8, 10);
    for (std::size_t i = 0; i < 8; ++i) {
        m(i, i) = 1;
        m(i, i % 2 == 0 ? 8 : 9) = -1;
    }
    return m;
}

const IntMatrix kN22{
    {-1, 1, 1, 0, 1, -1, -1, 0, 0, 0},  {-1, 0, 0, 1, 1, 0, 0, -1, 0, 0},   {0, 1, 1, -1, 0, -1, -1, 1, 0, 0},
    {1, 0, 0, -1, -1, 0, 0, 1, 0, 0},   {0, 0, 0, 0, 2, -1, 0, 0, -2, 1},   {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, -1, -2, 1, 0, 0, 0, 0, 0, 0},   {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},     {0, 0, 0, 0, 0, 0, -1, -1, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},     {-2, 1, 0, 0, 2, -1, 0, 0, 0, 0},   {-2, 1, 0, 0, 2, -1, 0, 0, 0, 0},
    {0, 0, 1, -1, 0, 1, -1, 1, 0, -1},  {0, 0, 0, -1, 1, 0, 0, 1, -1, 0},   {0, 0, 0, -1, 1, 0, 0, 1, -1, 0},
    {0, 0, 1, -1, 0, 1, -1, 1, 0, -1},  {1, 1, -1, -1, 0, 0, 0, 0, 0, 0},   {1, 1, -1, -1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, -2, 1, 2, -1},   {0, 0, 0, 0, 0, 0, -2, 1, 2, -1},   {1, 1, 0, -1, -1, 1, -1, 0, 1, -1},
    {-1, 2, 1, -1, 0, 1, 0, -1, 0, -1}};

const Sparse kFig4All{{{1, 1}, {12, -2}, {13, 1}},
                      {{2, 1}, {12, -2}, {14, 1}},
                      {{3, 1}, {12, -1}},
                      {{4, 1}, {12, -3}, {13, 1}, {14, 1}},
                      {{5, 1}, {13, -1}},
                      {{6, 1}, {12, -1}},
                      {{7, 1}, {12, -1}},
                      {{8, 1}, {12, -1}},
                      {{9, 1}, {12, -1}},
                      {{10, 1}, {12, -2}, {14, 1}},
                      {{11, 1}, {12, 1}, {13, -1}, {14, -1}}};

const Sparse kFig4Old{{{1, 1}, {9, -3}, {12, 1}, {13, 1}},
                      {{2, 1}, {9, -1}, {12, -1}, {14, 1}},
                      {{3, 1}, {9, -2}, {12, 1}},
                      {{4, 1}, {9, -2}, {12, -1}, {13, 1}, {14, 1}},
                      {{5, 1}, {9, -1}, {12, 1}, {13, -1}},
                      {{6, 1}, {9, -1}},
                      {{7, 1}, {12, -1}},
                      {{8, 1}, {9, -2}, {12, 1}},
                      {{10, 1}, {12, -2}, {14, 1}},
                      {{11, 1}, {12, 1}, {13, -1}, {14, -1}}};

std::vector<MultilinearPoly> join(std::initializer_list<const char*> names) {
    std::vector<MultilinearPoly> out;
    for (const char* name : names) {
        for (auto& p : named_identity(name)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

bool vanishes_mod(const MultilinearPoly& p, const StructureAlgebra& a, int trials, std::uint64_t seed) {
    const ModAlgebra ap = a.reduce(kBig);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<ModVector> args;
        for (int i = 0; i < p.degree(); ++i) {
            args.push_back(ap.random_element(rng));
        }
        for (auto x : evaluate(p, ap, args)) {
            if (x != 0) {
                return false;
            }
        }
    }
    return true;
}

int jobs() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) {
        s += (s.empty() ? "" : ",") + std::to_string(x);
    }
    return s;
}

}  // namespace

int main() {
    std::cout << "acceptance: modulus 101, seed 1 unless stated\n";

    criterion(1, "n=3 Wedderburn data: units, psi, psi^-1, psi^-1(p)", [](Check& c) {
        const Rational third(1, 3);
        const Rational sixth(1, 6);
        Wedderburn w21(L("21"));
        Wedderburn w3(L("3"));
        Wedderburn w111(L("111"));
        c.expect(w3.unit(1, 1) == element(3, {{"123", sixth}, {"132", sixth}, {"213", sixth},
                                              {"231", sixth}, {"312", sixth}, {"321", sixth}}), "U^3");
        c.expect(w111.unit(1, 1) == element(3, {{"123", sixth}, {"132", -sixth}, {"213", -sixth},
                                                {"231", sixth}, {"312", sixth}, {"321", -sixth}}), "U^111");
        c.expect(w21.unit(1, 1) == element(3, {{"123", third}, {"213", third}, {"312", -third}, {"321", -third}}),
                 "U^21_11");
        c.expect(w21.unit(1, 2) == element(3, {{"132", third}, {"231", third}, {"312", -third}, {"321", -third}}),
                 "U^21_12");
        c.expect(w21.unit(2, 1) == element(3, {{"132", third}, {"213", -third}, {"231", -third}, {"312", third}}),
                 "U^21_21");
        c.expect(w21.unit(2, 2) == element(3, {{"123", third}, {"213", -third}, {"231", -third}, {"321", third}}),
                 "U^21_22");

        const std::int64_t psi6[6][6] = {{1, 2, 0, 0, 2, 1},   {1, 0, 2, 2, 0, -1},   {1, 2, 0, -2, -2, -1},
                                         {1, 0, 2, -2, -2, 1}, {1, -2, -2, 2, 0, 1},  {1, -2, -2, 0, 2, -1}};
        const std::int64_t inv[6][6] = {{1, 1, 1, 1, 1, 1},   {1, 0, 1, -1, 0, -1}, {0, 1, -1, 1, -1, 0},
                                        {0, 1, 0, -1, 1, -1}, {1, 0, -1, 0, -1, 1}, {1, -1, -1, 1, 1, -1}};
        RatMatrix psi = psi_matrix(3);
        RatMatrix psi_inv = rational_inverse(psi);
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                c.expect(psi(i, j) == Rational(psi6[i][j], 6), "psi entry");
                c.expect(psi_inv(i, j) == Rational(inv[i][j]), "psi^-1 entry");
            }
        }
        // psi^-1(p) = (R^3(p), R^21(p), R^111(p)), one column per permutation.
        const std::map<std::string, IntMatrix> r21{
            {"123", {{1, 0}, {0, 1}}},   {"132", {{0, 1}, {1, 0}}},   {"213", {{1, -1}, {0, -1}}},
            {"231", {{-1, 1}, {-1, 0}}}, {"312", {{0, -1}, {1, -1}}}, {"321", {{-1, 0}, {-1, 1}}}};
        for (const auto& p : enumerate(3)) {
            const auto col = p.lex_rank() - 1;
            const IntMatrix& m = r21.at(p.to_string());
            const std::int64_t tuple[6] = {1, m(0, 0), m(0, 1), m(1, 0), m(1, 1), p.sign()};
            for (int i = 0; i < 6; ++i) {
                c.expect(psi_inv(i, col) == Rational(tuple[i]), "psi^-1(" + p.to_string() + ")");
            }
        }
        return "6 units, 6x6 psi and inverse, 6 tuples exact";
    });

    criterion(2, "Clifton matrices for 32 / 23451 and 21 / 213", [](Check& c) {
        IntMatrix a_id = IntMatrix::identity(5);
        a_id(0, 4) = -1;
        c.expect(clifton_matrix(L("32"), Permutation::identity(5)) == a_id, "A_iota");
        const IntMatrix a_p{{-1, 0, 1, 0, 0}, {-1, 0, 0, 0, 1}, {0, -1, 0, 0, 0}, {-1, 0, 0, 1, 0}, {0, -1, 0, 1, 0}};
        c.expect(clifton_matrix(L("32"), P("23451")) == a_p, "A_p");
        const IntMatrix r_p{{-1, -1, 1, 1, 0}, {-1, 0, 0, 0, 1}, {0, -1, 0, 0, 0}, {-1, 0, 0, 1, 0}, {0, -1, 0, 1, 0}};
        c.expect(rep_matrix(L("32"), P("23451")) == r_p, "R_p");
        c.expect(clifton_matrix(L("21"), P("213")) == IntMatrix{{1, -1}, {0, -1}}, "A^21_213");
        return "";
    });

    criterion(3, "structural invariants", [](Check& c) {
        for (int n = 1; n <= 7; ++n) {
            std::uint64_t sum = 0;
            for (const auto& lambda : partitions(n)) {
                sum += dimension(lambda) * dimension(lambda);
            }
            c.expect(sum == factorial(n), "sum d^2 at n=" + std::to_string(n));
        }
        std::size_t unit_pairs = 0;
        for (int n = 1; n <= 4; ++n) {
            std::vector<std::pair<Partition, std::vector<std::vector<GroupAlgebraElement>>>> units;
            GroupAlgebraElement one(n);
            for (const auto& lambda : partitions(n)) {
                Wedderburn w(lambda);
                std::vector<std::vector<GroupAlgebraElement>> u(w.dim());
                for (std::size_t i = 1; i <= w.dim(); ++i) {
                    const auto& e = w.idempotent(i);
                    c.expect(e * e == e, "E_i^2 at " + lambda.to_string());
                    for (std::size_t j = 1; j <= w.dim(); ++j) {
                        u[i - 1].push_back(w.unit(i, j));
                    }
                    one += u[i - 1][i - 1];
                }
                units.emplace_back(lambda, std::move(u));
            }
            c.expect(one == GroupAlgebraElement(Permutation::identity(n)), "sum U_ii = 1");
            for (std::size_t a = 0; a < units.size(); ++a) {
                for (std::size_t b = 0; b < units.size(); ++b) {
                    const auto& ua = units[a].second;
                    const auto& ub = units[b].second;
                    for (std::size_t i = 0; i < ua.size(); ++i) {
                        for (std::size_t j = 0; j < ua.size(); ++j) {
                            for (std::size_t k = 0; k < ub.size(); ++k) {
                                for (std::size_t l = 0; l < ub.size(); ++l) {
                                    auto prod = ua[i][j] * ub[k][l];
                                    ++unit_pairs;
                                    if (a == b && j == k) {
                                        c.expect(prod == ua[i][l], "U_ij U_jl = U_il");
                                    } else {
                                        c.expect(prod.is_zero(), "U_ij U_kl = 0");
                                    }
                                }
                            }
                        }
                    }
                }
            }
            for (const auto& [mu, u] : units) {
                for (std::size_t i = 0; i < u.size(); ++i) {
                    for (std::size_t j = 0; j < u.size(); ++j) {
                        for (const auto& [lambda, v] : units) {
                            RatMatrix expect(v.size(), v.size());
                            if (lambda == mu) {
                                expect(i, j) = Rational(1);
                            }
                            c.expect(phi(lambda, u[i][j]) == expect, "phi(U) at " + lambda.to_string());
                        }
                    }
                }
            }
        }
        Rng rng(1);
        std::size_t hom = 0;
        for (int n = 1; n <= 6; ++n) {
            for (const auto& lambda : partitions(n)) {
                RepTable table(lambda);
                for (int t = 0; t < 200; ++t) {
                    auto p = Permutation::unrank(n, rng.below(factorial(n)) + 1);
                    auto q = Permutation::unrank(n, rng.below(factorial(n)) + 1);
                    c.expect(table.matrix(p * q) == table.matrix(p) * table.matrix(q), "R(pq) at " + lambda.to_string());
                    ++hom;
                }
            }
        }
        return std::to_string(unit_pairs) + " unit products, " + std::to_string(hom) + " homomorphism pairs";
    });

    criterion(4, "M2 degree 4: rank 23, nullity 1, spanned by s4", [](Check& c) {
        FillOptions opt;
        auto r = fill_and_reduce(matrix_algebra(2), 4, true, opt);
        c.expect(r.rank == 23, "rank " + std::to_string(r.rank));
        c.expect(r.identities.rows() == 1, "nullity");
        if (r.identities.rows() == 1) {
            RowReducer red(24, 101);
            red.add_row(r.identities.row(0));
            c.expect(!red.add_row(to_vector(standard_polynomial(4), 101)), "s4 not in nullspace");
        }
        return "seed 1, ranks " + join_sizes(r.rank_history);
    });

    criterion(5, "M2 degree 5: All 29, Old 24, New 5", [](Check& c) {
        FillOptions opt;
        auto r = fill_and_reduce(matrix_algebra(2), 5, true, opt);
        auto old = module_generators(consequences(standard_polynomial(4)), 5, true, 101);
        c.expect(r.identities.rows() == 29, "All");
        c.expect(old.rows() == 24, "Old");
        auto news = global_new_generators(r.identities, old, 5, true);
        c.expect(news.size() == 1, "one module generator");
        std::size_t support = 0;
        if (!news.empty()) {
            for (auto x : news[0]) {
                support += x != 0 ? 1 : 0;
            }
        }
        return "seed 1, generator support " + std::to_string(support) +
               (support <= 18 ? " (<= 18)" : " (> 18, dimension triple decides)");
    });

    criterion(6, "alternative laws in degree 4: ranks, f member, N22", [](Check& c) {
        const auto alt = named_identity("alt");
        auto verdict = membership_test(alt, named_identity("f").front(), 101);
        c.expect(verdict.member, "f not a member");
        const std::size_t expected[] = {4, 12, 8, 10, 2};
        std::vector<std::size_t> got;
        for (std::size_t i = 0; i < verdict.rows.size() && i < 5; ++i) {
            got.push_back(verdict.rows[i].known_rank);
            c.expect(verdict.rows[i].known_rank == expected[i], "rank " + verdict.rows[i].lambda.to_string());
        }
        PartitionData d22(L("22"), 101);
        auto stack = lift(alt, 4);
        stack.push_back(named_identity("f").front());
        MatrixModP n22(0, 10, 101);
        for (const auto& g : stack) {
            n22.stack(phi_mod(g, d22.reps(), 101));
        }
        c.expect(n22.to_signed() == kN22, "N22 stack");
        c.expect(rcf(n22).without_zero_rows().to_signed() == rcf22(), "N22 RCF");
        return "ranks " + join_sizes(got);
    });

    criterion(7, "octonions degree 4: allmat(22), oldmat = allmat", [](Check& c) {
        auto O = octonions();
        RunOptions opt;
        opt.jobs = jobs();
        auto reports = run_identities(O, 4, {{"alt", named_identity("alt")}}, opt);
        for (const auto& r : reports) {
            c.expect(r.oldmat == r.allmat, "oldmat != allmat at " + r.lambda.to_string());
            if (r.lambda == L("22")) {
                c.expect(r.allmat.to_signed() == rcf22(), "allmat(22)");
            }
        }
        return "";
    });

    criterion(8, "octonions degree 5: Table 2, Figure 4, new generator", [](Check& c) {
        auto O = octonions();
        const std::vector<GeneratorSet> sets{{"alt", join({"alt"})},
                                             {"alt+R1+R2", join({"alt", "R1", "R2"})},
                                             {"alt+R2+HP5", join({"alt", "R2", "HP5"})},
                                             {"alt+R2", join({"alt", "R2"})},
                                             {"alt+HP5", join({"alt", "HP5"})}};
        // lambda: r_all, then r_old for each set.
        const std::map<std::string, std::vector<std::size_t>> table{
            {"5", {13, 13, 13, 13, 13, 13}},   {"41", {52, 52, 52, 52, 52, 52}}, {"32", {66, 65, 66, 66, 65, 66}},
            {"311", {76, 75, 76, 76, 76, 75}}, {"221", {64, 63, 63, 64, 63, 64}}, {"2111", {48, 46, 47, 48, 47, 47}},
            {"11111", {11, 10, 10, 11, 10, 11}}};
        RunOptions opt;
        opt.jobs = jobs();
        auto reports = run_identities(O, 5, sets, opt);
        c.expect(reports.size() == 7, "seven rows");
        for (const auto& r : reports) {
            std::vector<std::size_t> row{r.r_all};
            row.insert(row.end(), r.r_old.begin(), r.r_old.end());
            c.expect(row == table.at(r.lambda.to_string()), "row " + r.lambda.to_string() + " = " + join_sizes(row));
            if (r.lambda == L("11111")) {
                c.expect(r.allmat.to_signed() == from_sparse(kFig4All, 14), "Figure 4 allmat");
                c.expect(r.oldmat.to_signed() == from_sparse(kFig4Old, 14), "Figure 4 oldmat");
                c.expect(r.new_cols == std::vector<std::size_t>{9}, "new column");
                MultilinearPoly expect(5);
                for (const auto& s : enumerate(5)) {
                    expect.add(9, s, s.sign());
                    expect.add(12, s, -s.sign());
                }
                c.expect(r.identities.size() == 1 && Rational(120) * r.identities[0] == expect, "E_99 - E_9,12");
            }
        }
        return "7 rows x 6 columns";
    });

    criterion(9, "octonions degree 6: Table 3, each of HP6/SZ/newidentity6 closes the gap", [](Check& c) {
        auto O = octonions();
        const std::vector<GeneratorSet> sets{{"alt", join({"alt"})},
                                             {"alt+R2+HP5", join({"alt", "R2", "HP5"})},
                                             {"+HP6", join({"alt", "R2", "HP5", "HP6"})},
                                             {"+SZ", join({"alt", "R2", "HP5", "SZ"})},
                                             {"+newidentity6", join({"alt", "R2", "HP5", "newidentity6"})}};
        const std::map<std::string, std::vector<std::size_t>> table{
            {"6", {41, 41, 41}},        {"51", {205, 205, 205}},    {"42", {372, 369, 372}},
            {"411", {409, 406, 409}},   {"33", {207, 205, 207}},    {"321", {660, 652, 660}},
            {"3111", {407, 400, 407}},  {"222", {204, 202, 204}},   {"2211", {368, 360, 368}},
            {"21111", {202, 194, 202}}, {"111111", {40, 36, 39}}};
        RunOptions opt;
        opt.jobs = jobs();
        auto reports = run_identities(O, 6, sets, opt);
        c.expect(reports.size() == 11, "eleven rows");
        for (const auto& r : reports) {
            std::vector<std::size_t> row{r.r_all, r.r_old[0], r.r_old[1]};
            c.expect(row == table.at(r.lambda.to_string()), "row " + r.lambda.to_string() + " = " + join_sizes(row));
            for (std::size_t s = 2; s < sets.size(); ++s) {
                c.expect(r.r_old[s] == r.r_all, sets[s].name + " at " + r.lambda.to_string());
            }
        }
        return "11 rows, 3 closing sets";
    });

    criterion(10, "identity verification on octonions and Cayley-Dickson algebras", [](Check& c) {
        auto O = octonions();
        std::uint64_t seed = 1;
        for (const char* name : {"R1", "R2", "HP5", "HP6", "SZ", "newidentity6"}) {
            c.expect(vanishes_mod(named_identity(name).front(), O, 100, seed++), name);
        }
        Rng rng(1);
        auto nonzero = [&] {
            std::int64_t v = 0;
            while (v == 0) {
                v = rng.between(-5, 5);
            }
            return Rational(v);
        };
        std::string params;
        for (int t = 0; t < 5; ++t) {
            const Rational a = nonzero();
            const Rational b = nonzero();
            const Rational g = nonzero();
            params += (t ? " " : "") + a.to_string() + "," + b.to_string() + "," + g.to_string();
            auto cd = cayley_dickson(a, b, g);
            for (const auto& law : named_identity("alt")) {
                for (int k = 0; k < 5; ++k) {
                    std::vector<AlgebraElement> args;
                    for (int i = 0; i < 3; ++i) {
                        args.push_back(cd.random_element(rng));
                    }
                    c.expect(evaluate(law, cd, args) == cd.zero(), "alt on cd(" + params + ")");
                }
            }
        }
        return "100 tuples mod 2^31-1 each; exact alt on cd " + params;
    });

    criterion(11, "degree 7 (NOT CI-verified; partial evidence only)", [](Check& c) {
        auto O = octonions();
        const auto gens = join({"alt", "R2", "HP5", "HP6"});
        const auto dir = std::filesystem::temp_directory_path() / "pident_acceptance_d7";
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
        std::string detail;
        for (const char* name : {"7", "1111111"}) {
            PartitionData data(L(name), 101);
            FillCheckpoint cp{(dir / (std::string("allmat_") + name + ".json")).string(), "octonions-7"};
            FillOptions cut;
            cut.max_iters = 3;
            bool interrupted = false;
            try {
                (void)compute_allmat(O, data, false, cut, cp);
            } catch (const RankUnstable&) {
                interrupted = true;
            }
            c.expect(interrupted, std::string("no interruption at ") + name);
            auto all = compute_allmat(O, data, false, FillOptions{}, cp);
            c.expect(all.resumed, std::string("not resumed at ") + name);
            auto old = compute_oldmat(gens, data, false);
            c.expect(old == all.allmat, std::string("r_old != r_all at ") + name);
            detail += std::string(detail.empty() ? "" : ", ") + name + ": r_all " + std::to_string(all.allmat.rows()) +
                      " r_old " + std::to_string(old.rows());
        }
        std::filesystem::remove_all(dir);
        return detail + "; resumed from checkpoints; other 13 partitions not run";
    });

    criterion(12, "oracle cross-checks", [](Check& c) {
        FillOptions opt;
        for (const auto& [alg, assoc] : {std::pair{octonions(), false}, std::pair{matrix_algebra(2), true}}) {
            for (int n = 3; n <= 4; ++n) {
                auto global = fill_and_reduce(alg, n, assoc, opt);
                std::size_t sum = 0;
                for (const auto& lambda : partitions(n)) {
                    PartitionData data(lambda, 101);
                    sum += data.dim() * compute_allmat(alg, data, assoc, opt).allmat.rows();
                }
                c.expect(global.identities.rows() == sum, alg.name() + " n=" + std::to_string(n));
            }
        }
        Rng rng(12);
        for (int t = 0; t < 20; ++t) {
            const auto rows = static_cast<std::size_t>(rng.between(2, 9));
            const auto cols = static_cast<std::size_t>(rng.between(2, 9));
            const auto inner = static_cast<std::size_t>(rng.between(1, 6));
            RatMatrix a(rows, inner);
            RatMatrix b(inner, cols);
            for (std::size_t i = 0; i < rows; ++i) {
                for (std::size_t k = 0; k < inner; ++k) {
                    a(i, k) = Rational(rng.between(-4, 4));
                }
            }
            for (std::size_t k = 0; k < inner; ++k) {
                for (std::size_t j = 0; j < cols; ++j) {
                    b(k, j) = Rational(rng.between(-4, 4));
                }
            }
            auto m = a * b;
            c.expect(rank(MatrixModP::from_rational(m, 101)) == rational_rank(m), "rank mismatch");
        }
        return "nullity sums exact; 20 matrices";
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures;
}
