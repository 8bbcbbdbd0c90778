// Command-line driver for the identity computations.

#include "pident/algebras.hpp"
#include "pident/clifton.hpp"
#include "pident/groupalg.hpp"
#include "pident/identities.hpp"
#include "pident/polyid.hpp"
#include "pident/random.hpp"
#include "pident/repmat.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace pident;
namespace fs = std::filesystem;

namespace {

enum Exit : int { kOk = 0, kFailure = 1, kUsage = 2, kUnstable = 3, kFound = 10 };

struct Common {
    std::uint32_t prime = kDefaultPrime;
    std::optional<std::uint64_t> seed;
    int stable_iters = 10;
    std::string partitions;
    int jobs = 1;
    std::string out;
    bool resume = false;
};

std::uint64_t resolve_seed(const Common& c) {
    if (c.seed) {
        return *c.seed;
    }
    std::random_device rd;
    const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32U) | rd();
    std::cout << "# seed " << s << " (pass --seed " << s << " to reproduce)\n";
    return s;
}

StructureAlgebra load_algebra(const std::string& spec) {
    if (fs::is_regular_file(spec)) {
        std::ifstream in(spec);
        std::ostringstream ss;
        ss << in.rdbuf();
        return StructureAlgebra::from_json(ss.str());
    }
    return builtin_algebra(spec);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        if (!cur.empty()) {
            out.push_back(cur);
        }
    }
    return out;
}

// Comma-separated named identities or fixture paths; "none" is the empty set.
GeneratorSet load_generators(const std::string& list) {
    GeneratorSet set{list, {}};
    for (const auto& item : split(list, ',')) {
        if (item == "none") {
            continue;
        }
        const auto polys = fs::is_regular_file(item) ? read_fixture(item) : named_identity(item);
        set.polys.insert(set.polys.end(), polys.begin(), polys.end());
    }
    return set;
}

MultilinearPoly load_single(const std::string& item) {
    auto set = load_generators(item);
    if (set.polys.size() != 1) {
        throw std::invalid_argument("'" + item + "' does not name a single polynomial");
    }
    return set.polys.front();
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

std::string rat_csv(const RatMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << (j == 0 ? "" : ",") << m(i, j);
        }
        os << '\n';
    }
    return os.str();
}

int cmd_tableaux(const std::string& text) {
    const auto lambda = Partition::parse(text);
    const auto ts = standard_tableaux(lambda);
    std::cout << "# lambda " << lambda.to_string() << " d " << dimension(lambda) << '\n';
    for (std::size_t i = 0; i < ts.size(); ++i) {
        std::cout << i + 1 << '\t' << ts[i].to_string() << '\n';
    }
    return kOk;
}

int cmd_units(int n, const Common& c) {
    if (n < 1 || n > kPsiMaxDegree) {
        throw std::invalid_argument("units: n must be in 1.." + std::to_string(kPsiMaxDegree));
    }
    const RatMatrix psi = psi_matrix(n);
    const RatMatrix inv = rational_inverse(psi);
    if (!c.out.empty()) {
        const fs::path dir(c.out);
        for (const auto& lambda : partitions(n)) {
            Wedderburn w(lambda);
            for (std::size_t i = 1; i <= w.dim(); ++i) {
                for (std::size_t j = 1; j <= w.dim(); ++j) {
                    write_file(dir / ("U_" + lambda.to_string() + "_" + std::to_string(i) + std::to_string(j) + ".txt"),
                               w.unit(i, j).to_string());
                }
            }
        }
        write_file(dir / "psi.csv", rat_csv(psi));
        write_file(dir / "psi_inverse.csv", rat_csv(inv));
    }
    std::cout << "# permutations (rows)\n";
    for (const auto& p : enumerate(n)) {
        std::cout << p.to_string() << '\n';
    }
    std::cout << "# psi\n" << psi.to_string() << "# psi inverse\n" << inv.to_string();
    return kOk;
}

int cmd_rep(const std::string& lambda_text, const std::string& perm_text) {
    const auto lambda = Partition::parse(lambda_text);
    const auto p = Permutation::parse(perm_text);
    std::cout << "# A_iota\n"
              << clifton_matrix(lambda, Permutation::identity(lambda.size())).to_string() << "# A_p\n"
              << clifton_matrix(lambda, p).to_string() << "# R(p)\n"
              << rep_matrix(lambda, p).to_string();
    return kOk;
}

int cmd_identities(const std::string& algebra, int n, const std::string& generators,
                   const std::vector<std::string>& extra, bool free_mode, bool assoc_mode, const Common& c) {
    const auto a = load_algebra(algebra);
    RunOptions opt;
    opt.fill.prime = c.prime;
    opt.fill.seed = resolve_seed(c);
    opt.fill.stable_iters = c.stable_iters;
    opt.jobs = c.jobs;
    opt.associative = assoc_mode || (a.associative() && !free_mode);
    for (const auto& t : split(c.partitions, ',')) {
        opt.partitions.push_back(Partition::parse(t));
    }
    if (!c.out.empty()) {
        const fs::path cp = fs::path(c.out) / "checkpoints";
        if (!c.resume) {
            fs::remove_all(cp);
        }
        opt.checkpoint_dir = cp.string();
    }
    std::vector<GeneratorSet> sets;
    sets.push_back(load_generators(generators));
    for (const auto& e : extra) {
        sets.push_back(load_generators(e));
    }
    for (auto& s : sets) {
        for (auto& g : s.polys) {
            if (g.associative() != opt.associative) {
                throw std::invalid_argument("generator set '" + s.name + "' does not match the " +
                                            (opt.associative ? "associative" : "nonassociative") + " mode");
            }
        }
    }
    opt.progress = [](const PartitionReport& r) {
        std::cerr << "# " << r.lambda.to_string() << ": d=" << r.d << " r_all=" << r.r_all;
        for (auto v : r.r_old) {
            std::cerr << " r_old=" << v;
        }
        std::cerr << " (" << r.seconds << " s)\n";
    };
    const auto reports = run_identities(a, n, sets, opt);
    const std::string csv = report_csv(reports, sets);
    std::cout << csv;

    std::size_t found = 0;
    std::vector<MultilinearPoly> all_new;
    for (const auto& r : reports) {
        for (std::size_t i = 0; i < r.identities.size(); ++i) {
            std::cout << "# new identity for lambda " << r.lambda.to_string() << " at column " << r.new_cols[i]
                      << " (" << r.identities[i].size() << " terms)\n";
            all_new.push_back(r.identities[i]);
        }
        found += r.identities.size();
    }
    std::cout << "# algebra " << a.name() << ", degree " << n << ", " << (opt.associative ? "associative" : "free")
              << " mode, p " << opt.fill.prime << ", seed " << opt.fill.seed << ", s " << opt.fill.stable_iters
              << "\n# generators " << sets.front().name << "; new identities: " << found << '\n';
    if (!c.out.empty()) {
        const fs::path dir(c.out);
        write_file(dir / "report.csv", csv);
        for (const auto& r : reports) {
            write_file(dir / ("allmat_" + r.lambda.to_string() + ".csv"), r.allmat.to_signed().to_csv());
            write_file(dir / ("oldmat_" + r.lambda.to_string() + ".csv"), r.oldmat.to_signed().to_csv());
        }
        if (!all_new.empty()) {
            write_file(dir / "new_identities.txt", to_fixture(all_new, "new"));
        }
    }
    return found > 0 ? kFound : kOk;
}

int cmd_membership(const std::string& known, const std::string& candidate, const Common& c) {
    const auto k = load_generators(known);
    const auto cand = load_single(candidate);
    const auto res = membership_test(k.polys, cand, c.prime);
    std::cout << "lambda,known_rank,with_candidate_rank\n";
    for (const auto& r : res.rows) {
        std::cout << r.lambda.to_string() << ',' << r.known_rank << ',' << r.with_candidate_rank << '\n';
    }
    std::cout << (res.member ? "member" : "not member") << '\n';
    return res.member ? kOk : kFound;
}

int cmd_verify(const std::string& identity, const std::string& algebra, int trials, bool exact, const Common& c) {
    const auto a = load_algebra(algebra);
    const auto polys = load_generators(identity).polys;
    Rng rng(resolve_seed(c));
    const std::uint32_t p = c.prime == kDefaultPrime ? 2147483647U : c.prime;
    const ModAlgebra ap = a.reduce(p);
    for (std::size_t idx = 0; idx < polys.size(); ++idx) {
        const auto& poly = polys[idx];
        for (int t = 0; t < trials; ++t) {
            bool zero = true;
            std::ostringstream witness;
            if (exact) {
                std::vector<AlgebraElement> args;
                for (int i = 0; i < poly.degree(); ++i) {
                    args.push_back(a.random_element(rng));
                }
                const auto v = evaluate(poly, a, args);
                zero = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
                for (int i = 0; i < poly.degree(); ++i) {
                    witness << "x" << i + 1 << " = " << a.format(args[i]) << '\n';
                }
                witness << "value = " << a.format(v) << '\n';
            } else {
                std::vector<ModVector> args;
                for (int i = 0; i < poly.degree(); ++i) {
                    args.push_back(ap.random_element(rng));
                }
                const auto v = evaluate(poly, ap, args);
                zero = std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
                for (int i = 0; i < poly.degree(); ++i) {
                    witness << "x" << i + 1 << " =";
                    for (auto x : args[i]) {
                        witness << ' ' << x;
                    }
                    witness << '\n';
                }
                witness << "value =";
                for (auto x : v) {
                    witness << ' ' << x;
                }
                witness << " (mod " << p << ")\n";
            }
            if (!zero) {
                std::cout << "fail: polynomial " << idx + 1 << " of " << identity << " is not an identity of "
                          << a.name() << " (trial " << t + 1 << ")\n"
                          << witness.str();
                return kFound;
            }
        }
    }
    std::cout << "pass: " << identity << " vanished on " << trials << " random tuples in " << a.name()
              << (exact ? " (exact)" : " (mod " + std::to_string(p) + ")") << '\n';
    return kOk;
}

int cmd_fixtures(const Common& c) {
    const fs::path dir(c.out.empty() ? "fixtures" : c.out);
    for (const auto& name : named_identity_names()) {
        write_file(dir / (name + ".txt"), to_fixture(named_identity(name), name));
        std::cout << (dir / (name + ".txt")).string() << '\n';
    }
    return kOk;
}

int cmd_fill(const std::string& algebra, int n, const std::string& old, bool free_mode, bool assoc_mode,
             const Common& c) {
    const auto a = load_algebra(algebra);
    const bool assoc = assoc_mode || (a.associative() && !free_mode);
    FillOptions opt;
    opt.prime = c.prime;
    opt.seed = resolve_seed(c);
    opt.stable_iters = c.stable_iters;
    const auto res = fill_and_reduce(a, n, assoc, opt);
    std::cout << "columns " << res.columns << "\nranks";
    for (auto r : res.rank_history) {
        std::cout << ' ' << r;
    }
    std::cout << "\nrank " << res.rank << "\nnullity " << res.identities.rows() << '\n';
    int code = res.identities.rows() > 0 ? kFound : kOk;
    if (!old.empty()) {
        const auto gens = load_generators(old);
        const auto oldm = module_generators(gens.polys, n, assoc, c.prime);
        std::cout << "old " << oldm.rows() << "\nnew " << res.identities.rows() - oldm.rows() << '\n';
        const auto news = global_new_generators(res.identities, oldm, n, assoc);
        for (const auto& v : news) {
            const auto poly = from_vector(v, n, assoc, c.prime);
            std::cout << "# module generator (" << poly.size() << " terms)\n" << poly.to_string() << '\n';
        }
        code = news.empty() ? kOk : kFound;
    } else if (res.identities.rows() > 0 && res.identities.rows() <= 3) {
        for (std::size_t i = 0; i < res.identities.rows(); ++i) {
            std::cout << from_vector(res.identities.row(i), n, assoc, c.prime).to_string() << '\n';
        }
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial identities of nonassociative algebras via the representation theory of S_n"};
    app.require_subcommand(1);
    Common c;
    auto add_common = [&c](CLI::App* sub) {
        sub->add_option("--prime", c.prime, "Prime modulus for the modular computations")->default_val(kDefaultPrime);
        sub->add_option("--seed", c.seed, "Random seed (printed when omitted)");
        sub->add_option("--stable-iters", c.stable_iters, "Consecutive unchanged ranks before stopping")
            ->default_val(10);
        sub->add_option("--partitions", c.partitions, "Comma-separated partitions, e.g. 321,2211");
        sub->add_option("--jobs", c.jobs, "Worker threads (one partition each)")->default_val(1);
        sub->add_option("--out", c.out, "Output directory");
        sub->add_flag("--resume", c.resume, "Resume from checkpoints under --out");
    };

    std::string lambda_text;
    auto* tab = app.add_subcommand("tableaux", "List the standard tableaux of a partition");
    tab->add_option("partition", lambda_text)->required();

    int n = 0;
    auto* units = app.add_subcommand("units", "Matrix units and the psi matrix for S_n");
    units->add_option("n", n)->required();
    add_common(units);

    std::string perm_text;
    auto* rep = app.add_subcommand("rep", "Clifton matrices and R(p)");
    rep->add_option("partition", lambda_text)->required();
    rep->add_option("permutation", perm_text)->required();

    std::string algebra;
    std::string generators = "none";
    std::vector<std::string> extra;
    bool free_mode = false;
    bool assoc_mode = false;
    auto* ids = app.add_subcommand("identities", "Per-partition identity report (CSV)");
    ids->add_option("algebra", algebra, "octonions, m<k>, cd:a,b,c, zero, or a JSON file")->required();
    ids->add_option("n", n)->required();
    ids->add_option("--generators", generators, "Known identities: names or fixture files, comma-separated");
    ids->add_option("--extra", extra, "Further generator sets, one r_old column each");
    ids->add_flag("--free", free_mode, "Nonassociative monomials even for associative algebras");
    ids->add_flag("--associative", assoc_mode, "Associative monomials (one type)");
    add_common(ids);

    std::string known = "none";
    std::string candidate;
    auto* mem = app.add_subcommand("membership", "Is the candidate a consequence of the known identities?");
    mem->add_option("--known", known, "Known identities, comma-separated");
    mem->add_option("candidate", candidate, "Candidate identity (name or fixture file)")->required();
    add_common(mem);

    std::string identity;
    int trials = 100;
    bool exact = false;
    auto* ver = app.add_subcommand("verify", "Evaluate an identity on random elements");
    ver->add_option("identity", identity)->required();
    ver->add_option("algebra", algebra)->required();
    ver->add_option("--trials", trials)->default_val(100);
    ver->add_flag("--exact", exact, "Rational arithmetic instead of a large prime");
    add_common(ver);

    auto* fix = app.add_subcommand("fixtures", "Write the named identities as fixture files");
    add_common(fix);

    std::string old;
    auto* fill = app.add_subcommand("fill", "Global fill-and-reduce over all monomials");
    fill->add_option("algebra", algebra)->required();
    fill->add_option("n", n)->required();
    fill->add_option("--old", old, "Lower-degree identities generating Old(n)");
    fill->add_flag("--free", free_mode);
    fill->add_flag("--associative", assoc_mode);
    add_common(fill);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*tab) {
            return cmd_tableaux(lambda_text);
        }
        if (*units) {
            return cmd_units(n, c);
        }
        if (*rep) {
            return cmd_rep(lambda_text, perm_text);
        }
        if (*ids) {
            return cmd_identities(algebra, n, generators, extra, free_mode, assoc_mode, c);
        }
        if (*mem) {
            return cmd_membership(known, candidate, c);
        }
        if (*ver) {
            return cmd_verify(identity, algebra, trials, exact, c);
        }
        if (*fix) {
            return cmd_fixtures(c);
        }
        if (*fill) {
            return cmd_fill(algebra, n, old, free_mode, assoc_mode, c);
        }
    } catch (const RankUnstable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUnstable;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}
