#include "pident/identities.hpp"

#include "pident/random.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace pident {

namespace {

std::vector<ModVector> random_tuple(const ModAlgebra& a, int n, Rng& rng) {
    std::vector<ModVector> args;
    args.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        args.push_back(a.random_element(rng));
    }
    return args;
}

MatrixModP identities_of(const RowReducer& red) {
    auto basis = nullspace_basis(red.matrix());
    return rcf(rows_matrix(basis, red.cols(), red.prime())).without_zero_rows();
}

// Rank bookkeeping shared by both fill loops. Returns true when done.
bool record(std::vector<std::size_t>& history, int& stable, std::size_t rank, std::size_t cols, const FillOptions& opt) {
    stable = !history.empty() && history.back() == rank ? stable + 1 : 0;
    history.push_back(rank);
    return stable >= opt.stable_iters || rank == cols;
}

void check_cap(const std::vector<std::size_t>& history, const FillOptions& opt) {
    if (opt.max_iters > 0 && static_cast<int>(history.size()) >= opt.max_iters) {
        throw RankUnstable("rank still growing after " + std::to_string(history.size()) + " iterations (rank " +
                           std::to_string(history.back()) + ")");
    }
}

}  // namespace

FillResult fill_and_reduce(const StructureAlgebra& a, int n, bool associative, const FillOptions& opt) {
    const int t = associative ? 1 : type_count(n);
    const std::size_t nf = factorial(n);
    const std::size_t cols = static_cast<std::size_t>(t) * nf;
    const ModAlgebra ap = a.reduce(opt.prime);
    const auto dim = static_cast<std::size_t>(a.dimension());
    Rng rng(opt.seed);
    RowReducer red(cols, opt.prime);
    FillResult out;
    out.columns = cols;
    int stable = 0;
    ModVector row(cols);
    while (true) {
        TupleEvaluator ev(ap, random_tuple(ap, n, rng));
        const auto mono = ev.all_monomials(t);
        for (std::size_t l = 0; l < dim; ++l) {
            for (std::size_t c = 0; c < cols; ++c) {
                row[c] = mono[c * dim + l];
            }
            red.add_row(row);
        }
        if (record(out.rank_history, stable, red.rank(), cols, opt)) {
            break;
        }
        check_cap(out.rank_history, opt);
    }
    out.rank = red.rank();
    out.identities = identities_of(red);
    return out;
}

MatrixModP module_generators(const std::vector<MultilinearPoly>& generators, int n, bool associative,
                             Residue prime) {
    const int t = associative ? 1 : type_count(n);
    const std::size_t cols = static_cast<std::size_t>(t) * factorial(n);
    RowReducer red(cols, prime);
    const auto perms = enumerate(n);
    for (const auto& g : lift(generators, n)) {
        if (g.associative() != associative) {
            throw std::invalid_argument("generator mode does not match");
        }
        for (const auto& sigma : perms) {
            red.add_row(to_vector(g.act(sigma), prime));
            if (red.rank() == cols) {
                return red.matrix();
            }
        }
    }
    return red.matrix();
}

std::vector<ModVector> global_new_generators(const MatrixModP& all, const MatrixModP& old, int n, bool associative) {
    const Residue p = all.prime();
    RowReducer red(all.cols(), p);
    for (std::size_t i = 0; i < old.rows(); ++i) {
        red.add_row(old.row(i));
    }
    RowReducer total = red;
    for (std::size_t i = 0; i < all.rows(); ++i) {
        total.add_row(all.row(i));
    }
    std::vector<std::size_t> order(all.rows());
    std::iota(order.begin(), order.end(), 0);
    auto support = [&all](std::size_t i) {
        auto r = all.row(i);
        return std::count_if(r.begin(), r.end(), [](Residue v) { return v != 0; });
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return support(x) < support(y); });
    const auto perms = enumerate(n);
    std::vector<ModVector> chosen;
    for (std::size_t i : order) {
        if (red.rank() == total.rank()) {
            break;
        }
        auto residue = red.reduce(all.row(i));
        if (std::all_of(residue.begin(), residue.end(), [](Residue v) { return v == 0; })) {
            continue;
        }
        ModVector v(all.row(i).begin(), all.row(i).end());
        const auto poly = from_vector(v, n, associative, p);
        for (const auto& sigma : perms) {
            red.add_row(to_vector(poly.act(sigma), p));
        }
        chosen.push_back(std::move(v));
    }
    return chosen;
}

PartitionData::PartitionData(const Partition& lambda, Residue prime)
    : lambda_(lambda), d_(dimension(lambda)), p_(prime), reps_(lambda) {
    require_prime(prime);
    Wedderburn w(lambda);
    for (std::size_t j = 1; j <= d_; ++j) {
        units_.push_back(w.unit(1, j));
        std::vector<std::pair<std::uint32_t, Residue>> sparse;
        for (const auto& [perm, c] : units_.back().terms()) {
            sparse.emplace_back(static_cast<std::uint32_t>(perm.lex_rank() - 1), to_residue(c, prime));
        }
        units_mod_.push_back(std::move(sparse));
    }
}

MatrixModP phi_mod(const MultilinearPoly& poly, const RepTable& reps, Residue prime) {
    const std::size_t d = reps.dim();
    const std::size_t cols = static_cast<std::size_t>(poly.types()) * d;
    if (poly.degree() != reps.partition().size()) {
        throw std::invalid_argument("polynomial degree does not match the partition");
    }
    std::vector<std::uint64_t> acc(d * cols, 0);
    for (const auto& [m, c] : poly.terms()) {
        const std::uint64_t cm = to_residue(c, prime);
        const std::int32_t* block = reps.block(m.perm.lex_rank());
        const std::size_t off = static_cast<std::size_t>(m.type - 1) * d;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                const std::int32_t r = block[i * d + j];
                if (r != 0) {
                    auto& slot = acc[i * cols + off + j];
                    slot = (slot + cm * reduce_signed(r, prime)) % prime;
                }
            }
        }
    }
    MatrixModP out(d, cols, prime);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            out(i, j) = static_cast<Residue>(acc[i * cols + j]);
        }
    }
    return out;
}

namespace {

struct FillState {
    int iterations = 0;
    int stable = 0;
    std::vector<std::size_t> history;
};

bool load_checkpoint(const FillCheckpoint& cp, RowReducer& red, FillState& st) {
    std::ifstream in(cp.path);
    if (!in) {
        return false;
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return false;
    }
    if (j.value("tag", std::string()) != cp.tag) {
        return false;
    }
    for (const auto& r : j.at("rows")) {
        red.add_row(r.get<ModVector>());
    }
    st.iterations = j.at("iterations").get<int>();
    st.stable = j.at("stable").get<int>();
    st.history = j.at("history").get<std::vector<std::size_t>>();
    return true;
}

void save_checkpoint(const FillCheckpoint& cp, const RowReducer& red, const FillState& st) {
    nlohmann::json j;
    j["tag"] = cp.tag;
    j["iterations"] = st.iterations;
    j["stable"] = st.stable;
    j["history"] = st.history;
    j["rank"] = red.rank();
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < red.rank(); ++i) {
        rows.push_back(red.basis_row(i));
    }
    j["rows"] = rows;
    const std::string tmp = cp.path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            throw std::runtime_error("cannot write checkpoint " + tmp);
        }
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, cp.path);
}

}  // namespace

AllmatResult compute_allmat(const StructureAlgebra& a, const PartitionData& data, bool associative,
                            const FillOptions& opt, const std::optional<FillCheckpoint>& checkpoint) {
    if (opt.prime != data.prime()) {
        throw std::invalid_argument("partition data was built for a different prime");
    }
    const int n = data.partition().size();
    const int t = associative ? 1 : type_count(n);
    const std::size_t d = data.dim();
    const std::size_t cols = static_cast<std::size_t>(t) * d;
    const std::size_t nf = factorial(n);
    const Residue p = opt.prime;
    const ModAlgebra ap = a.reduce(p);
    const auto dim = static_cast<std::size_t>(a.dimension());
    Rng rng(derive_seed(opt.seed, data.partition().to_string()));
    RowReducer red(cols, p);
    FillState st;
    AllmatResult out;
    if (checkpoint && load_checkpoint(*checkpoint, red, st)) {
        out.resumed = true;
        for (int i = 0; i < st.iterations; ++i) {
            random_tuple(ap, n, rng);
        }
    }
    const bool small = static_cast<std::uint64_t>(p) * p < (1ULL << 40);
    std::vector<std::uint64_t> acc(dim);
    std::vector<ModVector> rows(dim, ModVector(cols));
    bool done = !st.history.empty() && (st.stable >= opt.stable_iters || st.history.back() == cols);
    while (!done) {
        TupleEvaluator ev(ap, random_tuple(ap, n, rng));
        const auto mono = ev.all_monomials(t);
        for (int k = 0; k < t; ++k) {
            const Residue* base = &mono[static_cast<std::size_t>(k) * nf * dim];
            for (std::size_t j = 1; j <= d; ++j) {
                std::fill(acc.begin(), acc.end(), 0);
                for (const auto& [r, c] : data.unit_mod(j)) {
                    const Residue* v = base + r * dim;
                    for (std::size_t l = 0; l < dim; ++l) {
                        acc[l] += static_cast<std::uint64_t>(c) * v[l];
                        if (!small) {
                            acc[l] %= p;
                        }
                    }
                }
                for (std::size_t l = 0; l < dim; ++l) {
                    rows[l][k * d + j - 1] = static_cast<Residue>(acc[l] % p);
                }
            }
        }
        for (const auto& r : rows) {
            red.add_row(r);
        }
        ++st.iterations;
        done = record(st.history, st.stable, red.rank(), cols, opt);
        if (checkpoint) {
            save_checkpoint(*checkpoint, red, st);
        }
        if (!done) {
            check_cap(st.history, opt);
        }
    }
    out.fill_rank = red.rank();
    out.rank_history = st.history;
    out.allmat = identities_of(red);
    return out;
}

MatrixModP compute_oldmat(const std::vector<MultilinearPoly>& generators, const PartitionData& data,
                          bool associative) {
    const int n = data.partition().size();
    const int t = associative ? 1 : type_count(n);
    const std::size_t cols = static_cast<std::size_t>(t) * data.dim();
    RowReducer red(cols, data.prime());
    for (const auto& g : lift(generators, n)) {
        if (g.associative() != associative) {
            throw std::invalid_argument("generator mode does not match");
        }
        const auto m = phi_mod(g, data.reps(), data.prime());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            red.add_row(m.row(i));
        }
        if (red.rank() == cols) {
            break;
        }
    }
    return red.matrix();
}

std::vector<std::size_t> new_columns(const MatrixModP& allmat, const MatrixModP& oldmat) {
    return leading_difference(leading_profile(allmat), leading_profile(oldmat));
}

MultilinearPoly identity_from_row(std::span<const Residue> row, const PartitionData& data, bool associative) {
    const int n = data.partition().size();
    const std::size_t d = data.dim();
    MultilinearPoly out(n, associative);
    if (row.size() != static_cast<std::size_t>(out.types()) * d) {
        throw std::invalid_argument("row length does not match t * d");
    }
    for (std::size_t idx = 0; idx < row.size(); ++idx) {
        if (row[idx] == 0) {
            continue;
        }
        const Rational c(symmetric(row[idx], data.prime()));
        const int k = static_cast<int>(idx / d) + 1;
        for (const auto& [perm, u] : data.unit(idx % d + 1).terms()) {
            out.add(k, perm, c * u);
        }
    }
    return out;
}

std::vector<MultilinearPoly> new_identities(const MatrixModP& allmat, const MatrixModP& oldmat,
                                            const PartitionData& data, bool associative) {
    const auto prof = leading_profile(allmat);
    std::vector<MultilinearPoly> out;
    for (std::size_t col : new_columns(allmat, oldmat)) {
        for (const auto& [r, c] : prof.pairs) {
            if (c == col) {
                out.push_back(identity_from_row(allmat.row(r - 1), data, associative));
            }
        }
    }
    return out;
}

MembershipResult membership_test(const std::vector<MultilinearPoly>& known, const MultilinearPoly& candidate,
                                 Residue prime) {
    const int n = candidate.degree();
    const auto lifted = lift(known, n);
    MembershipResult out;
    for (const auto& lambda : partitions(n)) {
        RepTable reps(lambda);
        RowReducer red(static_cast<std::size_t>(candidate.types()) * reps.dim(), prime);
        for (const auto& g : lifted) {
            if (g.associative() != candidate.associative()) {
                throw std::invalid_argument("known identity mode does not match the candidate");
            }
            const auto m = phi_mod(g, reps, prime);
            for (std::size_t i = 0; i < m.rows(); ++i) {
                red.add_row(m.row(i));
            }
        }
        MembershipRow row{lambda, red.rank(), 0};
        const auto m = phi_mod(candidate, reps, prime);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            red.add_row(m.row(i));
        }
        row.with_candidate_rank = red.rank();
        out.member = out.member && row.known_rank == row.with_candidate_rank;
        out.rows.push_back(row);
    }
    return out;
}

std::vector<PartitionReport> run_identities(const StructureAlgebra& a, int n, const std::vector<GeneratorSet>& sets,
                                            const RunOptions& opt) {
    std::vector<Partition> parts = opt.partitions.empty() ? partitions(n) : opt.partitions;
    for (const auto& lambda : parts) {
        if (lambda.size() != n) {
            throw std::invalid_argument("partition " + lambda.to_string() + " is not a partition of " +
                                        std::to_string(n));
        }
    }
    std::vector<std::vector<MultilinearPoly>> lifted;
    for (const auto& s : sets) {
        lifted.push_back(lift(s.polys, n));
    }
    if (!opt.checkpoint_dir.empty()) {
        std::filesystem::create_directories(opt.checkpoint_dir);
    }
    std::ostringstream tag;
    tag << a.name() << "|n=" << n << "|p=" << opt.fill.prime << "|seed=" << opt.fill.seed
        << "|s=" << opt.fill.stable_iters << "|assoc=" << opt.associative;

    std::vector<PartitionReport> reports(parts.size());
    std::atomic<std::size_t> next{0};
    std::mutex lock;
    std::exception_ptr failure;
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next++;
            if (i >= parts.size()) {
                return;
            }
            try {
                const auto start = std::chrono::steady_clock::now();
                PartitionReport rep;
                rep.lambda = parts[i];
                PartitionData data(parts[i], opt.fill.prime);
                rep.d = data.dim();
                std::optional<FillCheckpoint> cp;
                if (!opt.checkpoint_dir.empty()) {
                    cp = FillCheckpoint{
                        (std::filesystem::path(opt.checkpoint_dir) / ("allmat_" + parts[i].to_string() + ".json"))
                            .string(),
                        tag.str()};
                }
                auto all = compute_allmat(a, data, opt.associative, opt.fill, cp);
                rep.allmat = std::move(all.allmat);
                rep.r_all = rep.allmat.rows();
                for (std::size_t s = 0; s < lifted.size(); ++s) {
                    auto old = compute_oldmat(lifted[s], data, opt.associative);
                    rep.r_old.push_back(old.rows());
                    if (s == 0) {
                        rep.oldmat = std::move(old);
                    }
                }
                if (lifted.empty()) {
                    rep.oldmat = MatrixModP(0, rep.allmat.cols(), opt.fill.prime);
                }
                rep.new_cols = new_columns(rep.allmat, rep.oldmat);
                rep.identities = new_identities(rep.allmat, rep.oldmat, data, opt.associative);
                rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                std::lock_guard<std::mutex> g(lock);
                reports[i] = std::move(rep);
                if (opt.progress) {
                    opt.progress(reports[i]);
                }
            } catch (...) {
                std::lock_guard<std::mutex> g(lock);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = parts.size();
                return;
            }
        }
    };
    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(parts.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return reports;
}

std::string report_csv(const std::vector<PartitionReport>& reports, const std::vector<GeneratorSet>& sets) {
    std::ostringstream os;
    os << "lambda,d_lambda,r_all,r_old,new_count";
    for (std::size_t s = 1; s < sets.size(); ++s) {
        os << ",r_old[" << sets[s].name << "]";
    }
    os << '\n';
    for (const auto& r : reports) {
        os << r.lambda.to_string() << ',' << r.d << ',' << r.r_all << ',' << (r.r_old.empty() ? 0 : r.r_old[0])
           << ',' << r.new_cols.size();
        for (std::size_t s = 1; s < r.r_old.size(); ++s) {
            os << ',' << r.r_old[s];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace pident
