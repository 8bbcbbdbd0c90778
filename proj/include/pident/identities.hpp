#pragma once

#include "pident/algebras.hpp"
#include "pident/linalg.hpp"
#include "pident/polyid.hpp"
#include "pident/repmat.hpp"
#include "pident/tableau.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pident {

/// Thrown when the rank has not stabilized within the iteration cap.
class RankUnstable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FillOptions {
    Residue prime = kDefaultPrime;
    std::uint64_t seed = 1;
    /// Stop once this many consecutive tuples leave the rank unchanged.
    int stable_iters = 10;
    /// 0 means no cap.
    int max_iters = 0;
};

struct FillResult {
    std::size_t columns = 0;
    std::size_t rank = 0;
    /// Rank after each tuple.
    std::vector<std::size_t> rank_history;
    /// Canonical nullspace basis: the identities, in RCF.
    MatrixModP identities;
};

/// Global fill-and-reduce over all t n! monomials. Columns (k-1) n! + rank-1.
FillResult fill_and_reduce(const StructureAlgebra& a, int n, bool associative, const FillOptions& opt);

/// RCF of the S_n-module spanned by all sigma * g; zero rows dropped.
MatrixModP module_generators(const std::vector<MultilinearPoly>& generators, int n, bool associative, Residue prime);

/// Picks module generators for All modulo Old among the rows of `all`,
/// smallest support first. Returns the chosen rows.
std::vector<ModVector> global_new_generators(const MatrixModP& all, const MatrixModP& old, int n, bool associative);

/// Read-only data for one partition shared by all workers.
class PartitionData {
public:
    PartitionData(const Partition& lambda, Residue prime);

    [[nodiscard]] const Partition& partition() const { return lambda_; }
    [[nodiscard]] std::size_t dim() const { return d_; }
    [[nodiscard]] Residue prime() const { return p_; }
    [[nodiscard]] const RepTable& reps() const { return reps_; }
    /// Exact U^lambda_1j, 1-based j.
    [[nodiscard]] const GroupAlgebraElement& unit(std::size_t j) const { return units_[j - 1]; }
    /// Nonzero (lex rank - 1, residue) pairs of U^lambda_1j.
    [[nodiscard]] const std::vector<std::pair<std::uint32_t, Residue>>& unit_mod(std::size_t j) const {
        return units_mod_[j - 1];
    }

private:
    Partition lambda_;
    std::size_t d_;
    Residue p_;
    RepTable reps_;
    std::vector<GroupAlgebraElement> units_;
    std::vector<std::vector<std::pair<std::uint32_t, Residue>>> units_mod_;
};

/// phi_lambda(P) as a d x t d matrix over F_p; block k holds sum_p c_kp R(p).
MatrixModP phi_mod(const MultilinearPoly& p, const RepTable& reps, Residue prime);

/// Saved state of a per-partition fill, for resuming long runs.
struct FillCheckpoint {
    std::string path;
    /// Identifies the run; a checkpoint with a different tag is ignored.
    std::string tag;
};

struct AllmatResult {
    /// RCF, r_all rows, t d columns ordered [U_11]_1 ... [U_1d]_1 [U_11]_2 ...
    MatrixModP allmat;
    std::size_t fill_rank = 0;
    std::vector<std::size_t> rank_history;
    bool resumed = false;
};

AllmatResult compute_allmat(const StructureAlgebra& a, const PartitionData& data, bool associative,
                            const FillOptions& opt, const std::optional<FillCheckpoint>& checkpoint = std::nullopt);

/// RCF (zero rows dropped) of the stacked phi_lambda of all degree-n consequences.
MatrixModP compute_oldmat(const std::vector<MultilinearPoly>& generators, const PartitionData& data,
                          bool associative);

/// Columns in jleading(allmat) but not jleading(oldmat), 1-based.
std::vector<std::size_t> new_columns(const MatrixModP& allmat, const MatrixModP& oldmat);

/// sum_{k,j} c_kj [U_1j]_k for a row c of allmat, with c lifted to (-p/2, p/2].
MultilinearPoly identity_from_row(std::span<const Residue> row, const PartitionData& data, bool associative);

/// One identity per new leading column.
std::vector<MultilinearPoly> new_identities(const MatrixModP& allmat, const MatrixModP& oldmat,
                                            const PartitionData& data, bool associative);

struct MembershipRow {
    Partition lambda;
    std::size_t known_rank = 0;
    std::size_t with_candidate_rank = 0;
};

struct MembershipResult {
    bool member = true;
    std::vector<MembershipRow> rows;
};

MembershipResult membership_test(const std::vector<MultilinearPoly>& known, const MultilinearPoly& candidate,
                                 Residue prime);

struct GeneratorSet {
    std::string name;
    std::vector<MultilinearPoly> polys;
};

struct PartitionReport {
    Partition lambda;
    std::size_t d = 0;
    std::size_t r_all = 0;
    /// One rank per generator set.
    std::vector<std::size_t> r_old;
    MatrixModP allmat;
    /// Oldmat of the first generator set.
    MatrixModP oldmat;
    std::vector<std::size_t> new_cols;
    std::vector<MultilinearPoly> identities;
    double seconds = 0;
};

struct RunOptions {
    FillOptions fill;
    bool associative = false;
    /// Empty means all partitions of n.
    std::vector<Partition> partitions;
    int jobs = 1;
    /// Directory for per-partition checkpoints; empty disables them.
    std::string checkpoint_dir;
    /// Called once per finished partition, from the worker thread, under a lock.
    std::function<void(const PartitionReport&)> progress;
};

/// The per-partition pipeline for every requested partition, in partition order.
std::vector<PartitionReport> run_identities(const StructureAlgebra& a, int n, const std::vector<GeneratorSet>& sets,
                                            const RunOptions& opt);

/// "lambda,d_lambda,r_all,r_old,new_count", then one r_old column per extra set.
std::string report_csv(const std::vector<PartitionReport>& reports, const std::vector<GeneratorSet>& sets);

}  // namespace pident
