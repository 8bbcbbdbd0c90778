#pragma once

#include "pident/matrix.hpp"
#include "pident/modular.hpp"
#include "pident/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pident {

using Residue = std::uint32_t;
using ModVector = std::vector<Residue>;

/// Dense row-major matrix over F_p.
class MatrixModP {
public:
    MatrixModP() = default;
    MatrixModP(std::size_t rows, std::size_t cols, Residue p);

    static MatrixModP identity(std::size_t n, Residue p);
    /// Reduces every entry mod p; throws if p divides a denominator.
    static MatrixModP from_rational(const RatMatrix& m, Residue p);
    static MatrixModP from_integer(const IntMatrix& m, Residue p);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] Residue prime() const { return p_; }

    Residue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    [[nodiscard]] std::span<const Residue> row(std::size_t i) const { return {&data_[i * cols_], cols_}; }
    std::span<Residue> row(std::size_t i) { return {&data_[i * cols_], cols_}; }

    void append_row(std::span<const Residue> r);
    /// Rows of `below` appended under this matrix.
    void stack(const MatrixModP& below);
    [[nodiscard]] bool row_is_zero(std::size_t i) const;
    [[nodiscard]] MatrixModP without_zero_rows() const;

    /// Entries in the symmetric range (-p/2, p/2].
    [[nodiscard]] IntMatrix to_signed() const;
    [[nodiscard]] std::string to_csv() const;

    friend bool operator==(const MatrixModP&, const MatrixModP&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Residue p_ = kDefaultPrime;
    std::vector<Residue> data_;
};

/// Incrementally maintained row canonical form. Rows are kept sorted by
/// pivot column and fully reduced against one another.
class RowReducer {
public:
    RowReducer(std::size_t cols, Residue p);

    /// Reduces r against the current rows; returns true if the rank grew.
    bool add_row(std::span<const Residue> r);
    /// Reduction of r modulo the row space, without inserting it.
    [[nodiscard]] ModVector reduce(std::span<const Residue> r) const;

    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] Residue prime() const { return p_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
    [[nodiscard]] const ModVector& basis_row(std::size_t k) const { return rows_[k]; }
    /// rank x cols matrix in RCF.
    [[nodiscard]] MatrixModP matrix() const;

private:
    void accumulate(std::vector<std::uint64_t>& acc, Residue coeff, const ModVector& row) const;

    std::size_t cols_;
    Residue p_;
    std::uint64_t flush_every_;
    std::vector<ModVector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> free_cols_;
};

/// Reduced row echelon form; zero rows last, shape preserved.
MatrixModP rcf(const MatrixModP& m);
std::size_t rank(const MatrixModP& m);

/// Canonical nullspace basis: one vector per free column (ascending), with
/// that free variable 1, the other free variables 0.
std::vector<ModVector> nullspace_basis(const MatrixModP& m);

/// Matrix whose rows are the given vectors.
MatrixModP rows_matrix(const std::vector<ModVector>& vs, std::size_t cols, Residue p);

struct LeadingProfile {
    /// 1-based (row, column) positions of leading ones.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    /// 1-based leading columns.
    std::vector<std::size_t> jset;

    [[nodiscard]] std::string to_string() const;
};

/// Throws std::invalid_argument if m is not in row canonical form.
LeadingProfile leading_profile(const MatrixModP& m);

/// Columns in jleading(a) but not in jleading(b), ascending.
std::vector<std::size_t> leading_difference(const LeadingProfile& a, const LeadingProfile& b);

/// Default numerator bound for reconstruction, floor(sqrt((p-1)/2)).
std::int64_t default_numerator_bound(Residue p);

/// The a/b with b | denominator_bound and minimal |a| such that a = residue * b mod p.
/// Throws std::domain_error if the minimal |a| exceeds numerator_bound (0 = default).
Rational rational_reconstruct(Residue residue, Residue p, std::int64_t denominator_bound,
                              std::int64_t numerator_bound = 0);

/// Probability that a rank defect survives s stable iterations when each
/// iteration produces d equations over F_p: (1 - (1 - 1/p)^d)^s.
double error_probability(Residue p, int d, int s);

}  // namespace pident
