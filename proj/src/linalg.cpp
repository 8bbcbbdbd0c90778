#include "pident/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pident {

MatrixModP::MatrixModP(std::size_t rows, std::size_t cols, Residue p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
    require_prime(p);
}

MatrixModP MatrixModP::identity(std::size_t n, Residue p) {
    MatrixModP m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

MatrixModP MatrixModP::from_rational(const RatMatrix& m, Residue p) {
    MatrixModP out(m.rows(), m.cols(), p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = to_residue(m(i, j), p);
        }
    }
    return out;
}

MatrixModP MatrixModP::from_integer(const IntMatrix& m, Residue p) {
    MatrixModP out(m.rows(), m.cols(), p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = reduce_signed(m(i, j), p);
        }
    }
    return out;
}

void MatrixModP::append_row(std::span<const Residue> r) {
    if (r.size() != cols_) {
        throw std::invalid_argument("row length does not match matrix width");
    }
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

void MatrixModP::stack(const MatrixModP& below) {
    if (below.cols_ != cols_ || below.p_ != p_) {
        throw std::invalid_argument("cannot stack matrices of different width or modulus");
    }
    data_.insert(data_.end(), below.data_.begin(), below.data_.end());
    rows_ += below.rows_;
}

bool MatrixModP::row_is_zero(std::size_t i) const {
    auto r = row(i);
    return std::all_of(r.begin(), r.end(), [](Residue v) { return v == 0; });
}

MatrixModP MatrixModP::without_zero_rows() const {
    MatrixModP out(0, cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!row_is_zero(i)) {
            out.append_row(row(i));
        }
    }
    return out;
}

IntMatrix MatrixModP::to_signed() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(i, j) = symmetric((*this)(i, j), p_);
        }
    }
    return out;
}

std::string MatrixModP::to_csv() const { return to_signed().to_csv(); }

RowReducer::RowReducer(std::size_t cols, Residue p)
    : cols_(cols), p_(p) {
    require_prime(p);
    const std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * (p - 1);
    // Leave room for one residue on top of the accumulated products.
    flush_every_ = std::max<std::uint64_t>(1, (std::numeric_limits<std::uint64_t>::max() - p) / std::max<std::uint64_t>(sq, 1));
    free_cols_.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        free_cols_[j] = j;
    }
}

void RowReducer::accumulate(std::vector<std::uint64_t>& acc, Residue coeff, const ModVector& row) const {
    for (std::size_t j : free_cols_) {
        acc[j] += static_cast<std::uint64_t>(coeff) * row[j];
    }
}

ModVector RowReducer::reduce(std::span<const Residue> r) const {
    if (r.size() != cols_) {
        throw std::invalid_argument("row length does not match reducer width");
    }
    // In RCF every basis row vanishes at the other pivots, so the reduced row is
    // r - sum_c r[c] P_c, and only the free columns need computing.
    std::vector<std::uint64_t> acc(cols_, 0);
    for (std::size_t j : free_cols_) {
        acc[j] = r[j];
    }
    std::uint64_t pending = 0;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Residue v = r[pivots_[k]];
        if (v == 0) {
            continue;
        }
        if (pending == flush_every_) {
            for (std::size_t j : free_cols_) {
                acc[j] %= p_;
            }
            pending = 0;
        }
        accumulate(acc, p_ - v, rows_[k]);
        ++pending;
    }
    ModVector out(cols_, 0);
    for (std::size_t j : free_cols_) {
        out[j] = static_cast<Residue>(acc[j] % p_);
    }
    return out;
}

bool RowReducer::add_row(std::span<const Residue> r) {
    ModVector v = reduce(r);
    std::size_t lead = cols_;
    for (std::size_t j : free_cols_) {
        if (v[j] != 0) {
            lead = j;
            break;
        }
    }
    if (lead == cols_) {
        return false;
    }
    const Residue inv = inv_mod(v[lead], p_);
    for (std::size_t j : free_cols_) {
        if (v[j] != 0) {
            v[j] = mul_mod(v[j], inv, p_);
        }
    }
    free_cols_.erase(std::find(free_cols_.begin(), free_cols_.end(), lead));
    // Clear the new pivot column from the existing rows.
    for (auto& row : rows_) {
        const Residue f = row[lead];
        if (f == 0) {
            continue;
        }
        const Residue nf = p_ - f;
        for (std::size_t j : free_cols_) {
            if (v[j] != 0) {
                row[j] = static_cast<Residue>((row[j] + static_cast<std::uint64_t>(nf) * v[j]) % p_);
            }
        }
        row[lead] = 0;
    }
    auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
}

MatrixModP RowReducer::matrix() const {
    MatrixModP m(0, cols_, p_);
    for (const auto& r : rows_) {
        m.append_row(r);
    }
    return m;
}

MatrixModP rcf(const MatrixModP& m) {
    RowReducer red(m.cols(), m.prime());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        red.add_row(m.row(i));
    }
    MatrixModP out = red.matrix();
    ModVector zero(m.cols(), 0);
    while (out.rows() < m.rows()) {
        out.append_row(zero);
    }
    return out;
}

std::size_t rank(const MatrixModP& m) {
    RowReducer red(m.cols(), m.prime());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        red.add_row(m.row(i));
        if (red.rank() == m.cols()) {
            break;
        }
    }
    return red.rank();
}

std::vector<ModVector> nullspace_basis(const MatrixModP& m) {
    RowReducer red(m.cols(), m.prime());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        red.add_row(m.row(i));
    }
    const Residue p = m.prime();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : red.pivots()) {
        is_pivot[c] = true;
    }
    std::vector<ModVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        ModVector v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t k = 0; k < red.rank(); ++k) {
            v[red.pivots()[k]] = neg_mod(red.basis_row(k)[f], p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

MatrixModP rows_matrix(const std::vector<ModVector>& vs, std::size_t cols, Residue p) {
    MatrixModP m(0, cols, p);
    for (const auto& v : vs) {
        m.append_row(v);
    }
    return m;
}

std::string LeadingProfile::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        os << (k == 0 ? "" : " ") << '(' << pairs[k].first << ',' << pairs[k].second << ')';
    }
    return os.str();
}

LeadingProfile leading_profile(const MatrixModP& m) {
    LeadingProfile prof;
    bool seen_zero = false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        auto it = std::find_if(r.begin(), r.end(), [](Residue v) { return v != 0; });
        if (it == r.end()) {
            seen_zero = true;
            continue;
        }
        const auto c = static_cast<std::size_t>(it - r.begin());
        if (seen_zero || *it != 1 || (!prof.jset.empty() && c + 1 <= prof.jset.back())) {
            throw std::invalid_argument("matrix is not in row canonical form");
        }
        for (std::size_t k = 0; k < m.rows(); ++k) {
            if (k != i && m(k, c) != 0) {
                throw std::invalid_argument("matrix is not in row canonical form");
            }
        }
        prof.pairs.emplace_back(i + 1, c + 1);
        prof.jset.push_back(c + 1);
    }
    return prof;
}

std::vector<std::size_t> leading_difference(const LeadingProfile& a, const LeadingProfile& b) {
    std::vector<std::size_t> out;
    std::set_difference(a.jset.begin(), a.jset.end(), b.jset.begin(), b.jset.end(), std::back_inserter(out));
    return out;
}

std::int64_t default_numerator_bound(Residue p) {
    auto b = static_cast<std::int64_t>(std::sqrt(static_cast<double>(p - 1) / 2.0));
    while ((b + 1) * (b + 1) <= static_cast<std::int64_t>(p - 1) / 2) {
        ++b;
    }
    while (b * b > static_cast<std::int64_t>(p - 1) / 2) {
        --b;
    }
    return b;
}

Rational rational_reconstruct(Residue residue, Residue p, std::int64_t denominator_bound,
                              std::int64_t numerator_bound) {
    require_prime(p);
    if (denominator_bound < 1) {
        throw std::invalid_argument("denominator bound must be positive");
    }
    if (numerator_bound <= 0) {
        numerator_bound = default_numerator_bound(p);
    }
    residue %= p;
    if (residue == 0) {
        return Rational(0);
    }
    std::int64_t best_a = 0;
    std::int64_t best_b = 0;
    for (std::int64_t b = 1; b <= denominator_bound; ++b) {
        if (denominator_bound % b != 0 || b % p == 0) {
            continue;
        }
        const std::int64_t a = symmetric(mul_mod(residue, reduce_signed(b, p), p), p);
        if (best_b == 0 || std::llabs(a) < std::llabs(best_a)) {
            best_a = a;
            best_b = b;
        }
    }
    if (best_b == 0 || std::llabs(best_a) > numerator_bound) {
        throw std::domain_error("no rational preimage of " + std::to_string(residue) + " mod " + std::to_string(p) +
                                " with denominator dividing " + std::to_string(denominator_bound));
    }
    return Rational(best_a, best_b);
}

double error_probability(Residue p, int d, int s) {
    const double ok = std::pow(1.0 - 1.0 / static_cast<double>(p), d);
    return std::pow(1.0 - ok, s);
}

}  // namespace pident
