#pragma once

#include "pident/clifton.hpp"
#include "pident/groupalg.hpp"

#include <cstdint>
#include <vector>

namespace pident {

/// R^lambda(p) = (A^lambda_iota)^{-1} A^lambda_p.
IntMatrix rep_matrix(const Partition& lambda, const Permutation& p);

/// phi_lambda(x) = sum_p x(p) R^lambda(p).
RatMatrix phi(const Partition& lambda, const GroupAlgebraElement& x);

inline constexpr int kRepTableMaxDegree = 8;

/// R^lambda(p) for every p in S_n, indexed by lex rank.
class RepTable {
public:
    explicit RepTable(const Partition& lambda);

    [[nodiscard]] const Partition& partition() const { return lambda_; }
    [[nodiscard]] std::size_t dim() const { return d_; }
    [[nodiscard]] std::size_t size() const { return count_; }
    /// Entry (i,j) (0-based) of R(p) where p has lex rank `rank` (1-based).
    [[nodiscard]] std::int32_t at(std::uint64_t rank, std::size_t i, std::size_t j) const {
        return data_[((rank - 1) * d_ + i) * d_ + j];
    }
    /// Row-major d x d block for lex rank `rank`.
    [[nodiscard]] const std::int32_t* block(std::uint64_t rank) const { return &data_[(rank - 1) * d_ * d_]; }
    [[nodiscard]] IntMatrix matrix(const Permutation& p) const;

private:
    Partition lambda_;
    std::size_t d_ = 0;
    std::size_t count_ = 0;
    std::vector<std::int32_t> data_;
};

}  // namespace pident
