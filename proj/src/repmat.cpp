#include "pident/repmat.hpp"

#include <limits>
#include <stdexcept>

namespace pident {

IntMatrix rep_matrix(const Partition& lambda, const Permutation& p) {
    auto tableaux = standard_tableaux(lambda);
    IntMatrix eta = unitriangular_inverse(clifton_matrix(tableaux, Permutation::identity(lambda.size())));
    return eta * clifton_matrix(tableaux, p);
}

RatMatrix phi(const Partition& lambda, const GroupAlgebraElement& x) {
    if (x.degree() != lambda.size()) {
        throw std::invalid_argument("element degree does not match the partition");
    }
    auto tableaux = standard_tableaux(lambda);
    IntMatrix eta = unitriangular_inverse(clifton_matrix(tableaux, Permutation::identity(lambda.size())));
    const std::size_t d = tableaux.size();
    RatMatrix out(d, d);
    for (const auto& [p, c] : x.terms()) {
        out.add_scaled((eta * clifton_matrix(tableaux, p)).cast<Rational>(), c);
    }
    return out;
}

RepTable::RepTable(const Partition& lambda) : lambda_(lambda) {
    const int n = lambda.size();
    if (n > kRepTableMaxDegree) {
        throw std::invalid_argument("representation tables are limited to degree " +
                                    std::to_string(kRepTableMaxDegree));
    }
    auto tableaux = standard_tableaux(lambda);
    d_ = tableaux.size();
    IntMatrix eta = unitriangular_inverse(clifton_matrix(tableaux, Permutation::identity(n)));
    auto perms = enumerate(n);
    count_ = perms.size();
    data_.resize(count_ * d_ * d_);
    std::size_t off = 0;
    for (const auto& p : perms) {
        IntMatrix r = eta * clifton_matrix(tableaux, p);
        for (std::size_t i = 0; i < d_; ++i) {
            for (std::size_t j = 0; j < d_; ++j) {
                std::int64_t v = r(i, j);
                if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min()) {
                    throw std::overflow_error("representation matrix entry does not fit in 32 bits");
                }
                data_[off++] = static_cast<std::int32_t>(v);
            }
        }
    }
}

IntMatrix RepTable::matrix(const Permutation& p) const {
    IntMatrix m(d_, d_);
    const std::int32_t* b = block(p.lex_rank());
    for (std::size_t i = 0; i < d_; ++i) {
        for (std::size_t j = 0; j < d_; ++j) {
            m(i, j) = b[i * d_ + j];
        }
    }
    return m;
}

}  // namespace pident
