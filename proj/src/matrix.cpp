#include "pident/matrix.hpp"

namespace pident {

RatMatrix rational_rcf(RatMatrix m) {
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t piv = lead_row;
        while (piv < m.rows() && m(piv, c).is_zero()) {
            ++piv;
        }
        if (piv == m.rows()) {
            continue;
        }
        if (piv != lead_row) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(piv, j), m(lead_row, j));
            }
        }
        Rational inv = Rational(1) / m(lead_row, c);
        for (std::size_t j = c; j < m.cols(); ++j) {
            m(lead_row, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead_row || m(i, c).is_zero()) {
                continue;
            }
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!m(lead_row, j).is_zero()) {
                    m(i, j) -= f * m(lead_row, j);
                }
            }
        }
        ++lead_row;
    }
    return m;
}

std::size_t rational_rank(const RatMatrix& m) {
    RatMatrix r = rational_rcf(m);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        for (std::size_t j = 0; j < r.cols(); ++j) {
            if (!r(i, j).is_zero()) {
                ++rank;
                break;
            }
        }
    }
    return rank;
}

RatMatrix rational_inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, n + i) = Rational(1);
    }
    aug = rational_rcf(std::move(aug));
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (aug(i, i) != Rational(1)) {
            throw std::domain_error("matrix is singular");
        }
        for (std::size_t j = 0; j < n; ++j) {
            inv(i, j) = aug(i, n + j);
        }
    }
    return inv;
}

IntMatrix unitriangular_inverse(const IntMatrix& a) {
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) != 1) {
            throw std::domain_error("matrix is not unit upper triangular");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (a(i, j) != 0) {
                throw std::domain_error("matrix is not unit upper triangular");
            }
        }
    }
    // Solve A X = I column by column, bottom up.
    IntMatrix x(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t ii = n; ii-- > 0;) {
            std::int64_t s = ii == col ? 1 : 0;
            for (std::size_t k = ii + 1; k < n; ++k) {
                s -= a(ii, k) * x(k, col);
            }
            x(ii, col) = s;
        }
    }
    return x;
}

}  // namespace pident
