#pragma once

#include "pident/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pident {

/// Small dense exact matrix, row-major.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        for (const auto& r : init) {
            if (r.size() != cols_) {
                throw std::invalid_argument("ragged matrix initializer");
            }
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& v : data_) {
            if (!(v == T{})) {
                return false;
            }
        }
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] += o.data_[k];
        }
        return *this;
    }

    /// this += c * o
    void add_scaled(const Matrix& o, const T& c) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) {
            if (!(o.data_[k] == T{})) {
                data_[k] += c * o.data_[k];
            }
        }
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("matrix product dimension mismatch");
        }
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T{}) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    [[nodiscard]] std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                os << (j == 0 ? "" : " ") << (*this)(i, j);
            }
            os << '\n';
        }
        return os.str();
    }

    /// One CSV line per row.
    [[nodiscard]] std::string to_csv() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                os << (j == 0 ? "" : ",") << (*this)(i, j);
            }
            os << '\n';
        }
        return os.str();
    }

    template <typename U>
    [[nodiscard]] Matrix<U> cast() const {
        Matrix<U> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                m(i, j) = U((*this)(i, j));
            }
        }
        return m;
    }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw std::invalid_argument("matrix dimension mismatch");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RatMatrix = Matrix<Rational>;

/// Exact Gauss-Jordan over the rationals.
RatMatrix rational_rcf(RatMatrix m);
std::size_t rational_rank(const RatMatrix& m);
/// Throws std::domain_error for singular input.
RatMatrix rational_inverse(const RatMatrix& m);

/// Inverse of a unit upper triangular integer matrix by back substitution.
IntMatrix unitriangular_inverse(const IntMatrix& a);

}  // namespace pident
