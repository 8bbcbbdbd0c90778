#pragma once

#include "pident/matrix.hpp"
#include "pident/perm.hpp"
#include "pident/rational.hpp"
#include "pident/tableau.hpp"

#include <map>
#include <string>
#include <vector>

namespace pident {

/// Element of the group algebra Q S_n as a sparse map from permutations to
/// rationals. Zero coefficients are never stored.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int n) : n_(n) {}
    GroupAlgebraElement(const Permutation& p, Rational c = 1);

    [[nodiscard]] int degree() const { return n_; }
    [[nodiscard]] const std::map<Permutation, Rational>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coeff(const Permutation& p) const;

    void add(const Permutation& p, const Rational& c);

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator*=(const Rational& c);

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& c) { return a *= c; }
    friend GroupAlgebraElement operator*(const Rational& c, GroupAlgebraElement a) { return a *= c; }
    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

    /// x * q, i.e. each basis element p becomes compose(p, q).
    [[nodiscard]] GroupAlgebraElement times(const Permutation& q) const;
    /// q * x
    [[nodiscard]] GroupAlgebraElement left_times(const Permutation& q) const;

    /// Coefficients indexed by lex rank - 1.
    [[nodiscard]] std::vector<Rational> dense() const;

    /// One term per line: "coefficient<TAB>permutation", in lex order.
    [[nodiscard]] std::string to_string() const;

private:
    int n_;
    std::map<Permutation, Rational> terms_;
};

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
inline GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return multiply(a, b);
}

/// H_T: sum of the horizontal permutations of T.
GroupAlgebraElement symmetric_sum(const Tableau& t);
/// V_T: signed sum of the vertical permutations of T.
GroupAlgebraElement alternating_sum(const Tableau& t);
/// D_T = H_T V_T.
GroupAlgebraElement young_symmetrizer(const Tableau& t);
/// E_T = (d_lambda / n!) D_T, an idempotent.
GroupAlgebraElement idempotent(const Tableau& t);

/// The unit upper triangular matrix xi^lambda (Clifton matrix at the identity).
IntMatrix xi_matrix(const Partition& lambda);

/// Matrix units of one partition. Caches tableaux, transitions and idempotents.
class Wedderburn {
public:
    explicit Wedderburn(const Partition& lambda);

    [[nodiscard]] const Partition& partition() const { return lambda_; }
    [[nodiscard]] std::size_t dim() const { return tableaux_.size(); }
    [[nodiscard]] const std::vector<Tableau>& tableaux() const { return tableaux_; }
    [[nodiscard]] const IntMatrix& xi() const { return xi_; }
    [[nodiscard]] const IntMatrix& xi_inverse() const { return eta_; }
    /// s_ij with s_ij T_j = T_i, 1-based.
    [[nodiscard]] const Permutation& s(std::size_t i, std::size_t j) const { return s_[(i - 1) * dim() + (j - 1)]; }
    /// E_i for the i-th standard tableau, 1-based.
    const GroupAlgebraElement& idempotent(std::size_t i);
    /// U^lambda_ij = sum_l eta_jl E_i s_il, 1-based.
    GroupAlgebraElement unit(std::size_t i, std::size_t j);

private:
    Partition lambda_;
    std::vector<Tableau> tableaux_;
    std::vector<Permutation> s_;
    IntMatrix xi_;
    IntMatrix eta_;
    std::vector<GroupAlgebraElement> idempotents_;
};

GroupAlgebraElement matrix_unit(const Partition& lambda, std::size_t i, std::size_t j);

inline constexpr int kPsiMaxDegree = 5;

/// n! x n! matrix whose columns hold the coefficients of U^lambda_ij
/// (partition-major, then i, then j) over the lex-ordered permutations.
RatMatrix psi_matrix(int n);

}  // namespace pident
