#pragma once

#include "pident/algebras.hpp"
#include "pident/linalg.hpp"
#include "pident/perm.hpp"
#include "pident/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pident {

inline constexpr int kMaxTypeDegree = 8;

/// Full binary tree. Shape ids are global across degrees; id 0 is the leaf.
struct Shape {
    int degree = 1;
    int left = -1;
    int right = -1;
    /// Leaves are '*', every proper subtree is parenthesized: "(**)(*(**))".
    std::string code;
};

const Shape& shape(int id);
/// Id of the product of two shapes.
int shape_product(int left, int right);
/// Number of association types of degree n, Catalan(n-1).
int type_count(int n);
/// Global shape id of the k-th type (1-based) of degree n.
int type_shape(int n, int k);
/// 1-based position of a shape among the types of its degree.
int type_index(int shape_id);
/// Codes of all types of degree n in order. Throws std::length_error for n > 8.
std::vector<std::string> association_types(int n);
/// Parses a code such as "(**)*" back to a type index.
int type_from_code(std::string_view code);

struct Monomial {
    int type;
    Permutation perm;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Multilinear polynomial of degree n: an element of t copies of Q S_n. The
/// monomial (k, p) is type k with x_{p(1)}, ..., x_{p(n)} at its leaves.
/// In associative mode there is a single type (the left-normed product).
class MultilinearPoly {
public:
    explicit MultilinearPoly(int n, bool associative = false);

    [[nodiscard]] int degree() const { return n_; }
    [[nodiscard]] bool associative() const { return associative_; }
    [[nodiscard]] int types() const { return associative_ ? 1 : type_count(n_); }
    [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coeff(int type, const Permutation& p) const;

    void add(int type, const Permutation& p, const Rational& c);

    MultilinearPoly& operator+=(const MultilinearPoly& o);
    MultilinearPoly& operator-=(const MultilinearPoly& o);
    MultilinearPoly& operator*=(const Rational& c);
    friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }
    friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly& b) { return a -= b; }
    friend MultilinearPoly operator*(const Rational& c, MultilinearPoly a) { return a *= c; }
    friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

    /// Substitution x_i -> x_{sigma(i)}: (k, p) becomes (k, sigma p).
    [[nodiscard]] MultilinearPoly act(const Permutation& sigma) const;

    /// "2 (x1x2)x3 - x1(x2x3)".
    [[nodiscard]] std::string to_string() const;

private:
    int n_;
    bool associative_;
    std::map<Monomial, Rational> terms_;
};

/// Monomial text "(x1x3)x2"; associative monomials are written without brackets.
std::string monomial_string(int n, bool associative, const Monomial& m);

/// Nonassociative polynomial in single-letter variables, kept as a map from
/// bracketed words "((ab)c)" to coefficients. Used to write identities down
/// before linearizing them.
class FreePoly {
public:
    FreePoly() = default;
    static FreePoly var(char letter);

    [[nodiscard]] const std::map<std::string, Rational>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    FreePoly& operator+=(const FreePoly& o);
    FreePoly& operator-=(const FreePoly& o);
    FreePoly& operator*=(const Rational& c);
    friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
    friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
    friend FreePoly operator*(const Rational& c, FreePoly a) { return a *= c; }
    /// Nonassociative product.
    friend FreePoly operator*(const FreePoly& a, const FreePoly& b);

    /// Full linearization. `order` lists the letters; a letter of degree m
    /// becomes m consecutive variables, summed over all m! placements.
    [[nodiscard]] MultilinearPoly linearize(std::string_view order, bool associative = false) const;

private:
    void add(const std::string& word, const Rational& c);
    std::map<std::string, Rational> terms_;
};

FreePoly commutator(const FreePoly& a, const FreePoly& b);
FreePoly jordan(const FreePoly& a, const FreePoly& b);
FreePoly associator(const FreePoly& a, const FreePoly& b, const FreePoly& c);
/// sum over sigma in S_m of sign(sigma) f(letters permuted by sigma).
FreePoly alternating_sum(std::string_view letters, const std::function<FreePoly(std::string_view)>& f);

/// Standard polynomial s_n in associative mode.
MultilinearPoly standard_polynomial(int n);

/// Named identities: "alt" (two linearized alternative laws), "R1", "R2",
/// "HP5", "HP6", "SZ", "newidentity6", "f" (the degree-4 alternative
/// consequence), "s<n>". Throws std::invalid_argument for other names.
std::vector<MultilinearPoly> named_identity(std::string_view name);
std::vector<std::string> named_identity_names();

/// The n+2 consequences in degree n+1: x_i -> x_i x_{n+1} for i = 1..n,
/// then right and left multiplication by x_{n+1}.
std::vector<MultilinearPoly> consequences(const MultilinearPoly& p);
/// All consequences in degree n, generator by generator, depth first.
/// Polynomials already of degree n are kept as they are.
std::vector<MultilinearPoly> lift(const std::vector<MultilinearPoly>& generators, int n);

/// Fixture text: optional "# name", "# degree N", "# associative" headers, then
/// "coefficient<TAB>type<TAB>permutation" lines; a blank line separates polynomials.
std::string to_fixture(const std::vector<MultilinearPoly>& polys, std::string_view name = {});
std::vector<MultilinearPoly> from_fixture(std::string_view text);
std::vector<MultilinearPoly> read_fixture(const std::string& path);

AlgebraElement evaluate(const MultilinearPoly& p, const StructureAlgebra& a, const std::vector<AlgebraElement>& args);
ModVector evaluate(const MultilinearPoly& p, const ModAlgebra& a, const std::vector<ModVector>& args);

/// Memoized values of bracketed products of a fixed argument tuple over F_p.
class TupleEvaluator {
public:
    TupleEvaluator(const ModAlgebra& a, std::vector<ModVector> args);

    /// Value of shape `shape_id` with x_{word[0]}, x_{word[1]}, ... at its leaves (1-based).
    const Residue* value(int shape_id, const int* word);

    /// Values of all t * n! monomials, laid out [(k-1) n! + rank-1][coordinate].
    std::vector<Residue> all_monomials(int types);

private:
    const ModAlgebra& a_;
    std::vector<ModVector> args_;
    std::unordered_map<std::uint64_t, std::size_t> memo_;
    std::vector<Residue> pool_;
};

/// Coefficient vector over columns (k-1) n! + rank-1, reduced mod p.
ModVector to_vector(const MultilinearPoly& p, Residue prime);
/// Inverse of to_vector, lifting residues to (-p/2, p/2].
MultilinearPoly from_vector(std::span<const Residue> v, int n, bool associative, Residue prime);

}  // namespace pident
