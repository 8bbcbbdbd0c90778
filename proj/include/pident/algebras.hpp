#pragma once

#include "pident/linalg.hpp"
#include "pident/random.hpp"
#include "pident/rational.hpp"

#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace pident {

using AlgebraElement = std::vector<Rational>;

/// v_i v_j = sum_k c_ij^k v_k, indices 0-based.
struct StructureConstant {
    int i;
    int j;
    int k;
    Rational c;
};

class ModAlgebra;

/// Finite-dimensional algebra given by structure constants. No associativity
/// is assumed; `associative()` only records what the constructor knows.
class StructureAlgebra {
public:
    StructureAlgebra(std::string name, std::vector<std::string> labels, const std::vector<StructureConstant>& constants,
                     bool associative = false);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] int dimension() const { return static_cast<int>(labels_.size()); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] bool associative() const { return associative_; }
    [[nodiscard]] const Rational& constant(int i, int j, int k) const {
        return c_[(static_cast<std::size_t>(i) * dimension() + j) * dimension() + k];
    }
    [[nodiscard]] std::vector<StructureConstant> nonzero_constants() const;

    [[nodiscard]] AlgebraElement basis(int i) const;
    [[nodiscard]] AlgebraElement zero() const { return AlgebraElement(labels_.size()); }
    [[nodiscard]] AlgebraElement product(const AlgebraElement& x, const AlgebraElement& y) const;
    [[nodiscard]] std::string format(const AlgebraElement& x) const;

    /// Integer coordinates uniform in [-10, 10].
    [[nodiscard]] AlgebraElement random_element(Rng& rng) const;

    [[nodiscard]] ModAlgebra reduce(Residue p) const;

    /// {"name", "dimension", "labels", "associative", "constants": [[i,j,k,"c"], ...]} with 1-based indices.
    static StructureAlgebra from_json(std::string_view text);
    [[nodiscard]] std::string to_json() const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Rational> c_;
    bool associative_;
};

/// The same algebra over F_p with sparse constants; used on hot paths.
class ModAlgebra {
public:
    ModAlgebra(int dimension, Residue p, std::vector<std::tuple<int, int, int, Residue>> triples);

    [[nodiscard]] int dimension() const { return dim_; }
    [[nodiscard]] Residue prime() const { return p_; }
    /// out = x * y; out must not alias x or y.
    void product(const Residue* x, const Residue* y, Residue* out) const;
    [[nodiscard]] ModVector product(const ModVector& x, const ModVector& y) const;
    /// Coordinates uniform in [0, p).
    [[nodiscard]] ModVector random_element(Rng& rng) const;

private:
    int dim_;
    Residue p_;
    // Grouped by left index i: entries (j, k, c).
    std::vector<std::vector<std::tuple<int, int, Residue>>> by_left_;
};

/// Generalized octonions with basis 1, e1..e7.
StructureAlgebra cayley_dickson(const Rational& alpha, const Rational& beta, const Rational& gamma);
StructureAlgebra octonions();
/// k x k matrices on the matrix-unit basis E_11, E_12, ..., E_kk.
StructureAlgebra matrix_algebra(int k);
/// One-dimensional algebra with zero product.
StructureAlgebra zero_algebra();

/// "octonions", "m<k>", "cd:a,b,c", "zero"; otherwise throws std::invalid_argument.
StructureAlgebra builtin_algebra(std::string_view name);

/// Trace and norm of x in C(alpha, beta, gamma): t(x) = 2a, n(x) = a^2 - alpha a1^2 - ...
Rational octonion_trace(const AlgebraElement& x);
Rational octonion_norm(const AlgebraElement& x, const Rational& alpha, const Rational& beta, const Rational& gamma);

}  // namespace pident
