#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pident {

inline constexpr int kMaxDegree = 10;

std::uint64_t factorial(int n);

/// Permutation of {1..n} in one-line notation: image(k) = p(k).
class Permutation {
public:
    Permutation() = default;
    /// Images are 1-based. Throws std::invalid_argument unless they form a bijection of {1..n}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// Parses "231" (n <= 9) or "2,3,1".
    static Permutation parse(std::string_view text);
    /// The i-th permutation of S_n in lex order, 1-based.
    static Permutation unrank(int n, std::uint64_t rank);

    [[nodiscard]] int degree() const { return static_cast<int>(images_.size()); }
    [[nodiscard]] int operator()(int x) const { return images_[x - 1]; }
    [[nodiscard]] const std::vector<int>& images() const { return images_; }

    [[nodiscard]] Permutation inverse() const;
    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_identity() const;
    /// 1-based position in lex order of one-line notation.
    [[nodiscard]] std::uint64_t lex_rank() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// compose(p, q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// All n! permutations in lex order.
std::vector<Permutation> enumerate(int n);

/// Subgroup of S_n generated by the full symmetric groups on disjoint blocks,
/// e.g. the row or column sets of a tableau. Enumerated in lex order.
std::vector<Permutation> block_group(int n, const std::vector<std::vector<int>>& blocks, std::size_t cap);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace pident
