#pragma once

#include "pident/perm.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pident {

class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    /// "321" style; a comma-separated form "3,2,1" is also accepted.
    static Partition parse(std::string_view text);

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] int rows() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int row_length(int i) const { return parts_[i - 1]; }
    [[nodiscard]] int column_length(int j) const;
    [[nodiscard]] Partition conjugate() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All partitions of n, largest first (5, 41, 32, 311, 221, 2111, 11111).
std::vector<Partition> partitions(int n);

/// Number of standard tableaux, from the hook formula.
std::uint64_t dimension(const Partition& lambda);

class Tableau {
public:
    Tableau() = default;
    /// Rows must have the lengths of a partition and hold 1..n bijectively.
    explicit Tableau(std::vector<std::vector<int>> rows);
    /// "123/45"; rows may also be comma separated for n > 9 ("1,2,10/3").
    static Tableau parse(std::string_view text);

    [[nodiscard]] const Partition& shape() const { return shape_; }
    [[nodiscard]] int size() const { return shape_.size(); }
    /// 1-based row i, column j.
    [[nodiscard]] int at(int i, int j) const { return rows_[i - 1][j - 1]; }
    [[nodiscard]] const std::vector<std::vector<int>>& row_vectors() const { return rows_; }
    [[nodiscard]] bool is_standard() const;

    /// Row and column of entry x, 1-based.
    [[nodiscard]] std::pair<int, int> position(int x) const;

    [[nodiscard]] std::vector<std::vector<int>> row_sets() const { return rows_; }
    [[nodiscard]] std::vector<std::vector<int>> column_sets() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    /// Lex order: first differing entry in row-major reading.
    friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows_ < b.rows_; }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Standard tableaux of shape lambda in lex order.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

/// (pT)(i,j) = p(T(i,j)).
Tableau apply(const Permutation& p, const Tableau& t);

/// The permutation s with apply(s, tj) = ti.
Permutation transition(const Tableau& ti, const Tableau& tj);

inline constexpr std::size_t kGroupCap = 10000;

/// Permutations fixing every row (resp. column) of t as a set.
std::vector<Permutation> horizontal_group(const Tableau& t, std::size_t cap = kGroupCap);
std::vector<Permutation> vertical_group(const Tableau& t, std::size_t cap = kGroupCap);

}  // namespace pident
