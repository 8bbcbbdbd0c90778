#include "pident/clifton.hpp"

#include <stdexcept>

namespace pident {

namespace {

struct Grid {
    std::vector<std::vector<int>> cells;
    std::vector<int> row_of;  // indexed by entry
    std::vector<int> col_of;
};

Grid make_grid(const Tableau& t) {
    Grid g;
    g.cells = t.row_vectors();
    g.row_of.assign(t.size() + 1, 0);
    g.col_of.assign(t.size() + 1, 0);
    for (std::size_t r = 0; r < g.cells.size(); ++r) {
        for (std::size_t c = 0; c < g.cells[r].size(); ++c) {
            g.row_of[g.cells[r][c]] = static_cast<int>(r);
            g.col_of[g.cells[r][c]] = static_cast<int>(c);
        }
    }
    return g;
}

int entry(const Grid& ti, const Grid& ptj, int n) {
    Grid t = ti;  // scratch copy, mutated below
    int e = 1;
    for (int k = 1; k <= n; ++k) {
        const int ri = t.row_of[k];
        const int ci = t.col_of[k];
        const int rj = ptj.row_of[k];
        if (ri == rj) {
            continue;
        }
        if (ci >= static_cast<int>(t.cells[rj].size())) {
            return 0;
        }
        const int other = t.cells[rj][ci];
        if (other < k) {
            return 0;
        }
        e = -e;
        t.cells[ri][ci] = other;
        t.cells[rj][ci] = k;
        t.row_of[other] = ri;
        t.row_of[k] = rj;
    }
    return e;
}

}  // namespace

IntMatrix clifton_matrix(const std::vector<Tableau>& tableaux, const Permutation& p) {
    const std::size_t d = tableaux.size();
    if (d == 0) {
        throw std::invalid_argument("no tableaux");
    }
    const int n = tableaux.front().size();
    if (p.degree() != n) {
        throw std::invalid_argument("permutation degree does not match the partition");
    }
    std::vector<Grid> grids;
    grids.reserve(d);
    for (const auto& t : tableaux) {
        grids.push_back(make_grid(t));
    }
    IntMatrix a(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        Grid ptj = make_grid(apply(p, tableaux[j]));
        for (std::size_t i = 0; i < d; ++i) {
            a(i, j) = entry(grids[i], ptj, n);
        }
    }
    return a;
}

IntMatrix clifton_matrix(const Partition& lambda, const Permutation& p) {
    return clifton_matrix(standard_tableaux(lambda), p);
}

}  // namespace pident
