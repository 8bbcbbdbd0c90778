#include "pident/tableau.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace pident {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw std::invalid_argument("empty partition");
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
            throw std::invalid_argument("parts must be positive and weakly decreasing");
        }
        n_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = std::min(text.find(',', start), text.size());
            auto tok = std::string(text.substr(start, end - start));
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
                throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
            }
            parts.push_back(std::stoi(tok));
            start = end + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
            }
            parts.push_back(c - '0');
        }
    }
    return Partition(std::move(parts));
}

int Partition::column_length(int j) const {
    int len = 0;
    for (int part : parts_) {
        if (part >= j) {
            ++len;
        }
    }
    return len;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= parts_.front(); ++j) {
        c.push_back(column_length(j));
    }
    return Partition(std::move(c));
}

std::string Partition::to_string() const {
    std::string s;
    const bool wide = parts_.front() > 9;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (wide && i > 0) {
            s += ',';
        }
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> partitions(int n) {
    if (n < 1) {
        throw std::invalid_argument("partitions: n must be positive");
    }
    std::vector<Partition> out;
    std::vector<int> cur;
    // Depth-first with the largest next part first gives reverse lex order.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::uint64_t dimension(const Partition& lambda) {
    // d = n! prod_{i<j} (m_i - m_j) / prod m_i!, with m_i = n_i + k - i.
    const auto& parts = lambda.parts();
    const int k = lambda.rows();
    std::vector<int> m(k);
    for (int i = 0; i < k; ++i) {
        m[i] = parts[i] + k - (i + 1);
    }
    __int128 num = factorial(lambda.size());
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            num *= (m[i] - m[j]);
        }
    }
    __int128 den = 1;
    for (int i = 0; i < k; ++i) {
        for (int f = 2; f <= m[i]; ++f) {
            den *= f;
            // Cancel early to keep the numbers small.
            __int128 a = num;
            __int128 b = den;
            while (b != 0) {
                __int128 t = a % b;
                a = b;
                b = t;
            }
            num /= a;
            den /= a;
        }
    }
    if (den != 1) {
        throw std::logic_error("hook formula did not produce an integer");
    }
    return static_cast<std::uint64_t>(num);
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> lengths;
    for (const auto& r : rows_) {
        lengths.push_back(static_cast<int>(r.size()));
    }
    shape_ = Partition(lengths);
    const int n = shape_.size();
    std::vector<bool> seen(n + 1, false);
    for (const auto& r : rows_) {
        for (int v : r) {
            if (v < 1 || v > n || seen[v]) {
                throw std::invalid_argument("tableau entries must be a bijection onto 1.." + std::to_string(n));
            }
            seen[v] = true;
        }
    }
}

Tableau Tableau::parse(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = std::min(text.find('/', start), text.size());
        auto row_text = text.substr(start, end - start);
        std::vector<int> row;
        if (row_text.find(',') != std::string_view::npos) {
            std::size_t s = 0;
            while (s <= row_text.size()) {
                auto e = std::min(row_text.find(',', s), row_text.size());
                row.push_back(std::stoi(std::string(row_text.substr(s, e - s))));
                s = e + 1;
            }
        } else {
            for (char c : row_text) {
                if (c < '1' || c > '9') {
                    throw std::invalid_argument("malformed tableau: '" + std::string(text) + "'");
                }
                row.push_back(c - '0');
            }
        }
        rows.push_back(std::move(row));
        start = end + 1;
    }
    return Tableau(std::move(rows));
}

bool Tableau::is_standard() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j > 0 && rows_[i][j - 1] >= rows_[i][j]) {
                return false;
            }
            if (i > 0 && rows_[i - 1][j] >= rows_[i][j]) {
                return false;
            }
        }
    }
    return true;
}

std::pair<int, int> Tableau::position(int x) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (rows_[i][j] == x) {
                return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
            }
        }
    }
    throw std::out_of_range("entry not in tableau");
}

std::vector<std::vector<int>> Tableau::column_sets() const {
    std::vector<std::vector<int>> cols(rows_.front().size());
    for (const auto& r : rows_) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            cols[j].push_back(r[j]);
        }
    }
    return cols;
}

std::string Tableau::to_string() const {
    const bool wide = size() > 9;
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i > 0) {
            s += '/';
        }
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (wide && j > 0) {
                s += ',';
            }
            s += std::to_string(rows_[i][j]);
        }
    }
    return s;
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
    const auto& parts = lambda.parts();
    const int n = lambda.size();
    std::vector<std::vector<int>> rows;
    for (int len : parts) {
        rows.emplace_back(len, 0);
    }
    std::vector<bool> used(n + 1, false);
    std::vector<Tableau> out;
    // Cells in row-major order; trying values in increasing order yields lex order.
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < parts[i]; ++j) {
            cells.emplace_back(static_cast<int>(i), j);
        }
    }
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            out.emplace_back(rows);
            return;
        }
        auto [i, j] = cells[c];
        int lo = 1;
        if (j > 0) {
            lo = std::max(lo, rows[i][j - 1] + 1);
        }
        if (i > 0) {
            lo = std::max(lo, rows[i - 1][j] + 1);
        }
        for (int v = lo; v <= n; ++v) {
            if (used[v]) {
                continue;
            }
            used[v] = true;
            rows[i][j] = v;
            rec(c + 1);
            used[v] = false;
        }
        rows[i][j] = 0;
    };
    rec(0);
    return out;
}

Tableau apply(const Permutation& p, const Tableau& t) {
    if (p.degree() != t.size()) {
        throw std::invalid_argument("permutation and tableau have different degrees");
    }
    auto rows = t.row_vectors();
    for (auto& r : rows) {
        for (int& v : r) {
            v = p(v);
        }
    }
    return Tableau(std::move(rows));
}

Permutation transition(const Tableau& ti, const Tableau& tj) {
    if (!(ti.shape() == tj.shape())) {
        throw std::invalid_argument("tableaux have different shapes");
    }
    std::vector<int> im(ti.size());
    const auto& ri = ti.row_vectors();
    const auto& rj = tj.row_vectors();
    for (std::size_t a = 0; a < ri.size(); ++a) {
        for (std::size_t b = 0; b < ri[a].size(); ++b) {
            im[rj[a][b] - 1] = ri[a][b];
        }
    }
    return Permutation(std::move(im));
}

std::vector<Permutation> horizontal_group(const Tableau& t, std::size_t cap) {
    return block_group(t.size(), t.row_sets(), cap);
}

std::vector<Permutation> vertical_group(const Tableau& t, std::size_t cap) {
    return block_group(t.size(), t.column_sets(), cap);
}

}  // namespace pident
