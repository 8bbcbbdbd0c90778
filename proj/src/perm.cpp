#include "pident/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pident {

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) {
        throw std::out_of_range("factorial argument out of range");
    }
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    if (n > kMaxDegree) {
        throw std::invalid_argument("permutation degree exceeds " + std::to_string(kMaxDegree));
    }
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v]) {
            throw std::invalid_argument("images do not form a permutation of 1.." + std::to_string(n));
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> im;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(',', start);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            auto tok = text.substr(start, end - start);
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                throw std::invalid_argument("malformed permutation: '" + std::string(text) + "'");
            }
            im.push_back(std::stoi(std::string(tok)));
            start = end + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument("malformed permutation: '" + std::string(text) + "'");
            }
            im.push_back(c - '0');
        }
    }
    if (im.empty()) {
        throw std::invalid_argument("empty permutation");
    }
    return Permutation(std::move(im));
}

Permutation Permutation::unrank(int n, std::uint64_t rank) {
    if (n < 1 || n > kMaxDegree) {
        throw std::invalid_argument("degree out of range");
    }
    if (rank < 1 || rank > factorial(n)) {
        throw std::out_of_range("rank out of range");
    }
    std::uint64_t r = rank - 1;
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> im;
    im.reserve(n);
    for (int k = n; k >= 1; --k) {
        std::uint64_t f = factorial(k - 1);
        auto idx = static_cast<std::size_t>(r / f);
        r %= f;
        im.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) {
        inv[images_[k] - 1] = static_cast<int>(k) + 1;
    }
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

int Permutation::sign() const {
    int inversions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        for (std::size_t j = i + 1; j < images_.size(); ++j) {
            if (images_[i] > images_[j]) {
                ++inversions;
            }
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
    for (std::size_t k = 0; k < images_.size(); ++k) {
        if (images_[k] != static_cast<int>(k) + 1) {
            return false;
        }
    }
    return true;
}

std::uint64_t Permutation::lex_rank() const {
    const int n = degree();
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) {
            if (images_[j] < images_[i]) {
                ++smaller;
            }
        }
        r += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
    }
    return r + 1;
}

std::string Permutation::to_string() const {
    std::string s;
    const bool wide = degree() > 9;
    for (std::size_t k = 0; k < images_.size(); ++k) {
        if (wide && k > 0) {
            s += ',';
        }
        s += std::to_string(images_[k]);
    }
    return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) {
        throw std::invalid_argument("cannot compose permutations of degree " + std::to_string(p.degree()) +
                                    " and " + std::to_string(q.degree()));
    }
    std::vector<int> im(p.degree());
    for (int x = 1; x <= p.degree(); ++x) {
        im[x - 1] = p(q(x));
    }
    return Permutation(std::move(im));
}

std::vector<Permutation> enumerate(int n) {
    if (n < 1 || n > kMaxDegree) {
        throw std::invalid_argument("enumerate: degree must be in 1.." + std::to_string(kMaxDegree));
    }
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<Permutation> block_group(int n, const std::vector<std::vector<int>>& blocks, std::size_t cap) {
    std::uint64_t order = 1;
    for (const auto& b : blocks) {
        order *= factorial(static_cast<int>(b.size()));
        if (order > cap) {
            throw std::length_error("subgroup order exceeds cap " + std::to_string(cap));
        }
    }
    std::vector<Permutation> out;
    out.reserve(order);
    std::vector<std::vector<int>> arrangement(blocks);
    for (auto& a : arrangement) {
        std::sort(a.begin(), a.end());
    }
    // Odometer over independent arrangements of each block.
    while (true) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            std::vector<int> sorted(blocks[b]);
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t k = 0; k < sorted.size(); ++k) {
                im[sorted[k] - 1] = arrangement[b][k];
            }
        }
        out.emplace_back(std::move(im));
        std::size_t b = 0;
        for (; b < arrangement.size(); ++b) {
            if (std::next_permutation(arrangement[b].begin(), arrangement[b].end())) {
                break;
            }
        }
        if (b == arrangement.size()) {
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : p.images()) {
        h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    }
    return h;
}

}  // namespace pident
