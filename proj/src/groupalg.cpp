#include "pident/groupalg.hpp"

#include "pident/clifton.hpp"

#include <sstream>
#include <stdexcept>

namespace pident {

GroupAlgebraElement::GroupAlgebraElement(const Permutation& p, Rational c) : n_(p.degree()) { add(p, c); }

Rational GroupAlgebraElement::coeff(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(const Permutation& p, const Rational& c) {
    if (p.degree() != n_) {
        throw std::invalid_argument("permutation degree does not match group algebra degree");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    if (o.n_ != n_) {
        throw std::invalid_argument("group algebra degree mismatch");
    }
    for (const auto& [p, c] : o.terms_) {
        add(p, c);
    }
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
    if (o.n_ != n_) {
        throw std::invalid_argument("group algebra degree mismatch");
    }
    for (const auto& [p, c] : o.terms_) {
        add(p, -c);
    }
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) {
        v *= c;
    }
    return *this;
}

GroupAlgebraElement GroupAlgebraElement::times(const Permutation& q) const {
    GroupAlgebraElement out(n_);
    for (const auto& [p, c] : terms_) {
        out.terms_.emplace(compose(p, q), c);
    }
    return out;
}

GroupAlgebraElement GroupAlgebraElement::left_times(const Permutation& q) const {
    GroupAlgebraElement out(n_);
    for (const auto& [p, c] : terms_) {
        out.terms_.emplace(compose(q, p), c);
    }
    return out;
}

std::vector<Rational> GroupAlgebraElement::dense() const {
    std::vector<Rational> v(factorial(n_));
    for (const auto& [p, c] : terms_) {
        v[p.lex_rank() - 1] = c;
    }
    return v;
}

std::string GroupAlgebraElement::to_string() const {
    std::ostringstream os;
    for (const auto& [p, c] : terms_) {
        os << c << '\t' << p.to_string() << '\n';
    }
    return os.str();
}

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.degree() != b.degree()) {
        throw std::invalid_argument("group algebra degree mismatch");
    }
    GroupAlgebraElement out(a.degree());
    for (const auto& [p, c] : a.terms()) {
        for (const auto& [q, d] : b.terms()) {
            out.add(compose(p, q), c * d);
        }
    }
    return out;
}

GroupAlgebraElement symmetric_sum(const Tableau& t) {
    GroupAlgebraElement x(t.size());
    for (const auto& h : horizontal_group(t)) {
        x.add(h, 1);
    }
    return x;
}

GroupAlgebraElement alternating_sum(const Tableau& t) {
    GroupAlgebraElement x(t.size());
    for (const auto& v : vertical_group(t)) {
        x.add(v, v.sign());
    }
    return x;
}

GroupAlgebraElement young_symmetrizer(const Tableau& t) {
    return multiply(symmetric_sum(t), alternating_sum(t));
}

GroupAlgebraElement idempotent(const Tableau& t) {
    const auto d = static_cast<std::int64_t>(dimension(t.shape()));
    const auto nf = static_cast<std::int64_t>(factorial(t.size()));
    return young_symmetrizer(t) * Rational(d, nf);
}

IntMatrix xi_matrix(const Partition& lambda) {
    return clifton_matrix(lambda, Permutation::identity(lambda.size()));
}

Wedderburn::Wedderburn(const Partition& lambda)
    : lambda_(lambda), tableaux_(standard_tableaux(lambda)) {
    const std::size_t d = tableaux_.size();
    s_.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            s_.push_back(transition(tableaux_[i], tableaux_[j]));
        }
    }
    xi_ = clifton_matrix(tableaux_, Permutation::identity(lambda.size()));
    eta_ = unitriangular_inverse(xi_);
}

const GroupAlgebraElement& Wedderburn::idempotent(std::size_t i) {
    if (i < 1 || i > dim()) {
        throw std::out_of_range("tableau index out of range");
    }
    if (idempotents_.empty()) {
        for (const auto& t : tableaux_) {
            idempotents_.push_back(pident::idempotent(t));
        }
    }
    return idempotents_[i - 1];
}

GroupAlgebraElement Wedderburn::unit(std::size_t i, std::size_t j) {
    const std::size_t d = dim();
    if (i < 1 || i > d || j < 1 || j > d) {
        throw std::out_of_range("matrix unit index out of range");
    }
    const GroupAlgebraElement& ei = idempotent(i);
    GroupAlgebraElement u(lambda_.size());
    for (std::size_t l = 1; l <= d; ++l) {
        const std::int64_t c = eta_(j - 1, l - 1);
        if (c != 0) {
            u += ei.times(s(i, l)) * Rational(c);
        }
    }
    return u;
}

GroupAlgebraElement matrix_unit(const Partition& lambda, std::size_t i, std::size_t j) {
    Wedderburn w(lambda);
    return w.unit(i, j);
}

RatMatrix psi_matrix(int n) {
    if (n < 1 || n > kPsiMaxDegree) {
        throw std::invalid_argument("psi_matrix supports 1 <= n <= " + std::to_string(kPsiMaxDegree));
    }
    const std::size_t nf = factorial(n);
    RatMatrix psi(nf, nf);
    std::size_t col = 0;
    for (const auto& lambda : partitions(n)) {
        Wedderburn w(lambda);
        for (std::size_t i = 1; i <= w.dim(); ++i) {
            for (std::size_t j = 1; j <= w.dim(); ++j) {
                auto coeffs = w.unit(i, j).dense();
                for (std::size_t r = 0; r < nf; ++r) {
                    psi(r, col) = coeffs[r];
                }
                ++col;
            }
        }
    }
    return psi;
}

}  // namespace pident
