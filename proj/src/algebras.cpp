#include "pident/algebras.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace pident {

StructureAlgebra::StructureAlgebra(std::string name, std::vector<std::string> labels,
                                   const std::vector<StructureConstant>& constants, bool associative)
    : name_(std::move(name)), labels_(std::move(labels)), associative_(associative) {
    const auto d = static_cast<std::size_t>(dimension());
    if (d == 0) {
        throw std::invalid_argument("algebra must have positive dimension");
    }
    c_.assign(d * d * d, Rational(0));
    for (const auto& sc : constants) {
        if (sc.i < 0 || sc.j < 0 || sc.k < 0 || sc.i >= dimension() || sc.j >= dimension() || sc.k >= dimension()) {
            throw std::invalid_argument("structure constant index out of range");
        }
        c_[(sc.i * d + sc.j) * d + sc.k] += sc.c;
    }
}

std::vector<StructureConstant> StructureAlgebra::nonzero_constants() const {
    std::vector<StructureConstant> out;
    const int d = dimension();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                if (!constant(i, j, k).is_zero()) {
                    out.push_back({i, j, k, constant(i, j, k)});
                }
            }
        }
    }
    return out;
}

AlgebraElement StructureAlgebra::basis(int i) const {
    AlgebraElement x = zero();
    x.at(static_cast<std::size_t>(i)) = Rational(1);
    return x;
}

AlgebraElement StructureAlgebra::product(const AlgebraElement& x, const AlgebraElement& y) const {
    const int d = dimension();
    if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d) {
        throw std::invalid_argument("element dimension does not match the algebra");
    }
    AlgebraElement out = zero();
    for (int i = 0; i < d; ++i) {
        if (x[i].is_zero()) {
            continue;
        }
        for (int j = 0; j < d; ++j) {
            if (y[j].is_zero()) {
                continue;
            }
            const Rational xy = x[i] * y[j];
            for (int k = 0; k < d; ++k) {
                const Rational& c = constant(i, j, k);
                if (!c.is_zero()) {
                    out[k] += c * xy;
                }
            }
        }
    }
    return out;
}

std::string StructureAlgebra::format(const AlgebraElement& x) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].is_zero()) {
            continue;
        }
        os << (first ? "" : " + ") << x[k] << '*' << labels_[k];
        first = false;
    }
    return first ? "0" : os.str();
}

AlgebraElement StructureAlgebra::random_element(Rng& rng) const {
    AlgebraElement x = zero();
    for (auto& v : x) {
        v = Rational(rng.between(-10, 10));
    }
    return x;
}

ModAlgebra StructureAlgebra::reduce(Residue p) const {
    std::vector<std::tuple<int, int, int, Residue>> triples;
    for (const auto& sc : nonzero_constants()) {
        Residue r = to_residue(sc.c, p);
        if (r != 0) {
            triples.emplace_back(sc.i, sc.j, sc.k, r);
        }
    }
    return {dimension(), p, std::move(triples)};
}

StructureAlgebra StructureAlgebra::from_json(std::string_view text) {
    auto j = nlohmann::json::parse(text);
    const int d = j.at("dimension").get<int>();
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<std::string>>();
    } else {
        for (int i = 1; i <= d; ++i) {
            labels.push_back("v" + std::to_string(i));
        }
    }
    if (static_cast<int>(labels.size()) != d) {
        throw std::invalid_argument("number of labels does not match the dimension");
    }
    std::vector<StructureConstant> consts;
    for (const auto& q : j.at("constants")) {
        if (!q.is_array() || q.size() != 4) {
            throw std::invalid_argument("structure constants must be [i, j, k, value] quadruples");
        }
        Rational c = q[3].is_string() ? Rational::parse(q[3].get<std::string>()) : Rational(q[3].get<std::int64_t>());
        consts.push_back({q[0].get<int>() - 1, q[1].get<int>() - 1, q[2].get<int>() - 1, c});
    }
    return {j.value("name", std::string("custom")), std::move(labels), consts, j.value("associative", false)};
}

std::string StructureAlgebra::to_json() const {
    nlohmann::json j;
    j["name"] = name_;
    j["dimension"] = dimension();
    j["labels"] = labels_;
    j["associative"] = associative_;
    auto arr = nlohmann::json::array();
    for (const auto& sc : nonzero_constants()) {
        arr.push_back({sc.i + 1, sc.j + 1, sc.k + 1, sc.c.to_string()});
    }
    j["constants"] = arr;
    return j.dump(1);
}

ModAlgebra::ModAlgebra(int dimension, Residue p, std::vector<std::tuple<int, int, int, Residue>> triples)
    : dim_(dimension), p_(p), by_left_(static_cast<std::size_t>(dimension)) {
    require_prime(p);
    for (const auto& [i, j, k, c] : triples) {
        by_left_[i].emplace_back(j, k, c);
    }
}

void ModAlgebra::product(const Residue* x, const Residue* y, Residue* out) const {
    // Up to d^3 products of residues below 2^31 can accumulate; p = 101 and
    // small algebras never come close, but flush anyway for large p.
    std::uint64_t acc[64];
    std::vector<std::uint64_t> big;
    std::uint64_t* a = acc;
    if (dim_ > 64) {
        big.assign(dim_, 0);
        a = big.data();
    } else {
        std::fill(acc, acc + dim_, 0);
    }
    const std::uint64_t pp = static_cast<std::uint64_t>(p_) * p_;
    const bool small = pp < (1ULL << 40);
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0) {
            continue;
        }
        for (const auto& [j, k, c] : by_left_[i]) {
            if (y[j] == 0) {
                continue;
            }
            const std::uint64_t xy = static_cast<std::uint64_t>(x[i]) * y[j] % p_;
            a[k] += xy * c;
            if (!small) {
                a[k] %= p_;
            }
        }
    }
    for (int k = 0; k < dim_; ++k) {
        out[k] = static_cast<Residue>(a[k] % p_);
    }
}

ModVector ModAlgebra::product(const ModVector& x, const ModVector& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_) {
        throw std::invalid_argument("element dimension does not match the algebra");
    }
    ModVector out(dim_);
    product(x.data(), y.data(), out.data());
    return out;
}

ModVector ModAlgebra::random_element(Rng& rng) const {
    ModVector x(dim_);
    for (auto& v : x) {
        v = static_cast<Residue>(rng.below(p_));
    }
    return x;
}

namespace {

// Table entries: optional sign, parameter letters, basis index (0 is the unit).
const char* const kOctonionTable[7][8] = {
    {"1", "a0", "3", "a2", "5", "a4", "-7", "-a6"},
    {"2", "-3", "b0", "-b1", "6", "7", "b4", "b5"},
    {"3", "-a2", "b1", "-ab0", "7", "a6", "-b5", "-ab4"},
    {"4", "-5", "-6", "-7", "c0", "-c1", "-c2", "-c3"},
    {"5", "-a4", "-7", "-a6", "c1", "-ac0", "c3", "ac2"},
    {"6", "7", "-b4", "b5", "c2", "-c3", "-bc0", "-bc1"},
    {"7", "a6", "-b5", "ab4", "c3", "-ac2", "bc1", "abc0"},
};

}  // namespace

StructureAlgebra cayley_dickson(const Rational& alpha, const Rational& beta, const Rational& gamma) {
    if (alpha.is_zero() || beta.is_zero() || gamma.is_zero()) {
        throw std::invalid_argument("Cayley-Dickson parameters must be nonzero");
    }
    std::vector<StructureConstant> consts;
    for (int k = 0; k < 8; ++k) {
        consts.push_back({0, k, k, Rational(1)});
    }
    for (int i = 1; i <= 7; ++i) {
        for (int j = 0; j < 8; ++j) {
            std::string_view cell = kOctonionTable[i - 1][j];
            Rational c(1);
            if (cell.front() == '-') {
                c = Rational(-1);
                cell.remove_prefix(1);
            }
            for (char ch : cell.substr(0, cell.size() - 1)) {
                c *= ch == 'a' ? alpha : ch == 'b' ? beta : gamma;
            }
            consts.push_back({i, j, cell.back() - '0', c});
        }
    }
    std::ostringstream name;
    name << "C(" << alpha << "," << beta << "," << gamma << ")";
    return {name.str(), {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"}, consts};
}

StructureAlgebra octonions() {
    auto cd = cayley_dickson(-1, -1, -1);
    return {"octonions", cd.labels(), cd.nonzero_constants()};
}

StructureAlgebra matrix_algebra(int k) {
    if (k < 1) {
        throw std::invalid_argument("matrix size must be positive");
    }
    std::vector<std::string> labels;
    for (int a = 1; a <= k; ++a) {
        for (int b = 1; b <= k; ++b) {
            labels.push_back("E" + std::to_string(a) + std::to_string(b));
        }
    }
    std::vector<StructureConstant> consts;
    // E_ab E_bd = E_ad
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            for (int d = 0; d < k; ++d) {
                consts.push_back({a * k + b, b * k + d, a * k + d, Rational(1)});
            }
        }
    }
    return {"M" + std::to_string(k), std::move(labels), consts, true};
}

StructureAlgebra zero_algebra() { return {"zero", {"v1"}, {}, true}; }

StructureAlgebra builtin_algebra(std::string_view name) {
    if (name == "octonions" || name == "O") {
        return octonions();
    }
    if (name == "zero") {
        return zero_algebra();
    }
    if ((name.front() == 'm' || name.front() == 'M') && name.size() > 1 &&
        name.substr(1).find_first_not_of("0123456789") == std::string_view::npos) {
        return matrix_algebra(std::stoi(std::string(name.substr(1))));
    }
    if (name.substr(0, 3) == "cd:") {
        std::vector<Rational> params;
        std::string rest(name.substr(3));
        std::size_t start = 0;
        while (start <= rest.size()) {
            auto end = std::min(rest.find(',', start), rest.size());
            params.push_back(Rational::parse(rest.substr(start, end - start)));
            start = end + 1;
        }
        if (params.size() != 3) {
            throw std::invalid_argument("cd: expects three parameters, e.g. cd:-1,-1,-1");
        }
        return cayley_dickson(params[0], params[1], params[2]);
    }
    throw std::invalid_argument("unknown algebra '" + std::string(name) + "'");
}

Rational octonion_trace(const AlgebraElement& x) { return Rational(2) * x.at(0); }

Rational octonion_norm(const AlgebraElement& x, const Rational& alpha, const Rational& beta, const Rational& gamma) {
    if (x.size() != 8) {
        throw std::invalid_argument("octonion norm needs an 8-dimensional element");
    }
    const Rational coef[8] = {1, -alpha, -beta, alpha * beta, -gamma, alpha * gamma, beta * gamma, -(alpha * beta * gamma)};
    Rational n(0);
    for (int k = 0; k < 8; ++k) {
        n += coef[k] * x[k] * x[k];
    }
    return n;
}

}  // namespace pident
