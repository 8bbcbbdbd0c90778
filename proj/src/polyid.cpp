#include "pident/polyid.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace pident {

namespace {

struct ShapeRegistry {
    std::vector<Shape> shapes;
    std::vector<std::vector<int>> by_degree;
    std::vector<int> index;
    std::map<std::pair<int, int>, int> products;

    ShapeRegistry() {
        shapes.push_back({1, -1, -1, "*"});
        index.push_back(1);
        by_degree.resize(kMaxTypeDegree + 1);
        by_degree[1] = {0};
        auto wrap = [this](int id) { return id == 0 ? std::string("*") : "(" + shapes[id].code + ")"; };
        for (int m = 2; m <= kMaxTypeDegree; ++m) {
            for (int a = m - 1; a >= 1; --a) {
                for (int l : by_degree[a]) {
                    for (int r : by_degree[m - a]) {
                        const int id = static_cast<int>(shapes.size());
                        shapes.push_back({m, l, r, wrap(l) + wrap(r)});
                        by_degree[m].push_back(id);
                        index.push_back(static_cast<int>(by_degree[m].size()));
                        products[{l, r}] = id;
                    }
                }
            }
        }
    }
};

const ShapeRegistry& registry() {
    static const ShapeRegistry reg;
    return reg;
}

void check_degree(int n) {
    if (n < 1 || n > kMaxTypeDegree) {
        throw std::length_error("degree must be in 1.." + std::to_string(kMaxTypeDegree) + ", got " +
                                std::to_string(n));
    }
}

// Shape with the leaf at position pos (0-based) replaced by a product of two leaves.
int graft(int s, int pos) {
    if (s == 0) {
        return shape_product(0, 0);
    }
    const Shape& sh = shape(s);
    const int a = shape(sh.left).degree;
    if (pos < a) {
        return shape_product(graft(sh.left, pos), sh.right);
    }
    return shape_product(sh.left, graft(sh.right, pos - a));
}

int parse_shape(std::string_view code, std::size_t& pos);

int parse_factor(std::string_view code, std::size_t& pos) {
    if (pos >= code.size()) {
        throw std::invalid_argument("truncated association type");
    }
    if (code[pos] == '*') {
        ++pos;
        return 0;
    }
    if (code[pos] != '(') {
        throw std::invalid_argument("unexpected character in association type");
    }
    ++pos;
    int s = parse_shape(code, pos);
    if (pos >= code.size() || code[pos] != ')') {
        throw std::invalid_argument("unbalanced parentheses in association type");
    }
    ++pos;
    return s;
}

int parse_shape(std::string_view code, std::size_t& pos) {
    int s = parse_factor(code, pos);
    if (pos < code.size() && code[pos] != ')') {
        s = shape_product(s, parse_factor(code, pos));
    }
    return s;
}

std::uint64_t memo_key(int shape_id, const int* word, int len) {
    std::uint64_t key = static_cast<std::uint64_t>(shape_id);
    for (int i = 0; i < len; ++i) {
        key = (key << 4U) | static_cast<std::uint64_t>(word[i]);
    }
    return key;
}

// Parses a bracketed FreePoly word into a shape and its leaf letters.
int parse_word(const std::string& w, std::size_t& pos, std::string& leaves) {
    if (w[pos] == '(') {
        ++pos;
        int l = parse_word(w, pos, leaves);
        int r = parse_word(w, pos, leaves);
        ++pos;  // ')'
        return shape_product(l, r);
    }
    leaves += w[pos++];
    return 0;
}

}  // namespace

const Shape& shape(int id) { return registry().shapes.at(static_cast<std::size_t>(id)); }

int shape_product(int left, int right) {
    const auto& reg = registry();
    auto it = reg.products.find({left, right});
    if (it == reg.products.end()) {
        throw std::length_error("association types are limited to degree " + std::to_string(kMaxTypeDegree));
    }
    return it->second;
}

int type_count(int n) {
    check_degree(n);
    return static_cast<int>(registry().by_degree[n].size());
}

int type_shape(int n, int k) {
    check_degree(n);
    const auto& v = registry().by_degree[n];
    if (k < 1 || k > static_cast<int>(v.size())) {
        throw std::out_of_range("association type index out of range");
    }
    return v[k - 1];
}

int type_index(int shape_id) { return registry().index.at(static_cast<std::size_t>(shape_id)); }

std::vector<std::string> association_types(int n) {
    check_degree(n);
    std::vector<std::string> out;
    for (int id : registry().by_degree[n]) {
        out.push_back(shape(id).code);
    }
    return out;
}

int type_from_code(std::string_view code) {
    std::size_t pos = 0;
    int s = parse_shape(code, pos);
    if (pos != code.size()) {
        throw std::invalid_argument("trailing characters in association type");
    }
    return type_index(s);
}

MultilinearPoly::MultilinearPoly(int n, bool associative) : n_(n), associative_(associative) { check_degree(n); }

Rational MultilinearPoly::coeff(int type, const Permutation& p) const {
    auto it = terms_.find({type, p});
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultilinearPoly::add(int type, const Permutation& p, const Rational& c) {
    if (type < 1 || type > types()) {
        throw std::out_of_range("association type index out of range");
    }
    if (p.degree() != n_) {
        throw std::invalid_argument("monomial degree does not match polynomial degree");
    }
    if (c.is_zero()) {
        return;
    }
    Monomial m{type, p};
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& o) {
    if (o.n_ != n_ || o.associative_ != associative_) {
        throw std::invalid_argument("cannot add polynomials of different degree or mode");
    }
    for (const auto& [m, c] : o.terms_) {
        add(m.type, m.perm, c);
    }
    return *this;
}

MultilinearPoly& MultilinearPoly::operator-=(const MultilinearPoly& o) {
    if (o.n_ != n_ || o.associative_ != associative_) {
        throw std::invalid_argument("cannot subtract polynomials of different degree or mode");
    }
    for (const auto& [m, c] : o.terms_) {
        add(m.type, m.perm, -c);
    }
    return *this;
}

MultilinearPoly& MultilinearPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) {
        v *= c;
    }
    return *this;
}

MultilinearPoly MultilinearPoly::act(const Permutation& sigma) const {
    MultilinearPoly out(n_, associative_);
    for (const auto& [m, c] : terms_) {
        out.terms_.emplace(Monomial{m.type, compose(sigma, m.perm)}, c);
    }
    return out;
}

std::string monomial_string(int n, bool associative, const Monomial& m) {
    std::string out;
    if (associative) {
        for (int v : m.perm.images()) {
            out += "x" + std::to_string(v);
        }
        return out;
    }
    int leaf = 0;
    for (char ch : shape(type_shape(n, m.type)).code) {
        if (ch == '*') {
            out += "x" + std::to_string(m.perm.images()[leaf++]);
        } else {
            out += ch;
        }
    }
    return out;
}

std::string MultilinearPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.num() < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a.num() < 0 ? " - " : " + ";
            if (a.num() < 0) {
                a = -a;
            }
        }
        if (a != Rational(1)) {
            out += a.to_string() + " ";
        }
        out += monomial_string(n_, associative_, m);
        first = false;
    }
    return out;
}

FreePoly FreePoly::var(char letter) {
    FreePoly p;
    p.terms_[std::string(1, letter)] = Rational(1);
    return p;
}

void FreePoly::add(const std::string& word, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(word, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
    for (const auto& [w, c] : o.terms_) {
        add(w, c);
    }
    return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
    for (const auto& [w, c] : o.terms_) {
        add(w, -c);
    }
    return *this;
}

FreePoly& FreePoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
    }
    for (auto& [w, v] : terms_) {
        v *= c;
    }
    return *this;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
    FreePoly out;
    for (const auto& [u, c] : a.terms_) {
        for (const auto& [v, d] : b.terms_) {
            out.add("(" + u + v + ")", c * d);
        }
    }
    return out;
}

MultilinearPoly FreePoly::linearize(std::string_view order, bool associative) const {
    if (terms_.empty()) {
        throw std::invalid_argument("cannot linearize the zero polynomial");
    }
    // Multiplicities from the first term; every term must agree.
    std::map<char, int> mult;
    {
        std::size_t pos = 0;
        std::string leaves;
        parse_word(terms_.begin()->first, pos, leaves);
        for (char ch : leaves) {
            ++mult[ch];
        }
    }
    std::map<char, int> base;
    int n = 0;
    for (char ch : order) {
        if (base.count(ch) != 0) {
            throw std::invalid_argument("repeated letter in variable order");
        }
        base[ch] = n;
        n += mult.count(ch) != 0 ? mult[ch] : 0;
    }
    for (const auto& [ch, m] : mult) {
        if (base.count(ch) == 0) {
            throw std::invalid_argument(std::string("letter '") + ch + "' missing from variable order");
        }
    }
    MultilinearPoly out(n, associative);
    for (const auto& [word, c] : terms_) {
        std::size_t pos = 0;
        std::string leaves;
        const int s = parse_word(word, pos, leaves);
        std::map<char, std::vector<std::size_t>> where;
        for (std::size_t i = 0; i < leaves.size(); ++i) {
            where[leaves[i]].push_back(i);
        }
        for (const auto& [ch, m] : mult) {
            if (where[ch].size() != static_cast<std::size_t>(m)) {
                throw std::invalid_argument("polynomial is not homogeneous");
            }
        }
        if (where.size() != mult.size()) {
            throw std::invalid_argument("polynomial is not homogeneous");
        }
        const int type = associative ? 1 : type_index(s);
        // Iterate over all bijections occurrence -> variable, letter by letter.
        std::vector<char> letters;
        std::vector<std::vector<int>> assign;
        for (const auto& [ch, m] : mult) {
            letters.push_back(ch);
            std::vector<int> vars(m);
            for (int i = 0; i < m; ++i) {
                vars[i] = base[ch] + i + 1;
            }
            assign.push_back(vars);
        }
        std::vector<int> images(leaves.size());
        while (true) {
            for (std::size_t l = 0; l < letters.size(); ++l) {
                const auto& occ = where[letters[l]];
                for (std::size_t i = 0; i < occ.size(); ++i) {
                    images[occ[i]] = assign[l][i];
                }
            }
            out.add(type, Permutation(images), c);
            std::size_t l = 0;
            while (l < assign.size() && !std::next_permutation(assign[l].begin(), assign[l].end())) {
                ++l;
            }
            if (l == assign.size()) {
                break;
            }
        }
    }
    return out;
}

FreePoly commutator(const FreePoly& a, const FreePoly& b) { return a * b - b * a; }
FreePoly jordan(const FreePoly& a, const FreePoly& b) { return a * b + b * a; }
FreePoly associator(const FreePoly& a, const FreePoly& b, const FreePoly& c) { return (a * b) * c - a * (b * c); }

FreePoly alternating_sum(std::string_view letters, const std::function<FreePoly(std::string_view)>& f) {
    FreePoly out;
    const int m = static_cast<int>(letters.size());
    std::string permuted(letters);
    for (const auto& sigma : enumerate(m)) {
        for (int i = 0; i < m; ++i) {
            permuted[i] = letters[sigma(i + 1) - 1];
        }
        out += Rational(sigma.sign()) * f(permuted);
    }
    return out;
}

MultilinearPoly standard_polynomial(int n) {
    MultilinearPoly s(n, true);
    for (const auto& sigma : enumerate(n)) {
        s.add(1, sigma, sigma.sign());
    }
    return s;
}

namespace {

FreePoly X(char c) { return FreePoly::var(c); }

std::vector<MultilinearPoly> build_named(std::string_view name) {
    using F = FreePoly;
    const F x = X('x');
    const F y = X('y');
    const F z = X('z');
    const F t = X('t');
    if (name == "alt") {
        return {(associator(x, y, z) + associator(y, x, z)).linearize("xyz"),
                (associator(x, y, z) + associator(x, z, y)).linearize("xyz")};
    }
    if (name == "f") {
        F f = associator(x * y, z, t) + associator(x, y, commutator(z, t)) - x * associator(y, z, t) -
              associator(x, z, t) * y;
        return {f.linearize("xyzt")};
    }
    if (name == "R1") {
        F c = commutator(x, y);
        return {commutator(c * c, x).linearize("xy")};
    }
    if (name == "R2") {
        auto V = [](const F& w) {
            return alternating_sum("xyz", [&w](std::string_view s) {
                return jordan(X(s[0]), jordan(X(s[1]), jordan(X(s[2]), w)));
            });
        };
        return {(V(t * t) - jordan(V(t), t)).linearize("xyzt")};
    }
    if (name == "HP5") {
        return {commutator(jordan(commutator(X('v'), X('w')), commutator(x, y)), z).linearize("vwxyz")};
    }
    if (name == "HP6") {
        F inner = alternating_sum("xyztw", [](std::string_view s) {
            F a = X(s[0]);
            F b = X(s[1]);
            F c = X(s[2]);
            F d = X(s[3]);
            F e = X(s[4]);
            return Rational(24) * (a * (b * (c * (d * e)))) + Rational(8) * (a * (associator(b, c, d) * e)) -
                   Rational(11) * associator(a, b, associator(c, d, e));
        });
        return {commutator(inner, X('u')).linearize("xyztwu")};
    }
    if (name == "SZ") {
        F inner = alternating_sum("xyztw", [](std::string_view s) {
            F a = X(s[0]);
            F b = X(s[1]);
            F c = X(s[2]);
            F d = X(s[3]);
            F e = X(s[4]);
            return Rational(12) * ((commutator(a, b) * commutator(c, d)) * e) -
                   commutator(commutator(commutator(commutator(a, b), c), d), e);
        });
        return {commutator(inner, X('u')).linearize("xyztwu")};
    }
    if (name == "newidentity6") {
        F p = alternating_sum("abcdef", [](std::string_view s) {
            F a = X(s[0]);
            F b = X(s[1]);
            F c = X(s[2]);
            F d = X(s[3]);
            F e = X(s[4]);
            F g = X(s[5]);
            return Rational(5) * (a * (b * ((c * d) * (e * g)))) - a * (b * (c * (d * (e * g))));
        });
        return {p.linearize("abcdef")};
    }
    if (name.size() == 2 && name[0] == 's' && name[1] >= '1' && name[1] <= '0' + kMaxTypeDegree) {
        return {standard_polynomial(name[1] - '0')};
    }
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

}  // namespace

std::vector<MultilinearPoly> named_identity(std::string_view name) { return build_named(name); }

std::vector<std::string> named_identity_names() {
    return {"alt", "f", "R1", "R2", "HP5", "HP6", "SZ", "newidentity6", "s3", "s4"};
}

std::vector<MultilinearPoly> consequences(const MultilinearPoly& p) {
    const int n = p.degree();
    check_degree(n + 1);
    const bool assoc = p.associative();
    std::vector<MultilinearPoly> out;
    for (int i = 1; i <= n; ++i) {
        MultilinearPoly q(n + 1, assoc);
        for (const auto& [m, c] : p.terms()) {
            std::vector<int> images = m.perm.images();
            const auto at = std::find(images.begin(), images.end(), i) - images.begin();
            images.insert(images.begin() + at + 1, n + 1);
            const int type = assoc ? 1 : type_index(graft(type_shape(n, m.type), static_cast<int>(at)));
            q.add(type, Permutation(images), c);
        }
        out.push_back(std::move(q));
    }
    MultilinearPoly right(n + 1, assoc);
    MultilinearPoly left(n + 1, assoc);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> images = m.perm.images();
        images.push_back(n + 1);
        right.add(assoc ? 1 : type_index(shape_product(type_shape(n, m.type), 0)), Permutation(images), c);
        images.pop_back();
        images.insert(images.begin(), n + 1);
        left.add(assoc ? 1 : type_index(shape_product(0, type_shape(n, m.type))), Permutation(images), c);
    }
    out.push_back(std::move(right));
    out.push_back(std::move(left));
    return out;
}

namespace {

void lift_into(const MultilinearPoly& p, int n, std::vector<MultilinearPoly>& out) {
    if (p.degree() == n) {
        out.push_back(p);
        return;
    }
    if (p.degree() > n) {
        throw std::invalid_argument("cannot lift a polynomial of degree " + std::to_string(p.degree()) +
                                    " to degree " + std::to_string(n));
    }
    for (const auto& c : consequences(p)) {
        lift_into(c, n, out);
    }
}

}  // namespace

std::vector<MultilinearPoly> lift(const std::vector<MultilinearPoly>& generators, int n) {
    std::vector<MultilinearPoly> out;
    for (const auto& g : generators) {
        lift_into(g, n, out);
    }
    return out;
}

std::string to_fixture(const std::vector<MultilinearPoly>& polys, std::string_view name) {
    std::ostringstream os;
    if (!name.empty()) {
        os << "# name " << name << '\n';
    }
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const auto& p = polys[i];
        if (i > 0) {
            os << '\n';
        }
        os << "# degree " << p.degree() << '\n';
        if (p.associative()) {
            os << "# associative\n";
        }
        for (const auto& [m, c] : p.terms()) {
            os << c << '\t' << m.type << '\t' << m.perm.to_string() << '\n';
        }
    }
    return os.str();
}

std::vector<MultilinearPoly> from_fixture(std::string_view text) {
    std::vector<MultilinearPoly> out;
    std::optional<MultilinearPoly> current;
    int degree = 0;
    bool assoc = false;
    auto flush = [&]() {
        if (current) {
            out.push_back(std::move(*current));
        } else if (degree > 0) {
            out.emplace_back(degree, assoc);
        }
        current.reset();
        degree = 0;
        assoc = false;
    };
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            flush();
            continue;
        }
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string key;
            hs >> key;
            if (key == "degree") {
                if (current) {
                    flush();
                }
                hs >> degree;
            } else if (key == "associative") {
                assoc = true;
            }
            continue;
        }
        std::istringstream ls(line);
        std::string coef;
        int type = 0;
        std::string perm;
        if (!(ls >> coef >> type >> perm)) {
            throw std::invalid_argument("fixture line " + std::to_string(lineno) + ": expected coefficient, type, permutation");
        }
        Permutation p = Permutation::parse(perm);
        if (!current) {
            current.emplace(degree > 0 ? degree : p.degree(), assoc);
        }
        current->add(type, p, Rational::parse(coef));
    }
    flush();
    return out;
}

std::vector<MultilinearPoly> read_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open fixture " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_fixture(ss.str());
}

namespace {

AlgebraElement exact_value(const StructureAlgebra& a, const std::vector<AlgebraElement>& args, int s, const int* word,
                           std::unordered_map<std::uint64_t, AlgebraElement>& memo) {
    if (s == 0) {
        return args[word[0] - 1];
    }
    const std::uint64_t key = memo_key(s, word, shape(s).degree);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    const Shape& sh = shape(s);
    AlgebraElement v = a.product(exact_value(a, args, sh.left, word, memo),
                                 exact_value(a, args, sh.right, word + shape(sh.left).degree, memo));
    memo.emplace(key, v);
    return v;
}

}  // namespace

AlgebraElement evaluate(const MultilinearPoly& p, const StructureAlgebra& a, const std::vector<AlgebraElement>& args) {
    const int n = p.degree();
    if (static_cast<int>(args.size()) != n) {
        throw std::invalid_argument("evaluate needs one argument per variable");
    }
    for (const auto& x : args) {
        if (static_cast<int>(x.size()) != a.dimension()) {
            throw std::invalid_argument("argument dimension does not match the algebra");
        }
    }
    std::unordered_map<std::uint64_t, AlgebraElement> memo;
    AlgebraElement out = a.zero();
    for (const auto& [m, c] : p.terms()) {
        const int s = type_shape(n, p.associative() ? 1 : m.type);
        const auto v = exact_value(a, args, s, m.perm.images().data(), memo);
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] += c * v[k];
        }
    }
    return out;
}

ModVector evaluate(const MultilinearPoly& p, const ModAlgebra& a, const std::vector<ModVector>& args) {
    const int n = p.degree();
    if (static_cast<int>(args.size()) != n) {
        throw std::invalid_argument("evaluate needs one argument per variable");
    }
    TupleEvaluator ev(a, args);
    const Residue q = a.prime();
    const auto d = static_cast<std::size_t>(a.dimension());
    std::vector<std::uint64_t> acc(d, 0);
    for (const auto& [m, c] : p.terms()) {
        const Residue cm = to_residue(c, q);
        const Residue* v = ev.value(type_shape(n, p.associative() ? 1 : m.type), m.perm.images().data());
        for (std::size_t k = 0; k < d; ++k) {
            acc[k] = (acc[k] + static_cast<std::uint64_t>(cm) * v[k]) % q;
        }
    }
    return {acc.begin(), acc.end()};
}

TupleEvaluator::TupleEvaluator(const ModAlgebra& a, std::vector<ModVector> args) : a_(a), args_(std::move(args)) {
    for (const auto& x : args_) {
        if (static_cast<int>(x.size()) != a.dimension()) {
            throw std::invalid_argument("argument dimension does not match the algebra");
        }
    }
}

const Residue* TupleEvaluator::value(int shape_id, const int* word) {
    if (shape_id == 0) {
        return args_[word[0] - 1].data();
    }
    const Shape& sh = shape(shape_id);
    const std::uint64_t key = memo_key(shape_id, word, sh.degree);
    if (auto it = memo_.find(key); it != memo_.end()) {
        return &pool_[it->second];
    }
    const auto d = static_cast<std::size_t>(a_.dimension());
    // Children are memoized first so the pool does not move underneath us.
    const Residue* l = value(sh.left, word);
    const std::size_t lo = sh.left == 0 ? SIZE_MAX : static_cast<std::size_t>(l - pool_.data());
    const Residue* r = value(sh.right, word + shape(sh.left).degree);
    const std::size_t ro = sh.right == 0 ? SIZE_MAX : static_cast<std::size_t>(r - pool_.data());
    const std::size_t off = pool_.size();
    pool_.resize(off + d);
    l = lo == SIZE_MAX ? l : &pool_[lo];
    r = ro == SIZE_MAX ? r : &pool_[ro];
    a_.product(l, r, &pool_[off]);
    memo_.emplace(key, off);
    return &pool_[off];
}

std::vector<Residue> TupleEvaluator::all_monomials(int types) {
    const int n = static_cast<int>(args_.size());
    const auto d = static_cast<std::size_t>(a_.dimension());
    const auto perms = enumerate(n);
    std::vector<Residue> out(static_cast<std::size_t>(types) * perms.size() * d);
    std::size_t pos = 0;
    for (int k = 1; k <= types; ++k) {
        const int s = type_shape(n, k);
        for (const auto& p : perms) {
            const Residue* v = value(s, p.images().data());
            std::copy(v, v + d, out.begin() + static_cast<std::ptrdiff_t>(pos));
            pos += d;
        }
    }
    return out;
}

ModVector to_vector(const MultilinearPoly& p, Residue prime) {
    const std::uint64_t nf = factorial(p.degree());
    ModVector v(static_cast<std::size_t>(p.types()) * nf, 0);
    for (const auto& [m, c] : p.terms()) {
        v[(m.type - 1) * nf + m.perm.lex_rank() - 1] = to_residue(c, prime);
    }
    return v;
}

MultilinearPoly from_vector(std::span<const Residue> v, int n, bool associative, Residue prime) {
    MultilinearPoly p(n, associative);
    const std::uint64_t nf = factorial(n);
    if (v.size() != static_cast<std::size_t>(p.types()) * nf) {
        throw std::invalid_argument("vector length does not match degree and mode");
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            p.add(static_cast<int>(i / nf) + 1, Permutation::unrank(n, i % nf + 1), symmetric(v[i], prime));
        }
    }
    return p;
}

}  // namespace pident
