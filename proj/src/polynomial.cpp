#include "treegraph/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace treegraph {

std::string var_name(Var v) {
    if (v == kZVar) return "z";
    if (is_x_var(v)) return "x_" + std::to_string(var_index(v));
    return "y_" + std::to_string(var_index(v));
}

Var var_from_name(const std::string& name) {
    if (name == "z") return kZVar;
    if (name.size() > 2 && name[1] == '_') {
        int idx = std::stoi(name.substr(2));
        if (name[0] == 'x') return x_var(idx);
        if (name[0] == 'y') return y_var(idx);
    }
    throw InputError("unknown variable name: " + name);
}

Monomial Monomial::var(Var v, int exp) {
    Monomial m;
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp > 0) m.factors_.emplace_back(v, exp);
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent_of(Var v) const {
    for (auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + o.factors_.size());
    size_t i = 0, j = 0;
    while (i < factors_.size() || j < o.factors_.size()) {
        if (j == o.factors_.size() || (i < factors_.size() && factors_[i].first < o.factors_[j].first)) {
            out.factors_.push_back(factors_[i++]);
        } else if (i == factors_.size() || o.factors_[j].first < factors_[i].first) {
            out.factors_.push_back(o.factors_[j++]);
        } else {
            out.factors_.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
            ++i, ++j;
        }
    }
    return out;
}

bool Monomial::operator<(const Monomial& o) const {
    int da = total_degree(), db = o.total_degree();
    if (da != db) return da < db;
    return factors_ < o.factors_;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [v, e] : factors_) {
        if (!first) os << "*";
        first = false;
        os << var_name(v);
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

MultiPoly::MultiPoly(const Rat& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::var(Var v) { return monomial(Monomial::var(v), Rat(1)); }

MultiPoly MultiPoly::monomial(const Monomial& m, const Rat& coeff) {
    MultiPoly p;
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rat MultiPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first.total_degree();
}

Rat MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    out += o;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    out -= o;
    return out;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    MultiPoly acc(Rat(1));
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& replacement) const {
    MultiPoly out;
    for (auto& [m, c] : terms_) {
        int e = m.exponent_of(v);
        if (e == 0) {
            out.add_term(m, c);
            continue;
        }
        Monomial rest;
        for (auto& [w, k] : m.factors())
            if (w != v) rest = rest * Monomial::var(w, k);
        out += MultiPoly::monomial(rest, c) * replacement.pow(e);
    }
    return out;
}

Rat MultiPoly::evaluate(const Assignment& a) const {
    Rat acc(0);
    for (auto& [m, c] : terms_) {
        Rat term = c;
        for (auto& [v, e] : m.factors()) {
            auto it = a.find(v);
            if (it == a.end()) throw std::invalid_argument("assignment missing variable " + var_name(v));
            Rat p = it->second;
            for (int k = 1; k < e; ++k) p *= it->second;
            term *= p;
        }
        acc += term;
    }
    return acc;
}

std::vector<Var> MultiPoly::variables() const {
    std::vector<Var> vars;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.factors()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (m.is_unit()) {
            os << c.get_str();
        } else if (c == 1) {
            os << m.str();
        } else {
            os << c.get_str() << "*" << m.str();
        }
    }
    return os.str();
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}
}  // namespace

Rat random_value(std::uint64_t seed, std::uint64_t trial, Var v) {
    std::uint64_t h = splitmix64(splitmix64(seed) ^ splitmix64(trial + 0x51ED2701ull));
    h = splitmix64(h ^ splitmix64(static_cast<std::uint64_t>(static_cast<std::uint32_t>(v))));
    return Rat(1 + static_cast<unsigned long>(h & 0xFFFFFull));
}

Assignment random_assignment(const std::vector<Var>& vars, std::uint64_t seed, std::uint64_t trial) {
    Assignment a;
    for (Var v : vars) a[v] = random_value(seed, trial, v);
    return a;
}

}  // namespace treegraph
