#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "treegraph/rational.hpp"

namespace treegraph {

// Variable ids. z (the characteristic-polynomial variable) is 0; edge
// variables x_e and vertex potentials y_v interleave above it.
using Var = std::int32_t;

inline constexpr Var kZVar = 0;
inline Var x_var(int edge_id) { return 1 + 2 * edge_id; }
inline Var y_var(int vertex_id) { return 2 + 2 * vertex_id; }
inline bool is_x_var(Var v) { return v > 0 && (v & 1) == 1; }
inline bool is_y_var(Var v) { return v > 0 && (v & 1) == 0; }
inline int var_index(Var v) { return (v - 1) / 2; }

std::string var_name(Var v);
Var var_from_name(const std::string& name);

// Product of variable powers; factors sorted by variable id, exponents >= 1.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(Var v, int exp = 1);

    const std::vector<std::pair<Var, int>>& factors() const { return factors_; }
    int total_degree() const;
    int exponent_of(Var v) const;
    bool is_unit() const { return factors_.empty(); }

    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial& o) const = default;

    // graded lexicographic: first by total degree, then lex on the factor list
    bool operator<(const Monomial& o) const;

    std::string str() const;

private:
    std::vector<std::pair<Var, int>> factors_;
};

using Assignment = std::map<Var, Rat>;

// Sparse multivariate polynomial over Rat. No zero coefficients are stored;
// terms iterate in graded-lex order.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(const Rat& c);  // NOLINT: implicit constant lift is intended
    MultiPoly(long c) : MultiPoly(Rat(c)) {}
    static MultiPoly var(Var v);
    static MultiPoly monomial(const Monomial& m, const Rat& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()
    int total_degree() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    Rat coefficient(const Monomial& m) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const = default;

    MultiPoly pow(int k) const;

    // Replaces every occurrence of v by the given polynomial.
    MultiPoly substitute(Var v, const MultiPoly& replacement) const;

    Rat evaluate(const Assignment& a) const;
    std::vector<Var> variables() const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rat& c);
    std::map<Monomial, Rat> terms_;
};

// Deterministic pseudo-random assignment: each variable maps to an integer
// in [1, 2^20] derived by hashing (seed, trial, var). The value of a variable
// does not depend on which other variables are being assigned.
Rat random_value(std::uint64_t seed, std::uint64_t trial, Var v);
Assignment random_assignment(const std::vector<Var>& vars, std::uint64_t seed, std::uint64_t trial);

}  // namespace treegraph
