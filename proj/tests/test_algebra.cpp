#include <doctest.h>

#include <random>

#include "treegraph/matrix.hpp"
#include "treegraph/polynomial.hpp"

using namespace treegraph;

namespace {

Mat<Rat> from_rows(const std::vector<std::vector<long>>& rows) {
    Mat<Rat> m(static_cast<int>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = Rat(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("rationals are canonical") {
    Rat r(2, 4);
    r.canonicalize();
    CHECK(r.get_num() == 1);
    CHECK(r.get_den() == 2);
    CHECK(rat_from_string("-6/8") == Rat(-3, 4));
    CHECK(rat_from_string("7") == Rat(7));
    CHECK_THROWS(rat_from_string("x"));
}

TEST_CASE("det_exact basics") {
    CHECK(det_exact(Mat<Rat>::identity(3)) == 1);
    CHECK(det_exact(from_rows({{-1, 1}, {0, -1}})) == 1);
    CHECK(det_exact(Mat<Rat>(0)) == 1);
    CHECK(det_exact(from_rows({{1, 2}, {2, 4}})) == 0);
    Mat<Rat> frac(2);
    frac.at(0, 0) = Rat(1, 2);
    frac.at(0, 1) = Rat(1, 3);
    frac.at(1, 0) = Rat(1, 5);
    frac.at(1, 1) = Rat(1, 7);
    CHECK(det_exact(frac) == Rat(1, 14) - Rat(1, 15));
}

TEST_CASE("det_symbolic basics") {
    SUBCASE("diagonal") {
        Mat<MultiPoly> m(2);
        m.at(0, 0) = MultiPoly::var(y_var(1));
        m.at(1, 1) = MultiPoly::var(y_var(2));
        CHECK(det_symbolic(m) == MultiPoly::var(y_var(1)) * MultiPoly::var(y_var(2)));
    }
    SUBCASE("rank one Laplacian shape vanishes") {
        Mat<MultiPoly> m(2);
        m.at(0, 0) = -MultiPoly::var(x_var(0));
        m.at(0, 1) = MultiPoly::var(x_var(0));
        m.at(1, 0) = MultiPoly::var(x_var(1));
        m.at(1, 1) = -MultiPoly::var(x_var(1));
        CHECK(det_symbolic(m).is_zero());
    }
    SUBCASE("single vertex potential") {
        Mat<MultiPoly> m(1);
        m.at(0, 0) = MultiPoly::var(y_var(0));
        CHECK(det_symbolic(m) == MultiPoly::var(y_var(0)));
    }
    SUBCASE("guard") {
        Mat<MultiPoly> big(kSymbolicDetGuard + 1);
        CHECK_THROWS_AS(det_symbolic(big), GuardError);
    }
}

TEST_CASE("det_exact agrees with evaluated det_symbolic") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 1 + static_cast<int>(rng() % 5);
        Mat<MultiPoly> sym(n);
        std::vector<Var> vars;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                switch (rng() % 3) {
                    case 0:
                        sym.at(i, j) = MultiPoly(static_cast<long>(rng() % 7) - 3);
                        break;
                    case 1:
                        sym.at(i, j) = MultiPoly::var(x_var(i * n + j));
                        vars.push_back(x_var(i * n + j));
                        break;
                    default:
                        sym.at(i, j) = MultiPoly::var(x_var(i * n + j)) + MultiPoly(1);
                        vars.push_back(x_var(i * n + j));
                        break;
                }
            }
        Assignment a = random_assignment(vars, 99, iter);
        Mat<Rat> eval(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) eval.at(i, j) = sym.at(i, j).evaluate(a);
        CHECK(det_symbolic(sym).evaluate(a) == det_exact(eval));
    }
}

TEST_CASE("block triangular determinants multiply") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 30; ++iter) {
        int na = 1 + static_cast<int>(rng() % 3);
        int nb = 1 + static_cast<int>(rng() % 3);
        Mat<Rat> m(na + nb);
        Mat<Rat> a(na), c(nb);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j) m.at(i, j) = a.at(i, j) = Rat(static_cast<long>(rng() % 11) - 5);
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j)
                m.at(na + i, na + j) = c.at(i, j) = Rat(static_cast<long>(rng() % 11) - 5);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) m.at(i, na + j) = Rat(static_cast<long>(rng() % 11) - 5);
        CHECK(det_exact(m) == det_exact(a) * det_exact(c));
    }
}

TEST_CASE("char_poly basics") {
    SUBCASE("one by one") {
        Mat<Rat> m(1);
        m.at(0, 0) = Rat(5);
        MultiPoly p = char_poly(m);
        CHECK(p == MultiPoly::var(kZVar) - MultiPoly(5));
    }
    SUBCASE("zero matrix") {
        CHECK(char_poly(Mat<Rat>(2)) == MultiPoly::monomial(Monomial::var(kZVar, 2), Rat(1)));
    }
    SUBCASE("cyclic permutation gives z^3 - 1") {
        Mat<Rat> m(3);
        m.at(0, 1) = 1;
        m.at(1, 2) = 1;
        m.at(2, 0) = 1;
        CHECK(char_poly(m) == MultiPoly::monomial(Monomial::var(kZVar, 3), Rat(1)) - MultiPoly(1));
    }
}

TEST_CASE("char_poly evaluates to shifted determinants") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 10; ++iter) {
        int n = 1 + static_cast<int>(rng() % 4);
        Mat<Rat> m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Rat(static_cast<long>(rng() % 9) - 4);
        MultiPoly p = char_poly(m);
        for (int k = 0; k < 5; ++k) {
            Rat c(static_cast<long>(rng() % 200) - 100);
            Mat<Rat> shifted(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    shifted.at(i, j) = -m.at(i, j);
                    if (i == j) shifted.at(i, j) += c;
                }
            CHECK(p.evaluate({{kZVar, c}}) == det_exact(shifted));
        }
    }
}

TEST_CASE("random assignments are reproducible and positive") {
    std::vector<Var> vars{x_var(0), x_var(3), y_var(1), kZVar};
    Assignment a = random_assignment(vars, 42, 7);
    Assignment b = random_assignment(vars, 42, 7);
    CHECK(a == b);
    Assignment c = random_assignment({x_var(3), y_var(1)}, 42, 7);
    CHECK(c.at(x_var(3)) == a.at(x_var(3)));  // restriction is consistent
    CHECK(c.at(y_var(1)) == a.at(y_var(1)));
    for (auto& [v, val] : a) {
        CHECK(val >= 1);
        CHECK(val <= (1 << 20));
    }
    CHECK(random_assignment(vars, 42, 8) != a);
}

TEST_CASE("solve_linear solves and reports the determinant") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 1 + static_cast<int>(rng() % 5);
        Mat<Rat> c(n);
        std::vector<Rat> b(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            b[static_cast<size_t>(i)] = Rat(static_cast<long>(rng() % 21) - 10);
            for (int j = 0; j < n; ++j) c.at(i, j) = Rat(static_cast<long>(rng() % 21) - 10);
        }
        LinearSolveResult res = solve_linear(c, b);
        CHECK(res.det == det_exact(c));
        if (res.solution) {
            std::vector<Rat> back = mat_vec(c, *res.solution);
            CHECK(back == b);
        } else {
            CHECK(res.det == 0);
        }
    }
}

TEST_CASE("kernel_vector finds one-dimensional kernels") {
    // unit-weight Laplacian of the directed 3-cycle: rank 2, kernel spanned by 1
    Mat<Rat> q = from_rows({{-1, 1, 0}, {0, -1, 1}, {1, 0, -1}});
    KernelResult res = kernel_vector(q);
    CHECK(res.rank == 2);
    REQUIRE(res.vector.has_value());
    auto y = mat_vec(q, *res.vector);
    for (const Rat& v : y) CHECK(v == 0);

    KernelResult full = kernel_vector(from_rows({{1, 0}, {0, 1}}));
    CHECK(full.rank == 2);
    CHECK_FALSE(full.vector.has_value());
}

TEST_CASE("monomial order is graded lexicographic") {
    Monomial x0 = Monomial::var(x_var(0));
    Monomial x1 = Monomial::var(x_var(1));
    Monomial x0sq = Monomial::var(x_var(0), 2);
    CHECK(x0 < x0sq);        // lower degree first
    CHECK(x0 < x1);          // then lexicographic
    CHECK(x0 * x1 == x1 * x0);
    CHECK((x0 * x1).total_degree() == 2);
    MultiPoly p = MultiPoly::var(x_var(0)) + MultiPoly(3);
    MultiPoly q = p * p;
    CHECK(q.coefficient(x0sq) == 1);
    CHECK(q.coefficient(x0) == 6);
    CHECK(q.coefficient(Monomial{}) == 9);
    CHECK(p.substitute(x_var(0), MultiPoly(-3)).is_zero());
}
