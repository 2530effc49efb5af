#include "treegraph/matrix.hpp"

#include <unordered_map>

namespace treegraph {

Int det_int(Mat<Int> m) {
    const int n = m.dim();
    if (n == 0) return Int(1);
    int sign = 1;
    Int prev(1);
    Int t1, t2;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (m.at(r, k) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Int(0);
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_mul(t1.get_mpz_t(), m.at(i, j).get_mpz_t(), m.at(k, k).get_mpz_t());
                mpz_mul(t2.get_mpz_t(), m.at(i, k).get_mpz_t(), m.at(k, j).get_mpz_t());
                mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                mpz_divexact(m.at(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    Int d = m.at(n - 1, n - 1);
    if (sign < 0) mpz_neg(d.get_mpz_t(), d.get_mpz_t());
    return d;
}

Rat det_exact(const Mat<Rat>& m) {
    const int n = m.dim();
    if (n == 0) return Rat(1);
    Mat<Int> a(n);
    Int scale(1);
    Int row_lcm, q;
    for (int i = 0; i < n; ++i) {
        row_lcm = 1;
        for (int j = 0; j < n; ++j)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            mpz_divexact(q.get_mpz_t(), row_lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
            mpz_mul(a.at(i, j).get_mpz_t(), q.get_mpz_t(), m.at(i, j).get_num().get_mpz_t());
        }
        scale *= row_lcm;
    }
    Rat d(det_int(std::move(a)), scale);
    d.canonicalize();
    return d;
}

MultiPoly det_symbolic(const Mat<MultiPoly>& m) {
    const int n = m.dim();
    if (n > kSymbolicDetGuard)
        throw GuardError("use evaluation mode: symbolic determinant limited to dimension " +
                         std::to_string(kSymbolicDetGuard));
    if (n == 0) return MultiPoly(Rat(1));

    // minor(mask) = det of the submatrix on rows outside `mask` and columns
    // popcount(mask)..n-1; expansion proceeds along columns.
    std::unordered_map<std::uint32_t, MultiPoly> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> MultiPoly {
        int col = __builtin_popcount(mask);
        if (col == n) return MultiPoly(Rat(1));
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        MultiPoly acc;
        int parity = 0;
        for (int r = 0; r < n; ++r) {
            if (mask & (1u << r)) continue;
            if (!m.at(r, col).is_zero()) {
                MultiPoly term = m.at(r, col) * self(self, mask | (1u << r));
                if (parity & 1)
                    acc -= term;
                else
                    acc += term;
            }
            ++parity;
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    return rec(rec, 0);
}

MultiPoly char_poly(const Mat<Rat>& m) {
    const int n = m.dim();
    if (n > kCharPolyGuard)
        throw GuardError("characteristic polynomial limited to dimension " +
                         std::to_string(kCharPolyGuard));
    if (n == 0) return MultiPoly(Rat(1));

    // Values of det(zI - m) at z = 0..n, then Newton divided differences.
    std::vector<Rat> nodes, values;
    for (int c = 0; c <= n; ++c) {
        Mat<Rat> b = m;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                b.at(i, j) = -b.at(i, j);
                if (i == j) b.at(i, j) += c;
            }
        nodes.emplace_back(c);
        values.push_back(det_exact(b));
    }
    std::vector<Rat> dd = values;
    for (int level = 1; level <= n; ++level)
        for (int i = n; i >= level; --i) {
            dd[static_cast<size_t>(i)] =
                (dd[static_cast<size_t>(i)] - dd[static_cast<size_t>(i - 1)]) /
                (nodes[static_cast<size_t>(i)] - nodes[static_cast<size_t>(i - level)]);
        }
    // expand the Newton form into monomial coefficients
    std::vector<Rat> coeffs(static_cast<size_t>(n) + 1, Rat(0));
    std::vector<Rat> basis{Rat(1)};  // product of (z - nodes[k]) so far
    for (int k = 0; k <= n; ++k) {
        for (size_t i = 0; i < basis.size(); ++i) coeffs[i] += dd[static_cast<size_t>(k)] * basis[i];
        if (k < n) {
            basis.push_back(Rat(0));
            for (size_t i = basis.size() - 1; i > 0; --i)
                basis[i] = basis[i - 1] - nodes[static_cast<size_t>(k)] * basis[i];
            basis[0] = -nodes[static_cast<size_t>(k)] * basis[0];
        }
    }
    MultiPoly p;
    for (int i = 0; i <= n; ++i)
        p += MultiPoly::monomial(Monomial::var(kZVar, i), coeffs[static_cast<size_t>(i)]);
    return p;
}

KernelResult kernel_vector(const Mat<Rat>& m) {
    const int n = m.dim();
    Mat<Rat> a = m;
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int p = -1;
        for (int r = row; r < n; ++r)
            if (a.at(r, col) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = col; j < n; ++j) std::swap(a.at(p, j), a.at(row, j));
        Rat inv = a.at(row, col);
        for (int j = col; j < n; ++j) a.at(row, j) /= inv;
        for (int r = 0; r < n; ++r) {
            if (r == row || a.at(r, col) == 0) continue;
            Rat f = a.at(r, col);
            for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(row, j);
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    KernelResult res;
    res.rank = row;
    if (n - row != 1) return res;

    std::vector<char> is_pivot(static_cast<size_t>(n), 0);
    for (int c : pivot_col_of_row) is_pivot[static_cast<size_t>(c)] = 1;
    int free_col = 0;
    while (is_pivot[static_cast<size_t>(free_col)]) ++free_col;
    std::vector<Rat> x(static_cast<size_t>(n), Rat(0));
    x[static_cast<size_t>(free_col)] = 1;
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
        x[static_cast<size_t>(pivot_col_of_row[r])] = -a.at(static_cast<int>(r), free_col);
    res.vector = std::move(x);
    return res;
}

LinearSolveResult solve_linear(const Mat<Rat>& c, const std::vector<Rat>& b) {
    const int n = c.dim();
    LinearSolveResult res;
    if (n == 0) {
        res.det = 1;
        res.solution = std::vector<Rat>{};
        return res;
    }

    // scale rows of [c | b] to integers
    std::vector<std::vector<Int>> a(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n) + 1));
    Int scale(1), row_lcm, q;
    for (int i = 0; i < n; ++i) {
        row_lcm = 1;
        for (int j = 0; j < n; ++j)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), c.at(i, j).get_den().get_mpz_t());
        mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(),
                b[static_cast<size_t>(i)].get_den().get_mpz_t());
        for (int j = 0; j <= n; ++j) {
            const Rat& src = j < n ? c.at(i, j) : b[static_cast<size_t>(i)];
            mpz_divexact(q.get_mpz_t(), row_lcm.get_mpz_t(), src.get_den().get_mpz_t());
            mpz_mul(a[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(), q.get_mpz_t(),
                    src.get_num().get_mpz_t());
        }
        scale *= row_lcm;
    }

    int sign = 1;
    Int prev(1), t1, t2;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (a[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) {
            res.det = 0;
            return res;
        }
        if (pivot != k) {
            std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(k)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j <= n; ++j) {
                mpz_mul(t1.get_mpz_t(), a[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(),
                        a[static_cast<size_t>(k)][static_cast<size_t>(k)].get_mpz_t());
                mpz_mul(t2.get_mpz_t(), a[static_cast<size_t>(i)][static_cast<size_t>(k)].get_mpz_t(),
                        a[static_cast<size_t>(k)][static_cast<size_t>(j)].get_mpz_t());
                mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                mpz_divexact(a[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(),
                             t1.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }

    res.det = Rat(sign < 0 ? Int(-prev) : prev, scale);
    res.det.canonicalize();

    std::vector<Rat> x(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        Rat acc(a[static_cast<size_t>(i)][static_cast<size_t>(n)]);
        for (int j = i + 1; j < n; ++j)
            acc -= Rat(a[static_cast<size_t>(i)][static_cast<size_t>(j)]) * x[static_cast<size_t>(j)];
        acc /= Rat(a[static_cast<size_t>(i)][static_cast<size_t>(i)]);
        x[static_cast<size_t>(i)] = acc;
    }
    res.solution = std::move(x);
    return res;
}

std::vector<Rat> mat_vec(const Mat<Rat>& m, const std::vector<Rat>& x) {
    const int n = m.dim();
    std::vector<Rat> y(static_cast<size_t>(n), Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) != 0) y[static_cast<size_t>(i)] += m.at(i, j) * x[static_cast<size_t>(j)];
    return y;
}

std::vector<Rat> vec_mat(const std::vector<Rat>& x, const Mat<Rat>& m) {
    const int n = m.dim();
    std::vector<Rat> y(static_cast<size_t>(n), Rat(0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (m.at(i, j) != 0) y[static_cast<size_t>(j)] += x[static_cast<size_t>(i)] * m.at(i, j);
    return y;
}

}  // namespace treegraph
