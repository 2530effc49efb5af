#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "treegraph/polynomial.hpp"
#include "treegraph/rational.hpp"

namespace treegraph {

inline constexpr int kSymbolicDetGuard = 10;
inline constexpr int kCharPolyGuard = 512;

template <typename T>
class Mat {
public:
    Mat() = default;
    explicit Mat(int n) : n_(n), data_(static_cast<size_t>(n) * static_cast<size_t>(n)) {}

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int dim() const { return n_; }
    T& at(int i, int j) { return data_[static_cast<size_t>(i) * n_ + static_cast<size_t>(j)]; }
    const T& at(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + static_cast<size_t>(j)]; }

    Mat transposed() const {
        Mat t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const Mat& o) const = default;

private:
    int n_ = 0;
    std::vector<T> data_;
};

// A square matrix whose rows/columns carry semantic indices (vertex ids of G
// or tree ids of the tree graph). Submatrix operations go through labels.
template <typename T>
struct LabeledMatrix {
    std::vector<int> labels;
    Mat<T> mat;

    int dim() const { return mat.dim(); }

    int position_of(int label) const {
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) throw InputError("label not present: " + std::to_string(label));
        return static_cast<int>(it - labels.begin());
    }

    // Principal submatrix on the given labels (original label order kept).
    LabeledMatrix restricted(const std::vector<int>& keep) const {
        std::vector<char> want(labels.size(), 0);
        for (int l : keep) want[static_cast<size_t>(position_of(l))] = 1;
        std::vector<int> pos;
        std::vector<int> new_labels;
        for (size_t i = 0; i < labels.size(); ++i)
            if (want[i]) {
                pos.push_back(static_cast<int>(i));
                new_labels.push_back(labels[i]);
            }
        Mat<T> m(static_cast<int>(pos.size()));
        for (size_t i = 0; i < pos.size(); ++i)
            for (size_t j = 0; j < pos.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = mat.at(pos[i], pos[j]);
        return {std::move(new_labels), std::move(m)};
    }

    // Complement restriction: drops the given labels.
    LabeledMatrix deleted(const std::vector<int>& drop) const {
        std::vector<char> gone(labels.size(), 0);
        for (int l : drop) gone[static_cast<size_t>(position_of(l))] = 1;
        std::vector<int> keep;
        for (size_t i = 0; i < labels.size(); ++i)
            if (!gone[i]) keep.push_back(labels[i]);
        return restricted(keep);
    }
};

// Exact determinant of an integer matrix (fraction-free Bareiss elimination).
Int det_int(Mat<Int> m);

// Exact determinant over rationals; dimension 0 gives 1.
Rat det_exact(const Mat<Rat>& m);

// Exact symbolic determinant by column expansion with memoization on row
// subsets. Guarded: beyond kSymbolicDetGuard use evaluation mode.
MultiPoly det_symbolic(const Mat<MultiPoly>& m);

// det(zI - m) as a polynomial in z, by evaluation at dim+1 integer points
// followed by Newton interpolation.
MultiPoly char_poly(const Mat<Rat>& m);

// Rank and, when the kernel is one-dimensional, a spanning kernel vector.
struct KernelResult {
    int rank = 0;
    std::optional<std::vector<Rat>> vector;  // set iff nullity == 1
};
KernelResult kernel_vector(const Mat<Rat>& m);

// Solves c x = b exactly (fraction-free elimination, then back substitution).
// Also reports det(c); when c is singular, `solution` stays empty.
struct LinearSolveResult {
    Rat det;
    std::optional<std::vector<Rat>> solution;
};
LinearSolveResult solve_linear(const Mat<Rat>& c, const std::vector<Rat>& b);

std::vector<Rat> mat_vec(const Mat<Rat>& m, const std::vector<Rat>& x);
std::vector<Rat> vec_mat(const std::vector<Rat>& x, const Mat<Rat>& m);

}  // namespace treegraph
