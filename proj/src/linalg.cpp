#include "redvar/linalg.hpp"

namespace redvar {

std::vector<int> row_reduce(const Field& F, Mat& A) {
    std::vector<int> pivots;
    if (A.empty()) return pivots;
    size_t rows = A.size(), cols = A[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && !A[sel][c]) ++sel;
        if (sel == rows) continue;
        std::swap(A[r], A[sel]);
        fel iv = F.inv(A[r][c]);
        for (size_t j = c; j < cols; ++j) A[r][j] = F.mul(A[r][j], iv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || !A[i][c]) continue;
            fel f = A[i][c];
            for (size_t j = c; j < cols; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[r][j]));
        }
        pivots.push_back(int(c));
        ++r;
    }
    return pivots;
}

int rank(const Field& F, Mat A) { return int(row_reduce(F, A).size()); }

Mat nullspace(const Field& F, const Mat& A) {
    if (A.empty()) return {};
    size_t cols = A[0].size();
    Mat R = A;
    std::vector<int> pivots = row_reduce(F, R);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    Mat basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec v(cols, 0);
        v[free_c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            // pivot row r has leading 1 at pivots[r]
            v[pivots[r]] = F.neg(R[r][free_c]);
        }
        basis.push_back(v);
    }
    return basis;
}

Mat independent_subset(const Field& F, const Mat& rows) {
    Mat kept;
    Mat ech;  // echelonized copies
    for (const Vec& v : rows) {
        Vec w = v;
        for (const Vec& e : ech) {
            // e has a leading 1 at some column
            size_t lead = 0;
            while (lead < e.size() && !e[lead]) ++lead;
            if (lead < e.size() && w[lead]) {
                fel f = w[lead];
                for (size_t j = 0; j < w.size(); ++j) w[j] = F.sub(w[j], F.mul(f, e[j]));
            }
        }
        size_t lead = 0;
        while (lead < w.size() && !w[lead]) ++lead;
        if (lead == w.size()) continue;
        fel iv = F.inv(w[lead]);
        for (size_t j = 0; j < w.size(); ++j) w[j] = F.mul(w[j], iv);
        ech.push_back(w);
        kept.push_back(v);
    }
    return kept;
}

fel determinant(const Field& F, Mat A) {
    size_t n = A.size();
    fel det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        while (sel < n && !A[sel][c]) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            std::swap(A[c], A[sel]);
            det = F.neg(det);
        }
        det = F.mul(det, A[c][c]);
        fel iv = F.inv(A[c][c]);
        for (size_t i = c + 1; i < n; ++i) {
            if (!A[i][c]) continue;
            fel f = F.mul(A[i][c], iv);
            for (size_t j = c; j < n; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[c][j]));
        }
    }
    return det;
}

std::optional<Vec> solve(const Field& F, Mat A, Vec b) {
    size_t rows = A.size();
    size_t cols = rows ? A[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) A[i].push_back(b[i]);
    std::vector<int> pivots = row_reduce(F, A);
    Vec x(cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (size_t(pivots[r]) == cols) return std::nullopt;  // pivot in augmented column
        x[pivots[r]] = A[r][cols];
    }
    return x;
}

fel dot(const Field& F, const Vec& a, const Vec& b) {
    fel s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
    return s;
}

Vec mat_vec(const Field& F, const Mat& A, const Vec& x) {
    Vec r(A.size(), 0);
    for (size_t i = 0; i < A.size(); ++i) r[i] = dot(F, A[i], x);
    return r;
}

}  // namespace redvar
