#pragma once

#include <gmpxx.h>

#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<mpq_class>>;

inline Mat transpose(const Mat& a, int cols) {
    Mat t(cols, std::vector<mpq_class>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int j = 0; j < cols; ++j) t[j][i] = a[i][j];
    return t;
}

// basis of {v : a v = 0}, a has `cols` columns
inline Mat null_space(Mat a, int cols) {
    int rows = static_cast<int>(a.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        mpq_class inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (int k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    Mat basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> v(cols, 0);
        v[f] = 1;
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -a[i][f];
        basis.push_back(v);
    }
    return basis;
}

inline int rank(const Mat& a, int cols) { return cols - static_cast<int>(null_space(a, cols).size()); }

}  // namespace oracle
