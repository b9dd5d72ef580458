#include "folium/matrix.hpp"

#include <stdexcept>

namespace folium {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

namespace {

// integer matrix with rows scaled primitive
std::vector<std::vector<Integer>> clear_denominators(const RatMatrix& m) {
    std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (int j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).den());
        for (int j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).num() * (l / m(i, j).den());
        Integer g = 0;
        for (int j = 0; j < m.cols(); ++j) g = gcd(g, a[i][j]);
        if (g > 1)
            for (int j = 0; j < m.cols(); ++j) a[i][j] /= g;
    }
    return a;
}

struct Echelon {
    std::vector<std::vector<Integer>> a;
    std::vector<int> pivot_col;  // one per pivot row
};

// fraction-free forward elimination with column pivoting
Echelon bareiss_echelon(std::vector<std::vector<Integer>> a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    Echelon e;
    Integer prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Integer num = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                a[i][j] = num / prev;  // exact by Bareiss
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        e.pivot_col.push_back(c);
        ++r;
    }
    e.a = std::move(a);
    return e;
}

}  // namespace

LinearSolveResult solve_linear(const RatMatrix& m) {
    LinearSolveResult res;
    int cols = m.cols();
    Echelon ech = bareiss_echelon(clear_denominators(m));
    res.rank = static_cast<int>(ech.pivot_col.size());

    std::vector<bool> is_pivot(cols, false);
    for (int c : ech.pivot_col) is_pivot[c] = true;

    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = Rational(1);
        // back-substitute through pivot rows
        for (int r = res.rank - 1; r >= 0; --r) {
            int pc = ech.pivot_col[r];
            Rational s(0);
            for (int j = pc + 1; j < cols; ++j)
                if (!v[j].is_zero()) s += Rational(ech.a[r][j]) * v[j];
            v[pc] = -s / Rational(ech.a[r][pc]);
        }
        // scale to primitive integer vector, first nonzero positive
        Integer den_l = 1;
        for (const auto& x : v) den_l = lcm(den_l, x.den());
        Integer num_g = 0;
        for (auto& x : v) {
            x *= Rational(den_l);
            num_g = gcd(num_g, x.num());
        }
        if (num_g > 1)
            for (auto& x : v) x /= Rational(num_g);
        for (const auto& x : v) {
            if (!x.is_zero()) {
                if (x.sign() < 0)
                    for (auto& y : v) y = -y;
                break;
            }
        }
        res.nullspace.push_back(std::move(v));
    }
    return res;
}

Rational det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix: det of non-square matrix");
    int n = m.rows();
    if (n == 0) return Rational(1);
    // clear denominators globally so Bareiss runs over the integers
    Integer scale = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = lcm(scale, m(i, j).den());
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j).num() * (scale / m(i, j).den());

    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i) {
            if (a[i][k] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) return Rational(0);
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational d(a[n - 1][n - 1] * sign);
    Integer denom = 1;
    for (int i = 0; i < n; ++i) denom *= scale;
    return d / Rational(denom);
}

}  // namespace folium
