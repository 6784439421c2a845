/*
 * matrix.hpp — exact integer matrices.
 *
 * Dense arbitrary-precision integer matrices with the operations the
 * classifier needs: multiplication and powers, transpose, equality,
 * nonnegativity, aperiodicity (primitivity, via boolean reachability up to
 * the Wielandt bound), exact characteristic polynomial (Berkowitz's
 * division-free method), determinant, and rational rank.
 */
#pragma once

#include <vector>

#include "polynomial.hpp"

namespace invlim {

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a; // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {
        if (r <= 0 || c <= 0) throw InputError("IntMatrix: dimensions must be positive");
    }

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool square() const { return rows == cols; }
    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

inline IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw InputError("matrix product: inner dimensions differ");
    IntMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

inline IntMatrix pow(const IntMatrix& m, unsigned k) {
    if (!m.square()) throw InputError("matrix power: matrix not square");
    IntMatrix r = IntMatrix::identity(m.rows);
    IntMatrix b = m;
    for (unsigned e = k; e != 0; e >>= 1) {
        if (e & 1) r = mul(r, b);
        if (e > 1) b = mul(b, b);
    }
    return r;
}

inline IntMatrix transpose(const IntMatrix& m) {
    IntMatrix r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

inline bool is_nonnegative(const IntMatrix& m) {
    for (const auto& x : m.a)
        if (x < 0) return false;
    return true;
}

inline Int max_entry(const IntMatrix& m) {
    Int best = m.a.empty() ? Int(0) : m.a[0];
    for (const auto& x : m.a)
        if (x > best) best = x;
    return best;
}

/*
 * Aperiodicity (primitivity): some power has all entries strictly positive.
 * A primitive n x n matrix attains positivity by the Wielandt exponent
 * (n-1)^2 + 1, so checking boolean reachability up to that bound decides.
 */
inline bool is_aperiodic(const IntMatrix& m) {
    if (!m.square()) throw InputError("is_aperiodic: matrix not square");
    if (!is_nonnegative(m)) throw InputError("is_aperiodic: negative entry");
    int n = m.rows;
    auto positive = [n](const std::vector<char>& b) {
        for (int i = 0; i < n * n; ++i)
            if (!b[static_cast<size_t>(i)]) return false;
        return true;
    };
    std::vector<char> cur(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cur[static_cast<size_t>(i) * n + j] = m.at(i, j) > 0;
    std::vector<char> base = cur;
    int bound = (n - 1) * (n - 1) + 1;
    if (positive(cur)) return true;
    for (int k = 2; k <= bound; ++k) {
        std::vector<char> next(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t) {
                if (!cur[static_cast<size_t>(i) * n + t]) continue;
                for (int j = 0; j < n; ++j)
                    if (base[static_cast<size_t>(t) * n + j]) next[static_cast<size_t>(i) * n + j] = 1;
            }
        cur.swap(next);
        if (positive(cur)) return true;
    }
    return false;
}

/*
 * Characteristic polynomial det(xI - A), monic, exact — Berkowitz's
 * division-free algorithm.  For each leading principal minor the coefficient
 * vector is pushed through a lower-triangular Toeplitz matrix built from
 * R M^k S products (R: row fringe, S: column fringe, M: previous minor).
 */
inline Poly char_poly(const IntMatrix& m) {
    if (!m.square()) throw InputError("char_poly: matrix not square");
    int n = m.rows;
    // descending coefficient vector for the 1x1 minor: [1, -a00]
    std::vector<Int> C{1, -m.at(0, 0)};
    for (int r = 2; r <= n; ++r) {
        // fringe products against the (r-1)x(r-1) leading minor
        int k = r - 1;
        std::vector<Int> col0(static_cast<size_t>(r) + 1);
        col0[0] = 1;
        col0[1] = -m.at(k, k);
        std::vector<Int> vec(static_cast<size_t>(k)); // running M^t S
        for (int i = 0; i < k; ++i) vec[static_cast<size_t>(i)] = m.at(i, k);
        for (int t = 2; t <= r; ++t) {
            // col0[t] = - R . vec, then vec = M . vec
            Int dot = 0;
            for (int i = 0; i < k; ++i) dot += m.at(k, i) * vec[static_cast<size_t>(i)];
            col0[static_cast<size_t>(t)] = -dot;
            if (t < r) {
                std::vector<Int> nv(static_cast<size_t>(k), 0);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) nv[static_cast<size_t>(i)] += m.at(i, j) * vec[static_cast<size_t>(j)];
                vec.swap(nv);
            }
        }
        // C_new (length r+1) = Toeplitz(col0) * C (length r)
        std::vector<Int> next(static_cast<size_t>(r) + 1, 0);
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j < r && j <= i; ++j)
                next[static_cast<size_t>(i)] += col0[static_cast<size_t>(i - j)] * C[static_cast<size_t>(j)];
        C.swap(next);
    }
    // C is descending: C[0] x^n + ... + C[n]; convert to ascending Poly
    std::vector<Int> asc(C.rbegin(), C.rend());
    return Poly(std::move(asc));
}

inline Int det(const IntMatrix& m) {
    if (!m.square()) throw InputError("det: matrix not square");
    Poly p = char_poly(m);
    Int c0 = p.coeff(0); // det(xI - A) at 0 = det(-A) = (-1)^n det A
    return (m.rows % 2 == 0) ? c0 : -c0;
}

/* Rank over the rationals (fraction-free Gaussian elimination). */
inline int rank_over_q(const IntMatrix& m) {
    std::vector<std::vector<Rat>> w(static_cast<size_t>(m.rows),
                                    std::vector<Rat>(static_cast<size_t>(m.cols)));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) w[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(m.at(i, j));
    int rank = 0;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows; ++i)
            if (w[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(w[static_cast<size_t>(pivot)], w[static_cast<size_t>(row)]);
        for (int i = row + 1; i < m.rows; ++i) {
            if (w[static_cast<size_t>(i)][static_cast<size_t>(col)] == 0) continue;
            Rat f = w[static_cast<size_t>(i)][static_cast<size_t>(col)] /
                    w[static_cast<size_t>(row)][static_cast<size_t>(col)];
            for (int j = col; j < m.cols; ++j)
                w[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * w[static_cast<size_t>(row)][static_cast<size_t>(j)];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace invlim
