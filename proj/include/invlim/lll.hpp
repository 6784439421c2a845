/*
 * lll.hpp — exact integer lattice basis reduction (delta = 3/4).
 *
 * All-integer LLL: instead of rational Gram–Schmidt data it maintains the
 * Gram determinants d_i and the scaled coefficients lambda_{i,j} =
 * mu_{i,j} * d_j, all integers, with every division in the update rules
 * exact.  This keeps intermediate sizes near the input size where naive
 * rational arithmetic explodes (the lattices here carry 2048-bit entries).
 *
 * Used to propose integer relations among high-precision rational
 * approximations of algebraic numbers; every proposal is verified exactly
 * elsewhere, so this file only needs to be deterministic, not clever.
 */
#pragma once

#include <vector>

#include "numeric.hpp"

namespace invlim {

inline void lll_reduce(std::vector<std::vector<Int>>& b) {
    const int n = static_cast<int>(b.size());
    if (n < 2) return;
    auto dot = [&](int i, int j) {
        Int s = 0;
        for (size_t t = 0; t < b[i].size(); ++t) s += b[i][t] * b[j][t];
        return s;
    };

    // d[0] = 1, d[i] = Gram determinant of b[0..i-1]; lam[i][j] scaled mu
    std::vector<Int> d(n + 1);
    d[0] = 1;
    std::vector<std::vector<Int>> lam(n, std::vector<Int>(n, 0));

    auto gs_row = [&](int i) { // fill lam[i][0..i-1] and d[i+1]
        for (int j = 0; j <= i; ++j) {
            Int u = dot(i, j);
            for (int k = 0; k < j; ++k) u = (d[k + 1] * u - lam[i][k] * lam[j][k]) / d[k];
            if (j < i) lam[i][j] = u;
            else d[i + 1] = u;
        }
        if (d[i + 1] <= 0) throw InternalError("lll_reduce: dependent basis rows");
    };

    auto redi = [&](int k, int l) { // size-reduce b[k] against b[l], l < k
        if (2 * abs_of(lam[k][l]) <= d[l + 1]) return;
        // q = nearest integer to lam/d = floor((2*lam + d) / (2*d)), d > 0
        Int num = 2 * lam[k][l] + d[l + 1];
        Int den = 2 * d[l + 1];
        Int q = num >= 0 ? Int(num / den) : Int(-((-num + den - 1) / den));
        if (q == 0) return;
        for (size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[l][t];
        lam[k][l] -= q * d[l + 1];
        for (int j = 0; j < l; ++j) lam[k][j] -= q * lam[l][j];
    };

    int kmax = 0;
    gs_row(0);
    int k = 1;
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            gs_row(k);
        }
        redi(k, k - 1);
        Int lkk = lam[k][k - 1];
        if (4 * (d[k + 1] * d[k - 1] + lkk * lkk) < 3 * d[k] * d[k]) {
            // swap b[k], b[k-1] and patch the integral data
            std::swap(b[k], b[k - 1]);
            for (int j = 0; j < k - 1; ++j) std::swap(lam[k][j], lam[k - 1][j]);
            Int B = (d[k - 1] * d[k + 1] + lkk * lkk) / d[k];
            for (int i = k + 1; i <= kmax; ++i) {
                Int t = lam[i][k];
                lam[i][k] = (d[k + 1] * lam[i][k - 1] - lkk * t) / d[k];
                lam[i][k - 1] = (B * t + lkk * lam[i][k]) / d[k + 1];
            }
            d[k] = B;
            k = std::max(1, k - 1);
        } else {
            for (int l = k - 2; l >= 0; --l) redi(k, l);
            ++k;
        }
    }
}

/*
 * Integer relation proposals for x_0..x_d: vectors m with sum m_i x_i
 * close to zero at the given precision, shortest proposals first.  The
 * caller must verify any proposal exactly before trusting it.
 */
inline std::vector<std::vector<Int>> integer_relation_candidates(const std::vector<Rat>& xs,
                                                                 int prec_bits) {
    const size_t n = xs.size();
    Rat scale = pow_int(Int(2), static_cast<unsigned>(prec_bits));
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n + 1, 0));
    for (size_t i = 0; i < n; ++i) {
        rows[i][i] = 1;
        rows[i][n] = rat_floor(xs[i] * scale + Rat(1, 2));
    }
    lll_reduce(rows);
    std::vector<std::vector<Int>> out;
    for (auto& row : rows) {
        row.pop_back(); // drop the scaled-value column, keep the coefficients
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace invlim
