/*
 * matrix_equivalence.hpp — periodic weak-equivalence certificates between
 * nonnegative integer matrices: S·T = A^n_exp and T·S = B^m_exp.
 *
 * The search mirrors the substitution-level one: cells (n_exp + m_exp)
 * ascending, n_exp ascending inside a sum, with determinant and dominant-
 * eigenvalue prunes.  Inside a cell it builds S column by column together
 * with the matching row of T, viewing S·T as a sum of outer products
 * s_j·t_j^T peeled off a remainder of A^n_exp; cross products t_k·s_j are
 * checked against B^m_exp the moment both vectors exist.  Entries are
 * bounded by the largest entry of the fixed products: any certificate
 * entry exceeding that bound multiplies only zeros, so the minimal
 * certificate never needs one.  All solutions of the first nonempty cell
 * are collected and reduced under
 *   (n_exp + m_exp, n_exp, total entry sum, flattened T, flattened S)
 * making the result deterministic.  Absence within bounds proves nothing.
 */
#pragma once

#include <optional>
#include <vector>

#include "algebraic.hpp"
#include "matrix.hpp"
#include "weak_equivalence.hpp"

namespace invlim {

// === certificate type =======================================================

struct MatrixWeakEquivCertificate {
    IntMatrix S; // rows(A) x rows(B)
    IntMatrix T; // rows(B) x rows(A)
    int n_exp;
    int m_exp;
};

// === certificate order ======================================================

namespace detail {

inline std::vector<Int> flatten_matrix(const IntMatrix& m) {
    std::vector<Int> key;
    key.reserve(static_cast<size_t>(m.rows) * static_cast<size_t>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) key.push_back(m.at(i, j));
    return key;
}

inline Int entry_sum(const IntMatrix& m) {
    Int t = 0;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t += m.at(i, j);
    return t;
}

} // namespace detail

inline bool matrix_certificate_less(const MatrixWeakEquivCertificate& a,
                                    const MatrixWeakEquivCertificate& b) {
    auto key = [](const MatrixWeakEquivCertificate& c) {
        std::vector<Int> k = {Int(c.n_exp) + Int(c.m_exp), Int(c.n_exp),
                              detail::entry_sum(c.S) + detail::entry_sum(c.T)};
        std::vector<Int> t = detail::flatten_matrix(c.T);
        std::vector<Int> s = detail::flatten_matrix(c.S);
        k.insert(k.end(), t.begin(), t.end());
        k.insert(k.end(), s.begin(), s.end());
        return k;
    };
    return key(a) < key(b);
}

// === verification ===========================================================

namespace detail {

inline void require_square_nonneg(const IntMatrix& m, const char* who) {
    if (m.rows != m.cols) throw InputError(std::string(who) + ": matrix must be square");
    if (!is_nonnegative(m)) throw InputError(std::string(who) + ": matrix must be nonnegative");
}

} // namespace detail

inline bool matrix_verify(const IntMatrix& A, const IntMatrix& B,
                          const MatrixWeakEquivCertificate& c) {
    detail::require_square_nonneg(A, "matrix_verify");
    detail::require_square_nonneg(B, "matrix_verify");
    if (c.S.rows != A.rows || c.S.cols != B.rows || c.T.rows != B.rows || c.T.cols != A.rows)
        throw InputError("matrix_verify: certificate shapes do not match the pair");
    if (c.n_exp < 1 || c.m_exp < 1)
        throw InputError("matrix_verify: exponents must be positive");
    if (!is_nonnegative(c.S) || !is_nonnegative(c.T)) return false;
    if (!(mul(c.S, c.T) == pow(A, static_cast<unsigned>(c.n_exp)))) return false;
    if (!(mul(c.T, c.S) == pow(B, static_cast<unsigned>(c.m_exp)))) return false;
    return true;
}

// === search =================================================================

namespace detail {

/* Exhaustive factorization search for one (n_exp, m_exp) cell. */
struct MatrixCellSearcher {
    int na, nb, n_exp, m_exp;
    IntMatrix P;   // A^n_exp
    IntMatrix Q;   // B^m_exp
    IntMatrix R;   // remainder of P not yet covered by outer products
    Int cap;       // entry bound: max entry of P and Q
    std::vector<std::vector<Int>> s_cols; // chosen columns of S
    std::vector<std::vector<Int>> t_rows; // chosen rows of T
    std::vector<MatrixWeakEquivCertificate> found;

    MatrixCellSearcher(const IntMatrix& A, const IntMatrix& B, int ne, int me)
        : na(A.rows), nb(B.rows), n_exp(ne), m_exp(me),
          P(pow(A, static_cast<unsigned>(ne))), Q(pow(B, static_cast<unsigned>(me))), R(P),
          cap(std::max(max_entry(P), max_entry(Q))) {}

    void run() { next_pair(0); }

    /* Choose t_j (row j of T), then s_j (column j of S). */
    void next_pair(int j) {
        if (j == nb) {
            for (int i = 0; i < na; ++i)
                for (int k = 0; k < na; ++k)
                    if (R.at(i, k) != 0) return;
            emit();
            return;
        }
        std::vector<Int> t(static_cast<size_t>(na), Int(0));
        choose_t(j, 0, t);
    }

    void choose_t(int j, int k, std::vector<Int>& t) {
        if (k == na) {
            // Q row j against earlier columns: Q_jk' = t_j . s_k'
            for (int k2 = 0; k2 < j; ++k2)
                if (dot(t, s_cols[static_cast<size_t>(k2)]) != Q.at(j, k2)) return;
            std::vector<Int> s(static_cast<size_t>(na), Int(0));
            t_rows.push_back(t);
            choose_s(j, 0, s);
            t_rows.pop_back();
            return;
        }
        for (Int v = 0; v <= cap; ++v) {
            t[static_cast<size_t>(k)] = v;
            choose_t(j, k + 1, t);
        }
        t[static_cast<size_t>(k)] = 0;
    }

    void choose_s(int j, int i, std::vector<Int>& s) {
        // copy: recursion below grows t_rows and may reallocate it
        const std::vector<Int> t = t_rows.back();
        if (i == na) {
            // Q column j against all rows chosen so far: Q_kj = t_k . s_j
            for (int k = 0; k <= j; ++k)
                if (dot(t_rows[static_cast<size_t>(k)], s) != Q.at(k, j)) return;
            // peel the outer product off the remainder
            for (int r = 0; r < na; ++r)
                for (int c2 = 0; c2 < na; ++c2)
                    R.at(r, c2) -= s[static_cast<size_t>(r)] * t[static_cast<size_t>(c2)];
            s_cols.push_back(s);
            next_pair(j + 1);
            s_cols.pop_back();
            for (int r = 0; r < na; ++r)
                for (int c2 = 0; c2 < na; ++c2)
                    R.at(r, c2) += s[static_cast<size_t>(r)] * t[static_cast<size_t>(c2)];
            return;
        }
        Int bound = cap;
        for (int k = 0; k < na; ++k)
            if (t[static_cast<size_t>(k)] > 0) {
                Int b = R.at(i, k) / t[static_cast<size_t>(k)];
                if (b < bound) bound = b;
            }
        for (Int v = 0; v <= bound; ++v) {
            s[static_cast<size_t>(i)] = v;
            choose_s(j, i + 1, s);
        }
        s[static_cast<size_t>(i)] = 0;
    }

    static Int dot(const std::vector<Int>& x, const std::vector<Int>& y) {
        Int d = 0;
        for (size_t i = 0; i < x.size(); ++i) d += x[i] * y[i];
        return d;
    }

    void emit() {
        IntMatrix S(na, nb), T(nb, na);
        for (int j = 0; j < nb; ++j)
            for (int i = 0; i < na; ++i) {
                S.at(i, j) = s_cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
                T.at(j, i) = t_rows[static_cast<size_t>(j)][static_cast<size_t>(i)];
            }
        found.push_back(MatrixWeakEquivCertificate{std::move(S), std::move(T), n_exp, m_exp});
    }
};

} // namespace detail

inline std::optional<MatrixWeakEquivCertificate> matrix_search(const IntMatrix& A,
                                                               const IntMatrix& B,
                                                               const SearchBounds& bounds = {}) {
    detail::require_square_nonneg(A, "matrix_search");
    detail::require_square_nonneg(B, "matrix_search");
    if (bounds.max_n < 1 || bounds.max_m < 1)
        throw InputError("matrix_search: bounds must be positive");

    const bool same_size = A.rows == B.rows;
    const Int detA = same_size ? det(A) : Int(0);
    const Int detB = same_size ? det(B) : Int(0);
    std::optional<AlgebraicReal> rho_a = dominant_real_root(A);
    std::optional<AlgebraicReal> rho_b = dominant_real_root(B);
    if (rho_a) rho_a = refine_to(*rho_a, pow2(-64));
    if (rho_b) rho_b = refine_to(*rho_b, pow2(-64));

    for (int sum = 2; sum <= bounds.max_n + bounds.max_m; ++sum) {
        std::vector<MatrixWeakEquivCertificate> cell;
        for (int ne = std::max(1, sum - bounds.max_m); ne <= std::min(bounds.max_n, sum - 1);
             ++ne) {
            int me = sum - ne;
            if (same_size && pow_int(detA, static_cast<unsigned>(ne)) !=
                                 pow_int(detB, static_cast<unsigned>(me)))
                continue;
            if (detail::spectral_prune(rho_a, rho_b, ne, me)) continue;
            detail::MatrixCellSearcher searcher(A, B, ne, me);
            searcher.run();
            cell.insert(cell.end(), searcher.found.begin(), searcher.found.end());
        }
        if (!cell.empty()) {
            const MatrixWeakEquivCertificate* best = &cell.front();
            for (const MatrixWeakEquivCertificate& c : cell)
                if (matrix_certificate_less(c, *best)) best = &c;
            if (!matrix_verify(A, B, *best))
                throw InternalError("matrix_search: found certificate failed verification");
            return *best;
        }
    }
    return std::nullopt;
}

} // namespace invlim

