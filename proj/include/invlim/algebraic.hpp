/*
 * algebraic.hpp — exact real algebraic numbers.
 *
 * An AlgebraicReal is an irreducible primitive minimal polynomial together
 * with an isolating rational interval (exactly one root inside; open-point
 * intervals mark rational values).  All comparisons are exact: Sturm counts
 * and sign evaluations, never floating point.  Refinement returns new
 * values instead of mutating, so values share freely across threads.
 *
 * perron_root packages the dominant eigenvalue of an aperiodic nonnegative
 * matrix: the largest real root of the characteristic polynomial paired
 * with the irreducible factor that vanishes on it.  dominant_real_root is
 * the same extraction without the aperiodicity precondition (the largest
 * real eigenvalue, when any real eigenvalue exists).
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "factor.hpp"
#include "matrix.hpp"
#include "roots.hpp"

namespace invlim {

// === type ===================================================================

struct AlgebraicReal {
    Poly minpoly;  // irreducible, primitive, positive leading coefficient
    QInterval iv;  // isolates exactly one real root of minpoly

    int degree() const { return minpoly.degree(); }
};

inline AlgebraicReal algebraic_from_root(const Poly& irreducible, const QInterval& isolating) {
    return {irreducible, isolating};
}

inline AlgebraicReal algebraic_rational(const Rat& q) {
    Poly mp{{-rat_num(q), rat_den(q)}};
    return {mp, QInterval::point(q)};
}

inline std::optional<Rat> rational_value(const AlgebraicReal& a) {
    if (a.minpoly.degree() != 1) return std::nullopt;
    return Rat(-a.minpoly.coeff(0), a.minpoly.coeff(1));
}

/* New value with isolating interval of width <= target. */
inline AlgebraicReal refine_to(const AlgebraicReal& a, const Rat& target) {
    if (a.minpoly.degree() == 1) return {a.minpoly, QInterval::point(*rational_value(a))};
    return {a.minpoly, refine_interval(a.minpoly, a.iv, target)};
}

// === exact comparison =======================================================

/* Sign of (a - q), exact. */
inline int compare_to_rational(const AlgebraicReal& a, const Rat& q) {
    if (a.iv.is_point()) return a.iv.lo < q ? -1 : (a.iv.lo > q ? 1 : 0);
    if (q <= a.iv.lo) return 1;  // root lies strictly inside (lo, hi)
    if (q >= a.iv.hi) return -1;
    int s = sign_at(a.minpoly, q);
    if (s == 0) return 0;
    return sign_at(a.minpoly, a.iv.lo) != s ? -1 : 1;
}

/* Sign of (a - b), exact.  Distinct minimal polynomials mean distinct
 * numbers, so interval refinement separates them; equal minimal polynomials
 * reduce to asking whether the interval intersection still holds a root. */
inline int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (auto qb = rational_value(b)) return compare_to_rational(a, *qb);
    if (auto qa = rational_value(a)) return -compare_to_rational(b, *qa);
    if (a.minpoly == b.minpoly) {
        Rat lo = std::max(a.iv.lo, b.iv.lo);
        Rat hi = std::min(a.iv.hi, b.iv.hi);
        if (lo < hi) {
            std::vector<Poly> chain = sturm_chain(a.minpoly);
            if (count_roots(chain, lo, hi) == 1) return 0;
        }
    }
    AlgebraicReal x = a, y = b;
    for (int iter = 0; iter < 100000; ++iter) {
        if (x.iv.hi < y.iv.lo) return -1;
        if (y.iv.hi < x.iv.lo) return 1;
        x = refine_to(x, x.iv.width() / 4);
        y = refine_to(y, y.iv.width() / 4);
    }
    throw InternalError("compare: refinement failed to separate distinct roots");
}

inline bool algebraic_equal(const AlgebraicReal& a, const AlgebraicReal& b) {
    return compare(a, b) == 0;
}

// === decimal output =========================================================

/* Floor-truncated decimal expansion, refined until the digits are pinned. */
inline std::string decimal_approx(const AlgebraicReal& a_in, int digits) {
    AlgebraicReal a = a_in;
    if (a.iv.is_point()) return decimal_string(a.iv.lo, digits);
    Rat scale = pow_int(Int(10), static_cast<unsigned>(digits));
    for (int iter = 0; iter < 100000; ++iter) {
        if (rat_floor(a.iv.lo * scale) == rat_floor(a.iv.hi * scale))
            return decimal_string(a.iv.lo, digits);
        a = refine_to(a, a.iv.width() / 4);
    }
    throw InternalError("decimal_approx: refinement failed to pin digits");
}

// === roots of integer polynomials ===========================================

/* All distinct real roots, ascending, each tagged with its irreducible
 * minimal polynomial. */
inline std::vector<AlgebraicReal> all_real_roots(const Poly& p) {
    std::vector<AlgebraicReal> out;
    if (p.is_zero() || p.degree() < 1) return out;
    for (const auto& [factor, mult] : factor_over_q(p))
        for (const QInterval& iv : isolate_real_roots(factor))
            out.push_back({factor, iv});
    std::sort(out.begin(), out.end(),
              [](const AlgebraicReal& x, const AlgebraicReal& y) { return compare(x, y) < 0; });
    return out;
}

// === dominant eigenvalues ===================================================

/* Largest real eigenvalue with its minimal polynomial, if any eigenvalue
 * is real (always the case for nonnegative matrices). */
inline std::optional<AlgebraicReal> dominant_real_root(const IntMatrix& A) {
    std::vector<AlgebraicReal> roots = all_real_roots(char_poly(A));
    if (roots.empty()) return std::nullopt;
    return roots.back();
}

/* The simple dominant eigenvalue of an aperiodic nonnegative matrix. */
inline AlgebraicReal perron_root(const IntMatrix& A) {
    if (!is_aperiodic(A)) throw InputError("perron_root: matrix is not aperiodic");
    std::optional<AlgebraicReal> r = dominant_real_root(A);
    if (!r) throw InternalError("perron_root: aperiodic matrix without real eigenvalue");
    return *r;
}

} // namespace invlim
