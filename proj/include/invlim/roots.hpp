/*
 * roots.hpp — exact real-root machinery for integer polynomials.
 *
 * Sturm chains (integer, primitive-signed normalization), root counting on
 * half-open intervals (lo, hi], isolation of all real roots of a squarefree
 * polynomial into disjoint rational intervals, and bisection refinement of
 * an isolating interval to any requested width.  All decisions are exact
 * sign evaluations; no floating point.
 */
#pragma once

#include <algorithm>
#include <vector>

#include "polynomial.hpp"

namespace invlim {

/* Sturm chain of a squarefree polynomial: p, p', then negated remainders,
 * each renormalized by a positive constant only (signs are load-bearing). */
inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    if (p.degree() < 1) {
        chain.push_back(normalized(p));
        return chain;
    }
    chain.push_back(primitive_part(p));
    chain.push_back(primitive_part(derivative(p)));
    while (chain.back().degree() > 0) {
        QPoly r = mod(QPoly(chain[chain.size() - 2]), QPoly(chain.back()));
        if (r.is_zero()) break; // squarefree input should end at a constant
        chain.push_back(to_primitive_poly_signed(neg(r)));
    }
    return chain;
}

/* Sign variations of the chain at x. */
inline int sturm_variations(const std::vector<Poly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const Poly& q : chain) {
        int s = sign_at(q, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

/* Number of distinct real roots in (lo, hi]. */
inline int count_roots(const std::vector<Poly>& chain, const Rat& lo, const Rat& hi) {
    return sturm_variations(chain, lo) - sturm_variations(chain, hi);
}

/* 1 + max |c_k| / |lc| bounds every real root in absolute value. */
inline Rat cauchy_root_bound(const Poly& p) {
    if (p.degree() < 1) return Rat(1);
    Int m = 0;
    for (int k = 0; k < p.degree(); ++k) {
        Int v = abs_of(p.coeff(k));
        if (v > m) m = v;
    }
    return Rat(1) + Rat(m, abs_of(p.lc()));
}

/*
 * Isolate all real roots of a squarefree polynomial: disjoint intervals in
 * ascending order, each containing exactly one root.  Intervals are either
 * exact points [r, r] (rational roots) or carry a strict sign change
 * p(lo) * p(hi) < 0, which is the invariant bisection refinement relies on.
 */
inline std::vector<QInterval> isolate_real_roots(const Poly& p_in) {
    Poly p = primitive_part(p_in);
    std::vector<QInterval> out;
    if (p.degree() < 1) return out;
    std::vector<Poly> chain = sturm_chain(p);
    Rat bound = cauchy_root_bound(p);
    // nudge the outer endpoints off any root (Cauchy bound is strict)
    Rat lo = -bound - 1, hi = bound + 1;
    struct Seg {
        Rat lo, hi;
        int count;
    };
    std::vector<Seg> stack;
    int total = count_roots(chain, lo, hi);
    if (total > 0) stack.push_back({lo, hi, total});
    std::vector<QInterval> found;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 1) {
            // shrink until the endpoints straddle with a strict sign change
            Rat a = s.lo, b = s.hi;
            while (true) {
                int sa = sign_at(p, a), sb = sign_at(p, b);
                if (sa == 0) { // rational root at a — exact point
                    found.push_back(QInterval::point(a));
                    break;
                }
                if (sb == 0) {
                    found.push_back(QInterval::point(b));
                    break;
                }
                if (sa != sb) {
                    found.push_back(QInterval(a, b));
                    break;
                }
                // same nonzero sign at both ends: the root is interior to a
                // sub-half; bisect (count = 1 guarantees progress)
                Rat mid = (a + b) / 2;
                if (count_roots(chain, a, mid) == 1) b = mid;
                else a = mid;
            }
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        int left = count_roots(chain, s.lo, mid);
        if (sign_at(p, mid) == 0) {
            // mid is a rational root; count it once on the left side
            // (half-open (lo, mid] contains it)
        }
        int right = s.count - left;
        if (left > 0) stack.push_back({s.lo, mid, left});
        if (right > 0) stack.push_back({mid, s.hi, right});
    }
    // ascending order
    std::sort(found.begin(), found.end(), [](const QInterval& x, const QInterval& y) {
        return x.lo < y.lo;
    });
    return found;
}

/*
 * Refine an isolating interval of p to width <= target.  Exact-point
 * intervals pass through; otherwise the strict sign-change invariant is
 * maintained by bisection.  For irreducible p of degree >= 2 the midpoint
 * can never be a root.
 */
inline QInterval refine_interval(const Poly& p, QInterval iv, const Rat& target) {
    if (iv.is_point()) return iv;
    int slo = sign_at(p, iv.lo);
    if (slo == 0 || slo == sign_at(p, iv.hi))
        throw InternalError("refine_interval: lost the sign-change invariant");
    while (iv.width() > target) {
        Rat mid = iv.mid();
        int sm = sign_at(p, mid);
        if (sm == 0) return QInterval::point(mid); // rational root (degree-1 factors)
        if (sm == slo) iv.lo = mid;
        else iv.hi = mid;
    }
    return iv;
}

/* Interval extension of a polynomial over a rational interval (Horner). */
inline QInterval eval_interval(const Poly& p, const QInterval& x) {
    QInterval r = QInterval::point(0);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it)
        r = iadd(imul(r, x), QInterval::point(Rat(*it)));
    return r;
}

inline QInterval eval_interval(const QPoly& p, const QInterval& x) {
    QInterval r = QInterval::point(0);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it)
        r = iadd(imul(r, x), QInterval::point(*it));
    return r;
}

} // namespace invlim
