/*
 * tent.hpp — tent maps with a periodic critical orbit, described by their
 * kneading words, and the Markov substitutions they induce.
 *
 * The family is T_s(x) = sx + 2 - s on the increasing branch and s(1 - x)
 * on the decreasing one, 1 < s <= 2, with critical point c = (s-1)/s and
 * T_s(c) = 1, T_s(1) = 0.  A kneading word w_1..w_n over {L, R} records on
 * which side of c the iterates T(c), ..., T^n(c) fall; the orbit closes
 * with T^{n+1}(c) = c, so the period is n + 1.  The canonical input is the
 * word, not the real parameter: the parameter is recovered exactly as the
 * dominant eigenvalue of the derived substitution matrix, and the closing
 * identity T^{n+1}(c) = c is certified by exact polynomial divisibility.
 *
 * Orbit points are ordered combinatorially by the unimodal (twisted
 * lexicographic) order on their itineraries: compare symbol words with
 * L < C < R, flipping the comparison when the common prefix contains an
 * odd number of R symbols (each R passes through the decreasing branch).
 * C marks the critical point, where every itinerary here terminates.
 * Admissibility is exactly: step 1 (the point 1) ranks highest, step 2
 * (the point 0) ranks lowest, the derived slope exceeds 1, and the closing
 * polynomial vanishes at it.  verify_tent_model re-checks a model against
 * honest interval iteration of the real map, refining the slope enclosure
 * until every comparison is decided — and raising InconclusiveError at the
 * retry cap rather than accepting silently.
 */
#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "algebraic.hpp"
#include "substitution.hpp"

namespace invlim {

// === unimodal order on symbol words ========================================

namespace detail {

inline int symbol_value(char ch) {
    switch (ch) {
    case 'L': return 0;
    case 'C': return 1;
    case 'R': return 2;
    default: throw InternalError("symbol_value: unknown itinerary symbol");
    }
}

} // namespace detail

/* Three-way unimodal comparison of itinerary words over {L, C, R}. */
inline int unimodal_compare(const std::string& u, const std::string& v) {
    bool flip = false;
    size_t k = 0;
    for (; k < u.size() && k < v.size(); ++k) {
        if (u[k] != v[k]) {
            int d = detail::symbol_value(u[k]) < detail::symbol_value(v[k]) ? -1 : 1;
            return flip ? -d : d;
        }
        if (u[k] == 'R') flip = !flip;
    }
    if (u.size() == v.size()) return 0;
    int d = u.size() < v.size() ? -1 : 1; // proper prefix; unreachable for orbit itineraries
    return flip ? -d : d;
}

inline bool unimodal_less(const std::string& u, const std::string& v) {
    return unimodal_compare(u, v) < 0;
}

// === tent model =============================================================

struct TentModel {
    int period;                   // n + 1
    std::string kneading;         // symbols of T(c), ..., T^n(c)
    std::vector<int> orbit_order; // orbit step j (0 = c) -> rank in {0 = min, ..., n = max}
    Substitution chi;
    AlgebraicReal slope;
};

namespace detail {

inline void validate_kneading(const std::string& w) {
    for (char ch : w)
        if (ch != 'L' && ch != 'R')
            throw InputError("kneading word: symbol outside {L, R}");
    if (w.size() < 2)
        throw InputError("kneading word describes period " + std::to_string(w.size() + 1) +
                         "; the critical point is never periodic of period below 3");
    if (w.size() + 1 > 12)
        throw CapError("kneading word describes period " + std::to_string(w.size() + 1) +
                       "; desk-scale bound is 12");
}

/* Itinerary of orbit step j as a C-terminated word; step 0 is c itself. */
inline std::string step_itinerary(const std::string& w, int j) {
    if (j == 0) return "C";
    return w.substr(static_cast<size_t>(j - 1)) + "C";
}

/* Ranks of the orbit steps under the unimodal order, with admissibility
 * gates: step 1 must be the maximum and step 2 the minimum. */
inline std::vector<int> orbit_ranks(const std::string& w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> idx(static_cast<size_t>(n) + 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return unimodal_less(step_itinerary(w, a), step_itinerary(w, b));
    });
    std::vector<int> rank(static_cast<size_t>(n) + 1);
    for (int r = 0; r <= n; ++r) rank[static_cast<size_t>(idx[static_cast<size_t>(r)])] = r;
    if (rank[1] != n)
        throw InputError("inadmissible kneading word: the itinerary of step " +
                         std::to_string(idx[static_cast<size_t>(n)]) +
                         " exceeds the itinerary of step 1 in the unimodal order");
    if (rank[2] != 0)
        throw InputError("inadmissible kneading word: the itinerary of step " +
                         std::to_string(idx[0]) +
                         " lies below the itinerary of step 2 in the unimodal order");
    return rank;
}

/* Substitution dictated by the ranks: interval i maps over the block of
 * intervals between the successor ranks of its endpoints, increasing
 * (unbarred ascending) left of c and decreasing (barred descending) right
 * of c. */
inline Substitution chi_from_ranks(const std::vector<int>& rank) {
    const int n = static_cast<int>(rank.size()) - 1;
    std::vector<int> point_at_rank(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) point_at_rank[static_cast<size_t>(rank[static_cast<size_t>(j)])] = j;
    std::vector<int> succ(static_cast<size_t>(n) + 1);
    for (int r = 0; r <= n; ++r) {
        int j = point_at_rank[static_cast<size_t>(r)];
        succ[static_cast<size_t>(r)] = rank[static_cast<size_t>((j + 1) % (n + 1))];
    }
    const int rho = rank[0]; // rank of the critical point
    std::vector<Word> images;
    for (int i = 1; i <= n; ++i) {
        int u = succ[static_cast<size_t>(i - 1)];
        int v = succ[static_cast<size_t>(i)];
        int lo = std::min(u, v), hi = std::max(u, v);
        Word im;
        if (i <= rho)
            for (int t = lo + 1; t <= hi; ++t) im.push_back(t);
        else
            for (int t = hi; t >= lo + 1; --t) im.push_back(-t);
        images.push_back(std::move(im));
    }
    return Substitution(n, images);
}

} // namespace detail

namespace detail {

/*
 * s * T_s^j(c) - (s - 1) as exact polynomials in s, for j = 1 .. n+1: with
 * P_j = s * T_s^j(c) the branches become P -> sP + (2-s)s (increasing) and
 * P -> -sP + s^2 (decreasing), starting from P_0 = s - 1 through the peak
 * P_1 = s.  Entry j-1 vanishes at slope s exactly when T_s^j(c) = c.
 */
inline std::vector<Poly> return_polynomials(const std::string& w) {
    const Poly x = Poly::monomial(1);
    const Poly s_minus_1(std::vector<Int>{-1, 1});
    std::vector<Poly> out;
    Poly p = add(mul(s_minus_1, x), Poly(std::vector<Int>{0, 2, -1})); // P_1 = s
    out.push_back(sub(p, s_minus_1));
    for (char ch : w) {
        p = ch == 'L' ? add(mul(p, x), Poly(std::vector<Int>{0, 2, -1}))
                      : add(neg(mul(p, x)), Poly::monomial(2));
        out.push_back(sub(p, s_minus_1));
    }
    return out;
}

} // namespace detail

/* The full-period return polynomial: zero at s exactly when T_s^{n+1}(c) = c. */
inline Poly closing_polynomial(const std::string& w) {
    detail::validate_kneading(w);
    return detail::return_polynomials(w).back();
}

inline TentModel build_tent_model(const std::string& kneading) {
    detail::validate_kneading(kneading);
    std::vector<int> rank = detail::orbit_ranks(kneading);
    Substitution chi = detail::chi_from_ranks(rank);
    auto slope = dominant_real_root(abelianization(chi));
    if (!slope)
        throw InternalError("build_tent_model: nonnegative matrix without a real eigenvalue");
    if (compare_to_rational(*slope, 1) <= 0)
        throw InputError("inadmissible kneading word: the derived slope does not exceed 1");
    if (compare_to_rational(*slope, 2) > 0)
        throw InputError("inadmissible kneading word: the derived slope exceeds 2");
    std::vector<Poly> returns = detail::return_polynomials(kneading);
    if (!divides(slope->minpoly, returns.back()))
        throw InputError(
            "inadmissible kneading word: the orbit-closing equation fails at the derived slope");
    // no early return to c: an orbit coincidence at the derived slope would
    // propagate to one, so this is exactly pairwise distinctness
    for (size_t j = 0; j + 1 < returns.size(); ++j)
        if (divides(slope->minpoly, returns[j]))
            throw InputError("inadmissible kneading word: the orbit revisits the critical point "
                             "after " +
                             std::to_string(j + 1) + " steps, so the true period is shorter");
    return TentModel{static_cast<int>(kneading.size()) + 1, kneading, rank, chi, *slope};
}

// === interval verification ==================================================

namespace detail {

enum class Check { pass, fail, undecided };

/* One interval pass at a fixed slope enclosure. */
inline Check tent_interval_check(const TentModel& m, const QInterval& s) {
    const int n = m.period - 1;
    // slope must lie in (1, 2]
    if (s.hi <= 1 || s.lo > 2) return Check::fail;
    if (s.lo <= 1) return Check::undecided;
    QInterval c = isub(QInterval::point(1), QInterval(Rat(1) / s.hi, Rat(1) / s.lo));
    auto left = [&](const QInterval& y) { // s*y + 2 - s
        return iadd(imul(s, y), isub(QInterval::point(2), s));
    };
    auto right = [&](const QInterval& y) { // s*(1 - y)
        return imul(s, isub(QInterval::point(1), y));
    };
    std::vector<QInterval> orbit;
    orbit.push_back(c);
    orbit.push_back(left(c)); // both branches agree at the peak
    for (int j = 1; j <= n; ++j)
        orbit.push_back(m.kneading[static_cast<size_t>(j - 1)] == 'L'
                            ? left(orbit[static_cast<size_t>(j)])
                            : right(orbit[static_cast<size_t>(j)]));
    bool undecided = false;
    // side of c prescribed by the kneading symbols
    for (int j = 1; j <= n; ++j) {
        const QInterval& y = orbit[static_cast<size_t>(j)];
        bool is_left = m.kneading[static_cast<size_t>(j - 1)] == 'L';
        if (is_left ? y.lo > c.hi : y.hi < c.lo) return Check::fail;
        if (is_left ? !(y.hi < c.lo) : !(y.lo > c.hi)) undecided = true;
    }
    // pairwise order prescribed by the ranks (step 0 = c included)
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) {
            if (m.orbit_order[static_cast<size_t>(j)] >= m.orbit_order[static_cast<size_t>(k)])
                continue;
            const QInterval& yj = orbit[static_cast<size_t>(j)];
            const QInterval& yk = orbit[static_cast<size_t>(k)];
            if (yj.lo > yk.hi) return Check::fail;
            if (!(yj.hi < yk.lo)) undecided = true;
        }
    // the orbit closes: the (n+1)-st iterate must meet c again
    if (disjoint(orbit[static_cast<size_t>(n + 1)], c)) return Check::fail;
    return undecided ? Check::undecided : Check::pass;
}

} // namespace detail

/*
 * Check a model against interval iteration of the real map at its own
 * slope, refined to width 2^-precision_bits and beyond on retries.  Exact
 * field consistency (chi against orbit_order, structural shapes) is
 * checked first.  Definite contradiction -> false; contract violations in
 * the shapes -> InputError; comparisons still open at the retry cap ->
 * InconclusiveError, never a silent verdict.
 */
inline bool verify_tent_model(const TentModel& m, int precision_bits = 64) {
    if (precision_bits < 1) throw InputError("verify_tent_model: precision must be positive");
    const int n = m.period - 1;
    if (n < 2 || static_cast<int>(m.kneading.size()) != n ||
        static_cast<int>(m.orbit_order.size()) != n + 1)
        throw InputError("verify_tent_model: malformed model shape");
    for (char ch : m.kneading)
        if (ch != 'L' && ch != 'R')
            throw InputError("verify_tent_model: kneading symbol outside {L, R}");
    {
        std::vector<int> seen(static_cast<size_t>(n) + 1, 0);
        for (int r : m.orbit_order) {
            if (r < 0 || r > n || seen[static_cast<size_t>(r)]++)
                throw InputError("verify_tent_model: orbit_order is not a permutation of ranks");
        }
    }
    if (m.chi.domain() != n || m.chi.codomain() != n) return false;
    if (!(detail::chi_from_ranks(m.orbit_order) == m.chi)) return false;

    AlgebraicReal s = refine_to(m.slope, pow2(-precision_bits));
    for (int attempt = 0; attempt < 8; ++attempt) {
        switch (detail::tent_interval_check(m, s.iv)) {
        case detail::Check::pass: return true;
        case detail::Check::fail: return false;
        case detail::Check::undecided: s = refine_to(s, s.iv.width() / Rat(pow_int(2, 64)));
        }
    }
    throw InconclusiveError("verify_tent_model: comparisons undecided at the precision retry cap");
}

// === enumeration ============================================================

/* All admissible kneading words of period 3..max_period, sorted by
 * (period, unimodal order); ascending unimodal order is ascending slope. */
inline std::vector<std::string> enumerate_kneading(int max_period) {
    if (max_period < 3 || max_period > 12)
        throw InputError("enumerate_kneading: max_period must lie in [3, 12]");
    std::vector<std::string> out;
    for (int n = 2; n < max_period; ++n) {
        std::vector<std::string> level;
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::string w = "R";
            for (int k = 0; k < n - 1; ++k) w += (mask >> k) & 1u ? 'R' : 'L';
            try {
                build_tent_model(w);
            } catch (const InputError&) {
                continue;
            }
            level.push_back(w);
        }
        std::sort(level.begin(), level.end(), unimodal_less);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace invlim
