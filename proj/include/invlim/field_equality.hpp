/*
 * field_equality.hpp — exact equality test for real number fields Q(alpha).
 *
 * Three-valued verdict.  Equal comes with a certificate: rationals
 * c_0..c_{d-1} with beta = sum c_k alpha^k, verified by exact polynomial
 * reduction (minpoly_beta(q(x)) = 0 mod minpoly_alpha) plus an exact
 * root-index check that q(alpha) is beta itself, not a conjugate.  NotEqual
 * is emitted only on the sound degree obstruction (equal fields force equal
 * degrees).  Everything else is Unknown, carrying the height bound reached.
 *
 * Discovery is numeric: refine both roots, mine integer relations among
 * 1, alpha, ..., alpha^{d-1}, beta with exact-rational LLL, and double the
 * precision until the reconstructed certificate stabilizes twice in a row;
 * only then is the exact verifier consulted.  A certificate found with the
 * roles swapped (alpha over beta) is converted by solving the basis-change
 * system exactly and re-verified in the forward direction.  Soundness rests
 * entirely on the exact verification step, never on the numerics.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebraic.hpp"
#include "lll.hpp"

namespace invlim {

// === result type ============================================================

enum class FieldStatus { Equal, NotEqual, Unknown };

struct FieldEqualityResult {
    FieldStatus status = FieldStatus::Unknown;
    std::vector<Rat> certificate; // Equal: beta = sum_k certificate[k] * alpha^k
    std::string obstruction;      // NotEqual: why (degree mismatch)
    Int height_bound = 0;         // Unknown: certificate-height search limit reached
};

// === exact certificate verification (independent of discovery) ==============

namespace detail {

/* m_beta(q(x)) reduced mod m_alpha, exact over Q (Horner in the quotient). */
inline QPoly compose_mod(const Poly& m_beta, const QPoly& q, const Poly& m_alpha) {
    QPoly modp(m_alpha);
    QPoly acc;
    for (int k = m_beta.degree(); k >= 0; --k) {
        acc = mod(add(mul(acc, q), QPoly::constant(Rat(m_beta.coeff(k)))), modp);
    }
    return acc;
}

} // namespace detail

inline bool verify_field_certificate(const AlgebraicReal& alpha, const AlgebraicReal& beta,
                                     const std::vector<Rat>& c) {
    if (c.empty() || static_cast<int>(c.size()) != alpha.degree()) return false;
    QPoly q;
    q.c = c;
    q.trim();
    // algebraic part: q(alpha) must be a root of beta's minimal polynomial
    if (!detail::compose_mod(beta.minpoly, q, alpha.minpoly).is_zero()) return false;
    if (beta.degree() == 1) {
        // everything rational: q(alpha) computable exactly
        Rat a = *rational_value(alpha);
        Rat v = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * a + *it;
        return v == *rational_value(beta);
    }
    // root-index part: shrink alpha until q(alpha)'s interval isolates a
    // single root of beta's minpoly, then compare exactly with beta
    AlgebraicReal a = refine_to(alpha, alpha.iv.width());
    std::vector<Poly> chain = sturm_chain(beta.minpoly);
    for (int iter = 0; iter < 100000; ++iter) {
        QInterval J = eval_interval(q, a.iv);
        if (!J.is_point() && sign_at(beta.minpoly, J.lo) != 0 && sign_at(beta.minpoly, J.hi) != 0 &&
            count_roots(chain, J.lo, J.hi) == 1) {
            return algebraic_equal(AlgebraicReal{beta.minpoly, J}, beta);
        }
        a = refine_to(a, a.iv.width() / 4);
    }
    throw InternalError("verify_field_certificate: interval refinement stalled");
}

// === discovery ==============================================================

namespace detail {

/* Reduced certificate proposal at one precision rung: the first lattice
 * relation with a usable beta-coefficient within the height bound. */
inline std::optional<std::vector<Rat>> propose_certificate(const AlgebraicReal& alpha,
                                                           const AlgebraicReal& beta,
                                                           int prec_bits,
                                                           const Int& height_bound) {
    int d = alpha.degree();
    Rat width = pow2(-prec_bits);
    AlgebraicReal a = refine_to(alpha, width);
    AlgebraicReal b = refine_to(beta, width);
    Rat am = a.iv.mid();
    std::vector<Rat> xs;
    Rat p = 1;
    for (int k = 0; k < d; ++k) {
        xs.push_back(p);
        p *= am;
    }
    xs.push_back(b.iv.mid());
    for (const std::vector<Int>& m : integer_relation_candidates(xs, prec_bits)) {
        const Int& md = m.back();
        if (md == 0) continue;
        std::vector<Rat> c(d);
        bool ok = true;
        for (int k = 0; k < d && ok; ++k) {
            c[k] = -make_rat(m[k], md);
            if (abs_of(rat_num(c[k])) > height_bound || rat_den(c[k]) > height_bound) ok = false;
        }
        if (ok) return c;
    }
    return std::nullopt;
}

/* Exact Gaussian elimination; nullopt when the system is singular. */
inline std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> M,
                                                    std::vector<Rat> rhs) {
    const size_t n = M.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            Rat f = M[r][col] / M[col][col];
            for (size_t t = col; t < n; ++t) M[r][t] -= f * M[col][t];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / M[i][i];
    return x;
}

/* Given a verified reverse certificate alpha = p(beta), express beta in the
 * powers of alpha by solving the basis-change system over Q. */
inline std::optional<std::vector<Rat>> forward_from_reverse(const AlgebraicReal& alpha,
                                                            const AlgebraicReal& beta,
                                                            const std::vector<Rat>& rev) {
    const int d = alpha.degree();
    QPoly p;
    p.c = rev;
    p.trim();
    QPoly modp(beta.minpoly);
    // columns: alpha^k written in the power basis of beta
    std::vector<std::vector<Rat>> M(d, std::vector<Rat>(d, 0));
    QPoly pk = QPoly::constant(1);
    for (int k = 0; k < d; ++k) {
        for (int r = 0; r < d; ++r) M[r][k] = pk.coeff(r);
        pk = mod(mul(pk, p), modp);
    }
    std::vector<Rat> rhs(d, 0);
    rhs[1] = 1; // beta itself in beta's power basis
    return solve_linear(std::move(M), std::move(rhs));
}

} // namespace detail

// === the equality test ======================================================

inline FieldEqualityResult field_equal(const AlgebraicReal& alpha, const AlgebraicReal& beta,
                                       const Int& height_bound = Int(1000000)) {
    for (const AlgebraicReal* a : {&alpha, &beta}) {
        if (a->degree() < 1) throw InputError("field_equal: constant minimal polynomial");
        if (a->degree() > 1) {
            auto f = factor_over_q(a->minpoly);
            if (f.size() != 1 || f[0].second != 1 || !(f[0].first == normalized(a->minpoly)))
                throw InputError("field_equal: reducible minimal polynomial");
        }
    }

    FieldEqualityResult res;
    const int d = alpha.degree();
    if (d != beta.degree()) {
        res.status = FieldStatus::NotEqual;
        res.obstruction = "degree obstruction: [Q(a):Q] = " + std::to_string(d) +
                          " but [Q(b):Q] = " + std::to_string(beta.degree());
        return res;
    }
    if (d == 1) {
        res.status = FieldStatus::Equal;
        res.certificate = {*rational_value(beta)};
        return res;
    }
    if (alpha.minpoly == beta.minpoly && algebraic_equal(alpha, beta)) {
        res.status = FieldStatus::Equal;
        res.certificate = {Rat(0), Rat(1)};
        res.certificate.resize(d, Rat(0));
        return res;
    }

    const int ladder[] = {128, 256, 512, 1024, 2048};
    auto run_direction = [&](const AlgebraicReal& x,
                             const AlgebraicReal& y) -> std::optional<std::vector<Rat>> {
        std::optional<std::vector<Rat>> prev, stable;
        int seen = 0;
        for (int prec : ladder) {
            auto cand = detail::propose_certificate(x, y, prec, height_bound);
            if (cand && prev && *cand == *prev) {
                ++seen;
                if (seen >= 1) { // stabilized twice in a row: verify exactly
                    if (verify_field_certificate(x, y, *cand)) return cand;
                    seen = 0; // verified false positive; keep climbing
                }
            } else {
                seen = 0;
            }
            prev = cand;
        }
        return std::nullopt;
    };

    if (auto fwd = run_direction(alpha, beta)) {
        res.status = FieldStatus::Equal;
        res.certificate = *fwd;
        return res;
    }
    if (auto rev = run_direction(beta, alpha)) {
        if (auto fwd = detail::forward_from_reverse(alpha, beta, *rev)) {
            if (verify_field_certificate(alpha, beta, *fwd)) {
                res.status = FieldStatus::Equal;
                res.certificate = *fwd;
                return res;
            }
        }
    }

    res.status = FieldStatus::Unknown;
    res.height_bound = height_bound;
    return res;
}

} // namespace invlim
