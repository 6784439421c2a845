/*
 * factor.hpp — exact factorization of integer polynomials over Q.
 *
 * Pipeline: Yun squarefree decomposition, then per squarefree part a
 * Zassenhaus round: pick a good small prime (odd, not dividing the leading
 * coefficient, image squarefree; among the first five good primes the one
 * with the fewest modular factors, ties to the smaller prime), factor mod p
 * by distinct-degree + equal-degree splitting (Cantor–Zassenhaus with a
 * fixed-seed generator for determinism), lift the factorization quadratically
 * (Hensel, binary factor tree) past twice the Mignotte coefficient bound,
 * and recombine subsets by trial division.  Factors come back primitive with
 * positive leading coefficient, sorted, with multiplicities.
 *
 * Degree is capped at 24 (desk-scale inputs); beyond that a CapError is
 * raised rather than risking silent cost blowup.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace invlim {

// === arithmetic mod a small prime ==========================================

namespace zp {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u64 inv(u64 a, u64 p) { return powmod(a % p, p - 2, p); } // p prime

/* Dense polynomial over Z/p, ascending coefficients, trimmed. */
using PolyP = std::vector<u64>;

inline void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

inline PolyP add(const PolyP& a, const PolyP& b, u64 p) {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}

inline PolyP sub(const PolyP& a, const PolyP& b, u64 p) {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    trim(r);
    return r;
}

inline PolyP mul(const PolyP& a, const PolyP& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

inline PolyP scale(const PolyP& a, u64 c, u64 p) {
    PolyP r = a;
    for (u64& x : r) x = mulmod(x, c, p);
    trim(r);
    return r;
}

inline PolyP monic(const PolyP& a, u64 p) {
    if (a.empty()) return a;
    return scale(a, inv(a.back(), p), p);
}

inline std::pair<PolyP, PolyP> divmod(const PolyP& a, const PolyP& b, u64 p) {
    if (b.empty()) throw InternalError("zp::divmod: division by zero");
    PolyP r = a, q;
    if (degree(a) >= degree(b)) q.assign(a.size() - b.size() + 1, 0);
    u64 binv = inv(b.back(), p);
    while (degree(r) >= degree(b)) {
        u64 c = mulmod(r.back(), binv, p);
        int shift = degree(r) - degree(b);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            size_t k = i + shift;
            r[k] = (r[k] + p - mulmod(c, b[i], p)) % p;
        }
        trim(r);
    }
    trim(q);
    return {q, r};
}

inline PolyP gcd(PolyP a, PolyP b, u64 p) {
    while (!b.empty()) {
        PolyP r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

inline PolyP derivative(const PolyP& a, u64 p) {
    PolyP r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(mulmod(a[i], i % p, p));
    trim(r);
    return r;
}

/* a^e mod (f, p), big exponent. */
inline PolyP powmod_poly(PolyP a, Int e, const PolyP& f, u64 p) {
    PolyP r = {1};
    a = divmod(a, f, p).second;
    while (e > 0) {
        if ((e & 1) != 0) r = divmod(mul(r, a, p), f, p).second;
        a = divmod(mul(a, a, p), f, p).second;
        e >>= 1;
    }
    return r;
}

inline PolyP reduce(const Poly& f, u64 p) {
    PolyP r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) {
        Int m = f.c[i] % Int(p);
        if (m < 0) m += Int(p);
        r[i] = static_cast<u64>(m);
    }
    trim(r);
    return r;
}

} // namespace zp

// === factorization mod p ====================================================

namespace detail {

/* Fixed-seed linear congruential generator: determinism across runs. */
struct SplitRng {
    zp::u64 state;
    explicit SplitRng(zp::u64 seed) : state(seed ^ 0x9e3779b97f4a7c15ULL) {}
    zp::u64 next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 16;
    }
};

/* Equal-degree splitting: g = product of distinct irreducibles of degree e. */
inline void equal_degree_split(const zp::PolyP& g, int e, zp::u64 p, SplitRng& rng,
                               std::vector<zp::PolyP>& out) {
    using namespace zp;
    if (degree(g) == e) {
        out.push_back(monic(g, p));
        return;
    }
    Int half = (pow_int(Int(p), static_cast<unsigned>(e)) - 1) / 2;
    while (true) {
        PolyP a(degree(g), 0); // random poly of degree < deg g, nonconstant
        for (auto& c : a) c = rng.next() % p;
        trim(a);
        if (degree(a) < 1) continue;
        PolyP b = powmod_poly(a, half, g, p);
        if (b.empty()) continue;
        b[0] = (b[0] + p - 1) % p; // b - 1
        trim(b);
        PolyP d = gcd(b, g, p);
        if (degree(d) > 0 && degree(d) < degree(g)) {
            equal_degree_split(d, e, p, rng, out);
            equal_degree_split(divmod(g, d, p).first, e, p, rng, out);
            return;
        }
    }
}

/* Distinct-degree decomposition of a squarefree monic f mod p:
 * list of (product of irreducible factors of degree e, e). */
inline std::vector<std::pair<zp::PolyP, int>> distinct_degree(const zp::PolyP& f, zp::u64 p) {
    using namespace zp;
    std::vector<std::pair<PolyP, int>> out;
    PolyP rest = f;
    PolyP h = {0, 1}; // x
    int e = 0;
    while (degree(rest) > 0) {
        ++e;
        if (2 * e > degree(rest)) {
            out.emplace_back(rest, degree(rest)); // remainder is irreducible
            break;
        }
        h = powmod_poly(h, Int(p), rest, p); // x^(p^e) mod rest
        PolyP hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] + p - 1) % p; // h - x
        trim(hx);
        PolyP g = gcd(hx, rest, p);
        if (degree(g) > 0) {
            out.emplace_back(g, e);
            rest = divmod(rest, g, p).first;
            h = divmod(h, rest, p).second;
        }
    }
    return out;
}

/* Full monic factorization of a squarefree f mod p, deterministic order. */
inline std::vector<zp::PolyP> factor_mod_p(const zp::PolyP& f, zp::u64 p) {
    using namespace zp;
    std::vector<PolyP> out;
    SplitRng rng(p * 1000003ULL + static_cast<u64>(degree(f)));
    for (const auto& [prod, e] : distinct_degree(monic(f, p), p)) {
        std::vector<PolyP> part;
        equal_degree_split(prod, e, p, rng, part);
        std::sort(part.begin(), part.end());
        for (auto& q : part) out.push_back(std::move(q));
    }
    return out;
}

inline int count_factors_mod_p(const zp::PolyP& f, zp::u64 p) {
    int count = 0;
    for (const auto& [prod, e] : distinct_degree(zp::monic(f, p), p))
        count += zp::degree(prod) / e;
    return count;
}

// === Hensel lifting =========================================================

/* Integer polynomials with coefficients reduced into [0, m). */
inline Poly pmod(const Poly& a, const Int& m) {
    Poly r = a;
    for (Int& c : r.c) {
        c %= m;
        if (c < 0) c += m;
    }
    r.trim();
    return r;
}

/* Division by a monic divisor, all coefficients mod m. */
inline std::pair<Poly, Poly> divmod_monic(const Poly& a, const Poly& h, const Int& m) {
    if (h.degree() < 0 || h.lc() != 1) throw InternalError("divmod_monic: divisor not monic");
    Poly r = pmod(a, m), q;
    if (r.degree() >= h.degree()) q.c.assign(r.degree() - h.degree() + 1, 0);
    while (r.degree() >= h.degree()) {
        Int c = r.lc();
        int shift = r.degree() - h.degree();
        q.c[shift] = c;
        for (int i = 0; i <= h.degree(); ++i) {
            Int& x = r.c[i + shift];
            x = (x - c * h.coeff(i)) % m;
            if (x < 0) x += m;
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

/*
 * One quadratic Hensel step: from f = g*h (mod m) with s*g + t*h = 1 (mod m),
 * h monic, deg s < deg h, deg t < deg g, produce the same data mod m^2.
 */
struct HenselPair {
    Poly g, h, s, t;
};

inline HenselPair hensel_step(const Int& m, const Poly& f, const Poly& g, const Poly& h,
                              const Poly& s, const Poly& t) {
    Int m2 = m * m;
    Poly e = pmod(sub(f, mul(g, h)), m2);
    auto [q, r] = divmod_monic(mul(s, e), h, m2);
    Poly g1 = pmod(add(g, add(mul(t, e), mul(q, g))), m2);
    Poly h1 = pmod(add(h, r), m2);
    Poly b = pmod(sub(add(mul(s, g1), mul(t, h1)), Poly{{1}}), m2);
    auto [c, d] = divmod_monic(mul(s, b), h1, m2);
    Poly s1 = pmod(sub(s, d), m2);
    Poly t1 = pmod(sub(sub(t, mul(t, b)), mul(c, g1)), m2);
    return {g1, h1, s1, t1};
}

/* Binary factor tree for multifactor lifting; the leftmost leaf carries the
 * leading coefficient, every right-hand product stays monic. */
struct HenselNode {
    Poly value;
    Poly s, t; // Bezout data between the two children (internal nodes)
    int left = -1, right = -1;
    int leaf_index = -1;
};

struct HenselTree {
    std::vector<HenselNode> nodes;
    int root = -1;
    zp::u64 p = 0;

    int build(const std::vector<Poly>& leaves, int lo, int hi) {
        if (hi - lo == 1) {
            nodes.push_back({leaves[lo], {}, {}, -1, -1, lo});
            return static_cast<int>(nodes.size()) - 1;
        }
        int mid = lo + (hi - lo + 1) / 2;
        int l = build(leaves, lo, mid);
        int r = build(leaves, mid, hi);
        HenselNode node;
        node.left = l;
        node.right = r;
        node.value = pmod(mul(nodes[l].value, nodes[r].value), Int(p));
        // Bezout: s*left + t*right = 1 mod p (children are coprime mod p)
        zp::PolyP a = zp::reduce(nodes[l].value, p);
        zp::PolyP b = zp::reduce(nodes[r].value, p);
        zp::PolyP r0 = a, r1 = b, s0 = {1}, s1 = {};
        while (!r1.empty()) {
            auto [q, rem] = zp::divmod(r0, r1, p);
            zp::PolyP s2 = zp::sub(s0, zp::mul(q, s1, p), p);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (zp::degree(r0) != 0)
            throw InternalError("hensel tree: children not coprime mod p");
        zp::u64 ginv = zp::inv(r0[0], p);
        zp::PolyP u = zp::scale(s0, ginv, p);        // u*a = 1 mod b (up to t term)
        u = zp::divmod(u, b, p).second;              // deg u < deg b
        // t = (1 - u*a) / b exactly mod p
        zp::PolyP one = {1};
        zp::PolyP num = zp::sub(one, zp::mul(u, a, p), p);
        auto [tq, trem] = zp::divmod(num, b, p);
        if (!trem.empty()) throw InternalError("hensel tree: Bezout division not exact");
        auto lift_small = [&](const zp::PolyP& v) {
            Poly out;
            for (zp::u64 x : v) out.c.push_back(Int(x));
            out.trim();
            return out;
        };
        node.s = lift_small(u);
        node.t = lift_small(tq);
        nodes.push_back(std::move(node));
        return static_cast<int>(nodes.size()) - 1;
    }

    void lift_pass(int idx, const Poly& f, const Int& m) {
        HenselNode& node = nodes[idx];
        node.value = f;
        if (node.left < 0) return;
        HenselPair hp =
            hensel_step(m, f, nodes[node.left].value, nodes[node.right].value, node.s, node.t);
        node.s = hp.s;
        node.t = hp.t;
        lift_pass(node.left, hp.g, m);
        lift_pass(node.right, hp.h, m);
    }
};

/* Symmetric representative of a mod-m polynomial: coefficients in (-m/2, m/2]. */
inline Poly symmetric_rep(const Poly& a, const Int& m) {
    Poly r = pmod(a, m);
    for (Int& c : r.c)
        if (2 * c > m) c -= m;
    r.trim();
    return r;
}

/* Mignotte-style bound: coefficients of lc(f) * (any monic-normalized factor)
 * are below 2^deg(f) * ||f||_2 * |lc(f)|. */
inline Int factor_coeff_bound(const Poly& f) {
    Int sq = 0;
    for (const Int& c : f.c) sq += c * c;
    Int norm = boost::multiprecision::sqrt(sq) + 1;
    return pow_int(Int(2), static_cast<unsigned>(f.degree())) * norm * abs_of(f.lc());
}

/* Irreducible factors of a primitive squarefree polynomial, deg >= 1. */
inline std::vector<Poly> factor_squarefree(const Poly& f_in) {
    using namespace zp;
    Poly f = normalized(f_in);
    if (f.degree() == 1) return {f};

    // choose a good prime: image squarefree, lc preserved
    std::vector<u64> good;
    std::vector<int> counts;
    for (u64 p = 3; p < 10000 && good.size() < 5; ++p) {
        bool prime = p % 2 != 0;
        for (u64 d = 3; prime && d * d <= p; d += 2)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        if (f.lc() % Int(p) == 0) continue;
        PolyP fp = reduce(f, p);
        if (degree(gcd(fp, derivative(fp, p), p)) != 0) continue;
        good.push_back(p);
        counts.push_back(count_factors_mod_p(fp, p));
    }
    if (good.empty()) throw InternalError("factor_squarefree: no good prime below 10000");
    size_t best = 0;
    for (size_t i = 1; i < good.size(); ++i)
        if (counts[i] < counts[best]) best = i; // ties keep the smaller prime
    u64 p = good[best];
    if (counts[best] == 1) return {f}; // irreducible already certified mod p

    std::vector<PolyP> mod_factors = factor_mod_p(reduce(f, p), p);

    // lift: leftmost leaf absorbs the leading coefficient
    std::vector<Poly> leaves;
    for (size_t i = 0; i < mod_factors.size(); ++i) {
        PolyP g = mod_factors[i];
        if (i == 0) {
            Int bm = f.lc() % Int(p);
            if (bm < 0) bm += Int(p);
            g = scale(g, static_cast<u64>(bm), p);
        }
        Poly gi;
        for (u64 x : g) gi.c.push_back(Int(x));
        gi.trim();
        leaves.push_back(gi);
    }
    Int bound = 2 * factor_coeff_bound(f) + 1;
    HenselTree tree;
    tree.p = p;
    tree.root = tree.build(leaves, 0, static_cast<int>(leaves.size()));
    Int m(p);
    while (m < bound) {
        tree.lift_pass(tree.root, pmod(f, m * m), m);
        m *= m;
    }

    // collect lifted leaves, re-normalized monic mod m
    std::vector<Poly> lifted(mod_factors.size());
    for (const HenselNode& node : tree.nodes)
        if (node.leaf_index >= 0) lifted[node.leaf_index] = node.value;
    for (Poly& g : lifted) {
        Int lc = g.lc() % m;
        // inverse of lc mod m via extended Euclid on integers
        Int a = lc, b = m, x0 = 1, x1 = 0;
        while (b != 0) {
            Int q = a / b;
            Int a2 = b, b2 = a - q * b;
            Int x2 = x0 - q * x1;
            a = a2; b = b2;
            x0 = x1; x1 = x2;
        }
        if (a != 1) throw InternalError("factor_squarefree: leading coeff not invertible");
        Int inv = x0 % m;
        if (inv < 0) inv += m;
        for (Int& c : g.c) {
            c = (c * inv) % m;
            if (c < 0) c += m;
        }
        g.trim();
    }

    // subset recombination by trial division
    std::vector<Poly> out;
    std::vector<int> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);
    Poly rest = f;
    int card = 1;
    while (2 * card <= static_cast<int>(live.size())) {
        bool found = false;
        std::vector<int> pick(card);
        for (int i = 0; i < card; ++i) pick[i] = i;
        while (true) {
            Poly prod{{rest.lc()}};
            for (int i : pick) prod = pmod(mul(prod, lifted[live[i]]), m);
            Poly cand = normalized(symmetric_rep(prod, m));
            if (cand.degree() >= 1 && divides(cand, rest)) {
                out.push_back(cand);
                std::vector<int> next_live;
                for (size_t i = 0; i < live.size(); ++i)
                    if (std::find(pick.begin(), pick.end(), static_cast<int>(i)) == pick.end())
                        next_live.push_back(live[i]);
                live = std::move(next_live);
                rest = exact_div(rest, cand);
                found = true;
                break;
            }
            // next subset of the same cardinality
            int i = card - 1;
            while (i >= 0 && pick[i] == static_cast<int>(live.size()) - card + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < card; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!found) ++card;
    }
    if (rest.degree() >= 1) out.push_back(normalized(rest));
    return out;
}

} // namespace detail

// === public entry point =====================================================

constexpr int kFactorDegreeCap = 24;

/* Irreducible factorization over Q: primitive positive-lc factors with
 * multiplicities, sorted by (degree, coefficients); the product reproduces
 * the input up to a rational constant. */
inline std::vector<std::pair<Poly, int>> factor_over_q(const Poly& p_in) {
    if (p_in.is_zero()) throw InputError("factor_over_q: zero polynomial");
    if (p_in.degree() > kFactorDegreeCap)
        throw CapError("factor_over_q: degree above supported bound 24");
    std::vector<std::pair<Poly, int>> out;
    if (p_in.degree() < 1) return out;
    for (const auto& [part, mult] : yun_decomposition(primitive_part(p_in)))
        for (Poly& q : detail::factor_squarefree(part)) out.emplace_back(std::move(q), mult);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace invlim
