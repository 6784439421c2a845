/*
 * polynomial.hpp — exact univariate polynomials.
 *
 * Poly: integer coefficients, ascending degree order, trailing zeros trimmed.
 * QPoly: rational coefficients, used for exact division and for arithmetic
 * modulo a minimal polynomial (field-membership verification).
 *
 * Provides: ring arithmetic, evaluation (integer, rational, sign-only),
 * content/primitive part, pseudo-remainder, primitive-PRS gcd, exact
 * division, Yun's squarefree decomposition, and a deterministic printer.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace invlim {

// ============================================================================
// Integer polynomials
// ============================================================================

struct Poly {
    std::vector<Int> c; // c[k] multiplies x^k; invariant: empty or c.back() != 0

    Poly() = default;
    explicit Poly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Int& v) { return Poly(std::vector<Int>{v}); }
    /* coeff * x^k */
    static Poly monomial(int k, const Int& coeff = 1) {
        std::vector<Int> v(static_cast<size_t>(k) + 1, 0);
        v.back() = coeff;
        return Poly(std::move(v));
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    const Int& lc() const {
        if (c.empty()) throw InternalError("Poly::lc on zero polynomial");
        return c.back();
    }
    Int coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c.size())) return 0;
        return c[static_cast<size_t>(k)];
    }
    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator<(const Poly& o) const { // degree, then coefficient lex — stable sort key
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        for (size_t i = c.size(); i-- > 0;)
            if (c[i] != o.c[i]) return c[i] < o.c[i];
        return false;
    }
};

inline Poly add(const Poly& a, const Poly& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return Poly(std::move(r));
}

inline Poly neg(const Poly& a) {
    std::vector<Int> r(a.c);
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
}

inline Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Int> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(r));
}

inline Poly scale(const Poly& a, const Int& k) {
    if (k == 0) return Poly();
    std::vector<Int> r(a.c);
    for (auto& x : r) x *= k;
    return Poly(std::move(r));
}

inline Int eval(const Poly& p, const Int& x) {
    Int r = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) r = r * x + *it;
    return r;
}

inline Rat eval(const Poly& p, const Rat& x) {
    Rat r = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) r = r * x + Rat(*it);
    return r;
}

/* Sign of p at a rational point, computed homogeneously in integers:
 * p(n/d) carries the sign of sum_k c_k n^k d^(deg-k). */
inline int sign_at(const Poly& p, const Rat& x) {
    if (p.is_zero()) return 0;
    Int n = rat_num(x), d = rat_den(x); // d > 0
    int deg = p.degree();
    Int acc = 0, npow = 1;
    std::vector<Int> dpow(static_cast<size_t>(deg) + 1);
    dpow[static_cast<size_t>(deg)] = 1;
    for (int k = deg - 1; k >= 0; --k)
        dpow[static_cast<size_t>(k)] = dpow[static_cast<size_t>(k) + 1] * d;
    for (int k = 0; k <= deg; ++k) {
        acc += p.c[static_cast<size_t>(k)] * npow * dpow[static_cast<size_t>(k)];
        if (k < deg) npow *= n;
    }
    return sign_of(acc);
}

inline Poly derivative(const Poly& p) {
    if (p.degree() <= 0) return Poly();
    std::vector<Int> r(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) r[i - 1] = p.c[i] * Int(i);
    return Poly(std::move(r));
}

inline Int content(const Poly& p) {
    Int g = 0;
    for (const auto& x : p.c) g = boost::multiprecision::gcd(g, x);
    return g; // 0 for the zero polynomial, positive otherwise
}

/* Divide out the positive content; sign of the leading coefficient kept. */
inline Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    std::vector<Int> r(p.c);
    for (auto& x : r) x /= g;
    return Poly(std::move(r));
}

/* Primitive with positive leading coefficient — the canonical form used for
 * irreducible factors and minimal polynomials. */
inline Poly normalized(const Poly& p) {
    Poly q = primitive_part(p);
    if (!q.is_zero() && q.lc() < 0) q = neg(q);
    return q;
}

/* Pseudo-remainder of a by b (classic fraction-free reduction); only the
 * associate class of the result matters to callers (gcd normalizes). */
inline Poly pseudo_rem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InternalError("pseudo_rem: zero divisor");
    Poly r = a;
    int db = b.degree();
    const Int& lb = b.lc();
    while (!r.is_zero() && r.degree() >= db) {
        int shift = r.degree() - db;
        Int cr = r.lc();
        r = sub(scale(r, lb), mul(b, Poly::monomial(shift, cr)));
    }
    return r;
}

/* gcd up to constants (primitive, positive leading coefficient). */
inline Poly gcd(const Poly& a, const Poly& b) {
    Poly f = normalized(a), g = normalized(b);
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        Poly r = pseudo_rem(f, g);
        f = g;
        g = normalized(r);
    }
    return normalized(f);
}

// ============================================================================
// Rational polynomials
// ============================================================================

struct QPoly {
    std::vector<Rat> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    explicit QPoly(const Poly& p) {
        c.reserve(p.c.size());
        for (const auto& x : p.c) c.emplace_back(x);
    }

    static QPoly constant(const Rat& v) { return QPoly(std::vector<Rat>{v}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rat& lc() const {
        if (c.empty()) throw InternalError("QPoly::lc on zero polynomial");
        return c.back();
    }
    Rat coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c.size())) return 0;
        return c[static_cast<size_t>(k)];
    }
    bool operator==(const QPoly& o) const { return c == o.c; }
};

inline QPoly add(const QPoly& a, const QPoly& b) {
    std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return QPoly(std::move(r));
}

inline QPoly neg(const QPoly& a) {
    std::vector<Rat> r(a.c);
    for (auto& x : r) x = -x;
    return QPoly(std::move(r));
}

inline QPoly sub(const QPoly& a, const QPoly& b) { return add(a, neg(b)); }

inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rat> r(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return QPoly(std::move(r));
}

inline QPoly scale(const QPoly& a, const Rat& k) {
    if (k == 0) return QPoly();
    std::vector<Rat> r(a.c);
    for (auto& x : r) x *= k;
    return QPoly(std::move(r));
}

inline Rat eval(const QPoly& p, const Rat& x) {
    Rat r = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) r = r * x + *it;
    return r;
}

inline QPoly derivative(const QPoly& p) {
    if (p.degree() <= 0) return QPoly();
    std::vector<Rat> r(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) r[i - 1] = p.c[i] * Rat(Int(i));
    return QPoly(std::move(r));
}

/* Quotient and remainder over Q; exact. */
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw InternalError("QPoly divmod: zero divisor");
    QPoly r = a;
    int db = b.degree();
    std::vector<Rat> q(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1, Rat(0));
    while (!r.is_zero() && r.degree() >= db) {
        int shift = r.degree() - db;
        Rat f = r.lc() / b.lc();
        q[static_cast<size_t>(shift)] += f;
        for (int k = 0; k <= db; ++k)
            r.c[static_cast<size_t>(shift + k)] -= f * b.c[static_cast<size_t>(k)];
        r.trim();
    }
    return {QPoly(std::move(q)), r};
}

inline QPoly mod(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

/* Clear denominators, divide by positive content, force lc > 0. */
inline Poly to_primitive_poly(const QPoly& p) {
    Int lcm = 1;
    for (const auto& x : p.c) {
        Int d = rat_den(x);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::vector<Int> r;
    r.reserve(p.c.size());
    for (const auto& x : p.c) r.push_back(rat_num(x) * (lcm / rat_den(x)));
    return normalized(Poly(std::move(r)));
}

/* Same, but keep the sign of the leading coefficient (Sturm chains count
 * sign variations; only positive scaling is allowed there). */
inline Poly to_primitive_poly_signed(const QPoly& p) {
    Int lcm = 1;
    for (const auto& x : p.c) {
        Int d = rat_den(x);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::vector<Int> r;
    r.reserve(p.c.size());
    for (const auto& x : p.c) r.push_back(rat_num(x) * (lcm / rat_den(x)));
    return primitive_part(Poly(std::move(r)));
}

/* Exact division of integer polynomials; throws if not divisible. */
inline Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(QPoly(a), QPoly(b));
    if (!r.is_zero()) throw InternalError("exact_div: not divisible");
    std::vector<Int> out;
    out.reserve(q.c.size());
    for (const auto& x : q.c) {
        if (rat_den(x) != 1) throw InternalError("exact_div: non-integer quotient");
        out.push_back(rat_num(x));
    }
    return Poly(std::move(out));
}

inline bool divides(const Poly& b, const Poly& a) {
    if (b.is_zero()) return a.is_zero();
    return mod(QPoly(a), QPoly(b)).is_zero();
}

/* p / gcd(p, p') — squarefree part, normalized. */
inline Poly squarefree(const Poly& p) {
    if (p.degree() <= 0) return normalized(p);
    Poly g = gcd(p, derivative(p));
    if (g.degree() == 0) return normalized(p);
    return to_primitive_poly(divmod(QPoly(p), QPoly(g)).first);
}

/*
 * Yun's squarefree decomposition: p ~ prod_i f_i^(m_i) with the f_i
 * squarefree, pairwise coprime, normalized; constant of proportionality
 * rational.  Divisions run over Q, so exactness is structural.
 */
inline std::vector<std::pair<Poly, int>> yun_decomposition(const Poly& p_in) {
    std::vector<std::pair<Poly, int>> out;
    Poly p = normalized(p_in);
    if (p.degree() <= 0) return out;
    Poly g0 = gcd(p, derivative(p));
    if (g0.degree() == 0) {
        out.emplace_back(p, 1);
        return out;
    }
    QPoly g(g0);
    QPoly wq = divmod(QPoly(p), g).first;
    QPoly zq = sub(divmod(QPoly(derivative(p)), g).first, derivative(wq));
    int i = 1;
    while (wq.degree() > 0) {
        Poly a = gcd(to_primitive_poly(wq), to_primitive_poly_signed(zq));
        if (a.degree() > 0) out.emplace_back(normalized(a), i);
        QPoly aq(a);
        wq = divmod(wq, aq).first;
        QPoly yq = divmod(zq, aq).first;
        zq = sub(yq, derivative(wq));
        ++i;
    }
    return out;
}

// ============================================================================
// Pretty-printing:  "x^2 - x - 1"
// ============================================================================

inline std::string poly_to_string(const Poly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        Int a = p.coeff(k);
        if (a == 0) continue;
        bool first = s.empty();
        bool negative = a < 0;
        Int mag = abs_of(a);
        if (first) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        if (k == 0) {
            s += mag.str();
        } else {
            if (mag != 1) s += mag.str();
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

} // namespace invlim
