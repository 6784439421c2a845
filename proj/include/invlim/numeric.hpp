/*
 * numeric.hpp — exact arithmetic foundation.
 *
 * Arbitrary-precision integers and rationals (Boost.Multiprecision, the
 * header-only cpp_int backend), closed rational intervals with outward
 * arithmetic, and deterministic decimal printing.  The library proper uses
 * no floating point anywhere; every numeric decision is made on exact
 * integers, rationals, or rational intervals refined on demand.
 */
#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace invlim {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

inline Int abs_of(const Int& x) { return x < 0 ? Int(-x) : x; }
inline Rat abs_of(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Int pow_int(const Int& base, unsigned k) {
    Int r = 1, b = base;
    for (unsigned e = k; e != 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

/* 2^e as an exact rational; e may be negative. */
inline Rat pow2(int e) {
    Int p = pow_int(2, static_cast<unsigned>(e < 0 ? -e : e));
    return e < 0 ? Rat(1, p) : Rat(p);
}

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

/* num/den with any sign pattern (cpp_rational itself rejects den < 0). */
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw InternalError("make_rat: zero denominator");
    return den > 0 ? Rat(num, den) : Rat(-num, -den);
}

/* floor(q) as an integer (toward -infinity). */
inline Int rat_floor(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q); // d > 0 by cpp_rational invariant
    Int quo = n / d, rem = n % d;
    if (rem != 0 && n < 0) quo -= 1;
    return quo;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

/*
 * Exact decimal rendering of a rational, truncated toward -infinity to
 * `digits` fractional digits.  Deterministic: the printed string depends
 * only on the value and the digit count.
 */
inline std::string decimal_string(const Rat& x, int digits) {
    if (digits < 0) throw InputError("decimal_string: negative digit count");
    Int scaled = rat_floor(x * Rat(pow_int(10, static_cast<unsigned>(digits))));
    bool neg = scaled < 0;
    std::string s = abs_of(scaled).str();
    if (static_cast<int>(s.size()) <= digits)
        s.insert(0, static_cast<size_t>(digits) - s.size() + 1, '0');
    std::string out;
    if (neg) out += '-';
    if (digits == 0) {
        out += s;
    } else {
        out += s.substr(0, s.size() - static_cast<size_t>(digits));
        out += '.';
        out += s.substr(s.size() - static_cast<size_t>(digits));
    }
    return out;
}

/* Closed rational interval [lo, hi]; the basic cell of exact refinement. */
struct QInterval {
    Rat lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw InternalError("QInterval: lo > hi");
    }
    static QInterval point(const Rat& v) { return QInterval(v, v); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool is_point() const { return lo == hi; }
};

inline bool disjoint(const QInterval& a, const QInterval& b) {
    return a.hi < b.lo || b.hi < a.lo;
}

inline QInterval iadd(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo + b.lo, a.hi + b.hi);
}

inline QInterval isub(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo - b.hi, a.hi - b.lo);
}

inline QInterval ineg(const QInterval& a) { return QInterval(-a.hi, -a.lo); }

inline QInterval imul(const QInterval& a, const QInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rat lo = p1, hi = p1;
    for (const Rat* p : {&p2, &p3, &p4}) {
        if (*p < lo) lo = *p;
        if (*p > hi) hi = *p;
    }
    return QInterval(lo, hi);
}

inline QInterval iscale(const QInterval& a, const Rat& c) {
    return c >= 0 ? QInterval(a.lo * c, a.hi * c) : QInterval(a.hi * c, a.lo * c);
}

inline QInterval ipow(const QInterval& a, unsigned k) {
    QInterval r = QInterval::point(1);
    QInterval b = a;
    for (unsigned e = k; e != 0; e >>= 1) {
        if (e & 1) r = imul(r, b);
        if (e > 1) b = imul(b, b);
    }
    return r;
}

} // namespace invlim
