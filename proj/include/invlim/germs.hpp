/*
 * germs.hpp — edge-germ dynamics at the wedge point.
 *
 * The 2n edge germs at the wedge point (one per circle end, barred = the
 * reversed end) map forward under a Markov map by the first letter of the
 * image word: germ +i goes to the first letter of chi(a_i), germ -i to the
 * first letter of bar(chi(a_i)).  From this come the eventual range
 * R = f_*^{2n}(E), fold detection (a letter adjacent to its own bar in
 * some expansion), and the classification predicates: a map is
 * "distinguished" when it folds or #R != 2, and lies in the
 * orientation-tractable class M_o^I when its square is orientation
 * preserving and it is not distinguished.
 */
#pragma once

#include <map>
#include <optional>
#include <set>

#include "closure.hpp"
#include "substitution.hpp"

namespace invlim {

// === germ map ===============================================================

struct GermMap {
    int n = 0;                  // alphabet size; germs are {-n..-1, 1..n}
    std::map<int, int> targets; // total on all 2n germs

    int at(int germ) const {
        auto it = targets.find(germ);
        if (it == targets.end()) throw InternalError("GermMap: unknown germ");
        return it->second;
    }
};

inline GermMap germ_map(const Substitution& s) {
    if (!s.square()) throw InputError("germ_map: substitution must be square");
    GermMap g;
    g.n = s.domain();
    for (int i = 1; i <= g.n; ++i) {
        g.targets[i] = s.image(i).front();
        g.targets[-i] = bar(s.image(i)).front();
    }
    return g;
}

/* (f after g)(x) = f(g(x)); both maps on the same germ set. */
inline GermMap compose(const GermMap& f, const GermMap& g) {
    if (f.n != g.n) throw InputError("GermMap compose: size mismatch");
    GermMap out;
    out.n = f.n;
    for (const auto& [germ, mid] : g.targets) out.targets[germ] = f.at(mid);
    return out;
}

inline GermMap power(const GermMap& g, int k) {
    if (k < 1) throw InputError("GermMap power: exponent must be >= 1");
    GermMap out = g;
    for (int i = 1; i < k; ++i) out = compose(g, out);
    return out;
}

// === eventual range =========================================================

/* R = f_*^{2n}(E), which equals the intersection of all forward images. */
inline std::set<int> eventual_range(const Substitution& s) {
    GermMap g = germ_map(s);
    std::set<int> cur;
    for (int i = 1; i <= g.n; ++i) {
        cur.insert(i);
        cur.insert(-i);
    }
    for (int step = 0; step < 2 * g.n; ++step) {
        std::set<int> next;
        for (int germ : cur) next.insert(g.at(germ));
        cur = std::move(next);
    }
    return cur;
}

// === folds ==================================================================

struct FoldWitness {
    int i = 0;        // start letter a_i
    int k = 0;        // expansion exponent: the fold sits inside chi^k(a_i)
    int position = 0; // 0-based index of the first letter of the adjacent pair
};

/*
 * A map folds at the wedge point iff some expansion chi^k(a_i) contains a
 * letter adjacent to its own bar.  Detection runs on the finite order-2
 * closure; the witness is then reconstructed by re-expanding up to the
 * closure depth of the first fold pair (fold pairs are bar-symmetric, so a
 * pair seen from a barred start also occurs from the unbarred one).
 */
inline std::optional<FoldWitness> folds_at_b(const Substitution& s) {
    std::map<Word, int> closure = subword_closure_depths(s, 2);
    int depth_bound = -1;
    for (const auto& [w, d] : closure)
        if (w[0] == -w[1] && (depth_bound < 0 || d < depth_bound)) depth_bound = d;
    if (depth_bound < 0) return std::nullopt;

    for (int i = 1; i <= s.domain(); ++i) {
        Word w = {i};
        for (int k = 1; k <= depth_bound; ++k) {
            w = apply_word(s, w);
            for (size_t p = 0; p + 1 < w.size(); ++p)
                if (w[p] == -w[p + 1]) return FoldWitness{i, k, static_cast<int>(p)};
        }
    }
    throw InternalError("folds_at_b: closure reported a fold but re-expansion found none");
}

// === classification predicates ==============================================

inline bool is_distinguished(const Substitution& s) {
    return folds_at_b(s).has_value() || eventual_range(s).size() != 2;
}

inline bool is_orientation_preserving(const Substitution& s) {
    for (int i = 1; i <= s.domain(); ++i)
        for (Letter a : s.image(i))
            if (a < 0) return false;
    return true;
}

/*
 * Undistinguished wedge point with an orientation-preserving square: the
 * subclass of undistinguished maps whose boundary dynamics still admit a
 * known decision route.  Undistinguished maps outside it do not.
 */
inline bool is_undistinguished_orientable(const Substitution& s) {
    if (!s.square())
        throw InputError("is_undistinguished_orientable: substitution must be square");
    return is_orientation_preserving(power(s, 2)) && !is_distinguished(s);
}

} // namespace invlim
