/*
 * closure.hpp — finite subword closures of substitution expansions.
 *
 * The order-k subword closure of a substitution is the set of all length-k
 * words occurring as subwords of some iterated image of a start letter
 * (for k = 2, barred start letters are seeded too whenever any image
 * contains a barred letter).  Computed as a monotone fixpoint: seed with
 * windows of the images, then repeatedly window the images of current
 * members until stable.  Depth bookkeeping records the first expansion
 * level at which each word occurs; fold-witness reconstruction uses it to
 * bound its re-expansion search.
 *
 * Derivation rules (complete for k in {2,3} because a length-k window of
 * the image of a word is covered by the image of a subword of length <= k,
 * and the middle letters of a straddling window come from whole images):
 *   - letter x: every letter of chi(x); every k-window (and 2-window when
 *     k = 3) of chi(x).
 *   - pair (x,y): the windows of chi(x)chi(y) that straddle the boundary.
 *   - triple (x,y,z), k = 3 only: when |chi(y)| = 1, the window
 *     (last of chi(x), chi(y), first of chi(z)).
 */
#pragma once

#include <deque>
#include <map>
#include <set>
#include <vector>

#include "substitution.hpp"

namespace invlim {

// === windows ===============================================================

inline std::vector<Word> windows(const Word& w, int k) {
    std::vector<Word> out;
    if (static_cast<int>(w.size()) < k) return out;
    for (size_t p = 0; p + k <= w.size(); ++p)
        out.emplace_back(w.begin() + p, w.begin() + p + k);
    return out;
}

// === closure with depth bookkeeping ========================================

/* First expansion level (>= 1) at which each length-`order` word occurs. */
inline std::map<Word, int> subword_closure_depths(const Substitution& s, int order) {
    if (!s.square()) throw InputError("subword_closure: substitution must be square");
    if (order != 2 && order != 3) throw InputError("subword_closure: order must be 2 or 3");

    const int n = s.domain();
    bool bars_present = false;
    for (int i = 1; i <= n; ++i)
        for (Letter a : s.image(i))
            if (a < 0) bars_present = true;

    std::map<Letter, int> letter_depth; // first level at which a letter occurs
    std::map<Word, int> pair_depth;     // length-2 members (auxiliary when order=3)
    std::map<Word, int> triple_depth;   // length-3 members (order=3 only)

    struct Item {
        int kind; // 0 letter, 1 pair, 2 triple
        Letter x;
        Word w;
        int depth;
    };
    std::deque<Item> queue;

    auto push_letter = [&](Letter a, int d) {
        if (letter_depth.emplace(a, d).second) queue.push_back({0, a, {}, d});
    };
    auto push_word = [&](const Word& w, int d) {
        if (w.size() == 2) {
            if (pair_depth.emplace(w, d).second) queue.push_back({1, 0, w, d});
        } else {
            if (triple_depth.emplace(w, d).second) queue.push_back({2, 0, w, d});
        }
    };

    // start letters at level 0; their image windows enter at level 1
    for (int i = 1; i <= n; ++i) {
        push_letter(i, 0);
        if (order == 2 && bars_present) push_letter(-i, 0);
    }

    while (!queue.empty()) {
        Item it = queue.front();
        queue.pop_front();
        int d = it.depth + 1;
        if (it.kind == 0) {
            Word u = s.image_of(it.x);
            for (Letter a : u) push_letter(a, d);
            for (const Word& w : windows(u, order)) push_word(w, d);
            if (order == 3)
                for (const Word& w : windows(u, 2)) push_word(w, d);
        } else if (it.kind == 1) {
            Word u = s.image_of(it.w[0]);
            Word v = s.image_of(it.w[1]);
            if (order == 2) {
                push_word(Word{u.back(), v.front()}, d);
            } else {
                push_word(Word{u.back(), v.front()}, d);
                if (u.size() >= 2) push_word(Word{u[u.size() - 2], u.back(), v.front()}, d);
                if (v.size() >= 2) push_word(Word{u.back(), v[0], v[1]}, d);
            }
        } else {
            Word v = s.image_of(it.w[1]);
            if (v.size() == 1) {
                Word u = s.image_of(it.w[0]);
                Word z = s.image_of(it.w[2]);
                push_word(Word{u.back(), v[0], z.front()}, d);
            }
        }
    }

    return order == 2 ? pair_depth : triple_depth;
}

inline std::set<Word> subword_closure(const Substitution& s, int order) {
    std::set<Word> out;
    for (const auto& [w, d] : subword_closure_depths(s, order)) out.insert(w);
    return out;
}

} // namespace invlim
