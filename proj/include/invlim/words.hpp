/*
 * words.hpp — letters and words over a bar-symmetric alphabet.
 *
 * A letter is a nonzero signed integer: +i stands for a_i, -i for its
 * reversed ("barred") copy.  bar() flips orientation; on words it is the
 * anti-homomorphism bar(b_1 ... b_k) = bar(b_k) ... bar(b_1).  Words are
 * plain contiguous vectors; the empty word is representable internally
 * (window bookkeeping needs it) but is rejected wherever the contract
 * demands nonempty images.
 */
#pragma once

#include <string>
#include <vector>

#include "errors.hpp"

namespace invlim {

using Letter = int;
using Word = std::vector<Letter>;

inline Letter bar(Letter a) { return -a; }

inline Word bar(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
    return r;
}

/* Letter index must be nonzero with |a| <= alphabet. */
inline void validate_letter(Letter a, int alphabet, const char* context) {
    if (a == 0 || a < -alphabet || a > alphabet)
        throw InputError(std::string(context) + ": letter " + std::to_string(a) +
                         " outside alphabet of size " + std::to_string(alphabet));
}

/* "1 2 -2" — whitespace-joined signed letters, the file-format rendering. */
inline std::string format_word(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

/* Alphabetic display name for an unbarred letter: a, b, ..., z, a27, ... */
inline std::string letter_name(int i) {
    if (i >= 1 && i <= 26) return std::string(1, static_cast<char>('a' + i - 1));
    return "a" + std::to_string(i);
}

} // namespace invlim
