/*
 * substitution.hpp — bar-symmetric substitutions on signed-letter words.
 *
 * A substitution stores only the images of the unbarred letters; the barred
 * images are derived on demand as image(-i) = bar(image(+i)), which makes
 * the bar-compatibility constraint structurally unforgeable.  Domain and
 * codomain alphabet sizes may differ (certificate legs are rectangular);
 * "square" substitutions are the dynamical objects.
 *
 * Operations: image lookup, apply to a word, composition, powers,
 * identity, surjectivity check, abelianization matrix.
 */
#pragma once

#include <vector>

#include "matrix.hpp"
#include "words.hpp"

namespace invlim {

class Substitution {
public:
    /* images[i] is the image of letter +(i+1); letters range over the
     * codomain alphabet.  Every image must be nonempty. */
    Substitution(int codomain, std::vector<Word> images)
        : codomain_(codomain), images_(std::move(images)) {
        if (codomain_ <= 0) throw InputError("Substitution: codomain must be positive");
        if (images_.empty()) throw InputError("Substitution: empty alphabet");
        for (size_t i = 0; i < images_.size(); ++i) {
            if (images_[i].empty())
                throw InputError("Substitution: empty image for letter " + std::to_string(i + 1));
            for (Letter a : images_[i]) validate_letter(a, codomain_, "Substitution image");
        }
    }

    static Substitution identity(int n) {
        std::vector<Word> im(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = Word{i + 1};
        return Substitution(n, std::move(im));
    }

    int domain() const { return static_cast<int>(images_.size()); }
    int codomain() const { return codomain_; }
    bool square() const { return domain() == codomain_; }

    /* Image of the unbarred letter i (1-based). */
    const Word& image(int i) const {
        if (i < 1 || i > domain()) throw InputError("Substitution::image: letter out of range");
        return images_[static_cast<size_t>(i - 1)];
    }

    /* Image of a signed letter; bar applied for negatives. */
    Word image_of(Letter a) const {
        validate_letter(a, domain(), "Substitution::image_of");
        return a > 0 ? image(a) : bar(image(-a));
    }

    /* Every codomain letter occurs, up to bar, in some image. */
    bool surjective() const {
        std::vector<char> seen(static_cast<size_t>(codomain_) + 1, 0);
        for (const Word& w : images_)
            for (Letter a : w) seen[static_cast<size_t>(a > 0 ? a : -a)] = 1;
        for (int j = 1; j <= codomain_; ++j)
            if (!seen[static_cast<size_t>(j)]) return false;
        return true;
    }

    const std::vector<Word>& images() const { return images_; }

    bool operator==(const Substitution& o) const {
        return codomain_ == o.codomain_ && images_ == o.images_;
    }

private:
    int codomain_;
    std::vector<Word> images_;
};

/* Homomorphic extension to words (empty input allowed internally). */
inline Word apply_word(const Substitution& s, const Word& w) {
    Word out;
    for (Letter a : w) {
        Word im = s.image_of(a);
        out.insert(out.end(), im.begin(), im.end());
    }
    return out;
}

/* compose(s, t) = s after t; requires codomain(t) = domain(s). */
inline Substitution compose(const Substitution& s, const Substitution& t) {
    if (t.codomain() != s.domain())
        throw InputError("compose: codomain of inner differs from domain of outer");
    std::vector<Word> im;
    im.reserve(static_cast<size_t>(t.domain()));
    for (int i = 1; i <= t.domain(); ++i) im.push_back(apply_word(s, t.image(i)));
    return Substitution(s.codomain(), std::move(im));
}

/* k-th compositional power, k >= 1; requires a square substitution. */
inline Substitution power(const Substitution& s, int k) {
    if (!s.square()) throw InputError("power: substitution not square");
    if (k < 1) throw InputError("power: exponent must be positive");
    Substitution r = s;
    for (int i = 1; i < k; ++i) r = compose(s, r);
    return r;
}

/*
 * Abelianization: entry (j, i) counts occurrences of letter j — barred or
 * not — in the image of letter a_i.  Columns index domain letters, so
 * abelianization(compose(s, t)) = abelianization(s) * abelianization(t).
 */
inline IntMatrix abelianization(const Substitution& s) {
    IntMatrix m(s.codomain(), s.domain());
    for (int i = 1; i <= s.domain(); ++i)
        for (Letter a : s.image(i)) m.at((a > 0 ? a : -a) - 1, i - 1) += 1;
    return m;
}

} // namespace invlim
