/*
 * collar.hpp — collared (order-3) substitutions, the eigenvalue-preserving
 * intertwining they carry, and finite inflation patches for the induced
 * one-dimensional tilings.
 *
 * The collared alphabet is the order-3 subword closure of an unbarred
 * substitution: every letter triple visible in some power image.  The
 * collared substitution slides a window across the image of the middle
 * letter, flanked by the last letter of the left neighbor's image and the
 * first letter of the right neighbor's: triple (a b c) with chi(b) =
 * b_1..b_s maps to the s windows of b_0 b_1 .. b_s b_{s+1}, b_0 = last of
 * chi(a), b_{s+1} = first of chi(c).  The middle-letter incidence matrix P
 * intertwines the abelianizations, P * A_tilde = A * P, has full rank n,
 * and therefore carries the dominant eigenvalue across unchanged — which
 * collar_preserves_eigenvalue re-derives exactly instead of assuming.
 *
 * Nondegeneracy (no power image collapses onto a single letter's powers)
 * is a separate bounded gate: callers of the tiling classifier require it,
 * but collar() itself does not, so degenerate-but-aperiodic systems can
 * still be collared and inspected.  Prototile lengths (left Perron
 * eigenvector entries) are numeric by design — classification never
 * depends on them; emit_patch refines until two exact solves at the ends
 * of the eigenvalue enclosure agree to the requested width and lays tiles
 * out by exact rational prefix sums, so abutment is structural.
 */
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "algebraic.hpp"
#include "closure.hpp"
#include "field_equality.hpp"
#include "substitution.hpp"

namespace invlim {

// === nondegeneracy gate ======================================================

namespace detail {

inline void require_unbarred_square(const Substitution& s, const char* who) {
    if (!s.square()) throw InputError(std::string(who) + ": substitution must be square");
    for (int i = 1; i <= s.domain(); ++i)
        for (Letter a : s.image(i))
            if (a < 0)
                throw InputError(std::string(who) +
                                 ": barred letters present (the tiling setting is unbarred)");
}

} // namespace detail

/*
 * Bounded degeneracy scan: false when some chi^k(a_i), k <= 2n, consists
 * of the letter a_i alone (a_i^t for t >= 1) — the letter-instantiated
 * form of "no chi^k(w) is a power of w".  True otherwise; acceptance is
 * bounded, rejection is evidence.
 */
inline bool check_nondegenerate(const Substitution& chi) {
    detail::require_unbarred_square(chi, "check_nondegenerate");
    const int n = chi.domain();
    for (int i = 1; i <= n; ++i) {
        Word w = {i};
        for (int k = 1; k <= 2 * n; ++k) {
            w = apply_word(chi, w);
            bool pure = true;
            for (Letter a : w)
                if (a != i) {
                    pure = false;
                    break;
                }
            if (pure) return false;
        }
    }
    return true;
}

// === collared systems ========================================================

struct CollaredSystem {
    Substitution base;
    std::vector<Word> tiles;     // sorted letter triples; tile t is letter t+1 of chi_tilde
    Substitution chi_tilde;      // over the tile alphabet
    IntMatrix projection;        // n x |tiles|; (j, t) = 1 iff tile t has middle letter j+1
    std::vector<int> transient;  // 1-based tile letters never produced by any image
};

inline CollaredSystem collar(const Substitution& chi) {
    detail::require_unbarred_square(chi, "collar");
    const int n = chi.domain();
    std::set<Word> closure = subword_closure(chi, 3);
    std::vector<Word> tiles(closure.begin(), closure.end());
    std::map<Word, int> index; // tile word -> 1-based tilde letter
    for (size_t t = 0; t < tiles.size(); ++t) index[tiles[t]] = static_cast<int>(t) + 1;

    std::vector<Word> images;
    for (const Word& tr : tiles) {
        const Word& left = chi.image(tr[0]);
        const Word& mid = chi.image(tr[1]);
        const Word& right = chi.image(tr[2]);
        Word b;
        b.push_back(left.back());
        b.insert(b.end(), mid.begin(), mid.end());
        b.push_back(right.front());
        Word img;
        for (size_t r = 0; r + 2 < b.size(); ++r) {
            Word window = {b[r], b[r + 1], b[r + 2]};
            auto it = index.find(window);
            if (it == index.end())
                throw InternalError("collar: window triple escapes the subword closure");
            img.push_back(it->second);
        }
        images.push_back(std::move(img));
    }
    Substitution chi_tilde(static_cast<int>(tiles.size()), images);

    IntMatrix P(n, static_cast<int>(tiles.size()));
    for (size_t t = 0; t < tiles.size(); ++t) P.at(tiles[t][1] - 1, static_cast<int>(t)) = 1;

    std::vector<char> produced(tiles.size() + 1, 0);
    for (const Word& img : images)
        for (Letter a : img) produced[static_cast<size_t>(a)] = 1;
    std::vector<int> transient;
    for (size_t t = 1; t <= tiles.size(); ++t)
        if (!produced[t]) transient.push_back(static_cast<int>(t));

    return CollaredSystem{chi, std::move(tiles), std::move(chi_tilde), std::move(P),
                          std::move(transient)};
}

/*
 * The collared and base dominant eigenvalues coincide exactly.  Both sides
 * are computed independently (char poly, factorization, isolation) and
 * compared as algebraic numbers; the intertwining is not assumed.
 */
inline bool collar_preserves_eigenvalue(const CollaredSystem& c) {
    IntMatrix A = abelianization(c.base);
    IntMatrix At = abelianization(c.chi_tilde);
    if (!is_aperiodic(A))
        throw InputError("collar_preserves_eigenvalue: base abelianization is not aperiodic");
    if (!is_aperiodic(At))
        throw InputError("collar_preserves_eigenvalue: collared abelianization is not aperiodic");
    AlgebraicReal a = perron_root(A);
    AlgebraicReal b = perron_root(At);
    return algebraic_equal(a, b);
}

// === inflation patches =======================================================

struct PatchTile {
    int prototile; // 1-based letter
    Rat left;      // exact prefix-sum endpoint
    Rat length;    // numeric approximant of the left-eigenvector entry
};

struct TilingPatch {
    std::vector<PatchTile> tiles;
};

namespace detail {

/*
 * Left-eigenvector approximant at a rational shift q close to the Perron
 * root: pin x_seed = 1 and solve n-1 of the n equations (A^T - q I) x = 0
 * exactly over Q.  Returns absent when the dropped-row system is singular.
 */
inline std::optional<std::vector<Rat>> left_eigen_at(const IntMatrix& A, int seed, const Rat& q,
                                                     int drop_row) {
    const int n = A.rows;
    std::vector<std::vector<Rat>> M;
    std::vector<Rat> rhs;
    for (int r = 0; r < n; ++r) {
        if (r == drop_row) continue;
        std::vector<Rat> row;
        Rat b = 0;
        for (int j = 0; j < n; ++j) {
            // (A^T - qI)(r, j) = A(j, r) - q [r == j]
            Rat coeff = Rat(A.at(j, r)) - (r == j ? q : Rat(0));
            if (j == seed)
                b -= coeff; // x_seed = 1 moves to the right-hand side
            else
                row.push_back(coeff);
        }
        M.push_back(std::move(row));
        rhs.push_back(b);
    }
    auto sol = solve_linear(std::move(M), std::move(rhs));
    if (!sol) return std::nullopt;
    std::vector<Rat> x(static_cast<size_t>(n));
    int k = 0;
    for (int j = 0; j < n; ++j) x[static_cast<size_t>(j)] = (j == seed) ? Rat(1) : (*sol)[static_cast<size_t>(k++)];
    return x;
}

} // namespace detail

inline TilingPatch emit_patch(const Substitution& chi, int seed_letter, int inflation_steps,
                              int precision_bits = 64) {
    detail::require_unbarred_square(chi, "emit_patch");
    if (seed_letter < 1 || seed_letter > chi.domain())
        throw InputError("emit_patch: seed letter out of range");
    if (inflation_steps < 0) throw InputError("emit_patch: negative inflation step count");
    if (precision_bits < 1) throw InputError("emit_patch: precision must be positive");
    IntMatrix A = abelianization(chi);
    if (!is_aperiodic(A)) throw InputError("emit_patch: abelianization is not aperiodic");

    Word layout = {seed_letter};
    for (int k = 0; k < inflation_steps; ++k) {
        layout = apply_word(chi, layout);
        if (layout.size() > 100000) throw CapError("emit_patch: patch exceeds desk-scale budget");
    }

    const int n = chi.domain();
    const int seed = seed_letter - 1;
    std::vector<Rat> lengths;
    if (n == 1) {
        lengths = {Rat(1)};
    } else {
        AlgebraicReal lambda = refine_to(perron_root(A), pow2(-precision_bits));
        Rat target = pow2(-precision_bits - 8);
        bool settled = false;
        for (int round = 0; round < 64 && !settled; ++round) {
            for (int drop = 0; drop < n && !settled; ++drop) {
                auto xlo = detail::left_eigen_at(A, seed, lambda.iv.lo, drop);
                auto xhi = detail::left_eigen_at(A, seed, lambda.iv.hi, drop);
                if (!xlo || !xhi) continue;
                Rat worst = 0;
                for (int j = 0; j < n; ++j) {
                    Rat d = (*xlo)[static_cast<size_t>(j)] - (*xhi)[static_cast<size_t>(j)];
                    if (d < 0) d = -d;
                    if (d > worst) worst = d;
                }
                if (worst > target) break; // refine the eigenvalue and retry
                lengths.assign(static_cast<size_t>(n), Rat(0));
                for (int j = 0; j < n; ++j)
                    lengths[static_cast<size_t>(j)] =
                        ((*xlo)[static_cast<size_t>(j)] + (*xhi)[static_cast<size_t>(j)]) / 2;
                settled = true;
            }
            if (!settled) lambda = refine_to(lambda, lambda.iv.width() / 256);
        }
        if (!settled)
            throw InconclusiveError(
                "emit_patch: requested precision unattainable at the refinement cap");
    }

    TilingPatch patch;
    Rat cursor = 0;
    for (Letter a : layout) {
        const Rat& len = lengths[static_cast<size_t>(a - 1)];
        patch.tiles.push_back(PatchTile{a, cursor, len});
        cursor += len;
    }
    return patch;
}

} // namespace invlim
