/*
 * weak_equivalence.hpp — periodic weak-equivalence certificates between
 * bar-symmetric substitutions.
 *
 * A certificate (sigma, tau, n_exp, m_exp) witnesses chi ~ psi through the
 * commuting identities sigma(tau(.)) = chi^n_exp and tau(sigma(.)) =
 * psi^m_exp, checked word-by-word.  Verification is exact and independent
 * of discovery: an abelianization identity as fast pre-filter, then full
 * word equality of both compositions.
 *
 * The search walks cells (n_exp + m_exp) ascending, n_exp ascending inside
 * a sum.  Before parsing it prunes cells that are arithmetically hopeless:
 * equal alphabet sizes force det(A_chi)^n = det(A_psi)^m, and in general
 * S·T and T·S share their nonzero spectrum, so provably disjoint dominant
 * eigenvalue intervals kill a cell (interval refinement is capped; an
 * overlap just means "search on", keeping the prune sound).  Inside a cell
 * it parses chi^n(a_i) as concatenations of unknown sigma-images selected
 * by unknown tau-letters (phase A), then tokenizes psi^m(c_j) over the now
 * fixed tau dictionary for any sigma-image still unbound (phase B, with
 * memoized failure states).  All solutions of the first nonempty cell are
 * collected and reduced under the total order
 *   (n_exp + m_exp, n_exp, total image length, flattened tau, flattened
 *    sigma)
 * so the returned certificate is deterministic regardless of search or
 * scheduling order.  Absence within bounds is not a proof of inequivalence.
 */
#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "algebraic.hpp"
#include "substitution.hpp"

namespace invlim {

// === certificate type =======================================================

struct WeakEquivCertificate {
    Substitution sigma; // psi's alphabet -> words over chi's alphabet
    Substitution tau;   // chi's alphabet -> words over psi's alphabet
    int n_exp;          // sigma(tau(.)) = chi^n_exp
    int m_exp;          // tau(sigma(.)) = psi^m_exp
};

struct SearchBounds {
    int max_n = 4;
    int max_m = 4;
    int max_image_len = 64;
};

// === certificate order ======================================================

namespace detail {

/* Image lengths first, then the concatenated letters. */
inline std::vector<int> flatten_images(const Substitution& s) {
    std::vector<int> key;
    for (int i = 1; i <= s.domain(); ++i) key.push_back(static_cast<int>(s.image(i).size()));
    for (int i = 1; i <= s.domain(); ++i)
        for (Letter a : s.image(i)) key.push_back(a);
    return key;
}

inline int total_image_length(const Substitution& s) {
    int t = 0;
    for (int i = 1; i <= s.domain(); ++i) t += static_cast<int>(s.image(i).size());
    return t;
}

} // namespace detail

/* True when a precedes b in the deterministic certificate order. */
inline bool certificate_less(const WeakEquivCertificate& a, const WeakEquivCertificate& b) {
    auto key = [](const WeakEquivCertificate& c) {
        std::vector<int> k = {c.n_exp + c.m_exp, c.n_exp,
                              detail::total_image_length(c.sigma) +
                                  detail::total_image_length(c.tau)};
        std::vector<int> t = detail::flatten_images(c.tau);
        std::vector<int> s = detail::flatten_images(c.sigma);
        k.insert(k.end(), t.begin(), t.end());
        k.insert(k.end(), s.begin(), s.end());
        return k;
    };
    return key(a) < key(b);
}

// === verification ===========================================================

inline bool verify_certificate(const Substitution& chi, const Substitution& psi,
                               const WeakEquivCertificate& c) {
    if (!chi.square() || !psi.square())
        throw InputError("verify_certificate: substitutions must be square");
    const int n = chi.domain();
    const int m = psi.domain();
    if (c.sigma.domain() != m || c.sigma.codomain() != n || c.tau.domain() != n ||
        c.tau.codomain() != m)
        throw InputError("verify_certificate: certificate alphabets do not match the pair");
    if (c.n_exp < 1 || c.m_exp < 1)
        throw InputError("verify_certificate: exponents must be positive");

    // abelianized identities as a fast pre-filter
    IntMatrix S = abelianization(c.sigma);
    IntMatrix T = abelianization(c.tau);
    if (!(mul(S, T) == pow(abelianization(chi), c.n_exp))) return false;
    if (!(mul(T, S) == pow(abelianization(psi), c.m_exp))) return false;

    // exact word-by-word equality of both compositions
    if (!(compose(c.sigma, c.tau) == power(chi, c.n_exp))) return false;
    if (!(compose(c.tau, c.sigma) == power(psi, c.m_exp))) return false;
    return true;
}

// === search =================================================================

namespace detail {

/* Exhaustive parser for one (n_exp, m_exp) cell; collects every solution. */
struct CellSearcher {
    const Substitution& chi;
    const Substitution& psi;
    int n_exp, m_exp, max_len;
    std::vector<Word> X; // chi^n_exp images, indexed 0..n-1
    std::vector<Word> Y; // psi^m_exp images, indexed 0..m-1
    std::vector<std::optional<Word>> sigma_img; // 1-based
    std::vector<Word> tau_img;                  // filled in order, 0-based
    std::vector<WeakEquivCertificate> found;

    CellSearcher(const Substitution& chi_, const Substitution& psi_, int ne, int me, int cap)
        : chi(chi_), psi(psi_), n_exp(ne), m_exp(me), max_len(cap) {
        for (int i = 1; i <= chi.domain(); ++i) {
            Word w = {i};
            for (int k = 0; k < n_exp; ++k) w = apply_word(chi, w);
            X.push_back(std::move(w));
        }
        for (int j = 1; j <= psi.domain(); ++j) {
            Word w = {j};
            for (int k = 0; k < m_exp; ++k) w = apply_word(psi, w);
            Y.push_back(std::move(w));
        }
        sigma_img.assign(static_cast<size_t>(psi.domain()) + 1, std::nullopt);
    }

    Word oriented(const Word& stored, Letter t) const { return t > 0 ? stored : bar(stored); }

    bool matches_at(const Word& big, size_t pos, const Word& piece) const {
        if (pos + piece.size() > big.size()) return false;
        for (size_t k = 0; k < piece.size(); ++k)
            if (big[pos + k] != piece[k]) return false;
        return true;
    }

    void run() { parse_tau(0, 0, {}); }

    // --- phase A: parse X_i into sigma-images chosen by tau letters ---
    void parse_tau(int i, size_t pos, Word tau_word) {
        const int n = chi.domain();
        if (i == n) {
            finish_sigma(1);
            return;
        }
        const Word& Xi = X[static_cast<size_t>(i)];
        if (pos == Xi.size()) {
            if (tau_word.empty()) return;
            tau_img.push_back(tau_word);
            parse_tau(i + 1, 0, {});
            tau_img.pop_back();
            return;
        }
        if (static_cast<int>(tau_word.size()) >= max_len) return;
        for (int j = 1; j <= psi.domain(); ++j) {
            for (Letter t : {j, -j}) {
                if (sigma_img[static_cast<size_t>(j)]) {
                    Word w = oriented(*sigma_img[static_cast<size_t>(j)], t);
                    if (!matches_at(Xi, pos, w)) continue;
                    tau_word.push_back(t);
                    parse_tau(i, pos + w.size(), tau_word);
                    tau_word.pop_back();
                } else {
                    size_t remaining = Xi.size() - pos;
                    size_t cap = std::min<size_t>(remaining, static_cast<size_t>(max_len));
                    for (size_t len = 1; len <= cap; ++len) {
                        Word piece(Xi.begin() + static_cast<long>(pos),
                                   Xi.begin() + static_cast<long>(pos + len));
                        sigma_img[static_cast<size_t>(j)] = t > 0 ? piece : bar(piece);
                        tau_word.push_back(t);
                        parse_tau(i, pos + len, tau_word);
                        tau_word.pop_back();
                        sigma_img[static_cast<size_t>(j)] = std::nullopt;
                    }
                }
            }
        }
    }

    // --- phase B: bind leftover sigma-images by tokenizing Y_j over tau ---
    void finish_sigma(int j) {
        const int m = psi.domain();
        if (j > m) {
            emit();
            return;
        }
        const Word& Yj = Y[static_cast<size_t>(j - 1)];
        if (sigma_img[static_cast<size_t>(j)]) {
            // already pinned in phase A: check tau(sigma(c_j)) = Y_j
            Word img;
            for (Letter t : *sigma_img[static_cast<size_t>(j)]) {
                Word piece = oriented(tau_img[static_cast<size_t>(std::abs(t) - 1)], t);
                img.insert(img.end(), piece.begin(), piece.end());
            }
            if (img == Yj) finish_sigma(j + 1);
            return;
        }
        std::set<std::pair<size_t, int>> dead; // (pos, tokens used) with no solution
        Word s_word;
        tokenize(j, Yj, 0, s_word, dead);
    }

    void tokenize(int j, const Word& Yj, size_t pos, Word& s_word,
                  std::set<std::pair<size_t, int>>& dead) {
        if (pos == Yj.size()) {
            if (s_word.empty()) return;
            sigma_img[static_cast<size_t>(j)] = s_word;
            finish_sigma(j + 1);
            sigma_img[static_cast<size_t>(j)] = std::nullopt;
            return;
        }
        if (static_cast<int>(s_word.size()) >= max_len) return;
        auto key = std::make_pair(pos, static_cast<int>(s_word.size()));
        if (dead.count(key)) return;
        size_t found_before = found.size();
        for (int i = 1; i <= chi.domain(); ++i) {
            for (Letter t : {i, -i}) {
                Word piece = oriented(tau_img[static_cast<size_t>(i - 1)], t);
                if (!matches_at(Yj, pos, piece)) continue;
                s_word.push_back(t);
                tokenize(j, Yj, pos + piece.size(), s_word, dead);
                s_word.pop_back();
            }
        }
        // no completion of this prefix shape ever succeeds: remember that
        if (found.size() == found_before) dead.insert(key);
    }

    void emit() {
        std::vector<Word> s_images;
        for (int j = 1; j <= psi.domain(); ++j) s_images.push_back(*sigma_img[static_cast<size_t>(j)]);
        found.push_back(WeakEquivCertificate{Substitution(chi.domain(), s_images),
                                             Substitution(psi.domain(), tau_img), n_exp, m_exp});
    }
};

/* Sound cell prune: S·T and T·S share nonzero spectra, so the dominant
 * eigenvalue powers must agree; provably disjoint intervals say "skip". */
inline bool spectral_prune(const std::optional<AlgebraicReal>& rho_chi,
                           const std::optional<AlgebraicReal>& rho_psi, int ne, int me) {
    if (!rho_chi || !rho_psi) return false;
    AlgebraicReal a = *rho_chi, b = *rho_psi;
    for (int round = 0; round < 4; ++round) {
        if (disjoint(ipow(a.iv, ne), ipow(b.iv, me))) return true;
        a = refine_to(a, a.iv.width() / 16);
        b = refine_to(b, b.iv.width() / 16);
    }
    return false;
}

} // namespace detail

inline std::optional<WeakEquivCertificate> search_certificate(const Substitution& chi,
                                                              const Substitution& psi,
                                                              const SearchBounds& bounds = {}) {
    if (!chi.square() || !psi.square())
        throw InputError("search_certificate: substitutions must be square");
    if (bounds.max_n < 1 || bounds.max_m < 1 || bounds.max_image_len < 1)
        throw InputError("search_certificate: bounds must be positive");

    IntMatrix A = abelianization(chi);
    IntMatrix B = abelianization(psi);
    const bool same_size = chi.domain() == psi.domain();
    const Int detA = same_size ? det(A) : Int(0);
    const Int detB = same_size ? det(B) : Int(0);
    std::optional<AlgebraicReal> rho_chi = dominant_real_root(A);
    std::optional<AlgebraicReal> rho_psi = dominant_real_root(B);
    if (rho_chi) rho_chi = refine_to(*rho_chi, pow2(-64));
    if (rho_psi) rho_psi = refine_to(*rho_psi, pow2(-64));

    for (int sum = 2; sum <= bounds.max_n + bounds.max_m; ++sum) {
        std::vector<WeakEquivCertificate> cell;
        for (int ne = std::max(1, sum - bounds.max_m); ne <= std::min(bounds.max_n, sum - 1);
             ++ne) {
            int me = sum - ne;
            if (same_size && pow_int(detA, static_cast<unsigned>(ne)) !=
                                 pow_int(detB, static_cast<unsigned>(me)))
                continue;
            if (detail::spectral_prune(rho_chi, rho_psi, ne, me)) continue;
            detail::CellSearcher searcher(chi, psi, ne, me, bounds.max_image_len);
            searcher.run();
            cell.insert(cell.end(), searcher.found.begin(), searcher.found.end());
        }
        if (!cell.empty()) {
            const WeakEquivCertificate* best = &cell.front();
            for (const WeakEquivCertificate& c : cell)
                if (certificate_less(c, *best)) best = &c;
            if (!verify_certificate(chi, psi, *best))
                throw InternalError("search_certificate: found certificate failed verification");
            return *best;
        }
    }
    return std::nullopt;
}

} // namespace invlim
