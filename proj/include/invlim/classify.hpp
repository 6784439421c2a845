/*
 * classify.hpp — the soundness-gated verdict pipeline for pairs of
 * inverse-limit presentations, plus the kneading-word and tiling front
 * ends.
 *
 * A Verdict is Homeomorphic only when it ships an exactly re-verified
 * weak-equivalence certificate (sufficiency route), and NotHomeomorphic
 * only on the dominant-eigenvalue field obstruction (necessity route) —
 * bounded search failure is never treated as refutation, because the
 * search is bounded.  Everything else is Unknown, with a diagnostics
 * trail: wedge-point boundary data, the abelianized (matrix) search
 * outcome, and the bounds in force.  Every hypothesis check the pipeline
 * performs lands in `notes` so a reader can audit what was machine-checked
 * before any route was cited; `provenance` names the routes that produced
 * the verdict.
 *
 * The tiling front end has no sufficiency route at all: classify_tilings
 * never returns Homeomorphic, and a found collared matrix certificate is
 * reported as consistent-but-not-conclusive evidence.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "collar.hpp"
#include "field_equality.hpp"
#include "germs.hpp"
#include "matrix_equivalence.hpp"
#include "tent.hpp"
#include "weak_equivalence.hpp"

namespace invlim {

// === verdicts ================================================================

enum class VerdictStatus { Homeomorphic, NotHomeomorphic, Unknown };

inline const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Homeomorphic: return "Homeomorphic";
        case VerdictStatus::NotHomeomorphic: return "NotHomeomorphic";
        case VerdictStatus::Unknown: return "Unknown";
    }
    throw InternalError("to_string: unknown verdict status");
}

struct Verdict {
    VerdictStatus status = VerdictStatus::Unknown;
    std::vector<std::string> provenance;  // routes used, by behavioral name
    std::optional<WeakEquivCertificate> certificate;          // Homeomorphic evidence
    std::optional<MatrixWeakEquivCertificate> matrix_certificate; // diagnostic only
    std::string obstruction;              // NotHomeomorphic evidence
    SearchBounds bounds;                  // bounds that were in force
    std::vector<std::string> notes;       // hypothesis-check audit trail, in order
};

namespace detail {

inline std::string bounds_string(const SearchBounds& b) {
    return "max_n=" + std::to_string(b.max_n) + ", max_m=" + std::to_string(b.max_m) +
           ", max_len=" + std::to_string(b.max_image_len);
}

inline std::string rat_vector_string(const std::vector<Rat>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + "]";
}

inline void require_classifiable(const Substitution& s, int which, const char* who) {
    std::string label = std::string(who) + ": input " + std::to_string(which);
    if (!s.square()) throw InputError(label + " must be square");
    if (!s.surjective())
        throw InputError(label + " must be surjective (every circle must be hit)");
}

/* Boundary diagnostics for one input, appended to the audit trail. */
inline void germ_notes(const Substitution& s, int which, std::vector<std::string>& notes) {
    std::string label = "input " + std::to_string(which);
    size_t r = eventual_range(s).size();
    bool fold = folds_at_b(s).has_value();
    std::string line = label + " wedge point: eventual range size " + std::to_string(r) +
                       (fold ? ", folds" : ", no fold");
    if (is_distinguished(s)) {
        line += " -> distinguished";
    } else if (is_undistinguished_orientable(s)) {
        line += " -> undistinguished with orientation-preserving square; the decision "
                "route for that class is not implemented";
    } else {
        line += " -> undistinguished with orientation-reversing square; no in-scope "
                "decision route exists for that class";
    }
    notes.push_back(std::move(line));
}

} // namespace detail

// === the core pipeline ======================================================

/*
 * Route order: (1) exact field obstruction when both abelianizations are
 * aperiodic — a NotEqual here refutes homeomorphism outright; (2) bounded
 * certificate search — a find is exactly verified and decides Homeomorphic;
 * (3) Unknown, carrying boundary diagnostics and the matrix-level search
 * outcome so the reader can see how close the bounded evidence came.
 */
inline Verdict classify(const Substitution& chi, const Substitution& psi,
                        const SearchBounds& bounds = {}) {
    detail::require_classifiable(chi, 1, "classify");
    detail::require_classifiable(psi, 2, "classify");

    Verdict v;
    v.bounds = bounds;

    IntMatrix A = abelianization(chi);
    IntMatrix B = abelianization(psi);
    bool ap1 = is_aperiodic(A);
    bool ap2 = is_aperiodic(B);
    v.notes.push_back(std::string("input 1 abelianization aperiodic: ") + (ap1 ? "yes" : "no"));
    v.notes.push_back(std::string("input 2 abelianization aperiodic: ") + (ap2 ? "yes" : "no"));

    if (ap1 && ap2) {
        AlgebraicReal alpha = perron_root(A);
        AlgebraicReal beta = perron_root(B);
        v.notes.push_back("input 1 dominant eigenvalue minimal polynomial: " +
                          poly_to_string(alpha.minpoly));
        v.notes.push_back("input 2 dominant eigenvalue minimal polynomial: " +
                          poly_to_string(beta.minpoly));
        FieldEqualityResult fe = field_equal(alpha, beta);
        if (fe.status == FieldStatus::NotEqual) {
            v.notes.push_back("eigenvalue fields differ (" + fe.obstruction +
                              "); homeomorphic limits force equal fields");
            v.status = VerdictStatus::NotHomeomorphic;
            v.obstruction = fe.obstruction;
            v.provenance.push_back("eigenvalue-field-obstruction");
            return v;
        }
        if (fe.status == FieldStatus::Equal)
            v.notes.push_back("eigenvalue fields agree, verified relation coefficients " +
                              detail::rat_vector_string(fe.certificate) +
                              " (necessary condition holds; not conclusive)");
        else
            v.notes.push_back("eigenvalue field comparison inconclusive at the height bound");
    } else {
        v.notes.push_back("field obstruction route unavailable without aperiodicity");
    }

    std::optional<WeakEquivCertificate> cert = search_certificate(chi, psi, bounds);
    if (cert) {
        v.notes.push_back("weak-equivalence certificate found and exactly verified: "
                          "exponents (n, m) = (" +
                          std::to_string(cert->n_exp) + ", " + std::to_string(cert->m_exp) + ")");
        v.status = VerdictStatus::Homeomorphic;
        v.certificate = std::move(cert);
        v.provenance.push_back("periodic-coincidence-certificate");
        return v;
    }
    v.notes.push_back("no weak-equivalence certificate within bounds (" +
                      detail::bounds_string(bounds) + ")");

    std::optional<MatrixWeakEquivCertificate> mc = matrix_search(A, B, bounds);
    if (mc) {
        v.notes.push_back("abelianized certificate exists at exponents (n, m) = (" +
                          std::to_string(mc->n_exp) + ", " + std::to_string(mc->m_exp) +
                          ") — necessary-condition evidence only");
        v.matrix_certificate = std::move(mc);
    } else {
        v.notes.push_back("no abelianized certificate within the exponent bounds: weak "
                          "equivalence at those exponents is ruled out exactly; larger "
                          "exponents remain undecided");
    }

    detail::germ_notes(chi, 1, v.notes);
    detail::germ_notes(psi, 2, v.notes);
    if (is_distinguished(chi) && is_distinguished(psi))
        v.notes.push_back("both wedge points are distinguished, so weak equivalence decides "
                          "this pair completely: Unknown reflects the search bounds only");

    v.status = VerdictStatus::Unknown;
    return v;
}

// === kneading front end =====================================================

/*
 * Builds both tent models, checks the boundary hypothesis that makes the
 * kneading route an if-and-only-if (tent wedge points are always
 * distinguished via eventual range size ≠ 2), and upgrades whichever
 * verdict the core pipeline reaches with the kneading route tag.
 */
inline Verdict classify_tent_pair(const std::string& k1, const std::string& k2,
                                  const SearchBounds& bounds = {}) {
    TentModel m1 = build_tent_model(k1);
    TentModel m2 = build_tent_model(k2);
    std::vector<std::string> tent_notes;
    for (int which = 1; which <= 2; ++which) {
        const TentModel& m = (which == 1) ? m1 : m2;
        size_t r = eventual_range(m.chi).size();
        if (r == 2)
            throw InternalError("classify_tent_pair: tent boundary has a two-germ eventual "
                                "range, contradicting the kneading theory");
        tent_notes.push_back("input " + std::to_string(which) + ": kneading " + m.kneading +
                             " (period " + std::to_string(m.period) +
                             "), eventual range size " + std::to_string(r) + " (distinguished)");
    }

    Verdict v = classify(m1.chi, m2.chi, bounds);
    v.notes.insert(v.notes.begin(), tent_notes.begin(), tent_notes.end());
    if (v.status != VerdictStatus::Unknown)
        v.provenance.push_back("kneading-boundary-equivalence");
    else
        v.notes.push_back("kneading route makes weak equivalence decisive for tent pairs: "
                          "Unknown reflects the search bounds only");
    return v;
}

// === tiling front end =======================================================

/*
 * Tilings have necessary conditions only: equal eigenvalue fields and weak
 * matrix equivalence of the collared systems.  A field mismatch refutes;
 * nothing in scope ever confirms, so the status is never Homeomorphic.
 */
inline Verdict classify_tilings(const Substitution& chi, const Substitution& psi,
                                const SearchBounds& bounds = {}) {
    if (!check_nondegenerate(chi))
        throw InputError("classify_tilings: input 1 is degenerate (a bounded expansion "
                         "collapses onto a single letter's powers)");
    if (!check_nondegenerate(psi))
        throw InputError("classify_tilings: input 2 is degenerate (a bounded expansion "
                         "collapses onto a single letter's powers)");
    IntMatrix A = abelianization(chi);
    IntMatrix B = abelianization(psi);
    if (!is_aperiodic(A))
        throw InputError("classify_tilings: input 1 abelianization is not aperiodic");
    if (!is_aperiodic(B))
        throw InputError("classify_tilings: input 2 abelianization is not aperiodic");

    Verdict v;
    v.bounds = bounds;

    CollaredSystem c1 = collar(chi);
    CollaredSystem c2 = collar(psi);
    for (int which = 1; which <= 2; ++which) {
        const CollaredSystem& c = (which == 1) ? c1 : c2;
        std::string label = "input " + std::to_string(which);
        v.notes.push_back(label + " collared alphabet size: " + std::to_string(c.tiles.size()) +
                          " (" + std::to_string(c.transient.size()) + " transient)");
        try {
            if (!collar_preserves_eigenvalue(c))
                throw InternalError("classify_tilings: collared dominant eigenvalue disagrees "
                                    "with the base eigenvalue");
            v.notes.push_back(label +
                              ": collared dominant eigenvalue equals the base eigenvalue "
                              "(verified exactly)");
        } catch (const InputError&) {
            v.notes.push_back(label + ": collared eigenvalue check unavailable (collared "
                                      "abelianization not aperiodic)");
        }
    }

    AlgebraicReal alpha = perron_root(A);
    AlgebraicReal beta = perron_root(B);
    v.notes.push_back("input 1 inflation factor minimal polynomial: " +
                      poly_to_string(alpha.minpoly));
    v.notes.push_back("input 2 inflation factor minimal polynomial: " +
                      poly_to_string(beta.minpoly));
    FieldEqualityResult fe = field_equal(alpha, beta);
    if (fe.status == FieldStatus::NotEqual) {
        v.notes.push_back("inflation factor fields differ (" + fe.obstruction +
                          "); homeomorphic tiling spaces force equal fields");
        v.status = VerdictStatus::NotHomeomorphic;
        v.obstruction = fe.obstruction;
        v.provenance.push_back("tiling-collar-necessity");
        v.provenance.push_back("eigenvalue-field-obstruction");
        return v;
    }
    if (fe.status == FieldStatus::Equal)
        v.notes.push_back("inflation factor fields agree, verified relation coefficients " +
                          detail::rat_vector_string(fe.certificate));
    else
        v.notes.push_back("inflation factor field comparison inconclusive at the height bound");

    std::optional<MatrixWeakEquivCertificate> mc =
        matrix_search(abelianization(c1.chi_tilde), abelianization(c2.chi_tilde), bounds);
    if (mc) {
        v.notes.push_back("collared abelianized certificate found at exponents (n, m) = (" +
                          std::to_string(mc->n_exp) + ", " + std::to_string(mc->m_exp) +
                          "): consistent with homeomorphism, not conclusive");
        v.matrix_certificate = std::move(mc);
    } else {
        v.notes.push_back("no collared abelianized certificate within bounds (" +
                          detail::bounds_string(bounds) +
                          "): the necessary condition is unresolved at these bounds");
    }
    v.notes.push_back("no sufficiency route exists for tiling spaces: the status is never "
                      "Homeomorphic");
    v.status = VerdictStatus::Unknown;
    return v;
}

} // namespace invlim
