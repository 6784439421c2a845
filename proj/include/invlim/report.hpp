/*
 * report.hpp — deterministic rendering of every classifier object: verdicts,
 * germ data, dominant-eigenvalue data, tent models, collared systems,
 * patches, and pairwise verdict tables.
 *
 * Two mirrors per object: a human-readable text block and a JSON record.
 * JSON documents carry "schema_version" at the top level; nested records do
 * not repeat it.  All rendering is insertion-ordered and digit-truncated,
 * so identical values produce byte-identical documents — the determinism
 * contract the CLI relies on.
 */
#pragma once

#include <string>
#include <vector>

#include "classify.hpp"
#include "io.hpp"

namespace invlim {

constexpr int report_schema_version = 1;

// === small shared helpers ====================================================

namespace detail {

inline std::string signed_name(int g) { return (g > 0 ? "+" : "") + std::to_string(g); }

inline std::string inline_substitution(const Substitution& s) {
    std::string out;
    for (int i = 1; i <= s.domain(); ++i) {
        if (i > 1) out += " ; ";
        out += std::to_string(i) + " -> " + format_word(s.image(i));
    }
    return out;
}

inline std::string inline_matrix(const IntMatrix& m) {
    std::string out;
    for (int r = 0; r < m.rows; ++r) {
        out += "[";
        for (int c = 0; c < m.cols; ++c) {
            if (c) out += " ";
            out += m.at(r, c).str();
        }
        out += "]";
        if (r + 1 < m.rows) out += " ";
    }
    return out;
}

inline std::string interval_string(const QInterval& iv) {
    return "[" + iv.lo.str() + ", " + iv.hi.str() + "]";
}

} // namespace detail

inline ordered_json algebraic_to_json(const AlgebraicReal& a, int digits = 12) {
    AlgebraicReal shown = refine_to(a, make_rat(1, pow_int(10, static_cast<unsigned>(digits) + 2)));
    ordered_json j;
    j["minpoly"] = poly_to_string(shown.minpoly);
    j["interval"] = {{"lo", shown.iv.lo.str()}, {"hi", shown.iv.hi.str()}};
    j["decimal"] = decimal_approx(shown, digits);
    return j;
}

// === verdicts ================================================================

inline ordered_json verdict_record(const Verdict& v) {
    ordered_json j;
    j["status"] = to_string(v.status);
    j["provenance"] = v.provenance;
    if (!v.obstruction.empty()) j["obstruction"] = v.obstruction;
    if (v.certificate) j["certificate"] = certificate_to_json(*v.certificate);
    if (v.matrix_certificate)
        j["matrix_certificate"] = matrix_certificate_to_json(*v.matrix_certificate);
    j["bounds"] = {{"max_n", v.bounds.max_n},
                   {"max_m", v.bounds.max_m},
                   {"max_len", v.bounds.max_image_len}};
    j["notes"] = v.notes;
    return j;
}

inline ordered_json verdict_to_json(const Verdict& v) {
    ordered_json j;
    j["schema_version"] = report_schema_version;
    ordered_json rec = verdict_record(v);
    for (auto& kv : rec.items()) j[kv.key()] = kv.value();
    return j;
}

inline std::string verdict_to_text(const Verdict& v) {
    std::string out = "verdict: " + std::string(to_string(v.status)) + "\n";
    out += "provenance:";
    if (v.provenance.empty()) out += " (none)";
    for (const std::string& p : v.provenance) out += " " + p;
    out += "\n";
    if (!v.obstruction.empty()) out += "obstruction: " + v.obstruction + "\n";
    if (v.certificate) {
        out += "certificate: exponents (n, m) = (" + std::to_string(v.certificate->n_exp) +
               ", " + std::to_string(v.certificate->m_exp) + ")\n";
        out += "  sigma: " + detail::inline_substitution(v.certificate->sigma) + "\n";
        out += "  tau:   " + detail::inline_substitution(v.certificate->tau) + "\n";
    }
    if (v.matrix_certificate) {
        out += "matrix certificate: exponents (n, m) = (" +
               std::to_string(v.matrix_certificate->n_exp) + ", " +
               std::to_string(v.matrix_certificate->m_exp) + ")\n";
        out += "  S: " + detail::inline_matrix(v.matrix_certificate->S) + "\n";
        out += "  T: " + detail::inline_matrix(v.matrix_certificate->T) + "\n";
    }
    out += "bounds: " + detail::bounds_string(v.bounds) + "\n";
    out += "notes:\n";
    for (const std::string& n : v.notes) out += "  - " + n + "\n";
    return out;
}

// === germ report =============================================================

inline ordered_json germ_report_json(const Substitution& s) {
    GermMap g = germ_map(s);
    ordered_json j;
    j["schema_version"] = report_schema_version;
    j["alphabet"] = s.domain();
    ordered_json gm;
    for (int i = 1; i <= g.n; ++i) gm[std::to_string(i)] = g.at(i);
    for (int i = 1; i <= g.n; ++i) gm[std::to_string(-i)] = g.at(-i);
    j["germ_map"] = std::move(gm);
    std::set<int> range = eventual_range(s);
    j["eventual_range"] = std::vector<int>(range.begin(), range.end());
    j["range_size"] = range.size();
    std::optional<FoldWitness> fold = folds_at_b(s);
    if (fold)
        j["fold"] = {{"letter", fold->i}, {"power", fold->k}, {"position", fold->position}};
    else
        j["fold"] = nullptr;
    j["distinguished"] = is_distinguished(s);
    j["orientation_preserving"] = is_orientation_preserving(s);
    j["undistinguished_orientable"] = is_undistinguished_orientable(s);
    return j;
}

inline std::string germ_report_text(const Substitution& s) {
    GermMap g = germ_map(s);
    std::string out = "alphabet: " + std::to_string(s.domain()) + "\n";
    out += "germ map:";
    for (int i = 1; i <= g.n; ++i)
        out += " " + detail::signed_name(i) + " -> " + detail::signed_name(g.at(i)) + ",";
    for (int i = 1; i <= g.n; ++i) {
        out += " " + detail::signed_name(-i) + " -> " + detail::signed_name(g.at(-i));
        out += (i < g.n) ? "," : "\n";
    }
    std::set<int> range = eventual_range(s);
    out += "eventual range: {";
    bool first = true;
    for (int e : range) {
        if (!first) out += ", ";
        out += detail::signed_name(e);
        first = false;
    }
    out += "} (size " + std::to_string(range.size()) + ")\n";
    std::optional<FoldWitness> fold = folds_at_b(s);
    if (fold)
        out += "fold: in expansion power " + std::to_string(fold->k) + " of letter " +
               std::to_string(fold->i) + " at position " + std::to_string(fold->position) + "\n";
    else
        out += "fold: none\n";
    out += std::string("distinguished: ") + (is_distinguished(s) ? "yes" : "no") + "\n";
    out += std::string("orientation preserving: ") +
           (is_orientation_preserving(s) ? "yes" : "no") + "\n";
    out += std::string("undistinguished with orientation-preserving square: ") +
           (is_undistinguished_orientable(s) ? "yes" : "no") + "\n";
    return out;
}

// === dominant eigenvalue report =============================================

inline ordered_json perron_report_json(const IntMatrix& m, int digits = 12) {
    ordered_json j;
    j["schema_version"] = report_schema_version;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    j["char_poly"] = poly_to_string(char_poly(m));
    bool ap = is_aperiodic(m);
    j["aperiodic"] = ap;
    if (!ap) throw InputError("perron: matrix is not aperiodic (no Perron theory applies)");
    j["perron"] = algebraic_to_json(perron_root(m), digits);
    return j;
}

inline std::string perron_report_text(const IntMatrix& m, int digits = 12) {
    std::string out =
        "matrix: " + std::to_string(m.rows) + " x " + std::to_string(m.cols) + "\n";
    out += "characteristic polynomial: " + poly_to_string(char_poly(m)) + "\n";
    bool ap = is_aperiodic(m);
    out += std::string("aperiodic: ") + (ap ? "yes" : "no") + "\n";
    if (!ap) throw InputError("perron: matrix is not aperiodic (no Perron theory applies)");
    AlgebraicReal r = refine_to(perron_root(m),
                                make_rat(1, pow_int(10, static_cast<unsigned>(digits) + 2)));
    out += "dominant eigenvalue minimal polynomial: " + poly_to_string(r.minpoly) + "\n";
    out += "isolating interval: " + detail::interval_string(r.iv) + "\n";
    out += "decimal: " + decimal_approx(r, digits) + "\n";
    return out;
}

// === tent model report =======================================================

inline ordered_json tent_report_json(const TentModel& m, int digits = 12,
                                     int precision_bits = 64) {
    ordered_json j;
    j["schema_version"] = report_schema_version;
    j["kneading"] = m.kneading;
    j["period"] = m.period;
    j["orbit_ranks"] = m.orbit_order;
    j["substitution"] = substitution_to_json(m.chi);
    j["slope"] = algebraic_to_json(m.slope, digits);
    j["interval_check"] = verify_tent_model(m, precision_bits);
    return j;
}

inline std::string tent_report_text(const TentModel& m, int digits = 12,
                                    int precision_bits = 64) {
    std::string out = "kneading: " + m.kneading + "\n";
    out += "period: " + std::to_string(m.period) + "\n";
    out += "orbit ranks:";
    for (int r : m.orbit_order) out += " " + std::to_string(r);
    out += "\n";
    out += "substitution:\n" + substitution_to_text(m.chi);
    AlgebraicReal slope = refine_to(
        m.slope, make_rat(1, pow_int(10, static_cast<unsigned>(digits) + 2)));
    out += "slope minimal polynomial: " + poly_to_string(slope.minpoly) + "\n";
    out += "slope isolating interval: " + detail::interval_string(slope.iv) + "\n";
    out += "slope decimal: " + decimal_approx(slope, digits) + "\n";
    out += std::string("interval check: ") +
           (verify_tent_model(m, precision_bits) ? "pass" : "FAIL") + " (width 2^-" +
           std::to_string(precision_bits) + ")\n";
    return out;
}

// === collared system report ==================================================

namespace detail {

/* true / absent-with-reason; a computed `false` would be an internal bug. */
inline std::optional<std::string> collar_eigenvalue_note(const CollaredSystem& c) {
    try {
        if (!collar_preserves_eigenvalue(c))
            throw InternalError(
                "collar: collared dominant eigenvalue disagrees with the base eigenvalue");
        return std::nullopt;
    } catch (const InputError& e) {
        return std::string(e.what());
    }
}

} // namespace detail

inline ordered_json collar_report_json(const CollaredSystem& c) {
    ordered_json j;
    j["schema_version"] = report_schema_version;
    j["base"] = substitution_to_json(c.base);
    ordered_json tiles = ordered_json::array();
    for (const Word& t : c.tiles) tiles.push_back(t);
    j["tiles"] = std::move(tiles);
    j["collared_substitution"] = substitution_to_json(c.chi_tilde);
    j["projection"] = matrix_to_json(c.projection);
    j["transient_tiles"] = c.transient;
    std::optional<std::string> note = detail::collar_eigenvalue_note(c);
    if (note) {
        j["eigenvalue_preserved"] = nullptr;
        j["eigenvalue_note"] = *note;
    } else {
        j["eigenvalue_preserved"] = true;
    }
    return j;
}

inline std::string collar_report_text(const CollaredSystem& c) {
    std::string out = "base substitution:\n" + substitution_to_text(c.base);
    out += "collared alphabet (" + std::to_string(c.tiles.size()) + " tiles):\n";
    for (size_t t = 0; t < c.tiles.size(); ++t)
        out += "  t" + std::to_string(t + 1) + " = " + format_word(c.tiles[t]) + "\n";
    out += "collared substitution:\n" + substitution_to_text(c.chi_tilde);
    out += "projection (rows = base letters, cols = tiles):\n" + matrix_to_text(c.projection);
    out += "transient tiles:";
    if (c.transient.empty()) out += " none";
    for (int t : c.transient) out += " t" + std::to_string(t);
    out += "\n";
    std::optional<std::string> note = detail::collar_eigenvalue_note(c);
    if (note)
        out += "collared eigenvalue equals base eigenvalue: unavailable (" + *note + ")\n";
    else
        out += "collared eigenvalue equals base eigenvalue: yes (verified exactly)\n";
    return out;
}

// === patches =================================================================

inline std::string patch_to_csv(const TilingPatch& p, int digits = 12) {
    std::string out = "index,prototile,left,length,left_decimal,length_decimal\n";
    for (size_t i = 0; i < p.tiles.size(); ++i) {
        const PatchTile& t = p.tiles[i];
        out += std::to_string(i + 1) + "," + std::to_string(t.prototile) + "," +
               t.left.str() + "," + t.length.str() + "," + decimal_string(t.left, digits) +
               "," + decimal_string(t.length, digits) + "\n";
    }
    return out;
}

inline ordered_json patch_to_json(const TilingPatch& p, int digits = 12) {
    ordered_json j;
    j["schema_version"] = report_schema_version;
    ordered_json tiles = ordered_json::array();
    Rat total = 0;
    for (const PatchTile& t : p.tiles) {
        tiles.push_back({{"prototile", t.prototile},
                         {"left", t.left.str()},
                         {"length", t.length.str()},
                         {"left_decimal", decimal_string(t.left, digits)},
                         {"length_decimal", decimal_string(t.length, digits)}});
        total += t.length;
    }
    j["tiles"] = std::move(tiles);
    j["total_length"] = total.str();
    j["total_length_decimal"] = decimal_string(total, digits);
    return j;
}

// === pairwise tables =========================================================

inline char status_letter(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Homeomorphic: return 'H';
        case VerdictStatus::NotHomeomorphic: return 'N';
        case VerdictStatus::Unknown: return '?';
    }
    throw InternalError("status_letter: unknown verdict status");
}

inline std::string pairwise_to_text(const std::vector<std::string>& labels,
                                    const std::vector<std::vector<Verdict>>& table) {
    if (labels.size() != table.size())
        throw InternalError("pairwise_to_text: label/table size mismatch");
    size_t w = 0;
    for (const std::string& l : labels) w = std::max(w, l.size());
    std::string out =
        "pairwise classification (H = homeomorphic, N = not homeomorphic, ? = unknown)\n";
    out += std::string(w, ' ');
    for (const std::string& l : labels) out += " " + l;
    out += "\n";
    for (size_t r = 0; r < table.size(); ++r) {
        if (table[r].size() != labels.size())
            throw InternalError("pairwise_to_text: ragged verdict table");
        out += labels[r] + std::string(w - labels[r].size(), ' ');
        for (size_t c = 0; c < table[r].size(); ++c) {
            out += " " + std::string(1, status_letter(table[r][c].status));
            out += std::string(labels[c].size() - 1, ' ');
        }
        // trim trailing spaces for byte-stable output
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += "\n";
    }
    return out;
}

inline ordered_json pairwise_to_json(const std::vector<std::string>& labels,
                                     const std::vector<std::vector<Verdict>>& table) {
    if (labels.size() != table.size())
        throw InternalError("pairwise_to_json: label/table size mismatch");
    ordered_json j;
    j["schema_version"] = report_schema_version;
    j["labels"] = labels;
    ordered_json statuses = ordered_json::array();
    ordered_json cells = ordered_json::array();
    for (const std::vector<Verdict>& row : table) {
        if (row.size() != labels.size())
            throw InternalError("pairwise_to_json: ragged verdict table");
        ordered_json srow = ordered_json::array();
        ordered_json crow = ordered_json::array();
        for (const Verdict& v : row) {
            srow.push_back(to_string(v.status));
            crow.push_back(verdict_record(v));
        }
        statuses.push_back(std::move(srow));
        cells.push_back(std::move(crow));
    }
    j["statuses"] = std::move(statuses);
    j["cells"] = std::move(cells);
    return j;
}

} // namespace invlim
