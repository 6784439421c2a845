/*
 * io.hpp — file formats: substitutions, integer matrices, and
 * weak-equivalence certificates, in text and JSON mirrors.
 *
 * Text substitution (one per file, square):
 *     alphabet N
 *     1 : j1 j2 ... jk      (signed integers; negative = barred)
 *     ...
 *     N : ...
 * JSON mirror: { "alphabet": N, "images": [[...], ...] } with an optional
 * "codomain" key for rectangular legs (certificate components).
 *
 * Matrix text: first line `rows cols`, then row-major integers.
 *
 * Certificate JSON: { "sigma": {...}, "tau": {...}, "n": 2, "m": 1 } with
 * substitution JSON mirrors inside.  Matrix certificates mirror that with
 * "S" and "T" matrix objects.  Matrix entries are serialized as strings in
 * JSON because they are arbitrary-precision.
 *
 * Serializers are canonical (fixed spacing, fixed key order), so identical
 * values produce byte-identical files; parsers accept any whitespace and
 * detect JSON by a leading '{'.
 */
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "matrix_equivalence.hpp"
#include "substitution.hpp"
#include "weak_equivalence.hpp"

namespace invlim {

using ordered_json = nlohmann::ordered_json;

// === substitutions ===========================================================

inline std::string substitution_to_text(const Substitution& s) {
    if (!s.square())
        throw InputError("substitution_to_text: the text format is square-only; use JSON "
                         "for rectangular legs");
    std::string out = "alphabet " + std::to_string(s.domain()) + "\n";
    for (int i = 1; i <= s.domain(); ++i) {
        out += std::to_string(i) + " :";
        for (Letter a : s.image(i)) out += " " + std::to_string(a);
        out += "\n";
    }
    return out;
}

inline Substitution parse_substitution_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue; // skip blank lines
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header))
        throw InputError("substitution file: expected header line `alphabet N`");
    std::istringstream hs(header);
    std::string keyword, extra;
    int n = 0;
    if (!(hs >> keyword >> n) || keyword != "alphabet" || n < 1 || (hs >> extra))
        throw InputError("substitution file: expected header line `alphabet N`");

    std::vector<Word> images(static_cast<size_t>(n));
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int row = 0; row < n; ++row) {
        std::string body;
        if (!next_line(body))
            throw InputError("substitution file: expected " + std::to_string(n) +
                             " image lines of the form `i : j1 j2 ...`");
        std::istringstream ls(body);
        int i = 0;
        std::string colon;
        if (!(ls >> i >> colon) || colon != ":")
            throw InputError("substitution file: malformed image line `" + body + "`");
        if (i < 1 || i > n)
            throw InputError("substitution file: image row index " + std::to_string(i) +
                             " outside 1.." + std::to_string(n));
        if (seen[static_cast<size_t>(i)])
            throw InputError("substitution file: duplicate image row for letter " +
                             std::to_string(i));
        seen[static_cast<size_t>(i)] = 1;
        Word w;
        int value = 0;
        while (ls >> value) w.push_back(value);
        if (!ls.eof())
            throw InputError("substitution file: non-integer letter on line `" + body + "`");
        if (w.empty())
            throw InputError("substitution file: empty image for letter " + std::to_string(i));
        images[static_cast<size_t>(i) - 1] = std::move(w);
    }
    std::string trailing;
    if (next_line(trailing))
        throw InputError("substitution file: unexpected trailing line `" + trailing + "`");
    return Substitution(n, images);
}

inline ordered_json substitution_to_json(const Substitution& s) {
    ordered_json j;
    j["alphabet"] = s.domain();
    if (!s.square()) j["codomain"] = s.codomain();
    j["images"] = ordered_json::array();
    for (int i = 1; i <= s.domain(); ++i) j["images"].push_back(s.image(i));
    return j;
}

inline Substitution substitution_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("alphabet") || !j.contains("images"))
        throw InputError("substitution JSON: expected keys `alphabet` and `images`");
    int n = 0;
    try {
        n = j.at("alphabet").get<int>();
    } catch (const ordered_json::exception&) {
        throw InputError("substitution JSON: `alphabet` must be an integer");
    }
    int codomain = n;
    if (j.contains("codomain")) {
        try {
            codomain = j.at("codomain").get<int>();
        } catch (const ordered_json::exception&) {
            throw InputError("substitution JSON: `codomain` must be an integer");
        }
    }
    std::vector<Word> images;
    try {
        images = j.at("images").get<std::vector<Word>>();
    } catch (const ordered_json::exception&) {
        throw InputError("substitution JSON: `images` must be an array of integer arrays");
    }
    if (static_cast<int>(images.size()) != n)
        throw InputError("substitution JSON: `images` must list exactly `alphabet` words");
    return Substitution(codomain, images);
}

// === integer matrices ========================================================

inline std::string matrix_to_text(const IntMatrix& m) {
    std::string out = std::to_string(m.rows) + " " + std::to_string(m.cols) + "\n";
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) out += " ";
            out += m.at(r, c).str();
        }
        out += "\n";
    }
    return out;
}

inline IntMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    int rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows < 1 || cols < 1)
        throw InputError("matrix file: expected header line `rows cols`");
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            std::string tok;
            if (!(in >> tok))
                throw InputError("matrix file: expected " + std::to_string(rows * cols) +
                                 " row-major integer entries");
            try {
                m.at(r, c) = Int(tok);
            } catch (const std::exception&) {
                throw InputError("matrix file: `" + tok + "` is not an integer");
            }
        }
    return m;
}

inline ordered_json matrix_to_json(const IntMatrix& m) {
    ordered_json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    j["entries"] = ordered_json::array();
    for (int r = 0; r < m.rows; ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).str());
        j["entries"].push_back(std::move(row));
    }
    return j;
}

inline IntMatrix matrix_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw InputError("matrix JSON: expected keys `rows`, `cols`, `entries`");
    int rows = 0, cols = 0;
    try {
        rows = j.at("rows").get<int>();
        cols = j.at("cols").get<int>();
    } catch (const ordered_json::exception&) {
        throw InputError("matrix JSON: `rows` and `cols` must be integers");
    }
    if (rows < 1 || cols < 1) throw InputError("matrix JSON: dimensions must be positive");
    const ordered_json& e = j.at("entries");
    if (!e.is_array() || static_cast<int>(e.size()) != rows)
        throw InputError("matrix JSON: `entries` must be an array of `rows` rows");
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const ordered_json& row = e.at(static_cast<size_t>(r));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw InputError("matrix JSON: each row must list `cols` entries");
        for (int c = 0; c < cols; ++c) {
            const ordered_json& cell = row.at(static_cast<size_t>(c));
            try {
                if (cell.is_string())
                    m.at(r, c) = Int(cell.get<std::string>());
                else
                    m.at(r, c) = Int(cell.get<long long>());
            } catch (const std::exception&) {
                throw InputError("matrix JSON: entries must be integers or integer strings");
            }
        }
    }
    return m;
}

// === certificates ============================================================

inline ordered_json certificate_to_json(const WeakEquivCertificate& c) {
    ordered_json j;
    j["sigma"] = substitution_to_json(c.sigma);
    j["tau"] = substitution_to_json(c.tau);
    j["n"] = c.n_exp;
    j["m"] = c.m_exp;
    return j;
}

inline WeakEquivCertificate certificate_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("sigma") || !j.contains("tau") || !j.contains("n") ||
        !j.contains("m"))
        throw InputError("certificate JSON: expected keys `sigma`, `tau`, `n`, `m`");
    int n = 0, m = 0;
    try {
        n = j.at("n").get<int>();
        m = j.at("m").get<int>();
    } catch (const ordered_json::exception&) {
        throw InputError("certificate JSON: `n` and `m` must be integers");
    }
    return WeakEquivCertificate{substitution_from_json(j.at("sigma")),
                                substitution_from_json(j.at("tau")), n, m};
}

inline ordered_json matrix_certificate_to_json(const MatrixWeakEquivCertificate& c) {
    ordered_json j;
    j["S"] = matrix_to_json(c.S);
    j["T"] = matrix_to_json(c.T);
    j["n"] = c.n_exp;
    j["m"] = c.m_exp;
    return j;
}

inline MatrixWeakEquivCertificate matrix_certificate_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("S") || !j.contains("T") || !j.contains("n") ||
        !j.contains("m"))
        throw InputError("matrix certificate JSON: expected keys `S`, `T`, `n`, `m`");
    int n = 0, m = 0;
    try {
        n = j.at("n").get<int>();
        m = j.at("m").get<int>();
    } catch (const ordered_json::exception&) {
        throw InputError("matrix certificate JSON: `n` and `m` must be integers");
    }
    return MatrixWeakEquivCertificate{matrix_from_json(j.at("S")), matrix_from_json(j.at("T")),
                                      n, m};
}

// === files ===================================================================

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open file for writing: " + path);
    out << content;
    if (!out) throw InputError("write failed: " + path);
}

namespace detail {

inline bool looks_like_json(const std::string& text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        return ch == '{';
    }
    return false;
}

inline ordered_json parse_json_or_fail(const std::string& text, const char* what) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError(std::string(what) + ": malformed JSON");
    return j;
}

} // namespace detail

inline Substitution load_substitution(const std::string& path) {
    std::string text = read_file(path);
    if (detail::looks_like_json(text))
        return substitution_from_json(detail::parse_json_or_fail(text, "substitution JSON"));
    return parse_substitution_text(text);
}

inline IntMatrix load_matrix(const std::string& path) {
    std::string text = read_file(path);
    if (detail::looks_like_json(text))
        return matrix_from_json(detail::parse_json_or_fail(text, "matrix JSON"));
    return parse_matrix_text(text);
}

inline WeakEquivCertificate load_certificate(const std::string& path) {
    return certificate_from_json(
        detail::parse_json_or_fail(read_file(path), "certificate JSON"));
}

} // namespace invlim
