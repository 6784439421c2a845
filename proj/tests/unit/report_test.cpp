/*
 * Human-readable and JSON report rendering.  Every block here is pinned
 * byte-for-byte: these strings are the tool's public face, and downstream
 * consumers diff them, so accidental drift must fail loudly.
 */

#include "helpers.hpp"

#include <invlim/classify.hpp>
#include <invlim/report.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

using namespace invlim;
using testutil::doubling;
using testutil::fib;
using testutil::folded;
using testutil::silver;

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(),
                                                  suffix) == 0;
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace

// === germ reports ===========================================================

TEST_CASE("germ report text is pinned", "[report]") {
    CHECK(germ_report_text(fib()) ==
          "alphabet: 2\n"
          "germ map: +1 -> +1, +2 -> +1, -1 -> -2, -2 -> -1\n"
          "eventual range: {-2, -1, +1} (size 3)\n"
          "fold: none\n"
          "distinguished: yes\n"
          "orientation preserving: yes\n"
          "undistinguished with orientation-preserving square: no\n");

    CHECK(germ_report_text(folded()) ==
          "alphabet: 1\n"
          "germ map: +1 -> +1, -1 -> +1\n"
          "eventual range: {+1} (size 1)\n"
          "fold: in expansion power 1 of letter 1 at position 0\n"
          "distinguished: yes\n"
          "orientation preserving: no\n"
          "undistinguished with orientation-preserving square: no\n");

    CHECK(germ_report_text(doubling()) ==
          "alphabet: 1\n"
          "germ map: +1 -> +1, -1 -> -1\n"
          "eventual range: {-1, +1} (size 2)\n"
          "fold: none\n"
          "distinguished: no\n"
          "orientation preserving: yes\n"
          "undistinguished with orientation-preserving square: yes\n");
}

TEST_CASE("germ report JSON agrees with the analysis", "[report]") {
    ordered_json j = germ_report_json(fib());
    CHECK(j.at("schema_version") == report_schema_version);
    CHECK(j.at("distinguished") == true);
    CHECK(j.at("range_size") == 3);
    CHECK(germ_report_json(doubling()).at("distinguished") == false);
}

// === eigenvalue report ======================================================

TEST_CASE("eigenvalue report text is pinned", "[report]") {
    CHECK(perron_report_text(abelianization(fib())) ==
          "matrix: 2 x 2\n"
          "characteristic polynomial: x^2 - x - 1\n"
          "aperiodic: yes\n"
          "dominant eigenvalue minimal polynomial: x^2 - x - 1\n"
          "isolating interval: "
          "[455436079300425/281474976710656, 910872158600853/562949953421312]\n"
          "decimal: 1.618033988749\n");
}

TEST_CASE("algebraic JSON is pinned and self-refining", "[report]") {
    AlgebraicReal golden = perron_root(abelianization(fib()));
    CHECK(algebraic_to_json(golden).dump() ==
          R"({"minpoly":"x^2 - x - 1",)"
          R"("interval":{"lo":"455436079300425/281474976710656",)"
          R"("hi":"910872158600853/562949953421312"},)"
          R"("decimal":"1.618033988749"})");
}

// === tent report ============================================================

TEST_CASE("tent report text is pinned", "[report]") {
    CHECK(tent_report_text(build_tent_model("RL")) ==
          "kneading: RL\n"
          "period: 3\n"
          "orbit ranks: 1 2 0\n"
          "substitution:\n"
          "alphabet 2\n"
          "1 : 2\n"
          "2 : -2 -1\n"
          "slope minimal polynomial: x^2 - x - 1\n"
          "slope isolating interval: "
          "[455436079300425/281474976710656, 910872158600853/562949953421312]\n"
          "slope decimal: 1.618033988749\n"
          "interval check: pass (width 2^-64)\n");
}

// === collar report ==========================================================

TEST_CASE("collar report text is pinned", "[report]") {
    CHECK(collar_report_text(collar(fib())) ==
          "base substitution:\n"
          "alphabet 2\n"
          "1 : 1 2\n"
          "2 : 1\n"
          "collared alphabet (4 tiles):\n"
          "  t1 = 1 1 2\n"
          "  t2 = 1 2 1\n"
          "  t3 = 2 1 1\n"
          "  t4 = 2 1 2\n"
          "collared substitution:\n"
          "alphabet 4\n"
          "1 : 4 2\n"
          "2 : 3\n"
          "3 : 1 2\n"
          "4 : 1 2\n"
          "projection (rows = base letters, cols = tiles):\n"
          "2 4\n"
          "1 0 1 1\n"
          "0 1 0 0\n"
          "transient tiles: none\n"
          "collared eigenvalue equals base eigenvalue: yes (verified exactly)\n");
}

// === patch CSV ==============================================================

TEST_CASE("patch CSV carries exact rationals beside decimals", "[report]") {
    TilingPatch p = emit_patch(fib(), 1, 3);
    std::vector<std::string> lines = split_lines(patch_to_csv(p));
    REQUIRE(lines.size() == 6); // header + 5 tiles
    CHECK(lines[0] == "index,prototile,left,length,left_decimal,length_decimal");
    CHECK(lines[1] == "1,1,0,1,0.000000000000,1.000000000000");
    CHECK(starts_with(lines[2], "2,2,1,"));
    CHECK(ends_with(lines[2], ",1.000000000000,0.618033988749"));
    CHECK(ends_with(lines[5], ",3.618033988749,0.618033988749"));
}

// === verdict rendering ======================================================

TEST_CASE("decided verdict text is pinned", "[report]") {
    CHECK(verdict_to_text(classify(fib(), power(fib(), 2))) ==
          "verdict: Homeomorphic\n"
          "provenance: periodic-coincidence-certificate\n"
          "certificate: exponents (n, m) = (2, 1)\n"
          "  sigma: 1 -> 1 2 ; 2 -> 1\n"
          "  tau:   1 -> 1 2 ; 2 -> 1\n"
          "bounds: max_n=4, max_m=4, max_len=64\n"
          "notes:\n"
          "  - input 1 abelianization aperiodic: yes\n"
          "  - input 2 abelianization aperiodic: yes\n"
          "  - input 1 dominant eigenvalue minimal polynomial: x^2 - x - 1\n"
          "  - input 2 dominant eigenvalue minimal polynomial: x^2 - 3x + 1\n"
          "  - eigenvalue fields agree, verified relation coefficients [1, 1] "
          "(necessary condition holds; not conclusive)\n"
          "  - weak-equivalence certificate found and exactly verified: "
          "exponents (n, m) = (2, 1)\n");

    CHECK(verdict_to_text(classify(fib(), doubling())) ==
          "verdict: NotHomeomorphic\n"
          "provenance: eigenvalue-field-obstruction\n"
          "obstruction: degree obstruction: [Q(a):Q] = 2 but [Q(b):Q] = 1\n"
          "bounds: max_n=4, max_m=4, max_len=64\n"
          "notes:\n"
          "  - input 1 abelianization aperiodic: yes\n"
          "  - input 2 abelianization aperiodic: yes\n"
          "  - input 1 dominant eigenvalue minimal polynomial: x^2 - x - 1\n"
          "  - input 2 dominant eigenvalue minimal polynomial: x - 2\n"
          "  - eigenvalue fields differ (degree obstruction: [Q(a):Q] = 2 but "
          "[Q(b):Q] = 1); homeomorphic limits force equal fields\n");
}

TEST_CASE("undecided verdict text is pinned", "[report]") {
    CHECK(verdict_to_text(classify(silver(), fib())) ==
          "verdict: Unknown\n"
          "provenance: (none)\n"
          "bounds: max_n=4, max_m=4, max_len=64\n"
          "notes:\n"
          "  - input 1 abelianization aperiodic: yes\n"
          "  - input 2 abelianization aperiodic: yes\n"
          "  - input 1 dominant eigenvalue minimal polynomial: x^2 - 2x - 1\n"
          "  - input 2 dominant eigenvalue minimal polynomial: x^2 - x - 1\n"
          "  - eigenvalue field comparison inconclusive at the height bound\n"
          "  - no weak-equivalence certificate within bounds (max_n=4, max_m=4, "
          "max_len=64)\n"
          "  - no abelianized certificate within the exponent bounds: weak "
          "equivalence at those exponents is ruled out exactly; larger exponents "
          "remain undecided\n"
          "  - input 1 wedge point: eventual range size 3, no fold -> distinguished\n"
          "  - input 2 wedge point: eventual range size 3, no fold -> distinguished\n"
          "  - both wedge points are distinguished, so weak equivalence decides "
          "this pair completely: Unknown reflects the search bounds only\n");
}

TEST_CASE("tiling verdict text is pinned", "[report]") {
    CHECK(verdict_to_text(classify_tilings(fib(), fib())) ==
          "verdict: Unknown\n"
          "provenance: (none)\n"
          "matrix certificate: exponents (n, m) = (1, 1)\n"
          "  S: [1 0 0 0] [0 1 0 0] [0 0 1 0] [0 0 0 1]\n"
          "  T: [0 0 1 1] [1 0 1 1] [0 1 0 0] [1 0 0 0]\n"
          "bounds: max_n=4, max_m=4, max_len=64\n"
          "notes:\n"
          "  - input 1 collared alphabet size: 4 (0 transient)\n"
          "  - input 1: collared dominant eigenvalue equals the base eigenvalue "
          "(verified exactly)\n"
          "  - input 2 collared alphabet size: 4 (0 transient)\n"
          "  - input 2: collared dominant eigenvalue equals the base eigenvalue "
          "(verified exactly)\n"
          "  - input 1 inflation factor minimal polynomial: x^2 - x - 1\n"
          "  - input 2 inflation factor minimal polynomial: x^2 - x - 1\n"
          "  - inflation factor fields agree, verified relation coefficients [0, 1]\n"
          "  - collared abelianized certificate found at exponents (n, m) = (1, 1): "
          "consistent with homeomorphism, not conclusive\n"
          "  - no sufficiency route exists for tiling spaces: the status is never "
          "Homeomorphic\n");
}

TEST_CASE("verdict JSON carries the schema version at the top", "[report]") {
    Verdict v = classify(fib(), power(fib(), 2));
    ordered_json j = verdict_to_json(v);
    CHECK(starts_with(j.dump(), R"({"schema_version":1,"status":"Homeomorphic",)"));
    CHECK(j.at("certificate").at("n") == 2);
    CHECK(j.at("certificate").at("m") == 1);
    CHECK(j.at("bounds").at("max_len") == 64);
    CHECK(j.at("notes").size() == 6);

    // the embeddable record is the same payload minus the version stamp
    ordered_json rec = verdict_record(v);
    CHECK_FALSE(rec.contains("schema_version"));
    CHECK(rec.at("status") == "Homeomorphic");
}

// === pairwise tables ========================================================

TEST_CASE("pairwise table rendering is pinned", "[report]") {
    std::vector<std::string> labels{"RL", "RLL"};
    std::vector<std::vector<Verdict>> table{
        {classify_tent_pair("RL", "RL"), classify_tent_pair("RL", "RLL")},
        {classify_tent_pair("RLL", "RL"), classify_tent_pair("RLL", "RLL")}};
    CHECK(pairwise_to_text(labels, table) ==
          "pairwise classification (H = homeomorphic, N = not homeomorphic, "
          "? = unknown)\n"
          "    RL RLL\n"
          "RL  H  N\n"
          "RLL N  H\n");
    ordered_json j = pairwise_to_json(labels, table);
    CHECK(j.at("labels") == ordered_json(labels));
    CHECK(j.at("statuses").dump() ==
          R"([["Homeomorphic","NotHomeomorphic"],["NotHomeomorphic","Homeomorphic"]])");
}

TEST_CASE("status letters cover all three outcomes", "[report]") {
    CHECK(status_letter(VerdictStatus::Homeomorphic) == 'H');
    CHECK(status_letter(VerdictStatus::NotHomeomorphic) == 'N');
    CHECK(status_letter(VerdictStatus::Unknown) == '?');
}
