/*
 * invlim — command-line front end for the inverse-limit classifier.
 *
 * Subcommands: classify, classify-tent, cert-search, cert-verify, tent,
 * collar, classify-tilings, perron, germs, patch.  Global flags --json,
 * --max-n, --max-m, --max-len, --precision (env defaults INVLIM_MAX_N,
 * INVLIM_MAX_M, INVLIM_MAX_LEN, INVLIM_PRECISION).
 *
 * Exit codes: 0 = decided / found / valid, 2 = Unknown / absent / invalid,
 * 1 = error (bad input, cap, or inconclusive precision).
 *
 * All output is deterministic; pairwise tables are computed in parallel
 * across pairs but collected by fixed index, so re-runs are byte-identical.
 */
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "invlim/classify.hpp"
#include "invlim/report.hpp"

namespace {

using namespace invlim;

struct Options {
    bool json = false;
    SearchBounds bounds;
    int precision = 64;
};

void print(const std::string& text) { std::fputs(text.c_str(), stdout); }

void print_json(const ordered_json& j) { print(j.dump(2) + "\n"); }

int verdict_exit(const Verdict& v) {
    return v.status == VerdictStatus::Unknown ? 2 : 0;
}

int emit_verdict(const Verdict& v, const Options& opt) {
    if (opt.json)
        print_json(verdict_to_json(v));
    else
        print(verdict_to_text(v));
    return verdict_exit(v);
}

// --- subcommand bodies ------------------------------------------------------

int run_classify(const std::string& a, const std::string& b, const Options& opt) {
    return emit_verdict(classify(load_substitution(a), load_substitution(b), opt.bounds), opt);
}

int run_classify_tent(const std::string& k1, const std::string& k2, const Options& opt) {
    return emit_verdict(classify_tent_pair(k1, k2, opt.bounds), opt);
}

int run_classify_tilings(const std::string& a, const std::string& b, const Options& opt) {
    return emit_verdict(
        classify_tilings(load_substitution(a), load_substitution(b), opt.bounds), opt);
}

int run_cert_search(const std::string& a, const std::string& b, const Options& opt) {
    Substitution chi = load_substitution(a);
    Substitution psi = load_substitution(b);
    std::optional<WeakEquivCertificate> cert = search_certificate(chi, psi, opt.bounds);
    if (!cert) {
        std::fprintf(stderr, "cert-search: no certificate within bounds (%s)\n",
                     detail::bounds_string(opt.bounds).c_str());
        if (opt.json) print("null\n");
        return 2;
    }
    print_json(certificate_to_json(*cert));
    return 0;
}

int run_cert_verify(const std::string& a, const std::string& b, const std::string& cert_path,
                    const Options& opt) {
    Substitution chi = load_substitution(a);
    Substitution psi = load_substitution(b);
    WeakEquivCertificate cert = load_certificate(cert_path);
    bool ok = verify_certificate(chi, psi, cert);
    if (opt.json)
        print_json({{"schema_version", report_schema_version}, {"valid", ok}});
    else
        print(ok ? "certificate: valid\n" : "certificate: invalid\n");
    return ok ? 0 : 2;
}

int run_germs(const std::string& file, const Options& opt) {
    Substitution s = load_substitution(file);
    if (opt.json)
        print_json(germ_report_json(s));
    else
        print(germ_report_text(s));
    return 0;
}

int run_perron(const std::string& file, const Options& opt) {
    IntMatrix m = load_matrix(file);
    if (opt.json)
        print_json(perron_report_json(m));
    else
        print(perron_report_text(m));
    return 0;
}

int run_collar(const std::string& file, const Options& opt) {
    CollaredSystem c = collar(load_substitution(file));
    if (opt.json)
        print_json(collar_report_json(c));
    else
        print(collar_report_text(c));
    return 0;
}

int run_patch(const std::string& file, int seed, int steps, const Options& opt) {
    TilingPatch p = emit_patch(load_substitution(file), seed, steps, opt.precision);
    if (opt.json)
        print_json(patch_to_json(p));
    else
        print(patch_to_csv(p));
    return 0;
}

int run_tent_single(const std::string& kneading, const Options& opt) {
    TentModel m = build_tent_model(kneading);
    if (opt.json)
        print_json(tent_report_json(m, 12, opt.precision));
    else
        print(tent_report_text(m, 12, opt.precision));
    return 0;
}

int run_tent_enumerate(int max_period, const Options& opt) {
    std::vector<TentModel> models;
    for (const std::string& w : enumerate_kneading(max_period))
        models.push_back(build_tent_model(w));
    if (opt.json) {
        ordered_json j;
        j["schema_version"] = report_schema_version;
        j["models"] = ordered_json::array();
        for (const TentModel& m : models) {
            ordered_json rec = tent_report_json(m, 12, opt.precision);
            rec.erase("schema_version");
            j["models"].push_back(std::move(rec));
        }
        print_json(j);
        return 0;
    }
    print("period kneading slope minpoly\n");
    for (const TentModel& m : models)
        print(std::to_string(m.period) + " " + m.kneading + " " + decimal_approx(m.slope, 12) +
              " " + poly_to_string(m.slope.minpoly) + "\n");
    return 0;
}

/* All pairs in parallel; results land in fixed grid slots, output is ordered. */
int run_tent_pairwise(int max_period, const Options& opt) {
    std::vector<std::string> labels = enumerate_kneading(max_period);
    const size_t n = labels.size();
    std::vector<std::vector<Verdict>> table(n, std::vector<Verdict>(n));

    std::atomic<size_t> cursor{0};
    std::mutex error_lock;
    std::exception_ptr error;
    auto worker = [&] {
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= n * n) return;
            try {
                table[i / n][i % n] =
                    classify_tent_pair(labels[i / n], labels[i % n], opt.bounds);
            } catch (...) {
                std::lock_guard<std::mutex> hold(error_lock);
                if (!error) error = std::current_exception();
            }
        }
    };
    unsigned hw = std::thread::hardware_concurrency();
    size_t nthreads = std::min<size_t>(hw ? hw : 4, std::max<size_t>(n * n, 1));
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    if (opt.json)
        print_json(pairwise_to_json(labels, table));
    else
        print(pairwise_to_text(labels, table));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invlim — classifier for one-dimensional inverse limits of Markov maps on "
                 "wedges of circles"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "structured JSON output");
    app.add_option("--max-n", opt.bounds.max_n, "certificate search bound on the first exponent")
        ->envname("INVLIM_MAX_N");
    app.add_option("--max-m", opt.bounds.max_m,
                   "certificate search bound on the second exponent")
        ->envname("INVLIM_MAX_M");
    app.add_option("--max-len", opt.bounds.max_image_len,
                   "certificate search bound on image length")
        ->envname("INVLIM_MAX_LEN");
    app.add_option("--precision", opt.precision, "binary digits for interval refinement")
        ->envname("INVLIM_PRECISION");

    std::string file_a, file_b, cert_path, kneading;
    int seed = 1, steps = 0, enumerate_period = 0, pairwise_period = 0;

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify a pair of substitution files");
    classify_cmd->add_option("fileA", file_a)->required();
    classify_cmd->add_option("fileB", file_b)->required();

    CLI::App* tent_pair_cmd =
        app.add_subcommand("classify-tent", "classify a pair of kneading words");
    tent_pair_cmd->add_option("kneading1", file_a)->required();
    tent_pair_cmd->add_option("kneading2", file_b)->required();

    CLI::App* search_cmd =
        app.add_subcommand("cert-search", "search for a weak-equivalence certificate");
    search_cmd->add_option("fileA", file_a)->required();
    search_cmd->add_option("fileB", file_b)->required();

    CLI::App* verify_cmd =
        app.add_subcommand("cert-verify", "exactly verify a certificate against a pair");
    verify_cmd->add_option("fileA", file_a)->required();
    verify_cmd->add_option("fileB", file_b)->required();
    verify_cmd->add_option("certificate", cert_path)->required();

    CLI::App* tent_cmd = app.add_subcommand("tent", "tent-map models from kneading data");
    tent_cmd->add_option("--kneading", kneading, "emit the model for one kneading word");
    tent_cmd->add_option("--enumerate", enumerate_period,
                         "emit all admissible models up to this period");
    tent_cmd->add_option("--pairwise", pairwise_period,
                         "classify all pairs up to this period");

    CLI::App* collar_cmd =
        app.add_subcommand("collar", "collared system and eigenvalue check");
    collar_cmd->add_option("file", file_a)->required();

    CLI::App* tilings_cmd =
        app.add_subcommand("classify-tilings", "tiling-space necessary-condition verdict");
    tilings_cmd->add_option("fileA", file_a)->required();
    tilings_cmd->add_option("fileB", file_b)->required();

    CLI::App* perron_cmd =
        app.add_subcommand("perron", "dominant eigenvalue of an integer matrix file");
    perron_cmd->add_option("file", file_a)->required();

    CLI::App* germs_cmd =
        app.add_subcommand("germs", "edge-germ dynamics of a substitution file");
    germs_cmd->add_option("file", file_a)->required();

    CLI::App* patch_cmd = app.add_subcommand("patch", "finite inflation patch (CSV or JSON)");
    patch_cmd->add_option("file", file_a)->required();
    patch_cmd->add_option("--seed", seed, "1-based seed prototile")->required();
    patch_cmd->add_option("--steps", steps, "inflation steps")->required();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e); // prints help or the usage error
        return rc == 0 ? 0 : 1;
    }

    try {
        if (opt.bounds.max_n < 1 || opt.bounds.max_m < 1 || opt.bounds.max_image_len < 1)
            throw InputError("bounds must be positive");
        if (opt.precision < 1) throw InputError("precision must be positive");

        if (classify_cmd->parsed()) return run_classify(file_a, file_b, opt);
        if (tent_pair_cmd->parsed()) return run_classify_tent(file_a, file_b, opt);
        if (search_cmd->parsed()) return run_cert_search(file_a, file_b, opt);
        if (verify_cmd->parsed()) return run_cert_verify(file_a, file_b, cert_path, opt);
        if (tent_cmd->parsed()) {
            int modes = (!kneading.empty() ? 1 : 0) + (enumerate_period > 0 ? 1 : 0) +
                        (pairwise_period > 0 ? 1 : 0);
            if (modes != 1)
                throw InputError(
                    "tent: choose exactly one of --kneading, --enumerate, --pairwise");
            if (!kneading.empty()) return run_tent_single(kneading, opt);
            if (enumerate_period > 0) return run_tent_enumerate(enumerate_period, opt);
            return run_tent_pairwise(pairwise_period, opt);
        }
        if (collar_cmd->parsed()) return run_collar(file_a, opt);
        if (tilings_cmd->parsed()) return run_classify_tilings(file_a, file_b, opt);
        if (perron_cmd->parsed()) return run_perron(file_a, opt);
        if (germs_cmd->parsed()) return run_germs(file_a, opt);
        if (patch_cmd->parsed()) return run_patch(file_a, seed, steps, opt);
        throw InternalError("no subcommand dispatched");
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const CapError& e) {
        std::fprintf(stderr, "error (cap): %s\n", e.what());
        return 1;
    } catch (const InconclusiveError& e) {
        std::fprintf(stderr, "error (inconclusive): %s\n", e.what());
        return 1;
    } catch (const InternalError& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "unexpected error: %s\n", e.what());
        return 1;
    }
}
