#include "zsum/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "zsum/auditor.hpp"
#include "zsum/errors.hpp"
#include "zsum/json_io.hpp"

namespace zsum::cli {

namespace {

// exit codes
constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kViolations = 2;
constexpr int kRefused = 3;

void emit(const nlohmann::json& j, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << j.dump() << '\n';
    } else {
        std::ofstream f(output_path);
        if (!f) throw Error("cannot open output file: " + output_path);
        f << j.dump() << '\n';
    }
}

int report_exit_code(const AuditReport& r) {
    if (r.budget_exceeded) return kRefused;
    return r.violation_count > 0 ? kViolations : kOk;
}

void summarize(const AuditReport& r, bool pretty, std::ostream& err) {
    if (!pretty) return;
    err << "scanned " << r.total_scanned << ", violations " << r.violation_count
        << (r.budget_exceeded ? " (budget exceeded)" : "") << '\n';
}

pell::BigInt parse_big(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw Error("expected a nonnegative decimal integer, got '" + s + "'");
    return pell::BigInt(s);
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"signed edge weightings of complete graphs: constructions, zero-sum detection, exhaustive audits"};
    app.require_subcommand(1);

    std::string output_path;
    int parallelism = 0;
    bool pretty = false;
    app.add_option("--output", output_path, "write the JSON result to this file instead of stdout");
    app.add_option("--parallelism", parallelism, "audit worker count (default: all processors)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--pretty", pretty, "print a human summary on stderr");

    auto* gen = app.add_subcommand("gen", "construct a weighting and print it as JSON");
    std::string gen_kind;
    int gen_n = 0, gen_a = -1;
    std::string gen_j;
    gen->add_option("--kind", gen_kind, "clique-neg | bipartition | extremal-k4 | wide-range")
        ->required()
        ->check(CLI::IsMember({"clique-neg", "bipartition", "extremal-k4", "wide-range"}));
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--a", gen_a, "partition size (clique-neg, bipartition, wide-range)");
    gen->add_option("--j", gen_j, "remainder graph for extremal-k4: empty | k1 | k2 | p2")
        ->check(CLI::IsMember({"empty", "k1", "k2", "p2"}));

    auto* verify = app.add_subcommand("verify", "scan a weighting (JSON on stdin or --input) for a zero-sum clique");
    int verify_m = 0;
    std::string verify_input;
    verify->add_option("--m", verify_m, "clique order to search")->required();
    verify->add_option("--input", verify_input, "read the weighting JSON from this file");

    auto* pellcmd = app.add_subcommand("pell", "emit solution streams of the Diophantine families");
    std::string pell_family;
    int pell_count = 0;
    pellcmd->add_option("--family", pell_family, "neg-pell | bal-clique")
        ->required()
        ->check(CLI::IsMember({"neg-pell", "bal-clique"}));
    pellcmd->add_option("--count", pell_count, "number of solutions")->required();

    auto* threshold = app.add_subcommand("threshold", "exhaustive zero-sum-K4 threshold audit");
    int threshold_n = 0;
    bool allow_large = false;
    threshold->add_option("--n", threshold_n, "vertex count, 5..8")->required();
    threshold->add_flag("--allow-large", allow_large, "permit the 2^28 sweep at n=8");

    auto* extremal = app.add_subcommand("extremal", "exhaustive extremal-characterization audit");
    int extremal_n = 0;
    extremal->add_option("--n", extremal_n, "vertex count, 5..8")->required();

    auto* balanced = app.add_subcommand("balanced", "audit a balanced construction for zero-sum K_m");
    std::string balanced_kind;
    int balanced_n = 0, balanced_m_max = 0;
    balanced->add_option("--kind", balanced_kind, "clique-neg | bipartition")
        ->required()
        ->check(CLI::IsMember({"clique-neg", "bipartition"}));
    balanced->add_option("--n", balanced_n, "vertex count")->required();
    balanced->add_option("--m-max", balanced_m_max, "largest clique order to audit")->required();

    auto* intersect = app.add_subcommand("intersect", "scan the intersection of the two membership sets");
    std::string intersect_limit;
    intersect->add_option("--limit", intersect_limit, "scan bound (decimal)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        err << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }

    try {
        if (gen->parsed()) {
            SignedWeighting w = [&] {
                if (gen_kind == "clique-neg") {
                    if (gen_a < 0) throw Error("--a is required for clique-neg");
                    return clique_negative_weighting(gen_n, gen_a);
                }
                if (gen_kind == "bipartition") {
                    if (gen_a < 0) throw Error("--a is required for bipartition");
                    return bipartition_weighting(gen_n, gen_a);
                }
                if (gen_kind == "wide-range") {
                    if (gen_a < 0) throw Error("--a (the X side size) is required for wide-range");
                    return wide_range_weighting(gen_n, gen_a);
                }
                if (gen_j.empty()) throw Error("--j is required for extremal-k4");
                JChoice j = gen_j == "empty"  ? JChoice::Empty
                            : gen_j == "k1"   ? JChoice::K1
                            : gen_j == "k2"   ? JChoice::K2
                                              : JChoice::P2;
                return extremal_k4_free_weighting(gen_n, j);
            }();
            emit(weighting_to_json(w), output_path, out);
            if (pretty)
                err << "n=" << w.n() << " r=" << w.range() << " sum=" << w.weight_sum() << '\n';
            return kOk;
        }

        if (verify->parsed()) {
            nlohmann::json j;
            if (!verify_input.empty()) {
                std::ifstream f(verify_input);
                if (!f) throw Error("cannot open input file: " + verify_input);
                j = nlohmann::json::parse(f);
            } else {
                j = nlohmann::json::parse(in);
            }
            SignedWeighting w = weighting_from_json(j);
            Certificate cert = find_zero_sum_clique(w, verify_m);
            emit(certificate_to_json(cert), output_path, out);
            if (pretty) err << cert.context << '\n';
            return kOk;
        }

        if (pellcmd->parsed()) {
            auto sols = pell_family == "neg-pell" ? pell::neg_pell_stream(pell_count)
                                                  : pell::bal_clique_stream(pell_count);
            emit(pell_solutions_to_json(sols), output_path, out);
            return kOk;
        }

        if (threshold->parsed()) {
            if (threshold_n == 8 && !allow_large) {
                err << "error: the n=8 sweep covers 2^28 weightings; pass --allow-large to run it\n";
                return kRefused;
            }
            ThresholdOptions opt;
            opt.parallelism = parallelism;
            AuditReport r = audit_threshold_k4(threshold_n, opt);
            emit(report_to_json(r), output_path, out);
            summarize(r, pretty, err);
            return report_exit_code(r);
        }

        if (extremal->parsed()) {
            AuditReport r = audit_extremal_k4(extremal_n, parallelism);
            emit(report_to_json(r), output_path, out);
            summarize(r, pretty, err);
            return report_exit_code(r);
        }

        if (balanced->parsed()) {
            Construction kind =
                balanced_kind == "clique-neg" ? Construction::CliqueNeg : Construction::Bipartition;
            AuditReport r = audit_balanced_construction(kind, balanced_n, balanced_m_max);
            emit(report_to_json(r), output_path, out);
            summarize(r, pretty, err);
            return report_exit_code(r);
        }

        if (intersect->parsed()) {
            AuditReport r = audit_s1s2(parse_big(intersect_limit));
            emit(report_to_json(r), output_path, out);
            summarize(r, pretty, err);
            return report_exit_code(r);
        }
    } catch (const ScaleRefused& e) {
        err << "error: " << e.what() << '\n';
        return kRefused;
    } catch (const nlohmann::json::exception& e) {
        err << "error: bad JSON input: " << e.what() << '\n';
        return kBadInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
    err << "error: no subcommand\n";
    return kBadInput;
}

} // namespace zsum::cli
