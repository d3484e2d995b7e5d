#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "cubelike/cayley.hpp"
#include "cubelike/coloring.hpp"
#include "cubelike/heuberger.hpp"
#include "cubelike/json.hpp"
#include "cubelike/payan.hpp"

namespace cubelike::cli {

namespace {

struct Common {
    std::string format = "text";
    std::string output;
};

/// Writes the final report once, to --output when given.
void emit(const Common& c, std::ostream& out, const std::string& text) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output);
    if (!f) throw std::runtime_error("cannot open output file " + c.output);
    f << text;
}

std::string coloring_line(const Coloring& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.colors.size(); ++i) os << (i ? " " : "") << c.colors[i];
    return os.str();
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output,-o", c.output, "Write the report to this file");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cubelike Cayley graphs: chromatic numbers, certificates, and sweeps", "cubelike"};
    app.require_subcommand(1);

    Common common;
    unsigned n = 0;
    unsigned z = 0;
    std::string set_text;
    int k = 0;
    std::uint64_t random_count = 0;
    std::uint64_t seed = 0;
    std::uint64_t recheck = 0;
    unsigned threads = 0;
    std::uint64_t chi_limit = 0;
    std::uint64_t sweep_chi_limit = kDefaultChiNodeLimit;
    bool exact_chi = false;
    unsigned radius = 0;
    int max_radius = -1;
    std::string input = "-";

    auto* chi = app.add_subcommand("chi", "Exact chromatic number (or k-colorability with --k)");
    auto* bip = app.add_subcommand("bipartite", "Bipartiteness by the parity criterion and by BFS");
    auto* certify = app.add_subcommand("certify", "Classify a connection set and emit a certificate");
    auto* verify_cert = app.add_subcommand("verify-certificate", "Independently re-check a certificate");
    auto* verify_payan = app.add_subcommand("verify-payan", "Sweep connection sets looking for chromatic number 3");
    auto* sokolova = app.add_subcommand("sokolova", "The explicit 4-coloring of Q^d_n");
    auto* lemma = app.add_subcommand("lemma-check", "Local check of the 3-coloring reduction");
    auto* qd = app.add_subcommand("qd-iso", "Check SACG(w_z | 2I_z) is isomorphic to Q^d_{z-1}");

    for (auto* sub : {chi, bip, certify}) {
        sub->add_option("--n", n, "Dimension")->required();
        sub->add_option("--set", set_text, "Connection set as bitmask integers, e.g. 1,2,4,8,15")->required();
        add_common(sub, common);
    }
    chi->add_option("--k", k, "Decide k-colorability instead of computing chi")->check(CLI::PositiveNumber);
    chi->add_option("--node-limit", chi_limit, "Search nodes per palette size before giving up (0 = unlimited)");
    certify->add_flag("--exact-chi", exact_chi, "Also compute the exact chromatic number");

    verify_cert->add_option("--input,-i", input, "Certificate file, '-' for stdin");
    add_common(verify_cert, common);

    verify_payan->add_option("--n", n, "Dimension")->required();
    verify_payan->add_option("--random", random_count, "Sample this many random sets instead of all of them");
    verify_payan->add_option("--seed", seed, "Seed for --random");
    verify_payan->add_flag("--exact-chi", exact_chi, "Compute exact chromatic numbers");
    verify_payan->add_option("--node-limit", sweep_chi_limit,
                             "Search nodes per palette size for --exact-chi (0 = unlimited)")
        ->capture_default_str();
    verify_payan->add_option("--recheck", recheck, "Re-verify every k-th certificate through JSON");
    verify_payan->add_option("--threads", threads, "Worker threads (default: CUBELIKE_THREADS or all cores)");
    add_common(verify_payan, common);

    sokolova->add_option("--n", n, "Dimension")->required();
    add_common(sokolova, common);

    lemma->add_option("--n", n, "Dimension (2 or 4)")->required();
    lemma->add_option("--radius", radius, "Lift radius");
    lemma->add_option("--max-radius", max_radius, "Search radii 0..R for the first that passes");
    add_common(lemma, common);

    qd->add_option("--z", z, "Odd support size >= 3")->required();
    add_common(qd, common);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    const bool json = common.format == "json";
    try {
        if (chi->parsed()) {
            const auto s = ConnectionSet::parse(n, set_text);
            const auto g = build_graph(n, s);
            std::ostringstream os;
            if (k > 0) {
                if (g.has_loop()) {
                    os << (json ? Json{{"k", k}, {"status", "has_loop"}}.dump(2) + "\n" : "has loop: not properly colorable\n");
                    emit(common, out, os.str());
                    return kNegative;
                }
                auto c = k_colorable(g, k);
                if (json) {
                    Json j{{"k", k}, {"status", c ? "colorable" : "uncolorable"}};
                    if (c) j["coloring"] = to_json(*c);
                    os << j.dump(2) << '\n';
                } else {
                    os << k << "-colorable: " << (c ? "yes" : "no") << '\n';
                    if (c) os << "coloring: " << coloring_line(*c) << '\n';
                }
                emit(common, out, os.str());
                return kOk;
            }
            const auto r = chromatic_number(g, chi_limit);
            if (json) {
                os << to_json(r).dump(2) << '\n';
            } else if (r.status == SolveStatus::HasLoop) {
                os << "has loop: not properly colorable\n";
            } else if (r.status == SolveStatus::Unresolved) {
                os << "chi in [" << r.proven_lower << ", " << r.k << "] (node limit reached)\n"
                   << "clique bound = " << r.clique_bound << '\n'
                   << "coloring: " << coloring_line(*r.witness) << '\n';
            } else {
                os << "chi = " << *r.chi << '\n' << "clique bound = " << r.clique_bound << '\n'
                   << "coloring: " << coloring_line(*r.witness) << '\n';
            }
            emit(common, out, os.str());
            return r.status == SolveStatus::HasLoop ? kNegative : kOk;
        }

        if (bip->parsed()) {
            const auto s = ConnectionSet::parse(n, set_text);
            const auto g = build_graph(n, s);
            const bool bfs = is_bipartite_bfs(g);
            std::ostringstream os;
            if (s.has_loop()) {
                os << (json ? Json{{"has_loop", true}, {"bfs", false}}.dump(2) + "\n" : "has loop: not bipartite\n");
                emit(common, out, os.str());
                return kNegative;
            }
            const bool parity = is_bipartite_parity(s);
            if (json)
                os << Json{{"parity", parity}, {"bfs", bfs}, {"agree", parity == bfs}}.dump(2) << '\n';
            else
                os << "parity: " << (parity ? "bipartite" : "nonbipartite") << '\n'
                   << "bfs:    " << (bfs ? "bipartite" : "nonbipartite") << '\n';
            emit(common, out, os.str());
            return kOk;
        }

        if (certify->parsed()) {
            const auto s = ConnectionSet::parse(n, set_text);
            build_graph(n, s);  // dimension cap
            const auto cert = classify(s, exact_chi);
            std::ostringstream os;
            if (json) {
                os << to_json(cert).dump(2) << '\n';
            } else {
                os << "classification: " << to_string(cert.classification) << '\n';
                if (cert.functional) os << "functional: " << *cert.functional << '\n';
                if (cert.odd_column) {
                    os << "z = " << cert.odd_column->z << '\n' << "support:";
                    for (auto i : cert.odd_column->support) os << ' ' << i + 1;
                    os << '\n';
                }
                if (cert.witness) os << "witness verified: " << (cert.witness_verified ? "true" : "false") << '\n';
                if (cert.chi) os << "chi = " << *cert.chi << '\n';
            }
            emit(common, out, os.str());
            return cert.classification == Classification::HasLoop ? kNegative : kOk;
        }

        if (verify_cert->parsed()) {
            std::string text;
            if (input == "-") {
                text.assign(std::istreambuf_iterator<char>(std::cin), {});
            } else {
                std::ifstream f(input);
                if (!f) throw std::runtime_error("cannot open " + input);
                text.assign(std::istreambuf_iterator<char>(f), {});
            }
            PayanCertificate cert;
            try {
                cert = certificate_from_json(text);
            } catch (const SchemaError& e) {
                err << "schema error: " << e.what() << '\n';
                return kUsage;
            }
            const bool ok = verify_certificate(cert);
            emit(common, out, json ? Json{{"valid", ok}}.dump(2) + "\n" : std::string(ok ? "valid\n" : "invalid\n"));
            return ok ? kOk : kNegative;
        }

        if (verify_payan->parsed()) {
            SweepOptions opt;
            opt.n = n;
            opt.mode = random_count > 0 ? SweepMode::Random : SweepMode::Exhaustive;
            opt.count = random_count;
            opt.seed = seed;
            opt.exact_chi = exact_chi;
            opt.chi_node_limit = sweep_chi_limit;
            opt.recheck_every = recheck;
            opt.threads = threads;
            const auto summary = sweep(opt);
            emit(common, out, json ? to_json(summary).dump(2) + "\n" : render_table(summary));
            return summary.violations.empty() ? kOk : kNegative;
        }

        if (sokolova->parsed()) {
            const auto c = sokolova_coloring(n);
            const bool ok = verify_coloring(cube_with_diagonals(n), c);
            std::ostringstream os;
            if (json) {
                Json j = to_json(c);
                j["n"] = n;
                j["verified"] = ok;
                os << j.dump(2) << '\n';
            } else {
                os << "n: " << n << '\n' << "k: " << c.k << '\n' << "colors: " << coloring_line(c) << '\n'
                   << "verified: " << (ok ? "true" : "false") << '\n';
            }
            emit(common, out, os.str());
            return ok ? kOk : kNegative;
        }

        if (lemma->parsed()) {
            std::optional<LocalCheckReport> rep;
            if (max_radius >= 0)
                rep = find_sufficient_radius(n, static_cast<unsigned>(max_radius));
            else
                rep = lemma_local_check(n, radius);
            std::ostringstream os;
            if (!rep) {
                os << (json ? Json{{"n", n}, {"all_pass", false}, {"max_radius", max_radius}}.dump(2) + "\n"
                            : "no radius up to " + std::to_string(max_radius) + " passes\n");
                emit(common, out, os.str());
                return kNegative;
            }
            if (json) {
                os << to_json(*rep).dump(2) << '\n';
            } else {
                os << "n = " << rep->n << ", radius = " << rep->radius << '\n';
                for (const auto& c : rep->classes)
                    os << "  " << std::left << std::setw(4) << c.edge_class << (c.pass ? "pass" : "FAIL")
                       << (c.vacuous ? " (vacuous)" : "") << "  edges=" << c.edges_checked
                       << " lift=" << c.lift_size << " colorings=" << c.colorings_enumerated << '\n';
            }
            emit(common, out, os.str());
            return rep->all_pass() ? kOk : kNegative;
        }

        if (qd->parsed()) {
            const bool ok = verify_qd_iso(z);
            emit(common, out,
                 json ? Json{{"z", z}, {"isomorphic", ok}}.dump(2) + "\n"
                      : "SACG(w_" + std::to_string(z) + " | 2I) ~ Q^d_" + std::to_string(z - 1) + ": " +
                            (ok ? "true" : "false") + "\n");
            return ok ? kOk : kNegative;
        }
    } catch (const LoopError& e) {
        err << e.what() << '\n';
        return kNegative;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace cubelike::cli
