// cyclespec command-line tool.
//
// Exit codes: 0 success, 1 hypothesis not met, 2 parse or usage error,
// 3 verification failure, 4 internal contradiction (a bug).

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclespec/certificate.hpp"
#include "cyclespec/chordlemma.hpp"
#include "cyclespec/errors.hpp"
#include "cyclespec/generators.hpp"
#include "cyclespec/graph_io.hpp"
#include "cyclespec/oracle.hpp"
#include "cyclespec/pipeline.hpp"
#include "cyclespec/queries.hpp"
#include "cyclespec/rng.hpp"

namespace cs = cyclespec;

namespace {

enum Exit : int { kOk = 0, kHypothesis = 1, kParse = 2, kVerify = 3, kInternal = 4 };

struct Globals {
    bool json = false;
    std::uint64_t seed = 0;
    bool force = false;
    std::string output;
    std::string format = "auto";
    std::string command;
};

cs::GraphFormat parse_format(const std::string& f) {
    if (f == "auto") return cs::GraphFormat::Auto;
    if (f == "edgelist") return cs::GraphFormat::EdgeList;
    if (f == "dimacs") return cs::GraphFormat::Dimacs;
    throw cs::InvalidArgument("unknown format '" + f + "'");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cs::ParseError(0, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct LoadedGraph {
    cs::Graph graph;
    cs::GraphFormat format;
};

LoadedGraph load(const Globals& g, const std::string& path) {
    std::string text = slurp(path);
    cs::GraphFormat f = parse_format(g.format);
    if (f == cs::GraphFormat::Auto) f = cs::detect_format(text);
    return {cs::parse_graph(text, f), f};
}

void emit(const Globals& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out) throw cs::ParseError(0, "cannot write " + g.output);
    out << text;
}

std::string opt_len(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "inf"; }

cs::Json opt_json(const std::optional<std::size_t>& v) { return v ? cs::Json(*v) : cs::Json(nullptr); }

int cmd_analyze(const Globals& glob, const std::string& path) {
    auto [graph, format] = load(glob, path);
    cs::Json r;
    r["kind"] = "analysis-report";
    r["n"] = graph.vertex_count();
    r["e"] = graph.edge_count();
    if (graph.empty()) {
        r["average_degree"] = nullptr;
    } else {
        r["average_degree"] = cs::to_string(cs::average_degree(graph));
    }
    auto bp = cs::bipartition(graph);
    r["bipartite"] = bp.is_bipartite();
    if (!bp.is_bipartite()) r["odd_cycle_witness"] = bp.odd_cycle_witness;
    auto gi = cs::girth(graph);
    auto eg = cs::even_girth(graph);
    r["girth"] = opt_json(gi);
    r["even_girth"] = opt_json(eg);
    auto comps = cs::connected_components(graph);
    r["components"] = comps.size();
    cs::Json radius = nullptr, center = nullptr;
    if (comps.size() == 1) {
        auto rc = cs::radius_center(graph);
        radius = rc.radius;
        center = rc.center;
    }
    r["radius"] = radius;
    r["center"] = center;
    if (!graph.empty()) {
        auto dense = cs::densest_component(graph);
        auto rc = cs::radius_center(dense.graph);
        cs::Json d;
        d["n"] = dense.graph.vertex_count();
        d["e"] = dense.graph.edge_count();
        d["average_degree"] = cs::to_string(cs::average_degree(dense.graph));
        d["radius"] = rc.radius;
        d["center"] = dense.to_host[static_cast<std::size_t>(rc.center)];
        r["densest_component"] = std::move(d);
    } else {
        r["densest_component"] = nullptr;
    }

    if (glob.json) {
        emit(glob, cs::dump_document(cs::make_document(glob.command, cs::graph_header(graph, format), r)));
        return kOk;
    }
    std::ostringstream out;
    out << "n                " << graph.vertex_count() << "\n"
        << "e                " << graph.edge_count() << "\n"
        << "average degree   " << (graph.empty() ? "undefined" : r["average_degree"].get<std::string>()) << "\n"
        << "bipartite        " << (bp.is_bipartite() ? "yes" : "no");
    if (!bp.is_bipartite()) {
        out << " (odd cycle:";
        for (auto v : bp.odd_cycle_witness) out << ' ' << v;
        out << ")";
    }
    out << "\n"
        << "girth            " << opt_len(gi) << "\n"
        << "even girth       " << opt_len(eg) << "\n"
        << "components       " << comps.size() << "\n"
        << "radius           "
        << (radius.is_null() ? (graph.empty() ? "n/a" : "n/a (disconnected)") : std::to_string(radius.get<int>()))
        << "\n";
    if (!graph.empty()) {
        const auto& d = r["densest_component"];
        out << "densest component n=" << d["n"] << " e=" << d["e"] << " avg=" << d["average_degree"].get<std::string>()
            << " radius=" << d["radius"] << "\n";
    }
    emit(glob, out.str());
    return kOk;
}

int report_hypothesis(const Globals& glob, const cs::Graph& graph, cs::GraphFormat format, const std::string& why) {
    std::cerr << "hypothesis not met: " << why << "\n";
    emit(glob, cs::dump_document(cs::make_document(glob.command, cs::graph_header(graph, format), cs::hypothesis_report(why))));
    return kHypothesis;
}

int cmd_spectrum(const Globals& glob, const std::string& path, int k, const std::string& mode) {
    auto [graph, format] = load(glob, path);
    const auto gate = glob.force ? cs::GateMode::Permissive : cs::GateMode::Strict;
    try {
        cs::CycleSpectrumCertificate cert;
        if (mode == "bipartite")
            cert = cs::consecutive_even_cycles(graph, k, gate);
        else if (mode == "general")
            cert = cs::consecutive_even_cycles_general(graph, k, gate);
        else if (mode == "parity")
            cert = cs::parity_interval_cycles(graph, k, gate);
        else
            throw cs::InvalidArgument("unknown mode '" + mode + "'");
        emit(glob, cs::dump_document(
                       cs::make_document(glob.command, cs::graph_header(graph, format), cs::spectrum_to_json(cert, mode))));
        return kOk;
    } catch (const cs::HypothesisNotMet& e) {
        return report_hypothesis(glob, graph, format, e.what());
    } catch (const cs::NotBipartite& e) {
        return report_hypothesis(glob, graph, format, e.what());
    }
}

int cmd_evencycle(const Globals& glob, const std::string& path, int k, bool bipartite) {
    auto [graph, format] = load(glob, path);
    const auto gate = glob.force ? cs::GateMode::Permissive : cs::GateMode::Strict;
    try {
        auto res = bipartite ? cs::find_even_cycle_2k_bipartite(graph, k, gate) : cs::find_even_cycle_2k(graph, k, gate);
        emit(glob, cs::dump_document(
                       cs::make_document(glob.command, cs::graph_header(graph, format), cs::even_cycle_to_json(res))));
        return kOk;
    } catch (const cs::HypothesisNotMet& e) {
        return report_hypothesis(glob, graph, format, e.what());
    } catch (const cs::NotBipartite& e) {
        return report_hypothesis(glob, graph, format, e.what());
    }
}

int cmd_verify(const Globals& glob, const std::string& path, const std::string& cert_path) {
    auto [graph, format] = load(glob, path);
    cs::Json doc;
    try {
        doc = cs::Json::parse(slurp(cert_path));
    } catch (const nlohmann::json::exception& e) {
        throw cs::ParseError(0, std::string("certificate is not valid JSON: ") + e.what());
    }
    cs::CycleCheck verdict = cs::verify_document(graph, doc);
    if (glob.json) {
        cs::Json r;
        r["kind"] = "verification-verdict";
        r["ok"] = verdict.ok;
        r["reason"] = verdict.reason;
        emit(glob, cs::dump_document(cs::make_document(glob.command, cs::graph_header(graph, format), r)));
    } else {
        emit(glob, verdict.ok ? "OK\n" : "FAILED: " + verdict.reason + "\n");
    }
    return verdict.ok ? kOk : kVerify;
}

int cmd_gen(const Globals& glob, cs::GenSpec spec) {
    spec.seed = glob.seed;
    cs::Graph g = cs::generate(spec);
    emit(glob, glob.format == "dimacs" ? cs::serialize_dimacs(g, spec.describe()) : cs::serialize_edge_list(g, spec.describe()));
    return kOk;
}

std::string join_set(const std::set<int>& s) {
    std::string out = "{";
    for (int x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
    return out + "}";
}

int cmd_oracle_spectrum(const Globals& glob, const std::string& path, int max_len) {
    auto [graph, format] = load(glob, path);
    auto lengths = cs::brute_cycle_spectrum(graph, max_len, cs::oracle_budget_from_env());
    if (glob.json) {
        cs::Json r;
        r["kind"] = "oracle-spectrum";
        r["max_len"] = max_len;
        r["lengths"] = lengths;
        emit(glob, cs::dump_document(cs::make_document(glob.command, cs::graph_header(graph, format), r)));
    } else {
        emit(glob, join_set(lengths) + "\n");
    }
    return kOk;
}

int cmd_oracle_abpaths(const Globals& glob, int length, const std::vector<int>& chord, const std::vector<int>& a_pos) {
    if (chord.size() != 2) throw cs::InvalidArgument("--chord takes two positions");
    cs::ChordedCycle h;
    for (int i = 0; i < length; ++i) h.cycle.push_back(i);
    h.chord = {std::min(chord[0], chord[1]), std::max(chord[0], chord[1])};
    auto part = cs::PartitionAB::from_a_positions(length, a_pos);
    auto oracle = cs::brute_ab_path_lengths(h, part);
    auto constructive = cs::path_spectrum_constructive(h, part);
    std::set<int> built;
    for (const auto& [l, _] : constructive.paths) built.insert(l);
    if (glob.json) {
        cs::Json r;
        r["kind"] = "oracle-abpaths";
        r["length"] = length;
        r["oracle"] = oracle;
        r["constructive"] = built;
        r["bipartite_exception"] = constructive.bipartite_exception;
        r["branch"] = std::string(cs::chord_case_name(constructive.trace.branch));
        emit(glob, r.dump(2) + "\n");
    } else {
        emit(glob, "oracle       " + join_set(oracle) + "\nconstructive " + join_set(built) + "\nbranch       " +
                       std::string(cs::chord_case_name(constructive.trace.branch)) + "\n");
    }
    return oracle == built ? kOk : kInternal;
}

struct TrialOutcome {
    std::string line;
    int code = kOk;
};

TrialOutcome run_fuzz_trial(int k, std::uint64_t seed, int n_min, int n_max) {
    cs::SplitMix64 rng(seed);
    const int n = n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max - n_min + 1)));
    const double p = std::min(1.0, 4.5 * k / n);
    cs::Graph g = cs::generate(cs::GenSpec::random_bipartite(n, n, p, rng.next()));
    std::ostringstream line;
    line << "seed=" << seed << " n=" << g.vertex_count() << " e=" << g.edge_count() << " k=" << k;
    TrialOutcome out;
    try {
        auto cert = cs::consecutive_even_cycles(g, k);
        auto chk = cs::verify_spectrum(g, cert);
        line << " status=" << (chk.ok ? "ok" : "verify-failed") << " cycles=" << cert.cycles.size() << " lengths="
             << cert.cycles.front().length << ".." << cert.cycles.back().length;
        if (!chk.ok) {
            line << " reason=\"" << chk.reason << "\"";
            out.code = kVerify;
        }
    } catch (const cs::HypothesisNotMet& e) {
        line << " status=skipped reason=\"" << e.what() << "\"";
    } catch (const cs::InternalContradiction& e) {
        line << " status=internal-contradiction reason=\"" << e.what() << "\"";
        out.code = kInternal;
    }
    out.line = line.str();
    return out;
}

int cmd_fuzz(const Globals& glob, int k, int trials, int jobs, int n_min, int n_max) {
    if (trials < 0 || jobs < 1 || n_min < 1 || n_max < n_min) throw cs::InvalidArgument("bad fuzz parameters");
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
    for (int start = 0; start < trials; start += jobs) {
        std::vector<std::future<TrialOutcome>> batch;
        for (int i = start; i < std::min(trials, start + jobs); ++i)
            batch.push_back(std::async(std::launch::async, run_fuzz_trial, k, glob.seed + static_cast<std::uint64_t>(i),
                                       n_min, n_max));
        for (std::size_t j = 0; j < batch.size(); ++j) outcomes[static_cast<std::size_t>(start) + j] = batch[j].get();
    }
    std::ostringstream out;
    int code = kOk;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        out << "trial " << i << " " << outcomes[i].line << "\n";
        code = std::max(code, outcomes[i].code);
    }
    emit(glob, out.str());
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclespec: certified cycle spectra from dense graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals glob;
    for (int i = 1; i < argc; ++i) glob.command += (i > 1 ? " " : "") + std::string(argv[i]);
    app.add_flag("--json", glob.json, "Emit JSON instead of a table");
    app.add_option("--seed", glob.seed, "Seed for all randomness")->default_val(0);
    app.add_flag("--strict,!--force", glob.force, "Refuse (--strict, default) or attempt (--force) outside hypotheses");
    app.add_option("-o,--output", glob.output, "Write output to FILE instead of stdout");
    app.add_option("--format", glob.format, "Input format")->check(CLI::IsMember({"auto", "edgelist", "dimacs"}));

    std::function<int()> action;

    std::string file, cert_file, mode = "bipartite";
    int k = 2;
    bool bipartite = false;

    auto* analyze = app.add_subcommand("analyze", "Structural report for a graph");
    analyze->add_option("file", file, "Graph file")->required();
    analyze->callback([&] { action = [&] { return cmd_analyze(glob, file); }; });

    auto* spectrum = app.add_subcommand("spectrum", "Certify cycles of consecutive lengths");
    spectrum->add_option("file", file, "Graph file")->required();
    spectrum->add_option("--k", k, "Parameter k >= 2")->required();
    spectrum->add_option("--mode", mode, "bipartite | general | parity")
        ->check(CLI::IsMember({"bipartite", "general", "parity"}));
    spectrum->callback([&] { action = [&] { return cmd_spectrum(glob, file, k, mode); }; });

    auto* evencycle = app.add_subcommand("evencycle", "Certify a cycle of length exactly 2k");
    evencycle->add_option("file", file, "Graph file")->required();
    evencycle->add_option("--k", k, "Parameter k >= 2")->required();
    evencycle->add_flag("--bipartite", bipartite, "Use the bipartite size gate directly");
    evencycle->callback([&] { action = [&] { return cmd_evencycle(glob, file, k, bipartite); }; });

    auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
    verify->add_option("file", file, "Graph file")->required();
    verify->add_option("--cert", cert_file, "Certificate JSON")->required();
    verify->callback([&] { action = [&] { return cmd_verify(glob, file, cert_file); }; });

    cs::GenSpec spec;
    std::string model;
    auto* gen = app.add_subcommand("gen", "Generate a test graph");
    gen->add_option("--model", model, "Graph family")
        ->required()
        ->check(CLI::IsMember({"hypercube", "complete-bipartite", "random-bipartite", "regular-bipartite", "projective",
                               "complete", "cycle", "random"}));
    gen->add_option("--d", spec.d, "Hypercube dimension or regular degree");
    gen->add_option("--a", spec.a, "Left side of a complete bipartite graph");
    gen->add_option("--b", spec.b, "Right side of a complete bipartite graph");
    gen->add_option("--n", spec.n, "Order (complete, cycle, random) or side (regular-bipartite)");
    gen->add_option("--n1", spec.n1, "Left side (random-bipartite)");
    gen->add_option("--n2", spec.n2, "Right side (random-bipartite)");
    gen->add_option("--q", spec.q, "Prime order of the projective plane");
    gen->add_option("--p", spec.p, "Edge probability");
    gen->callback([&] {
        spec.model = cs::parse_model(model);
        action = [&] { return cmd_gen(glob, spec); };
    });

    auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
    oracle->require_subcommand(1);
    int max_len = 12;
    auto* ospec = oracle->add_subcommand("spectrum", "Exact cycle lengths up to --max-len");
    ospec->add_option("file", file, "Graph file")->required();
    ospec->add_option("--max-len", max_len, "Longest length to test")->required();
    ospec->callback([&] { action = [&] { return cmd_oracle_spectrum(glob, file, max_len); }; });
    int length = 0;
    std::vector<int> chord, a_pos;
    auto* oab = oracle->add_subcommand("abpaths", "A-B path lengths in a chorded cycle (oracle vs constructive)");
    oab->add_option("--length", length, "Cycle length L")->required();
    oab->add_option("--chord", chord, "Chord positions i j")->required()->expected(2);
    oab->add_option("--a-positions", a_pos, "Positions in class A")->required()->delimiter(',');
    oab->callback([&] { action = [&] { return cmd_oracle_abpaths(glob, length, chord, a_pos); }; });

    int trials = 10, jobs = 1, n_min = 50, n_max = 500;
    auto* fuzz = app.add_subcommand("fuzz", "Random bipartite trials of the consecutive-even-lengths driver");
    fuzz->add_option("--k", k, "Parameter k >= 2")->required();
    fuzz->add_option("--trials", trials, "Number of trials");
    fuzz->add_option("--jobs", jobs, "Parallel trials");
    fuzz->add_option("--n-min", n_min, "Smallest side size");
    fuzz->add_option("--n-max", n_max, "Largest side size");
    fuzz->callback([&] { action = [&] { return cmd_fuzz(glob, k, trials, jobs, n_min, n_max); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    } catch (const cs::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }

    try {
        return action();
    } catch (const cs::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const cs::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const cs::HypothesisNotMet& e) {
        std::cerr << "hypothesis not met: " << e.what() << "\n";
        return kHypothesis;
    } catch (const cs::NotBipartite& e) {
        std::cerr << "hypothesis not met: " << e.what() << "\n";
        return kHypothesis;
    } catch (const cs::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kHypothesis;
    } catch (const cs::InternalContradiction& e) {
        std::cerr << "internal contradiction (bug): " << e.what() << "\n";
        return kInternal;
    }
}
