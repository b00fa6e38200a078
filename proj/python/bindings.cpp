#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclespec/certificate.hpp"
#include "cyclespec/chordlemma.hpp"
#include "cyclespec/errors.hpp"
#include "cyclespec/generators.hpp"
#include "cyclespec/graph_io.hpp"
#include "cyclespec/oracle.hpp"
#include "cyclespec/pipeline.hpp"
#include "cyclespec/queries.hpp"

namespace py = pybind11;
namespace cs = cyclespec;

namespace {

cs::GateMode gate(bool force) { return force ? cs::GateMode::Permissive : cs::GateMode::Strict; }

// Certificates cross the boundary as JSON text; the Python side decodes them.
std::string spectrum_document(const cs::Graph& g, int k, const std::string& mode, bool force) {
    cs::CycleSpectrumCertificate cert;
    if (mode == "bipartite")
        cert = cs::consecutive_even_cycles(g, k, gate(force));
    else if (mode == "general")
        cert = cs::consecutive_even_cycles_general(g, k, gate(force));
    else if (mode == "parity")
        cert = cs::parity_interval_cycles(g, k, gate(force));
    else
        throw cs::InvalidArgument("unknown mode '" + mode + "'");
    return cs::dump_document(cs::make_document("spectrum --k " + std::to_string(k) + " --mode " + mode,
                                               cs::graph_header(g, cs::GraphFormat::EdgeList),
                                               cs::spectrum_to_json(cert, mode)));
}

std::string even_cycle_document(const cs::Graph& g, int k, bool bipartite, bool force) {
    auto res = bipartite ? cs::find_even_cycle_2k_bipartite(g, k, gate(force)) : cs::find_even_cycle_2k(g, k, gate(force));
    return cs::dump_document(cs::make_document("evencycle --k " + std::to_string(k),
                                               cs::graph_header(g, cs::GraphFormat::EdgeList),
                                               cs::even_cycle_to_json(res)));
}

py::tuple verify(const cs::Graph& g, const std::string& document) {
    auto verdict = cs::verify_document(g, cs::Json::parse(document));
    return py::make_tuple(verdict.ok, verdict.reason);
}

std::vector<int> ab_path_lengths(int length, std::pair<int, int> chord, const std::vector<int>& a_positions,
                                 bool oracle) {
    cs::ChordedCycle h;
    for (int i = 0; i < length; ++i) h.cycle.push_back(i);
    h.chord = chord;
    auto part = cs::PartitionAB::from_a_positions(length, a_positions);
    std::vector<int> out;
    if (oracle) {
        for (int l : cs::brute_ab_path_lengths(h, part)) out.push_back(l);
    } else {
        for (const auto& kv : cs::path_spectrum_constructive(h, part).paths) out.push_back(kv.first);
    }
    return out;
}

cs::Graph generate(const std::string& model, py::kwargs kw) {
    cs::GenSpec s;
    s.model = cs::parse_model(model);
    for (auto item : kw) {
        const auto key = item.first.cast<std::string>();
        if (key == "d") s.d = item.second.cast<int>();
        else if (key == "a") s.a = item.second.cast<int>();
        else if (key == "b") s.b = item.second.cast<int>();
        else if (key == "n") s.n = item.second.cast<int>();
        else if (key == "n1") s.n1 = item.second.cast<int>();
        else if (key == "n2") s.n2 = item.second.cast<int>();
        else if (key == "q") s.q = item.second.cast<int>();
        else if (key == "p") s.p = item.second.cast<double>();
        else if (key == "seed") s.seed = item.second.cast<std::uint64_t>();
        else throw cs::InvalidArgument("unknown generator parameter '" + key + "'");
    }
    return cs::generate(s);
}

}  // namespace

PYBIND11_MODULE(_cyclespec, m) {
    m.doc() = "Certified cycle spectra of dense graphs";

    auto base = py::register_exception<cs::Error>(m, "Error");
    py::register_exception<cs::ParseError>(m, "ParseError", base.ptr());
    py::register_exception<cs::InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<cs::HypothesisNotMet>(m, "HypothesisNotMet", base.ptr());
    py::register_exception<cs::NotBipartite>(m, "NotBipartite", base.ptr());
    py::register_exception<cs::InternalContradiction>(m, "InternalContradiction", base.ptr());
    py::register_exception<cs::BudgetExceeded>(m, "BudgetExceeded", base.ptr());

    py::class_<cs::Graph>(m, "Graph")
        .def(py::init([](cs::Vertex n, const std::vector<cs::Edge>& edges) { return cs::Graph(n, edges); }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &cs::Graph::vertex_count)
        .def_property_readonly("e", &cs::Graph::edge_count)
        .def("edges", &cs::Graph::edges)
        .def("neighbors", [](const cs::Graph& g, cs::Vertex v) {
            if (!g.contains(v)) throw cs::InvalidArgument("vertex out of range");
            auto nb = g.neighbors(v);
            return std::vector<cs::Vertex>(nb.begin(), nb.end());
        })
        .def("has_edge", &cs::Graph::has_edge)
        .def("__eq__", [](const cs::Graph& a, const cs::Graph& b) { return a == b; })
        .def("__repr__", [](const cs::Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " e=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("parse_graph", [](const std::string& text) { return cs::parse_graph(text); }, py::arg("text"));
    m.def("serialize_edge_list", [](const cs::Graph& g) { return cs::serialize_edge_list(g); });
    m.def("fingerprint", [](const cs::Graph& g) { return cs::fingerprint_hex(cs::graph_fingerprint(g)); });

    m.def("average_degree", [](const cs::Graph& g) { return cs::to_string(cs::average_degree(g)); });
    m.def("girth", &cs::girth);
    m.def("even_girth", &cs::even_girth);
    m.def("shortest_cycle", &cs::shortest_cycle);
    m.def("bipartition", [](const cs::Graph& g) {
        auto b = cs::bipartition(g);
        return py::make_tuple(b.is_bipartite(), b.x, b.y, b.odd_cycle_witness);
    });
    m.def("radius_center", [](const cs::Graph& g) {
        auto rc = cs::radius_center(g);
        return py::make_tuple(rc.radius, rc.center);
    });
    m.def("bfs_layers", [](const cs::Graph& g, cs::Vertex root) { return cs::bfs_layers(g, root).layers; });
    m.def("verify_cycle", [](const cs::Graph& g, const std::vector<cs::Vertex>& c) {
        auto r = cs::verify_cycle(g, c);
        return py::make_tuple(r.ok, r.reason);
    });

    m.def("spectrum_document", &spectrum_document, py::arg("graph"), py::arg("k"), py::arg("mode") = "bipartite",
          py::arg("force") = false);
    m.def("even_cycle_document", &even_cycle_document, py::arg("graph"), py::arg("k"), py::arg("bipartite") = false,
          py::arg("force") = false);
    m.def("verify_document", &verify, py::arg("graph"), py::arg("document"));

    m.def("generate", &generate, py::arg("model"));
    m.def("brute_cycle_spectrum",
          [](const cs::Graph& g, int max_len) {
              auto s = cs::brute_cycle_spectrum(g, max_len, cs::oracle_budget_from_env());
              return std::vector<int>(s.begin(), s.end());
          },
          py::arg("graph"), py::arg("max_len"));
    m.def("ab_path_lengths", &ab_path_lengths, py::arg("length"), py::arg("chord"), py::arg("a_positions"),
          py::arg("oracle") = false);
}
