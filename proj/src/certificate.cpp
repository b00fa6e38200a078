#include "cyclespec/certificate.hpp"

#include "cyclespec/errors.hpp"

namespace cyclespec {

Json graph_header(const Graph& g, GraphFormat format) {
    Json h;
    h["n"] = g.vertex_count();
    h["e"] = g.edge_count();
    h["format"] = std::string(format_name(format));
    h["hash"] = "fnv1a64:" + fingerprint_hex(graph_fingerprint(g));
    return h;
}

Json make_document(std::string_view command, Json header, Json result) {
    Json doc;
    doc["schema_version"] = std::string(kSchemaVersion);
    doc["command"] = std::string(command);
    doc["graph_header"] = std::move(header);
    doc["result"] = std::move(result);
    return doc;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

Json spectrum_to_json(const CycleSpectrumCertificate& cert, std::string_view mode) {
    Json r;
    r["kind"] = "cycle-spectrum";
    r["mode"] = std::string(mode);
    r["guaranteed"] = cert.guaranteed;
    r["k"] = cert.k;
    r["girth_used"] = cert.girth_used;
    r["parity"] = std::string(parity_name(cert.parity));
    r["r"] = cert.r;
    r["interval_start"] = cert.interval_start;
    r["radius_bound"] = cert.radius_bound;
    r["host"] = cert.host;
    r["bfs_root"] = cert.bfs_root;
    r["layer"] = cert.layer;
    r["tree_root"] = cert.tree_root;
    r["chord_case"] = std::string(chord_case_name(cert.chord_case));
    r["promised_count"] = promised_count(cert.parity, cert.k, cert.girth_used);
    Json cycles = Json::array();
    for (const auto& c : cert.cycles) {
        Json jc;
        jc["length"] = c.length;
        jc["vertices"] = c.vertices;
        cycles.push_back(std::move(jc));
    }
    r["cycles"] = std::move(cycles);
    return r;
}

CycleSpectrumCertificate spectrum_from_json(const Json& r) {
    try {
        CycleSpectrumCertificate cert;
        cert.guaranteed = r.at("guaranteed").get<bool>();
        cert.k = r.at("k").get<int>();
        cert.girth_used = r.at("girth_used").get<std::size_t>();
        cert.parity = parse_parity(r.at("parity").get<std::string>());
        cert.r = r.at("r").get<int>();
        cert.interval_start = r.at("interval_start").get<int>();
        cert.radius_bound = r.at("radius_bound").get<int>();
        cert.host = r.at("host").get<std::string>();
        cert.bfs_root = r.at("bfs_root").get<Vertex>();
        cert.layer = r.at("layer").get<int>();
        cert.tree_root = r.at("tree_root").get<Vertex>();
        for (const auto& jc : r.at("cycles")) {
            SpectrumCycle c;
            c.length = jc.at("length").get<std::size_t>();
            c.vertices = jc.at("vertices").get<std::vector<Vertex>>();
            cert.cycles.push_back(std::move(c));
        }
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed cycle-spectrum certificate: ") + e.what());
    }
}

Json even_cycle_to_json(const EvenCycleResult& res) {
    Json r;
    r["kind"] = "single-cycle";
    r["k"] = res.k;
    r["length"] = res.cycle.size();
    r["branch"] = res.branch;
    r["gate_met"] = res.gate_met;
    r["girth"] = res.girth;
    r["host"] = res.host;
    r["vertices"] = res.cycle;
    return r;
}

EvenCycleResult even_cycle_from_json(const Json& r) {
    try {
        EvenCycleResult res;
        res.k = r.at("k").get<int>();
        res.branch = r.at("branch").get<std::string>();
        res.gate_met = r.at("gate_met").get<bool>();
        res.girth = r.at("girth").get<std::size_t>();
        res.host = r.at("host").get<std::string>();
        res.cycle = r.at("vertices").get<std::vector<Vertex>>();
        if (r.at("length").get<std::size_t>() != res.cycle.size())
            throw ParseError(0, "single-cycle length field disagrees with its vertex list");
        return res;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed single-cycle certificate: ") + e.what());
    }
}

Json hypothesis_report(std::string_view reason) {
    Json r;
    r["kind"] = "hypothesis-not-met";
    r["reason"] = std::string(reason);
    return r;
}

CycleCheck verify_document(const Graph& g, const Json& doc) {
    if (!doc.is_object() || !doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion)
        return {false, "unsupported or missing schema_version"};
    if (!doc.contains("graph_header") || !doc.contains("result")) return {false, "document lacks graph_header or result"};
    const Json& header = doc["graph_header"];
    Json expect = graph_header(g, GraphFormat::EdgeList);
    for (const char* key : {"n", "e", "hash"})
        if (!header.contains(key) || header[key] != expect[key])
            return {false, std::string("graph mismatch: ") + key + " differs from the certificate"};
    const Json& result = doc["result"];
    const std::string kind = result.value("kind", "");
    try {
        if (kind == "cycle-spectrum") return verify_spectrum(g, spectrum_from_json(result));
        if (kind == "single-cycle") return verify_even_cycle(g, even_cycle_from_json(result));
    } catch (const ParseError& e) {
        return {false, e.what()};
    }
    return {false, "result kind '" + kind + "' carries nothing to verify"};
}

}  // namespace cyclespec
