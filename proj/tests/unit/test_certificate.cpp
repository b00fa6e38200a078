#include <doctest.h>

#include "cyclespec/certificate.hpp"
#include "cyclespec/pipeline.hpp"
#include "helpers.hpp"

using namespace cyclespec;
namespace tu = testutil;

TEST_CASE("spectrum certificate round trip and verification") {
    auto q8 = tu::cube(8);
    auto cert = consecutive_even_cycles(q8, 2);
    auto doc = make_document("spectrum q8 --k 2", graph_header(q8, GraphFormat::EdgeList), spectrum_to_json(cert, "bipartite"));
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["graph_header"]["n"] == 256);
    CHECK(doc["graph_header"]["e"] == 1024);
    CHECK(verify_document(q8, doc).ok);

    auto text = dump_document(doc);
    CHECK(text.back() == '\n');
    CHECK(dump_document(Json::parse(text)) == text);

    auto back = spectrum_from_json(doc["result"]);
    CHECK(back.cycles.size() == cert.cycles.size());
    CHECK(back.cycles[0].vertices == cert.cycles[0].vertices);
}

TEST_CASE("identical inputs give identical bytes") {
    auto g = tu::bipartite_gnp(80, 80, 0.12, 3);
    auto a = dump_document(make_document("x", graph_header(g, GraphFormat::EdgeList),
                                         spectrum_to_json(consecutive_even_cycles(g, 2), "bipartite")));
    auto b = dump_document(make_document("x", graph_header(g, GraphFormat::EdgeList),
                                         spectrum_to_json(consecutive_even_cycles(g, 2), "bipartite")));
    CHECK(a == b);
}

TEST_CASE("document verification rejects mismatches and tampering") {
    auto q8 = tu::cube(8);
    auto doc = make_document("c", graph_header(q8, GraphFormat::EdgeList), spectrum_to_json(consecutive_even_cycles(q8, 2), "bipartite"));

    CHECK_FALSE(verify_document(tu::cube(7), doc).ok);

    auto tampered = doc;
    auto& v = tampered["result"]["cycles"][0]["vertices"];
    auto t = v[0];
    v[0] = v[1];
    v[1] = t;
    auto r = verify_document(q8, tampered);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("not an edge") != std::string::npos);

    auto broken = doc;
    broken["result"].erase("cycles");
    CHECK_FALSE(verify_document(q8, broken).ok);

    auto schema = doc;
    schema["schema_version"] = "2";
    CHECK_FALSE(verify_document(q8, schema).ok);

    auto report = make_document("c", graph_header(q8, GraphFormat::EdgeList), hypothesis_report("nope"));
    CHECK_FALSE(verify_document(q8, report).ok);
}

TEST_CASE("single cycle documents") {
    auto k32 = tu::kab(32, 32);
    auto res = find_even_cycle_2k_bipartite(k32, 2);
    auto doc = make_document("e", graph_header(k32, GraphFormat::EdgeList), even_cycle_to_json(res));
    CHECK(doc["result"]["length"] == 4);
    CHECK(verify_document(k32, doc).ok);
    doc["result"]["length"] = 5;
    CHECK_FALSE(verify_document(k32, doc).ok);
}
