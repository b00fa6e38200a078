#include "cyclespec/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "cyclespec/errors.hpp"

namespace cyclespec {
namespace {

constexpr std::int64_t kMaxVertexId = std::numeric_limits<Vertex>::max() - 1;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::int64_t parse_id(std::string_view tok, std::size_t line) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    if (value > kMaxVertexId) throw ParseError(line, "vertex id " + std::string(tok) + " too large");
    return value;
}

// Iterates lines with 1-based numbers.
template <class F>
void for_each_line(std::string_view text, F&& f) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        ++line_no;
        f(trim(text.substr(pos, nl - pos)), line_no);
        pos = nl + 1;
    }
}

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    std::int64_t n = 0;
    for_each_line(text, [&](std::string_view line, std::size_t no) {
        if (line.empty()) return;
        if (line.front() == '#') {
            auto body = trim(line.substr(1));
            if (body.starts_with("n=")) {
                auto toks = split_ws(body.substr(2));
                if (!toks.empty()) n = std::max(n, parse_id(toks.front(), no));
            }
            return;
        }
        auto toks = split_ws(line);
        if (toks.size() != 2) throw ParseError(no, "expected 'u v', got '" + std::string(line) + "'");
        auto u = parse_id(toks[0], no);
        auto v = parse_id(toks[1], no);
        if (u == v) throw ParseError(no, "self-loop at vertex " + std::to_string(u));
        n = std::max({n, u + 1, v + 1});
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    });
    return Graph(static_cast<Vertex>(n), edges);
}

Graph parse_dimacs(std::string_view text) {
    std::vector<Edge> edges;
    std::int64_t n = -1;
    for_each_line(text, [&](std::string_view line, std::size_t no) {
        if (line.empty() || line.front() == 'c') return;
        auto toks = split_ws(line);
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError(no, "duplicate 'p' header");
            if (toks.size() != 4) throw ParseError(no, "expected 'p edge <n> <m>'");
            n = parse_id(toks[2], no);
            parse_id(toks[3], no);
            return;
        }
        if (toks[0] == "e") {
            if (n < 0) throw ParseError(no, "'e' line before 'p' header");
            if (toks.size() != 3) throw ParseError(no, "expected 'e <u> <v>'");
            auto u = parse_id(toks[1], no);
            auto v = parse_id(toks[2], no);
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(no, "vertex out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(no, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            return;
        }
        throw ParseError(no, "unrecognised DIMACS line '" + std::string(line) + "'");
    });
    if (n < 0) throw ParseError(0, "missing 'p edge <n> <m>' header");
    return Graph(static_cast<Vertex>(n), edges);
}

}  // namespace

std::string_view format_name(GraphFormat f) {
    switch (f) {
        case GraphFormat::EdgeList: return "edgelist";
        case GraphFormat::Dimacs: return "dimacs";
        case GraphFormat::Auto: break;
    }
    return "auto";
}

GraphFormat detect_format(std::string_view text) {
    GraphFormat found = GraphFormat::EdgeList;
    bool decided = false;
    for_each_line(text, [&](std::string_view line, std::size_t) {
        if (decided || line.empty()) return;
        decided = true;
        if (line.front() == 'p' || line.front() == 'c') found = GraphFormat::Dimacs;
    });
    return found;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::Auto) format = detect_format(text);
    return format == GraphFormat::Dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), format);
}

std::string serialize_edge_list(const Graph& g, std::string_view extra_comment) {
    std::string out = "# n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + "\n";
    for_each_line(extra_comment, [&](std::string_view line, std::size_t) {
        if (!line.empty()) out += "# " + std::string(line) + "\n";
    });
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

std::string serialize_dimacs(const Graph& g, std::string_view extra_comment) {
    std::string out;
    for_each_line(extra_comment, [&](std::string_view line, std::size_t) {
        if (!line.empty()) out += "c " + std::string(line) + "\n";
    });
    out += "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

std::uint64_t graph_fingerprint(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : serialize_edge_list(g)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fingerprint_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace cyclespec
