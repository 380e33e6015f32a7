#include "ccsg/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace ccsg::io {

SignedGraph parse_graph(std::istream& in) {
    std::string line;
    int line_number = 0;
    bool have_header = false;
    long declared_n = 0, declared_m = 0;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream tokens(line);
        std::string tag;
        if (!(tokens >> tag)) continue;
        if (tag == "c") continue;

        if (tag == "p") {
            if (have_header) throw ParseError(line_number, "duplicate 'p' header");
            std::string format;
            if (!(tokens >> format >> declared_n >> declared_m) || format != "sg" ||
                declared_n < 0 || declared_m < 0)
                throw ParseError(line_number, "expected 'p sg <n> <m>'");
            std::string extra;
            if (tokens >> extra) throw ParseError(line_number, "trailing tokens after header");
            have_header = true;
            edges.reserve(static_cast<std::size_t>(declared_m));
        } else if (tag == "e") {
            if (!have_header) throw ParseError(line_number, "edge line before 'p sg' header");
            long u = 0, v = 0;
            std::string sign;
            if (!(tokens >> u >> v >> sign) || (sign != "+" && sign != "-"))
                throw ParseError(line_number, "expected 'e <u> <v> <+|->'");
            std::string extra;
            if (tokens >> extra) throw ParseError(line_number, "trailing tokens after edge");
            if (u < 1 || u > declared_n || v < 1 || v > declared_n)
                throw ParseError(line_number, "vertex id out of range 1.." +
                                                  std::to_string(declared_n));
            if (u == v) throw ParseError(line_number, "self-loop at vertex " + std::to_string(u));
            if (static_cast<long>(edges.size()) == declared_m)
                throw ParseError(line_number, "more edge lines than the declared m=" +
                                                  std::to_string(declared_m));
            int a = static_cast<int>(std::min(u, v)) - 1;
            int b = static_cast<int>(std::max(u, v)) - 1;
            if (!seen.insert({a, b}).second)
                throw ParseError(line_number, "duplicate edge {" + std::to_string(a + 1) + "," +
                                                  std::to_string(b + 1) + "}");
            edges.push_back({a, b, sign == "+" ? +1 : -1});
        } else {
            throw ParseError(line_number, "unknown line type '" + tag + "'");
        }
    }

    if (!have_header) throw ParseError(std::max(line_number, 1), "missing 'p sg <n> <m>' header");
    if (static_cast<long>(edges.size()) != declared_m)
        throw ParseError(line_number, "header declares m=" + std::to_string(declared_m) +
                                          " but found " + std::to_string(edges.size()) +
                                          " edge lines");
    return SignedGraph(static_cast<int>(declared_n), edges);
}

SignedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

SignedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_graph(in);
}

std::string serialize_graph(const SignedGraph& g, const std::vector<std::string>& comments) {
    std::string out;
    for (const std::string& comment : comments) out += "c " + comment + "\n";
    out += "p sg " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges()) {
        out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " +
               (e.sign > 0 ? "+" : "-") + "\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string temp = path + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + temp + "'");
        out << content;
        if (!out) {
            std::remove(temp.c_str());
            throw Error("write failed for '" + temp + "'");
        }
    }
    if (std::rename(temp.c_str(), path.c_str()) != 0) {
        std::remove(temp.c_str());
        throw Error("cannot move '" + temp + "' to '" + path + "'");
    }
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string checksum_hex(std::string_view bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t hash = fnv1a64(bytes);
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[i] = digits[hash & 0xf];
        hash >>= 4;
    }
    return "fnv1a64:" + hex;
}

}  // namespace ccsg::io
