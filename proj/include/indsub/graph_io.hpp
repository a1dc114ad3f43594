#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "graph.hpp"

namespace indsub {

using json = nlohmann::json;

inline json to_json(const Graph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.n()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j)
{
    try {
        int n = j.at("n").get<int>();
        if (n < 0) throw InputError("negative vertex count");
        std::vector<Edge> es;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("edge entries must be pairs");
            es.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return make_graph(n, es);
    } catch (const json::exception& e) {
        throw InputError(std::string("bad graph JSON: ") + e.what());
    } catch (const PreconditionError& e) {
        throw InputError(std::string("bad graph JSON: ") + e.what());
    }
}

inline std::string write_graph6(const Graph& g)
{
    require(g.n() <= 62, "graph6 writer handles n <= 62");
    std::string out(1, char(63 + g.n()));
    int acc = 0, bits = 0;
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | int(g.adjacent(u, v));
            if (++bits == 6) {
                out += char(63 + acc);
                acc = bits = 0;
            }
        }
    if (bits) out += char(63 + (acc << (6 - bits)));
    return out;
}

inline Graph read_graph6(std::string s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw InputError("empty graph6 string");
    int n = s[0] - 63;
    if (n < 0 || n > 62) throw InputError("graph6 reader handles n <= 62");
    const std::size_t len = std::size_t(n) * std::size_t(n > 0 ? n - 1 : 0) / 2;
    if (s.size() != 1 + (len + 5) / 6) throw InputError("graph6 length does not match n=" + std::to_string(n));
    Graph g(n);
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int c = s[1 + bit / 6] - 63;
            if (c < 0 || c > 63) throw InputError("bad graph6 character");
            if (c >> (5 - bit % 6) & 1) g.add_edge(u, v);
        }
    return g;
}

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json read_json_file(const std::string& path)
{
    try {
        return json::parse(slurp(path));
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

// A graph argument is a JSON file, a graph6 file (.g6), or a name like K3 / C5 / K2,2.
inline Graph load_graph(const std::string& arg)
{
    std::ifstream probe(arg);
    if (!probe) return named_graph(arg);
    std::string text = slurp(arg);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return graph_from_json(read_json_file(arg));
    return read_graph6(text.substr(first == std::string::npos ? 0 : first));
}

} // namespace indsub
