#pragma once

#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "graph_algo.hpp"
#include "graph_io.hpp"
#include "numeric.hpp"

namespace indsub {

// A named isomorphism-invariant map Graph -> Q. Copies share one memo.
class GraphParameter {
public:
    using Eval = std::function<Rational(const Graph&)>;
    using Bound = std::function<long(int)>;

    GraphParameter() = default;
    GraphParameter(std::string name, Eval eval, Bound bound = nullptr, std::optional<bool> monotone = std::nullopt,
                   bool expensive = false)
        : s_(std::make_shared<State>())
    {
        s_->name = std::move(name);
        s_->eval = std::move(eval);
        s_->bound = std::move(bound);
        s_->monotone = monotone;
        s_->expensive = expensive;
    }

    const std::string& name() const { return s_->name; }
    std::optional<bool> declared_edge_monotone() const { return s_->monotone; }

    std::optional<long> codomain_bound(int k) const
    {
        if (!s_->bound) return std::nullopt;
        return s_->bound(k);
    }

    // Unmemoized evaluation.
    Rational raw(const Graph& g) const { return s_->eval(g); }

    // Values on the classes of small_table(n), in class id order.
    const std::vector<Rational>& class_values(int n) const
    {
        require(n >= 0 && n <= 7, "class values exist for n <= 7 only");
        auto& st = *s_;
        std::call_once(st.once[std::size_t(n)], [&] {
            const auto& t = small_table(n);
            std::vector<Rational> v;
            v.reserve(t.classes());
            for (Mask m : t.rep) v.push_back(st.eval(from_mask(n, m)));
            st.cls[std::size_t(n)] = std::move(v);
        });
        return st.cls[std::size_t(n)];
    }

    Rational on_mask(int n, Mask m) const { return class_values(n)[small_table(n).id[m]]; }

    Rational operator()(const Graph& g) const
    {
        if (g.n() <= 7) return on_mask(g.n(), to_mask(g));
        if (g.n() == 8 && s_->expensive) {
            std::string key = canonical_key(g);
            {
                std::shared_lock lock(s_->mu);
                auto it = s_->big.find(key);
                if (it != s_->big.end()) return it->second;
            }
            Rational v = s_->eval(g);
            std::unique_lock lock(s_->mu);
            s_->big.emplace(key, v);
            return v;
        }
        return s_->eval(g);
    }

    // Alternating-enumerator memo, keyed by canonical key.
    std::optional<Rational> cached_ae(const std::string& key) const
    {
        std::shared_lock lock(s_->mu);
        auto it = s_->ae.find(key);
        if (it == s_->ae.end()) return std::nullopt;
        return it->second;
    }

    void store_ae(const std::string& key, const Rational& v) const
    {
        std::unique_lock lock(s_->mu);
        s_->ae[key] = v;
    }

    // Persist the enumerator memo under dir, one JSON file per parameter.
    void load_cache(const std::string& dir) const
    {
        std::ifstream in(cache_path(dir));
        if (!in) return;
        try {
            json j = json::parse(in);
            std::unique_lock lock(s_->mu);
            for (auto& [k, v] : j.items()) s_->ae[k] = parse_rational(v.get<std::string>());
        } catch (const std::exception&) {
            // a corrupt cache is ignored; it is rebuilt on save
        }
    }

    void save_cache(const std::string& dir) const
    {
        json j = json::object();
        {
            std::shared_lock lock(s_->mu);
            for (auto& [k, v] : s_->ae) j[k] = str(v);
        }
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        std::ofstream out(cache_path(dir));
        if (out) out << j.dump() << '\n';
    }

private:
    std::string cache_path(const std::string& dir) const
    {
        std::string safe;
        for (char c : s_->name) safe += std::isalnum((unsigned char)c) || c == '-' ? c : '_';
        return dir + "/" + safe + "-" + std::to_string(std::hash<std::string>{}(s_->name) % 1000003) + ".ae.json";
    }

    struct State {
        std::string name;
        Eval eval;
        Bound bound;
        std::optional<bool> monotone;
        bool expensive = false;
        std::array<std::once_flag, 8> once;
        std::array<std::vector<Rational>, 8> cls;
        mutable std::shared_mutex mu;
        std::unordered_map<std::string, Rational> big;
        std::unordered_map<std::string, Rational> ae;
    };
    std::shared_ptr<State> s_;
};

// Phi^b: 1 where base == b, else 0.
inline GraphParameter indicator(const GraphParameter& base, const Rational& b)
{
    return GraphParameter(base.name() + "==" + str(b), [base, b](const Graph& g) -> Rational { return Rational(base(g) == b ? 1 : 0); },
                          [](int) { return 1L; });
}

inline GraphParameter constant_parameter(const Rational& c)
{
    std::optional<long> bound;
    if (is_integer(c) && c >= 0 && c.get_num().fits_slong_p()) bound = c.get_num().get_si();
    return GraphParameter("constant:" + str(c), [c](const Graph&) -> Rational { return c; },
                          bound ? GraphParameter::Bound([b = *bound](int) { return b; }) : nullptr, true);
}

// Values keyed by canonical key on k-vertex graphs; other sizes read off_size.
inline GraphParameter table_parameter(std::string name, int k, std::map<std::string, Rational> values,
                                      Rational fallback = 0, Rational off_size = 0)
{
    require(k >= 0 && k <= kCanonCap, "table parameters need k <= 8");
    std::optional<long> bound;
    bool natural = is_integer(fallback) && fallback >= 0 && is_integer(off_size) && off_size >= 0;
    Integer top = 0;
    for (auto& [key, v] : values) {
        natural = natural && is_integer(v) && v >= 0;
        if (natural && v.get_num() > top) top = v.get_num();
    }
    if (natural) {
        if (fallback.get_num() > top) top = fallback.get_num();
        bound = top.get_si();
    }
    auto vals = std::make_shared<std::map<std::string, Rational>>(std::move(values));
    return GraphParameter(
        std::move(name),
        [k, vals, fallback, off_size](const Graph& g) -> Rational {
            if (g.n() != k) return off_size;
            auto it = vals->find(canonical_key(g));
            return it == vals->end() ? fallback : it->second;
        },
        bound ? GraphParameter::Bound([k, b = *bound, off = off_size](int n) {
            return n == k ? b : is_integer(off) ? off.get_num().get_si() : 0L;
        })
              : nullptr);
}

// {"k": 4, "<graph6 key>": value, ..., optional "default": value}
inline GraphParameter load_table_parameter(const std::string& path)
{
    json j = read_json_file(path);
    if (!j.is_object() || !j.contains("k")) throw InputError(path + ": table parameter needs a \"k\" field");
    int k = j["k"].get<int>();
    if (k < 0 || k > kCanonCap) throw InputError(path + ": k must be in [0,8]");
    std::map<std::string, Rational> vals;
    Rational fallback = 0;
    auto value_of = [&](const json& v) {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
        throw InputError(path + ": table values must be integers or rational strings");
    };
    for (auto& [key, v] : j.items()) {
        if (key == "k") continue;
        if (key == "default") {
            fallback = value_of(v);
            continue;
        }
        Graph g;
        try {
            g = read_graph6(key);
        } catch (const InputError&) {
            throw InputError(path + ": key '" + key + "' is not a graph6 string");
        }
        if (g.n() != k) throw InputError(path + ": key '" + key + "' is not a " + std::to_string(k) + "-vertex graph");
        vals[canonical_key(g)] = value_of(v);
    }
    return table_parameter("table:" + path + "#" + std::to_string(std::hash<std::string>{}(j.dump()) % 1000003), k,
                           std::move(vals), fallback);
}

inline long edges_bound(int k) { return long(k) * (k - 1) / 2; }

inline GraphParameter parse_parameter(const std::string& spec)
{
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto one = [](int) { return 1L; };

    if (head == "connected" || head == "connected-indicator")
        return {"connected", [](const Graph& g) -> Rational { return Rational(is_connected(g)); }, one, false};
    if (head == "disconnected" || head == "disconnected-indicator")
        return {"disconnected", [](const Graph& g) -> Rational { return Rational(!is_connected(g)); }, one, true};
    if (head == "component-count")
        return {"component-count", [](const Graph& g) -> Rational { return Rational(component_count(g)); },
                [](int k) { return long(k); }, true};
    if (head == "max-degree")
        return {"max-degree", [](const Graph& g) -> Rational { return Rational(max_degree(g)); },
                [](int k) { return long(std::max(k - 1, 0)); }, false};
    if (head == "chromatic-number")
        return {"chromatic-number", [](const Graph& g) -> Rational { return Rational(chromatic_number(g)); },
                [](int k) { return long(k); }, false, true};
    if (head == "edge-count") head = "edge-power", arg = "1";
    if (head == "edge-power") {
        int c = 1;
        try {
            c = arg.empty() ? 1 : std::stoi(arg);
        } catch (const std::logic_error&) {
            throw InputError("edge-power needs an integer exponent");
        }
        require(c >= 0 && c <= 8, "edge-power exponent must lie in [0,8]");
        std::string name = c == 1 ? "edge-count" : "edge-power:" + std::to_string(c);
        return {name,
                [c](const Graph& g) -> Rational {
                    Integer r;
                    mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)g.edge_count(), (unsigned long)c);
                    return Rational(r);
                },
                [c](int k) { return ipow(edges_bound(k), c); }, c == 0 ? std::optional<bool>(true) : false};
    }
    if (head == "universal-vertex-count")
        return {"universal-vertex-count", [](const Graph& g) -> Rational { return Rational(universal_vertex_count(g)); },
                [](int k) { return long(k); }, false};
    if (head == "hamiltonian-path-count")
        return {"hamiltonian-path-count", [](const Graph& g) -> Rational { return Rational(hamiltonian_path_count(g)); },
                [](int k) { return k <= 1 ? long(k) : factorial(static_cast<std::size_t>(k)).get_si() / 2; }, false, true};
    if (head == "perfect-matching-count")
        return {"perfect-matching-count", [](const Graph& g) -> Rational { return Rational(perfect_matching_count(g)); },
                [](int k) {
                    long r = 1;
                    for (int i = k - 1; i > 1; i -= 2) r *= i;
                    return k % 2 ? 0L : r;
                },
                false};
    if (head == "clique-indicator")
        return {"clique-indicator", [](const Graph& g) -> Rational { return Rational(is_clique(g)); }, one, false};
    if (head == "independent-set-indicator")
        return {"independent-set-indicator", [](const Graph& g) -> Rational { return Rational(g.edge_count() == 0); }, one, true};
    if (head == "independence-number")
        return {"independence-number", [](const Graph& g) -> Rational { return Rational(independence_number(g)); },
                [](int k) { return long(k); }, true, true};
    if (head == "edge-parity")
        return {"edge-parity", [](const Graph& g) -> Rational { return Rational(g.edge_count() % 2); }, one, false};
    if (head == "constant") return constant_parameter(parse_rational(arg.empty() ? "1" : arg));
    if (head == "table") return load_table_parameter(arg);
    throw InputError("unknown parameter '" + spec + "'");
}

// Every shipped closed-form parameter (table parameters are user data).
inline std::vector<GraphParameter> builtin_parameters()
{
    std::vector<GraphParameter> out;
    for (const char* s : {"connected", "disconnected", "component-count", "max-degree", "chromatic-number", "edge-count",
                          "edge-power:2", "edge-power:3", "universal-vertex-count", "hamiltonian-path-count",
                          "perfect-matching-count", "clique-indicator", "independent-set-indicator",
                          "independence-number", "edge-parity"})
        out.push_back(parse_parameter(s));
    return out;
}

inline std::set<Rational> image_on(const GraphParameter& phi, int k)
{
    require(k >= 0 && k <= 7, "image_on capped at k <= 7");
    const auto& v = phi.class_values(k);
    return {v.begin(), v.end()};
}

inline std::vector<std::pair<Rational, GraphParameter>> indicator_decomposition(const GraphParameter& phi, int k)
{
    std::vector<std::pair<Rational, GraphParameter>> out;
    for (const auto& b : image_on(phi, k)) out.emplace_back(b, indicator(phi, b));
    return out;
}

struct NormalizedParameter {
    GraphParameter phi;  // s + d * original, lands in {0..c}
    Rational s, d;
    long c = 0;

    Rational recover(int k, int n, const Rational& m) const
    {
        return (m - s * Rational(binomial((unsigned long)n, (unsigned long)k))) / d;
    }
};

inline NormalizedParameter normalize_codomain(const GraphParameter& phi, const std::set<Rational>& domain)
{
    require(!domain.empty(), "codomain must be a nonempty finite set");
    Integer d = 1;
    for (const auto& x : domain) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
    Rational dd(d);
    Rational s = -dd * *domain.begin();
    Rational top = s + dd * *domain.rbegin();
    NormalizedParameter out;
    out.s = s;
    out.d = dd;
    out.c = top.get_num().get_si();
    if (s == 0 && d == 1) {
        out.phi = phi;
        return out;
    }
    out.phi = GraphParameter("normalized(" + phi.name() + ")",
                             [phi, s, dd, domain](const Graph& g) -> Rational {
                                 Rational v = phi(g);
                                 if (!domain.count(v))
                                     throw PreconditionError("value " + str(v) + " outside the declared codomain");
                                 return s + dd * v;
                             },
                             [c = out.c](int) { return c; }, phi.declared_edge_monotone());
    return out;
}

inline bool is_nontrivial_on(const GraphParameter& phi, int k)
{
    require(k >= 0 && k <= 7, "nontriviality check capped at k <= 7");
    return image_on(phi, k).size() >= 2;
}

// Phi(G{S}) >= Phi(G) for every k-vertex G and S subset E(G). Single edge
// deletions suffice since every intermediate graph is again a k-vertex graph.
inline bool is_edge_monotone_on(const GraphParameter& phi, int k)
{
    require(k >= 0 && k <= 7, "edge-monotonicity check capped at k <= 7");
    const auto& t = small_table(k);
    const auto& val = phi.class_values(k);
    for (std::size_t c = 0; c < t.classes(); ++c)
        for (Mask x = t.rep[c]; x; x &= x - 1) {
            Mask smaller = t.rep[c] & ~(x & -x);
            if (val[t.id[smaller]] < val[c]) return false;
        }
    return true;
}

} // namespace indsub
