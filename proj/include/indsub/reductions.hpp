#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "counting.hpp"
#include "enumerator.hpp"

namespace indsub {

struct OracleCall {
    std::string kind;
    int host_size = 0;
    Rational result;
};

// Counting oracle for #IndSub(Phi,k) or #cpIndSub(Phi,.) that logs every call.
class OracleHandle {
public:
    enum class Kind { indsub, cpindsub };

    OracleHandle(Kind kind, GraphParameter phi, int k = 0)
        : kind_(kind), phi_(std::move(phi)), k_(k), log_(std::make_shared<std::vector<OracleCall>>())
    {
        if (kind == Kind::indsub) require(k >= 1, "IndSub oracle needs k >= 1");
    }

    Kind kind() const { return kind_; }
    const GraphParameter& parameter() const { return phi_; }
    int k() const { return k_; }

    Rational indsub(const Graph& g) const
    {
        require(kind_ == Kind::indsub, "not an IndSub oracle");
        Rational r = count_indsub(phi_, k_, g);
        log_->push_back({"indsub", g.n(), r});
        return r;
    }

    Rational cpindsub(const HColoring& c) const
    {
        require(kind_ == Kind::cpindsub, "not a cp-IndSub oracle");
        Rational r = count_cp_indsub(phi_, c);
        log_->push_back({"cpindsub", c.host.n(), r});
        return r;
    }

    const std::vector<OracleCall>& log() const { return *log_; }
    std::size_t calls() const { return log_->size(); }
    int max_query_size() const
    {
        int m = 0;
        for (const auto& c : *log_) m = std::max(m, c.host_size);
        return m;
    }
    void clear_log() const { log_->clear(); }

private:
    Kind kind_;
    GraphParameter phi_;
    int k_;
    std::shared_ptr<std::vector<OracleCall>> log_;
};

struct Biclique {
    std::vector<int> left, right;
};

// First K_{l,l} in F: left sets in lexicographic order, right side the
// smallest l common neighbours.
inline std::optional<Biclique> find_biclique(const Graph& f, int l)
{
    require(l >= 1, "biclique side must be positive");
    const int n = f.n();
    std::vector<int> left;
    std::optional<Biclique> out;
    std::function<bool(int, Graph::Row)> go = [&](int start, Graph::Row common) {
        if (int(left.size()) == l) {
            if (int(common.count()) < l) return false;
            Biclique b{left, {}};
            for (auto v = common.find_first(); v != Graph::Row::npos && int(b.right.size()) < l; v = common.find_next(v))
                b.right.push_back(int(v));
            out = b;
            return true;
        }
        for (int v = start; v < n; ++v) {
            Graph::Row next = common & f.neighbours(v);
            if (int(next.count()) < l) continue;
            left.push_back(v);
            if (go(v + 1, next)) return true;
            left.pop_back();
        }
        return false;
    };
    Graph::Row all(static_cast<std::size_t>(n));
    all.set();
    go(0, all);
    return out;
}

namespace detail {

inline std::mutex& witness_mutex()
{
    static std::mutex m;
    return m;
}

inline std::map<std::pair<std::string, int>, Biclique>& witness_cache()
{
    static std::map<std::pair<std::string, int>, Biclique> c;
    return c;
}

inline Biclique cached_biclique(const Graph& f, int l)
{
    auto key = std::make_pair(write_graph6(f), l);
    std::lock_guard lock(witness_mutex());
    auto& cache = witness_cache();
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto b = find_biclique(f, l);
    require(b.has_value(), "F contains no K_{" + std::to_string(l) + "," + std::to_string(l) + "}");
    cache[key] = *b;
    return *b;
}

} // namespace detail

// F-coloured G' with #cpHom(F, G') = #l-cliques(G). u_i and v_i each get a
// copy of V(G); u_i-v_i is the equality pattern, u_i-v_j (i != j) follows the
// edges of G oriented so that only increasing tuples survive. Every other
// vertex of F is a singleton class.
inline HColoring clique_to_cphom_instance(int l, const Graph& f, const Graph& g)
{
    require(l >= 2, "clique reduction needs l >= 2");
    Biclique b = detail::cached_biclique(f, l);
    const int n = g.n();
    std::vector<int> role(static_cast<std::size_t>(f.n()), 0);  // +i+1 left u_i, -(i+1) right v_i
    for (int i = 0; i < l; ++i) role[b.left[i]] = i + 1, role[b.right[i]] = -(i + 1);

    std::vector<int> map, orig;
    std::vector<std::vector<int>> cls(static_cast<std::size_t>(f.n()));
    for (int x = 0; x < f.n(); ++x) {
        int copies = role[x] ? n : 1;
        for (int w = 0; w < copies; ++w) {
            cls[x].push_back(int(map.size()));
            map.push_back(x);
            orig.push_back(w);
        }
    }
    Graph host(int(map.size()));
    for (auto [x, y] : f.edges()) {
        int rx = role[x], ry = role[y];
        if (rx < 0 && ry > 0) std::swap(x, y), std::swap(rx, ry);
        const bool cross = rx > 0 && ry < 0;
        for (int a : cls[x])
            for (int c : cls[y]) {
                bool ok = true;
                if (cross) {
                    int i = rx - 1, j = -ry - 1, w = orig[a], w2 = orig[c];
                    if (i == j) ok = w == w2;
                    else ok = g.adjacent(w, w2) && (i < j ? w < w2 : w > w2);
                }
                if (ok) host.add_edge(a, c);
            }
    }
    return {host, f, map};
}

// Host with every edge over a colour pair outside B deleted.
inline HColoring restrict_to_colour_pairs(const HColoring& c, const std::vector<Edge>& b)
{
    Graph keep(c.pattern.n());
    for (auto [x, y] : b) keep.add_edge(x, y);
    HColoring out{Graph(c.host.n()), c.pattern, c.map};
    for (auto [u, v] : c.host.edges())
        if (keep.adjacent(c.map[u], c.map[v])) out.host.add_edge(u, v);
    return out;
}

using CpIndSubOracle = std::function<Rational(const HColoring&)>;

// Queries the oracle on G_B for every B subset E(H). Q(B) = sum_{A subset B} f(A)
// with f(A) = (-1)^{|A|} chi(Phi,H{A}) #cpHom(H{A},G), so Mobius inversion at
// B = E(H) isolates the top term.
inline Integer cphom_from_cpindsub_oracle(const HColoring& c, const CpIndSubOracle& oracle, const Rational& chi)
{
    validate(c);
    require(chi != 0, "chi(Phi, H) vanishes: #cpHom cannot be extracted");
    const auto es = c.pattern.edges();
    require(es.size() <= 10, "extraction capped at 10 pattern edges");
    const std::uint32_t full = (1u << es.size()) - 1;
    std::vector<Rational> q(std::size_t(full) + 1), f;
    for (std::uint32_t b = 0; b <= full; ++b) {
        std::vector<Edge> sel;
        for (std::size_t i = 0; i < es.size(); ++i)
            if (b >> i & 1) sel.push_back(es[i]);
        q[b] = oracle(restrict_to_colour_pairs(c, sel));
    }
    f = q;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::uint32_t b = 0; b <= full; ++b)
            if (b >> i & 1) f[b] -= f[b ^ (1u << i)];
    auto z = f;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::uint32_t b = 0; b <= full; ++b)
            if (b >> i & 1) z[b] += z[b ^ (1u << i)];
    ensure(z == q, "zeta transform of the extracted terms does not reproduce the oracle answers");
    Rational r = f[full] / (sign(int(es.size())) * chi);
    ensure(is_integer(r), "non-exact division extracting #cpHom: " + str(r));
    return r.get_num();
}

// #cpIndSub = sum_{J subset [k]} (-1)^{|J|} #IndSub(Phi,k)(G - classes in J).
inline Rational cpindsub_from_indsub_oracle(const HColoring& c, const OracleHandle& oracle)
{
    validate(c);
    const int k = c.pattern.n();
    require(k <= 6, "cp-IndSub from IndSub capped at k <= 6");
    require(oracle.k() == k, "oracle k must equal |V(H)|");
    Rational total = 0;
    for (std::uint32_t j = 0; j < (1u << k); ++j) {
        std::vector<int> keep;
        for (int v = 0; v < c.host.n(); ++v)
            if (!(j >> c.map[v] & 1)) keep.push_back(v);
        Rational r = oracle.indsub(induced_subgraph(c.host, keep));
        total += __builtin_popcount(j) & 1 ? -r : r;
    }
    return total;
}

// First k-vertex class (by key, 2l <= k <= 6) containing K_{l,l} whose
// enumerator is nonzero, or nonzero mod p when p > 0.
inline std::optional<CanonicalGraph> find_biclique_host(const GraphParameter& phi, int l, long p = 0)
{
    require(l >= 1, "l must be positive");
    if (p) require(is_prime(p), "p must be prime");
    for (int k = 2 * l; k <= 6; ++k)
        for (const auto& h : enumerate_canonical_graphs(k)) {
            if (!contains_biclique(h.graph, l, l)) continue;
            Rational chi = alternating_enumerator(phi, h.graph);
            if (p ? mod_p(chi, p) != 0 : chi != 0) return h;
        }
    return std::nullopt;
}

struct CliquePipelineResult {
    Integer cliques;
    std::size_t calls = 0;
    int max_query = 0;
    int instance_size = 0;
};

// #l-cliques(G) using only #IndSub(Phi, |V(F)|) answers.
inline CliquePipelineResult count_cliques_via_indsub(int l, const GraphParameter& phi, const Graph& f, const Graph& g)
{
    require(l >= 2, "clique pipeline needs l >= 2");
    Rational chi = alternating_enumerator(phi, f);
    require(chi != 0, "chi(Phi, F) vanishes");
    OracleHandle oracle(OracleHandle::Kind::indsub, phi, f.n());
    HColoring inst = clique_to_cphom_instance(l, f, g);
    CpIndSubOracle cp = [&](const HColoring& c) { return cpindsub_from_indsub_oracle(c, oracle); };
    CliquePipelineResult r;
    r.cliques = cphom_from_cpindsub_oracle(inst, cp, chi);
    r.calls = oracle.calls();
    r.max_query = oracle.max_query_size();
    r.instance_size = inst.host.n();
    return r;
}

// C on s vertices; vertex 0 hosts the argument graph, vertex i hosts parts[i-1].
struct LiftSpec {
    Graph C;
    std::vector<Graph> parts;

    int padding() const
    {
        int c = 0;
        for (const auto& h : parts) c += h.n();
        return c;
    }
    std::string str() const
    {
        std::string s = "C=" + write_graph6(C) + " parts=[";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + write_graph6(parts[i]);
        return s + "]";
    }
};

inline void validate(const LiftSpec& spec)
{
    require(spec.C.n() == 1 + int(spec.parts.size()), "lift arity mismatch: |V(C)| must be 1 + #parts");
}

inline Graph lift_graph(const LiftSpec& spec, const Graph& g)
{
    std::vector<Graph> blocks{g};
    blocks.insert(blocks.end(), spec.parts.begin(), spec.parts.end());
    return inhabited_graph(spec.C, blocks);
}

inline GraphParameter lift_parameter(const GraphParameter& phi, const LiftSpec& spec)
{
    validate(spec);
    return GraphParameter("lift(" + phi.name() + ";" + spec.str() + ")",
                          [phi, spec](const Graph& g) -> Rational { return phi(lift_graph(spec, g)); },
                          [phi, pad = spec.padding()](int n) { return phi.codomain_bound(n + pad).value_or(-1); });
}

// H~ = H join K_c, G~ = C[G, parts], part vertices coloured by the new clique.
inline HColoring lift_instance(const HColoring& c, const LiftSpec& spec)
{
    validate(c);
    validate(spec);
    HColoring out;
    out.pattern = join(c.pattern, complete_graph(spec.padding()));
    out.host = lift_graph(spec, c.host);
    out.map = c.map;
    for (int j = 0; j < spec.padding(); ++j) out.map.push_back(c.pattern.n() + j);
    validate(out);
    return out;
}

struct LiftCheck {
    Rational lifted, expanded;
    bool equal = false;
};

inline LiftCheck checked_lift_instance(const GraphParameter& phi, const HColoring& c, const LiftSpec& spec)
{
    LiftCheck r;
    r.lifted = count_cp_indsub(lift_parameter(phi, spec), c);
    r.expanded = count_cp_indsub(phi, lift_instance(c, spec));
    r.equal = r.lifted == r.expanded;
    return r;
}

namespace detail {

// Lift specs with |V(C)| = s and part sizes summing to pad, in search order:
// C by labeled mask, then compositions of pad, then parts by key.
inline bool for_each_lift_spec(int s, int pad, const std::function<bool(const LiftSpec&)>& visit)
{
    if (s == 1) return pad == 0 && visit({Graph(1), {}});
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    std::function<void(int)> compose = [&](int left) {
        if (int(cur.size()) == s - 1) {
            if (left == 0) comps.push_back(cur);
            return;
        }
        for (int a = 1; a <= left; ++a) {
            cur.push_back(a);
            compose(left - a);
            cur.pop_back();
        }
    };
    compose(pad);
    if (comps.empty()) return false;
    for (Mask cm = 0; cm < (Mask(1) << slot_count(s)); ++cm) {
        Graph c = from_mask(s, cm);
        for (const auto& comp : comps) {
            std::vector<std::vector<CanonicalGraph>> pools;
            for (int a : comp) pools.push_back(enumerate_canonical_graphs(a));
            std::vector<Graph> parts(comp.size());
            std::function<bool(std::size_t)> pick = [&](std::size_t i) {
                if (i == comp.size()) return visit({c, parts});
                for (const auto& h : pools[i]) {
                    parts[i] = h.graph;
                    if (pick(i + 1)) return true;
                }
                return false;
            };
            if (pick(0)) return true;
        }
    }
    return false;
}

inline bool lift_nontrivial_on(const GraphParameter& phi, const LiftSpec& spec, int x)
{
    const auto& t = small_table(x);
    std::optional<Rational> first;
    for (Mask m : t.rep) {
        Rational v = phi(lift_graph(spec, from_mask(x, m)));
        if (!first) first = v;
        else if (v != *first) return true;
    }
    return false;
}

inline std::optional<LiftSpec> find_reducing_spec(const GraphParameter& phi, int k, int x)
{
    std::optional<LiftSpec> out;
    for (int s = 1; s <= 1 + (k - x) && !out; ++s)
        for_each_lift_spec(s, k - x, [&](const LiftSpec& spec) {
            if (!lift_nontrivial_on(phi, spec, x)) return false;
            out = spec;
            return true;
        });
    return out;
}

} // namespace detail

struct Classification {
    std::string label;  // concentrated | reducible | trivial
    std::optional<CanonicalGraph> concentrated;
    std::optional<LiftSpec> reducible;
};

// Both witnesses are searched; the label prefers concentrated.
inline Classification classify_concentrated_reducible(const GraphParameter& phi, int k, int p, int t)
{
    require(k >= 1 && k <= 6, "classification capped at k <= 6");
    require(is_prime(p), "p must be prime");
    require(t >= 0, "t must be non-negative");
    const long small = ipow(p, t), big = ipow(p, t + 1);
    require(small + big <= k, "need p^t + p^(t+1) <= k");
    require(is_edge_monotone_on(phi, k), phi.name() + " is not edge-monotone on " + std::to_string(k));
    auto c = phi.codomain_bound(k);
    require(c && *c < p, "codomain bound must be below p");

    Classification r;
    if (!is_nontrivial_on(phi, k)) {
        r.label = "trivial";
        return r;
    }
    for (const auto& h : enumerate_canonical_graphs(k))
        if (contains_biclique(h.graph, int(small), int(small)) && mod_p(alternating_enumerator(phi, h.graph), p) != 0) {
            r.concentrated = h;
            break;
        }
    r.reducible = detail::find_reducing_spec(phi, k, int(big));
    ensure(r.concentrated || r.reducible,
           phi.name() + " is nontrivial and edge-monotone on " + std::to_string(k) + " but neither concentrated nor reducible");
    r.label = r.concentrated ? "concentrated" : "reducible";
    return r;
}

// First spec (s ascending, C, then parts) whose lift is nontrivial on q(k).
inline std::optional<LiftSpec> scatter_membership(const GraphParameter& phi, const std::function<long(int)>& q, int k)
{
    require(k >= 1 && k <= 6, "scatter membership capped at k <= 6");
    const long x = q(k);
    long p = 0;
    require(prime_power(x, &p), "q(k) = " + std::to_string(x) + " is not a prime power");
    require(x <= 4 && x <= k, "q(k) must be at most min(4, k)");
    auto c = phi.codomain_bound(k);
    require(c && *c < p, "codomain bound must be below the base of q(k)");
    return detail::find_reducing_spec(phi, k, int(x));
}

} // namespace indsub
