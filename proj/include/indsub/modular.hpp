#pragma once

#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "counting.hpp"
#include "random.hpp"
#include "reductions.hpp"

namespace indsub {

// #_p and MOD_p views of an exact counting function. MOD_p answers true
// when the count is divisible by p.
class ModOracle {
public:
    using Count = std::function<Rational(const Graph&)>;

    ModOracle(Count base, long p) : base_(std::move(base)), p_(p)
    {
        require(is_prime(p), "p must be prime");
    }

    long p() const { return p_; }
    long count(const Graph& g) const
    {
        ++calls_;
        return mod_p(base_(g), p_);
    }
    bool divisible(const Graph& g) const { return count(g) == 0; }
    std::size_t calls() const { return calls_; }

private:
    Count base_;
    long p_;
    mutable std::size_t calls_ = 0;
};

inline ModOracle mod_p_oracle(const OracleHandle& base, long p)
{
    require(base.kind() == OracleHandle::Kind::indsub, "MOD_p wraps an IndSub oracle");
    return ModOracle([base](const Graph& g) -> Rational { return base.indsub(g); }, p);
}

inline ModOracle clique_mod_oracle(int k, long p)
{
    return ModOracle([k](const Graph& g) -> Rational { return Rational(count_cliques(g, k)); }, p);
}

// #k-cliques(G) mod p from MOD_p answers on G plus i disjoint K_k, i < p.
inline long numclique_from_modclique(const Graph& g, int k, const ModOracle& oracle)
{
    require(k >= 1, "k must be positive");
    const long p = oracle.p();
    std::optional<long> hit;
    Graph cur = g;
    for (long i = 0; i < p; ++i) {
        if (i) cur = disjoint_union(cur, complete_graph(k));
        if (oracle.divisible(cur)) {
            ensure(!hit, "MOD_p oracle answered true twice");
            hit = i;
        }
    }
    ensure(hit.has_value(), "MOD_p oracle never answered true");
    return (p - *hit) % p;
}

// The clique pipeline with every step in F_p and only #_p IndSub answers.
inline long mod_p_clique_via_indsub(int l, const GraphParameter& phi, const Graph& f, const Graph& g, long p)
{
    require(l >= 2, "clique pipeline needs l >= 2");
    require(is_prime(p), "p must be prime");
    const long chi = mod_p(alternating_enumerator(phi, f), p);
    require(chi != 0, "chi(Phi, F) vanishes mod " + std::to_string(p));
    OracleHandle exact(OracleHandle::Kind::indsub, phi, f.n());
    ModOracle oracle = mod_p_oracle(exact, p);

    HColoring inst = clique_to_cphom_instance(l, f, g);
    const auto es = f.edges();
    require(es.size() <= 10, "extraction capped at 10 pattern edges");
    const int k = f.n();
    const std::uint32_t full = (1u << es.size()) - 1;
    long top = 0;
    for (std::uint32_t b = 0; b <= full; ++b) {
        std::vector<Edge> sel;
        for (std::size_t i = 0; i < es.size(); ++i)
            if (b >> i & 1) sel.push_back(es[i]);
        HColoring gb = restrict_to_colour_pairs(inst, sel);
        long q = 0;
        for (std::uint32_t j = 0; j < (1u << k); ++j) {
            std::vector<int> keep;
            for (int v = 0; v < gb.host.n(); ++v)
                if (!(j >> gb.map[v] & 1)) keep.push_back(v);
            long r = oracle.count(induced_subgraph(gb.host, keep));
            q = (q + (__builtin_popcount(j) & 1 ? p - r : r)) % p;
        }
        // Mobius at the top: sign (-1)^{|E \ B|}
        top = (top + ((es.size() - __builtin_popcount(b)) % 2 ? p - q : q)) % p;
    }
    long coeff = es.size() % 2 ? (p - chi) % p : chi;
    return top * inverse_mod(coeff, p) % p;
}

// 3-CNF with 1-based signed literals.
struct Cnf3 {
    int n = 0;
    std::vector<std::array<int, 3>> clauses;

    int m() const { return int(clauses.size()); }
    bool satisfied_by(std::uint32_t assignment) const
    {
        for (const auto& c : clauses) {
            bool any = false;
            for (int lit : c) any = any || (((assignment >> (std::abs(lit) - 1)) & 1) == (lit > 0 ? 1u : 0u));
            if (!any) return false;
        }
        return true;
    }
};

inline void validate(const Cnf3& f)
{
    require(f.n >= 1 && f.n <= 24, "3-CNF needs 1 <= n <= 24");
    require(f.m() >= 1, "3-CNF needs at least one clause");
    for (const auto& c : f.clauses)
        for (int lit : c) require(lit != 0 && std::abs(lit) <= f.n, "literal " + std::to_string(lit) + " out of range");
}

inline Cnf3 parse_dimacs(const std::string& text)
{
    std::istringstream in(text);
    std::string tok;
    Cnf3 f;
    int declared_m = -1;
    std::vector<int> cur;
    while (in >> tok) {
        if (tok == "c") {
            std::getline(in, tok);
            continue;
        }
        if (tok == "p") {
            std::string kind;
            if (!(in >> kind >> f.n >> declared_m) || kind != "cnf") throw InputError("malformed DIMACS header");
            continue;
        }
        if (tok == "%") break;
        int lit = 0;
        try {
            std::size_t used = 0;
            lit = std::stoi(tok, &used);
            if (used != tok.size()) throw InputError("");
        } catch (const std::exception&) {
            throw InputError("bad DIMACS token '" + tok + "'");
        }
        if (lit) {
            cur.push_back(lit);
            continue;
        }
        if (cur.size() != 3) throw InputError("clause with " + std::to_string(cur.size()) + " literals; need exactly 3");
        f.clauses.push_back({cur[0], cur[1], cur[2]});
        cur.clear();
    }
    if (!cur.empty()) throw InputError("unterminated clause");
    if (declared_m < 0) throw InputError("missing DIMACS header");
    if (declared_m != f.m()) throw InputError("header declares " + std::to_string(declared_m) + " clauses");
    for (const auto& c : f.clauses)
        for (int lit : c)
            if (std::abs(lit) > f.n) throw InputError("literal " + std::to_string(lit) + " exceeds n");
    if (f.n < 1 || f.m() < 1) throw InputError("empty formula");
    return f;
}

inline Integer count_sat(const Cnf3& f)
{
    validate(f);
    require(f.n <= 24, "#SAT by exhaustion capped at 24 variables");
    std::uint64_t c = 0;
    for (std::uint32_t a = 0; a < (1u << f.n); ++a) c += f.satisfied_by(a);
    return Integer((unsigned long)c);
}

// Clauses over three distinct variables, signs uniform.
inline Cnf3 random_cnf(Rng& rng, int n, int m)
{
    require(n >= 3, "random 3-CNF needs n >= 3");
    Cnf3 f;
    f.n = n;
    for (int c = 0; c < m; ++c) {
        std::vector<int> vars(static_cast<std::size_t>(n));
        std::iota(vars.begin(), vars.end(), 1);
        shuffle_in_place(rng, vars);
        std::array<int, 3> cl{};
        for (int j = 0; j < 3; ++j) cl[j] = rng() % 2 ? vars[j] : -vars[j];
        f.clauses.push_back(cl);
    }
    return f;
}

enum Colour : int { kT = 0, kF = 1, kB = 2 };

inline char colour_char(int c) { return "TFB"[c]; }

// 3-colouring graph of a 3-CNF: anchors T,F,B; literal pair per variable;
// per clause two chained OR triangles, y1-y2-y3 on the first two literals and
// y4-y5-y6 on y3 and the third, output y6 tied to F and B.
struct ColoringGadget {
    Cnf3 formula;
    Graph graph;
    std::vector<std::string> roles;
    // literal colour triple (index a*4+b*2+c, 1 = F) -> y1..y6 colours
    std::map<int, std::array<int, 6>> valid;

    static constexpr int anchor(int c) { return c; }
    static constexpr int literal_vertex(int var, bool positive) { return 3 + 2 * (var - 1) + (positive ? 0 : 1); }
    int lit(int l) const { return literal_vertex(std::abs(l), l > 0); }
    int y(int clause, int j) const { return 3 + 2 * formula.n + 6 * clause + (j - 1); }
};

namespace detail {

// Lexicographically smallest proper y-colouring (y1 first, T<F<B) with y6 = T.
inline std::optional<std::array<int, 6>> canonical_gadget_colouring(std::array<int, 3> litc)
{
    std::array<int, 6> y{};
    // neighbours outside the gadget: y1-l1, y2-l2, y5-l3, y6-F, y6-B
    auto ok = [&](int i) {
        static const std::vector<std::pair<int, int>> inner = {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
        for (auto [a, b] : inner)
            if ((a == i && b < i && y[b] == y[i]) || (b == i && a < i && y[a] == y[i])) return false;
        if (i == 0 && y[0] == litc[0]) return false;
        if (i == 1 && y[1] == litc[1]) return false;
        if (i == 4 && y[4] == litc[2]) return false;
        if (i == 5 && y[5] != kT) return false;
        return true;
    };
    std::function<bool(int)> go = [&](int i) {
        if (i == 6) return true;
        for (int c = 0; c < 3; ++c) {
            y[i] = c;
            if (ok(i) && go(i + 1)) return true;
        }
        return false;
    };
    if (go(0)) return y;
    return std::nullopt;
}

} // namespace detail

inline ColoringGadget sat_to_coloring_graph(const Cnf3& f)
{
    validate(f);
    ColoringGadget gd;
    gd.formula = f;
    const int nv = 3 + 2 * f.n + 6 * f.m();
    gd.graph = Graph(nv);
    gd.roles.resize(std::size_t(nv));
    gd.roles[kT] = "T";
    gd.roles[kF] = "F";
    gd.roles[kB] = "B";
    auto& g = gd.graph;
    g.add_edge(kT, kF);
    g.add_edge(kT, kB);
    g.add_edge(kF, kB);
    for (int i = 1; i <= f.n; ++i) {
        int x = ColoringGadget::literal_vertex(i, true), nx = ColoringGadget::literal_vertex(i, false);
        gd.roles[x] = "x" + std::to_string(i);
        gd.roles[nx] = "~x" + std::to_string(i);
        g.add_edge(x, nx);
        g.add_edge(x, kB);
        g.add_edge(nx, kB);
    }
    for (int c = 0; c < f.m(); ++c) {
        for (int j = 1; j <= 6; ++j) gd.roles[gd.y(c, j)] = "y" + std::to_string(c + 1) + "," + std::to_string(j);
        for (auto [a, b] : {std::pair{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}})
            g.add_edge(gd.y(c, a), gd.y(c, b));
        const auto& cl = f.clauses[c];
        auto link = [&](int a, int b) {
            if (!g.adjacent(a, b)) g.add_edge(a, b);
        };
        link(gd.y(c, 1), gd.lit(cl[0]));
        link(gd.y(c, 2), gd.lit(cl[1]));
        link(gd.y(c, 5), gd.lit(cl[2]));
        g.add_edge(gd.y(c, 6), kF);
        g.add_edge(gd.y(c, 6), kB);
    }
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                auto y = detail::canonical_gadget_colouring({a, b, c});
                if (y) gd.valid[a * 4 + b * 2 + c] = *y;
            }
    ensure(gd.valid.size() == 7 && !gd.valid.count(kF * 4 + kF * 2 + kF),
           "clause gadget must admit output T exactly for the 7 satisfying literal colourings");
    return gd;
}

// Proper colourings of G_phi with the anchors fixed and every clause gadget
// coloured by its table entry. Backtracking over the literal vertices, the
// gadget vertices are then forced.
inline Integer count_valid_proper_colorings(const ColoringGadget& gd)
{
    const auto& f = gd.formula;
    const auto& g = gd.graph;
    std::vector<int> col(static_cast<std::size_t>(g.n()), -1);
    col[kT] = kT, col[kF] = kF, col[kB] = kB;
    std::uint64_t total = 0;
    auto proper_at = [&](int v) {
        for (int u = 0; u < g.n(); ++u)
            if (u != v && col[u] >= 0 && g.adjacent(u, v) && col[u] == col[v]) return false;
        return true;
    };
    std::vector<int> lits;
    for (int i = 1; i <= f.n; ++i) lits.push_back(ColoringGadget::literal_vertex(i, true)), lits.push_back(ColoringGadget::literal_vertex(i, false));
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == lits.size()) {
            std::vector<int> saved = col;
            bool ok = true;
            for (int c = 0; c < f.m() && ok; ++c) {
                const auto& cl = f.clauses[c];
                int a = col[gd.lit(cl[0])], b = col[gd.lit(cl[1])], d = col[gd.lit(cl[2])];
                auto it = gd.valid.find(a * 4 + b * 2 + d);
                if (a == kB || b == kB || d == kB || it == gd.valid.end()) ok = false;
                else
                    for (int j = 0; j < 6; ++j) col[gd.y(c, j + 1)] = it->second[j];
            }
            for (int v = 0; v < g.n() && ok; ++v) ok = proper_at(v);
            total += ok;
            col = saved;
            return;
        }
        for (int c = 0; c < 3; ++c) {
            col[lits[i]] = c;
            if (proper_at(lits[i])) go(i + 1);
            col[lits[i]] = -1;
        }
    };
    go(0);
    return Integer((unsigned long)total);
}

struct CliqueGraphCensus {
    Graph graph;
    int k = 0;
    std::vector<std::vector<int>> groups;  // G_phi vertices per group
    std::vector<int> group_of;             // per clique-graph vertex
    std::vector<std::vector<int>> colouring;  // per clique-graph vertex, aligned with its group
};

// (2k+1)-partite graph of partial valid proper colourings: anchor group,
// k variable groups, k clause groups.
inline CliqueGraphCensus coloring_to_clique_graph(const ColoringGadget& gd, int k)
{
    const auto& f = gd.formula;
    require(k >= 1, "k must be positive");
    require(k <= f.n && k <= f.m(), "k may not exceed the number of variables or clauses");
    CliqueGraphCensus out;
    out.k = k;
    out.groups.push_back({kT, kF, kB});
    auto chunk = [](int total, int k, int i) {
        int size = (total + k - 1) / k;
        return std::pair{std::min(total, i * size), std::min(total, (i + 1) * size)};
    };
    for (int i = 0; i < k; ++i) {
        auto [lo, hi] = chunk(f.n, k, i);
        std::vector<int> grp;
        for (int v = lo + 1; v <= hi; ++v)
            grp.push_back(ColoringGadget::literal_vertex(v, true)), grp.push_back(ColoringGadget::literal_vertex(v, false));
        out.groups.push_back(grp);
    }
    std::vector<std::vector<int>> clause_groups;
    for (int i = 0; i < k; ++i) {
        auto [lo, hi] = chunk(f.m(), k, i);
        std::set<int> grp;
        for (int c = lo; c < hi; ++c) {
            for (int lit : f.clauses[c]) grp.insert(gd.lit(lit));
            for (int j = 1; j <= 6; ++j) grp.insert(gd.y(c, j));
        }
        out.groups.emplace_back(grp.begin(), grp.end());
        clause_groups.push_back({});
        for (int c = lo; c < hi; ++c) clause_groups.back().push_back(c);
    }
    for (const auto& grp : out.groups) require(!grp.empty(), "empty group; choose a smaller k");

    const auto& g = gd.graph;
    auto proper_on = [&](const std::vector<int>& vs, const std::vector<int>& col) {
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (g.adjacent(vs[a], vs[b]) && col[vs[a]] == col[vs[b]]) return false;
        return true;
    };
    std::vector<int> full(static_cast<std::size_t>(g.n()), -1);
    // anchor group: the single fixed colouring
    out.group_of.push_back(0);
    out.colouring.push_back({kT, kF, kB});
    for (int gi = 1; gi < int(out.groups.size()); ++gi) {
        const auto& grp = out.groups[gi];
        const bool clause_group = gi > k;
        std::vector<int> free;
        for (int v : grp)
            if (v < 3 + 2 * f.n) free.push_back(v);
        for (std::uint32_t a = 0; a < (1u << free.size()); ++a) {
            std::fill(full.begin(), full.end(), -1);
            for (std::size_t i = 0; i < free.size(); ++i) full[free[i]] = (a >> i & 1) ? kF : kT;
            bool ok = true;
            if (clause_group)
                for (int c : clause_groups[gi - k - 1]) {
                    const auto& cl = f.clauses[c];
                    auto it = gd.valid.find(full[gd.lit(cl[0])] * 4 + full[gd.lit(cl[1])] * 2 + full[gd.lit(cl[2])]);
                    if (it == gd.valid.end()) {
                        ok = false;
                        break;
                    }
                    for (int j = 0; j < 6; ++j) full[gd.y(c, j + 1)] = it->second[j];
                }
            if (!ok || !proper_on(grp, full)) continue;
            std::vector<int> col;
            for (int v : grp) col.push_back(full[v]);
            out.group_of.push_back(gi);
            out.colouring.push_back(col);
        }
    }
    const int nv = int(out.group_of.size());
    out.graph = Graph(nv);
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b) {
            int ga = out.group_of[a], gb = out.group_of[b];
            if (ga == gb) continue;
            std::fill(full.begin(), full.end(), -1);
            const auto& va = out.groups[ga];
            const auto& vb = out.groups[gb];
            for (std::size_t i = 0; i < va.size(); ++i) full[va[i]] = out.colouring[a][i];
            bool ok = true;
            for (std::size_t i = 0; i < vb.size() && ok; ++i) {
                int v = vb[i];
                if (full[v] >= 0 && full[v] != out.colouring[b][i]) ok = false;
                full[v] = out.colouring[b][i];
            }
            if (!ok) continue;
            std::vector<int> both(va);
            for (int v : vb)
                if (std::find(va.begin(), va.end(), v) == va.end()) both.push_back(v);
            if (proper_on(both, full)) out.graph.add_edge(a, b);
        }
    return out;
}

} // namespace indsub
