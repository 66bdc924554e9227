#include "necklaces/astute_graph.hpp"

#include "necklaces/counting.hpp"
#include "necklaces/errors.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <sstream>

namespace necklaces {

namespace {

constexpr std::uint64_t max_graph_nodes = std::uint64_t{1} << 24;

long reach(long start, long nodes, const std::vector<std::vector<long>>& adj) {
    std::vector<bool> seen(nodes, false);
    std::deque<long> queue{start};
    seen[start] = true;
    long count = 0;
    while (!queue.empty()) {
        const long v = queue.front();
        queue.pop_front();
        ++count;
        for (long w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
    }
    return count;
}

} // namespace

std::string AstuteGraph::node_label(long id) const {
    return format_word(node_word(id), b) + "|" + std::to_string(node_counter(id));
}

AstuteGraph build_astute(int b, int s, long n) {
    if (b < 2)
        throw std::invalid_argument("alphabet size must be at least 2");
    if (s < 0 || n < 1)
        throw std::invalid_argument("build_astute wants s >= 0 and n >= 1");
    const std::uint64_t bs = checked_pow(b, s, max_graph_nodes);
    if (static_cast<std::uint64_t>(n) > max_graph_nodes / bs)
        throw std::invalid_argument("astute graph would be too large");

    AstuteGraph g;
    g.b = b;
    g.s = s;
    g.n = n;
    g.node_count = static_cast<long>(bs) * n;
    g.edges.reserve(static_cast<std::size_t>(g.node_count) * b);

    const long bs1 = s >= 1 ? static_cast<long>(bs) / b : 1;
    for (long from = 0; from < g.node_count; ++from) {
        const long uidx = from / n;
        const long v = from % n;
        const long vnext = (v + 1) % n;
        for (Symbol a = 0; a < b; ++a) {
            // u' drops the first symbol of u and appends a.
            const long unext = s == 0 ? 0 : (uidx % bs1) * b + a;
            g.edges.push_back(GraphEdge{from, unext * n + vnext, a});
        }
    }

    // Construction-time invariants; a failure here is a bug, not bad input.
    std::vector<long> indeg(g.node_count, 0);
    std::vector<std::vector<long>> fwd(g.node_count), rev(g.node_count);
    for (const auto& e : g.edges) {
        ++indeg[e.to];
        fwd[e.from].push_back(e.to);
        rev[e.to].push_back(e.from);
    }
    for (long v = 0; v < g.node_count; ++v)
        if (indeg[v] != b)
            throw std::logic_error("astute graph lost degree regularity");
    if (reach(0, g.node_count, fwd) != g.node_count ||
        reach(0, g.node_count, rev) != g.node_count)
        throw std::logic_error("astute graph lost strong connectivity");
    return g;
}

DiGraph as_digraph(const AstuteGraph& g) {
    DiGraph d;
    d.nodes = g.node_count;
    d.edges.reserve(g.edges.size());
    for (const auto& e : g.edges)
        d.edges.emplace_back(e.from, e.to);
    return d;
}

DiGraph line_graph(const DiGraph& g) {
    DiGraph out;
    out.nodes = static_cast<long>(g.edges.size());
    std::vector<std::vector<long>> by_tail(g.nodes);
    for (long i = 0; i < out.nodes; ++i)
        by_tail[g.edges[i].first].push_back(i);
    for (long i = 0; i < out.nodes; ++i)
        for (long j : by_tail[g.edges[i].second])
            out.edges.emplace_back(i, j);
    return out;
}

namespace {

// Adjacency with multiplicities, plus (in, out, loops) signature per node.
struct IsoView {
    long n;
    std::vector<std::vector<int>> adj;
    std::vector<std::array<long, 3>> sig;

    explicit IsoView(const DiGraph& g) : n(g.nodes), adj(n, std::vector<int>(n, 0)), sig(n) {
        for (auto [a, b] : g.edges)
            ++adj[a][b];
        for (long v = 0; v < n; ++v) {
            long in = 0, out = 0;
            for (long w = 0; w < n; ++w) {
                out += adj[v][w];
                in += adj[w][v];
            }
            sig[v] = {in, out, adj[v][v]};
        }
    }
};

bool iso_backtrack(const IsoView& a, const IsoView& b, std::vector<long>& map,
                   std::vector<bool>& used, long v) {
    if (v == a.n)
        return true;
    for (long cand = 0; cand < b.n; ++cand) {
        if (used[cand] || a.sig[v] != b.sig[cand])
            continue;
        bool ok = true;
        for (long u = 0; u < v && ok; ++u)
            ok = a.adj[v][u] == b.adj[cand][map[u]] && a.adj[u][v] == b.adj[map[u]][cand];
        if (!ok || a.adj[v][v] != b.adj[cand][cand])
            continue;
        map[v] = cand;
        used[cand] = true;
        if (iso_backtrack(a, b, map, used, v + 1))
            return true;
        used[cand] = false;
    }
    return false;
}

} // namespace

bool are_isomorphic(const DiGraph& ga, const DiGraph& gb) {
    if (ga.nodes != gb.nodes || ga.edges.size() != gb.edges.size())
        return false;
    IsoView a(ga), b(gb);
    auto prof = [](const IsoView& v) {
        auto s = v.sig;
        std::sort(s.begin(), s.end());
        return s;
    };
    if (prof(a) != prof(b))
        return false;
    std::vector<long> map(ga.nodes, -1);
    std::vector<bool> used(ga.nodes, false);
    return iso_backtrack(a, b, map, used, 0);
}

namespace {

struct TrailSearch {
    const AstuteGraph& g;
    std::vector<bool> used;
    std::vector<long> trail;
    long start;
    unsigned long long found = 0;
    std::set<std::vector<long>>* reps;

    TrailSearch(const AstuteGraph& graph, long start_node, std::set<std::vector<long>>* out)
        : g(graph), used(graph.edges.size(), false), start(start_node), reps(out) {}

    // Anchor the cyclic class at its visits to the start node: a circuit
    // enters the start exactly b times, so it shows up as exactly b trails
    // from here. The least of those b rotations names the class.
    void record() {
        ++found;
        if (!reps)
            return;
        std::vector<long> best = trail;
        const std::size_t m = trail.size();
        for (std::size_t p = 1; p < m; ++p) {
            if (g.edges[trail[p]].from != start)
                continue;
            std::vector<long> rot;
            rot.reserve(m);
            rot.insert(rot.end(), trail.begin() + p, trail.end());
            rot.insert(rot.end(), trail.begin(), trail.begin() + p);
            if (rot < best)
                best = std::move(rot);
        }
        reps->insert(std::move(best));
    }

    void dfs(long at) {
        if (trail.size() == g.edges.size()) {
            if (at == start)
                record();
            return;
        }
        const long base = at * g.b;
        for (int a = 0; a < g.b; ++a) {
            const long e = base + a;
            if (used[e])
                continue;
            used[e] = true;
            trail.push_back(e);
            dfs(g.edges[e].to);
            trail.pop_back();
            used[e] = false;
        }
    }
};

} // namespace

CircuitEnumeration enumerate_euler_circuits(const AstuteGraph& g, std::size_t edge_budget) {
    if (g.edges.size() > edge_budget)
        throw BudgetError("graph has " + std::to_string(g.edges.size()) +
                          " edges, beyond the enumeration budget of " +
                          std::to_string(edge_budget) +
                          "; use the closed-form circuit count instead");
    std::set<std::vector<long>> reps;
    TrailSearch search(g, 0, &reps);
    search.dfs(0);

    if (search.found % static_cast<unsigned long long>(g.b) != 0)
        throw std::logic_error("trail count is not a multiple of b");
    if (reps.size() != search.found / static_cast<unsigned long long>(g.b))
        throw std::logic_error("circuit deduplication lost trails");

    CircuitEnumeration out;
    out.trail_count = search.found;
    out.circuits.reserve(reps.size());
    for (const auto& seq : reps)
        out.circuits.push_back(EulerCircuit{0, seq});
    return out;
}

EulerCircuit one_euler_circuit(const AstuteGraph& g) {
    // Hierholzer with an explicit stack; out-edges leave in emitted order,
    // so the walk is deterministic.
    std::vector<int> next(g.node_count, 0);
    std::vector<std::pair<long, long>> stack;   // (node, incoming edge)
    std::vector<long> circuit;
    stack.emplace_back(0, -1);
    while (!stack.empty()) {
        auto [at, via] = stack.back();
        if (next[at] < g.b) {
            const long e = at * g.b + next[at]++;
            stack.emplace_back(g.edges[e].to, e);
        } else {
            stack.pop_back();
            if (via >= 0)
                circuit.push_back(via);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    if (circuit.size() != g.edges.size())
        throw std::logic_error("splice walk missed edges of a connected balanced graph");
    return EulerCircuit{0, std::move(circuit)};
}

Word circuit_to_word(const AstuteGraph& g, const EulerCircuit& c) {
    if (c.edge_ids.size() != g.edges.size())
        throw std::invalid_argument("circuit does not cover this graph's edges");
    std::vector<bool> used(g.edges.size(), false);
    long at = c.start;
    Word out;
    out.reserve(c.edge_ids.size());
    for (long e : c.edge_ids) {
        if (e < 0 || e >= static_cast<long>(g.edges.size()) || used[e])
            throw std::invalid_argument("circuit reuses or escapes this graph's edges");
        if (g.edges[e].from != at)
            throw std::invalid_argument("circuit edges do not chain head to tail");
        used[e] = true;
        at = g.edges[e].to;
        out.push_back(g.edges[e].emitted);
    }
    if (at != c.start)
        throw std::invalid_argument("circuit does not return to its start");
    return out;
}

BigCount determinant(std::vector<std::vector<BigCount>> m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination: every division below is exact.
    int sign = 1;
    BigCount prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                BigCount num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

BigCount char_poly_at(const DiGraph& g, const BigCount& x) {
    std::vector<std::vector<BigCount>> m(g.nodes, std::vector<BigCount>(g.nodes, 0));
    for (long v = 0; v < g.nodes; ++v)
        m[v][v] = x;
    for (auto [a, b] : g.edges)
        m[a][b] -= 1;
    return determinant(std::move(m));
}

BigCount arborescence_count(const DiGraph& g, long root, std::size_t node_budget) {
    if (root < 0 || root >= g.nodes)
        throw std::invalid_argument("root is not a node of the graph");
    if (static_cast<std::size_t>(g.nodes) > node_budget)
        throw BudgetError("graph has " + std::to_string(g.nodes) +
                          " nodes, beyond the determinant budget of " +
                          std::to_string(node_budget));
    // Out-degree Laplacian with the root struck out; self-loops cancel on
    // the diagonal, as they should (no tree uses them).
    const long n = g.nodes;
    std::vector<std::vector<BigCount>> lap(n, std::vector<BigCount>(n, 0));
    for (auto [a, b] : g.edges) {
        lap[a][a] += 1;
        lap[a][b] -= 1;
    }
    std::vector<std::vector<BigCount>> minor;
    minor.reserve(n - 1);
    for (long i = 0; i < n; ++i) {
        if (i == root)
            continue;
        std::vector<BigCount> row;
        row.reserve(n - 1);
        for (long j = 0; j < n; ++j)
            if (j != root)
                row.push_back(lap[i][j]);
        minor.push_back(std::move(row));
    }
    return determinant(std::move(minor));
}

BigCount arborescence_count(const AstuteGraph& g, long root, std::size_t node_budget) {
    return arborescence_count(as_digraph(g), root, node_budget);
}

bool check_char_poly(int b, int k, long j, const std::vector<long>& sample_points,
                     std::size_t node_budget) {
    if (k < 1 || j < 1)
        throw std::invalid_argument("check_char_poly wants k >= 1 and j >= 1");
    const AstuteGraph g = build_astute(b, k - 1, j);
    if (static_cast<std::size_t>(g.node_count) > node_budget)
        throw BudgetError("graph has " + std::to_string(g.node_count) +
                          " nodes, beyond the determinant budget of " +
                          std::to_string(node_budget));
    const DiGraph d = as_digraph(g);
    const std::uint64_t bk1 = checked_pow(b, k - 1, std::uint64_t{1} << 40);
    const unsigned long lead_exp = static_cast<unsigned long>(j) *
                                   static_cast<unsigned long>(bk1 - 1);

    for (long x : sample_points) {
        const BigCount xv(x);
        const BigCount expected =
            big_pow(xv, lead_exp) *
            (big_pow(xv, static_cast<unsigned long>(j)) - big_pow(BigCount(b), static_cast<unsigned long>(j)));
        if (char_poly_at(d, xv) != expected)
            return false;
    }

    // Circuit count must assemble as arborescences * ((b-1)!)^nodes.
    BigCount circuits;
    if (g.edges.size() <= 32)
        circuits = BigCount(static_cast<unsigned long>(enumerate_euler_circuits(g).circuits.size()));
    else
        circuits = euler_count_formula(b, k, j);
    const BigCount assembled =
        arborescence_count(d, 0, node_budget) *
        big_pow(big_factorial(static_cast<unsigned long>(b - 1)),
                static_cast<unsigned long>(g.node_count));
    return circuits == assembled;
}

std::string to_dot(const AstuteGraph& g) {
    std::ostringstream out;
    out << "digraph astute {\n";
    out << "  rankdir=LR;\n";
    for (const auto& e : g.edges)
        out << "  \"" << g.node_label(e.from) << "\" -> \"" << g.node_label(e.to)
            << "\" [label=\"" << format_word(Word{e.emitted}, g.b) << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace necklaces
