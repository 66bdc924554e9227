#pragma once

#include "necklaces/number_theory.hpp"
#include "necklaces/words.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace necklaces {

struct GraphEdge {
    long from;
    long to;
    Symbol emitted;   // last symbol of the target's word label
};

// Directed multigraph on pairs (u, v): u a word of length s, v a counter
// mod n. Edge (u,v) -> (u',v') when u and u' overlap on s-1 symbols and
// v' = v+1 mod n. n*b^s nodes, n*b^(s+1) edges, in- and out-degree b at
// every node, strongly connected. For s = 0 the overlap is vacuous and the
// graph is n counter nodes joined in a cycle by b parallel edges.
//
// Node id = word_to_index(u)*n + v. Edge id = from*b + emitted, so a node's
// out-edges are contiguous and ordered by emitted symbol.
struct AstuteGraph {
    int b = 0;
    int s = 0;
    long n = 0;
    long node_count = 0;
    std::vector<GraphEdge> edges;

    long word_index(long id) const { return id / n; }
    long node_counter(long id) const { return id % n; }
    Word node_word(long id) const { return index_to_word(word_index(id), s, b); }
    long node_id(const Word& u, long v) const {
        return static_cast<long>(word_to_index(u, b)) * n + v;
    }
    std::span<const GraphEdge> out_edges(long node) const {
        return {edges.data() + node * b, static_cast<std::size_t>(b)};
    }
    std::string node_label(long id) const;   // "u|v"
};

/// Build and validate the graph (degree regularity, strong connectivity,
/// node/edge counts). A violation is a logic error, not a user error.
AstuteGraph build_astute(int b, int s, long n);

// Plain directed multigraph for the structural cross-checks.
struct DiGraph {
    long nodes = 0;
    std::vector<std::pair<long, long>> edges;
};

DiGraph as_digraph(const AstuteGraph& g);

/// Directed line graph: one node per edge of g, an edge e1 -> e2 whenever
/// head(e1) = tail(e2).
DiGraph line_graph(const DiGraph& g);

/// Directed multigraph isomorphism by backtracking search. Meant for the
/// small graphs in tests.
bool are_isomorphic(const DiGraph& a, const DiGraph& b);

// A closed walk using every edge exactly once, stored from a fixed start.
struct EulerCircuit {
    long start = 0;
    std::vector<long> edge_ids;
};

struct CircuitEnumeration {
    std::vector<EulerCircuit> circuits;     // one representative per circuit
    unsigned long long trail_count = 0;     // fixed-start trails found
};

/// Every Eulerian circuit of g, by exhaustive backtracking from node
/// (0^s, 0), out-edges tried in emitted-symbol order. A circuit passes the
/// start node exactly b times, so the trail count is an exact multiple of b
/// and each circuit is kept once, as the least rotation anchored at the
/// start node. Refuses graphs above edge_budget edges.
CircuitEnumeration enumerate_euler_circuits(const AstuteGraph& g,
                                            std::size_t edge_budget = 32);

/// One Eulerian circuit by cycle splicing (Hierholzer), deterministic under
/// the emitted-symbol edge order.
EulerCircuit one_euler_circuit(const AstuteGraph& g);

/// Symbols emitted along c; length = edge count. For s = k-1 the resulting
/// necklace is (k,n)-perfect. Errors if c is not a circuit of g.
Word circuit_to_word(const AstuteGraph& g, const EulerCircuit& c);

/// Exact determinant by fraction-free (Bareiss) elimination. Consumes m.
BigCount determinant(std::vector<std::vector<BigCount>> m);

/// Characteristic polynomial det(xI - A(g)) evaluated at an integer point.
BigCount char_poly_at(const DiGraph& g, const BigCount& x);

/// Number of spanning trees oriented toward root: determinant of the
/// out-degree Laplacian with root's row and column removed. Independent of
/// the root for these graphs. Refuses graphs above node_budget nodes.
BigCount arborescence_count(const DiGraph& g, long root,
                            std::size_t node_budget = 4096);
BigCount arborescence_count(const AstuteGraph& g, long root,
                            std::size_t node_budget = 4096);

/// For the graph G_{k-1,j}: checks det(xI - A) == x^(j*(b^(k-1)-1)) *
/// (x^j - b^j) at every sample point, and that the circuit count assembles
/// as arborescences * ((b-1)!)^nodes (enumeration when the graph is within
/// the edge budget, the closed formula otherwise).
bool check_char_poly(int b, int k, long j, const std::vector<long>& sample_points,
                     std::size_t node_budget = 4096);

/// Graphviz rendering; node label "u|v", edge label the emitted symbol.
std::string to_dot(const AstuteGraph& g);

} // namespace necklaces
