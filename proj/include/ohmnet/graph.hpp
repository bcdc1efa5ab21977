#pragma once

#include "ohmnet/matrix.hpp"
#include "ohmnet/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ohmnet {

/// Weighted simple undirected resistor network. Vertices carry dense
/// labels 1..n. Edge weights are stored as conductances so that parallel
/// insertions merge by addition and vertex elimination stays closed over
/// the representation.
class Graph {
public:
    explicit Graph(int n);

    int vertex_count() const { return n_; }

    // Adds a resistor of the given resistance between u and v. A repeated
    // pair merges by the parallel rule (conductances add).
    void add_resistor(int u, int v, const Rational& resistance);
    void add_conductance(int u, int v, const Rational& conductance);

    bool has_edge(int u, int v) const;
    // 0 when the pair has no edge.
    Rational conductance(int u, int v) const;
    // 1/conductance; throws DomainError when the pair has no edge.
    Rational resistance(int u, int v) const;

    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    std::size_t edge_count() const { return conductances_.size(); }

    // Keys are (u, v) with u < v.
    const std::map<std::pair<int, int>, Rational>& edges() const { return conductances_; }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_;
    std::map<std::pair<int, int>, Rational> conductances_;
};

// Weighted Laplacian: off-diagonal (i,j) = -conductance(i,j), diagonal =
// sum of incident conductances. Rows sum to exactly zero.
RatMatrix laplacian(const Graph& g);

// Edge-list format: '#' starts a comment, optional "n <count>" header,
// edge lines "u v r" with r a positive rational resistance ("p/q" or "p").
Graph parse_graph(const std::string& text);

bool is_connected(const Graph& g);

} // namespace ohmnet
