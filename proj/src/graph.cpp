#include "ohmnet/graph.hpp"

#include "ohmnet/errors.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace ohmnet {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw DomainError("graph needs at least one vertex");
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_) {
        throw IndexError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
    }
}

void Graph::add_resistor(int u, int v, const Rational& resistance) {
    if (resistance <= 0) throw DomainError("resistance must be positive");
    add_conductance(u, v, Rational(1) / resistance);
}

void Graph::add_conductance(int u, int v, const Rational& conductance) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("self-loop on vertex " + std::to_string(u));
    if (conductance <= 0) throw DomainError("conductance must be positive");
    auto key = std::pair<int, int>(std::min(u, v), std::max(u, v));
    conductances_[{key.first, key.second}] += conductance;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    auto key = std::pair<int, int>(std::min(u, v), std::max(u, v));
    return conductances_.count({key.first, key.second}) > 0;
}

Rational Graph::conductance(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return Rational(0);
    auto key = std::pair<int, int>(std::min(u, v), std::max(u, v));
    auto it = conductances_.find({key.first, key.second});
    return it == conductances_.end() ? Rational(0) : it->second;
}

Rational Graph::resistance(int u, int v) const {
    Rational c = conductance(u, v);
    if (c == 0) throw DomainError("no edge between " + std::to_string(u) + " and " + std::to_string(v));
    return Rational(1) / c;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (const auto& [pair, c] : conductances_) {
        if (pair.first == v) out.push_back(pair.second);
        else if (pair.second == v) out.push_back(pair.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

RatMatrix laplacian(const Graph& g) {
    std::size_t n = static_cast<std::size_t>(g.vertex_count());
    RatMatrix l(n, n);
    for (const auto& [pair, c] : g.edges()) {
        std::size_t u = static_cast<std::size_t>(pair.first) - 1;
        std::size_t v = static_cast<std::size_t>(pair.second) - 1;
        l(u, v) -= c;
        l(v, u) -= c;
        l(u, u) += c;
        l(v, v) += c;
    }
    return l;
}

Graph parse_graph(const std::string& text) {
    struct Edge {
        int u, v;
        Rational r;
    };
    std::vector<Edge> edges;
    int declared_n = 0;
    int max_label = 0;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);

        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue; // blank line

        auto fail = [line_no](const std::string& what) -> ParseError {
            return ParseError("line " + std::to_string(line_no) + ": " + what);
        };

        if (first == "n") {
            if (!(fields >> declared_n) || declared_n < 1) throw fail("bad vertex count header");
            std::string extra;
            if (fields >> extra) throw fail("trailing tokens after header");
            continue;
        }

        std::string vs, rs;
        if (!(fields >> vs >> rs)) throw fail("expected 'u v r'");
        std::string extra;
        if (fields >> extra) throw fail("trailing tokens after edge");

        int u, v;
        try {
            std::size_t used;
            u = std::stoi(first, &used);
            if (used != first.size()) throw fail("bad vertex label '" + first + "'");
            v = std::stoi(vs, &used);
            if (used != vs.size()) throw fail("bad vertex label '" + vs + "'");
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw fail("bad vertex label");
        }
        if (u < 1 || v < 1) throw fail("vertex labels are 1-based positive integers");
        if (u == v) throw fail("self-loop on vertex " + std::to_string(u));

        Rational r;
        try {
            r = parse_rational(rs);
        } catch (const ParseError& e) {
            throw fail(e.what());
        }
        if (r <= 0) throw fail("resistance must be positive");

        edges.push_back({u, v, r});
        max_label = std::max({max_label, u, v});
    }

    int n = std::max(declared_n, max_label);
    if (n == 0) throw ParseError("no vertices: empty edge list and no header");
    if (declared_n > 0 && max_label > declared_n) {
        throw ParseError("edge label " + std::to_string(max_label) +
                         " exceeds declared vertex count " + std::to_string(declared_n));
    }

    Graph g(n);
    for (const auto& e : edges) g.add_resistor(e.u, e.v, e.r);
    return g;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

} // namespace ohmnet
