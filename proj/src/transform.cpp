#include "ohmnet/transform.hpp"

#include "ohmnet/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace ohmnet {

std::string rule_name(ReductionRule rule) {
    switch (rule) {
        case ReductionRule::prune: return "prune";
        case ReductionRule::series: return "series";
        case ReductionRule::parallel: return "parallel";
        case ReductionRule::delta_y: return "delta-y";
        case ReductionRule::y_delta: return "y-delta";
        case ReductionRule::star_mesh: return "star-mesh";
    }
    throw DomainError("bad rule tag");
}

nlohmann::json trace_to_json(const ReductionTrace& trace) {
    auto edges_json = [](const std::vector<TraceEdge>& edges) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : edges) {
            arr.push_back({{"u", e.u}, {"v", e.v}, {"resistance", to_string(e.resistance)}});
        }
        return arr;
    };
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : trace.steps) {
        steps.push_back({{"rule", rule_name(step.rule)},
                         {"vertices", step.vertices},
                         {"before", edges_json(step.before)},
                         {"after", edges_json(step.after)}});
    }
    return {{"steps", steps}};
}

namespace {

// Copies g into a graph with n-1 vertices, dropping every edge at
// `removed` and shifting labels above it down by one.
Graph without_vertex(const Graph& g, int removed) {
    Graph out(g.vertex_count() - 1);
    auto shift = [removed](int w) { return w > removed ? w - 1 : w; };
    for (const auto& [pair, c] : g.edges()) {
        if (pair.first == removed || pair.second == removed) continue;
        out.add_conductance(shift(pair.first), shift(pair.second), c);
    }
    return out;
}

} // namespace

Graph delta_to_y(const Graph& g, int n1, int n2, int n3) {
    if (n1 == n2 || n1 == n3 || n2 == n3) {
        throw PreconditionError("delta-y needs three distinct vertices");
    }
    if (!g.has_edge(n1, n2) || !g.has_edge(n2, n3) || !g.has_edge(n1, n3)) {
        throw PreconditionError("delta-y needs all three triangle edges present");
    }
    Rational ra = g.resistance(n2, n3); // opposite n1
    Rational rb = g.resistance(n1, n3); // opposite n2
    Rational rc = g.resistance(n1, n2); // opposite n3
    Rational s = ra + rb + rc;

    int center = g.vertex_count() + 1;
    Graph out(center);
    for (const auto& [pair, c] : g.edges()) {
        auto key = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
        bool triangle = pair == key(n1, n2) || pair == key(n2, n3) || pair == key(n1, n3);
        if (!triangle) out.add_conductance(pair.first, pair.second, c);
    }
    out.add_resistor(n1, center, rb * rc / s);
    out.add_resistor(n2, center, ra * rc / s);
    out.add_resistor(n3, center, ra * rb / s);
    return out;
}

Graph y_to_delta(const Graph& g, int center) {
    std::vector<int> nb = g.neighbors(center);
    if (nb.size() != 3) {
        throw PreconditionError("y-delta center must have degree 3, vertex " +
                                std::to_string(center) + " has degree " +
                                std::to_string(nb.size()));
    }
    Rational r1 = g.resistance(center, nb[0]);
    Rational r2 = g.resistance(center, nb[1]);
    Rational r3 = g.resistance(center, nb[2]);
    Rational p = r1 * r2 + r2 * r3 + r1 * r3;

    Graph out = without_vertex(g, center);
    auto shift = [center](int w) { return w > center ? w - 1 : w; };
    out.add_resistor(shift(nb[1]), shift(nb[2]), p / r1);
    out.add_resistor(shift(nb[0]), shift(nb[2]), p / r2);
    out.add_resistor(shift(nb[0]), shift(nb[1]), p / r3);
    return out;
}

Graph eliminate_vertex(const Graph& g, int v) {
    if (g.vertex_count() < 2) {
        throw DomainError("cannot eliminate the last vertex");
    }
    std::vector<int> nb = g.neighbors(v);
    if (nb.empty()) {
        throw ConnectivityError("vertex " + std::to_string(v) + " is isolated");
    }
    Rational total(0);
    for (int w : nb) total += g.conductance(v, w);

    Graph out = without_vertex(g, v);
    auto shift = [v](int w) { return w > v ? w - 1 : w; };
    for (std::size_t s = 0; s < nb.size(); ++s) {
        for (std::size_t t = s + 1; t < nb.size(); ++t) {
            Rational c = g.conductance(v, nb[s]) * g.conductance(v, nb[t]) / total;
            out.add_conductance(shift(nb[s]), shift(nb[t]), c);
        }
    }
    return out;
}

std::pair<Rational, ReductionTrace> reduce_to_pair(const Graph& g, int i, int j) {
    if (i == j) throw PreconditionError("reduce_to_pair needs two distinct vertices");
    int n = g.vertex_count();
    if (i < 1 || i > n || j < 1 || j > n) throw IndexError("vertex pair out of range");
    if (!is_connected(g)) throw ConnectivityError("graph is not connected");

    Graph current = g;
    ReductionTrace trace;
    while (current.vertex_count() > 2) {
        // lowest degree first, ties to the smallest label
        int victim = 0;
        int best_degree = current.vertex_count();
        for (int v = 1; v <= current.vertex_count(); ++v) {
            if (v == i || v == j) continue;
            int d = current.degree(v);
            if (d < best_degree) {
                best_degree = d;
                victim = v;
            }
        }

        std::vector<int> nb = current.neighbors(victim);
        ReductionStep step;
        switch (nb.size()) {
            case 1: step.rule = ReductionRule::prune; break;
            case 2: step.rule = ReductionRule::series; break;
            case 3: step.rule = ReductionRule::y_delta; break;
            default: step.rule = ReductionRule::star_mesh; break;
        }
        step.vertices.push_back(victim);
        step.vertices.insert(step.vertices.end(), nb.begin(), nb.end());
        for (int w : nb) step.before.push_back({victim, w, current.resistance(victim, w)});

        Graph next = eliminate_vertex(current, victim);
        auto shift = [victim](int w) { return w > victim ? w - 1 : w; };
        for (std::size_t s = 0; s < nb.size(); ++s) {
            for (std::size_t t = s + 1; t < nb.size(); ++t) {
                int a = shift(nb[s]);
                int b = shift(nb[t]);
                if (next.has_edge(a, b)) {
                    step.after.push_back({nb[s], nb[t], next.resistance(a, b)});
                }
            }
        }
        trace.steps.push_back(std::move(step));

        current = std::move(next);
        i = shift(i);
        j = shift(j);
    }
    return {current.resistance(i, j), std::move(trace)};
}

} // namespace ohmnet
