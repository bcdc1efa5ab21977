#pragma once

#include "ohmnet/graph.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <utility>
#include <vector>

namespace ohmnet {

enum class ReductionRule { prune, series, parallel, delta_y, y_delta, star_mesh };

std::string rule_name(ReductionRule rule);

struct TraceEdge {
    int u = 0;
    int v = 0;
    Rational resistance;
    bool operator==(const TraceEdge&) const = default;
};

struct ReductionStep {
    ReductionRule rule;
    // eliminated vertex first, then its neighbors; labels are those of
    // the graph at the time of the step
    std::vector<int> vertices;
    std::vector<TraceEdge> before;
    std::vector<TraceEdge> after;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

nlohmann::json trace_to_json(const ReductionTrace& trace);

// Delta-Y: replaces the triangle {n1,n2,n3} by a fresh center vertex
// n+1 with legs R_1 = R_B R_C / S, R_2 = R_A R_C / S, R_3 = R_A R_B / S,
// where R_A, R_B, R_C sit opposite n1, n2, n3 and S is their sum.
// Throws PreconditionError when a triangle edge is missing.
Graph delta_to_y(const Graph& g, int n1, int n2, int n3);

// Y-Delta: removes a degree-3 center, joining its neighbor pairs with
// R_A = P/R_1 etc., P = R_1 R_2 + R_2 R_3 + R_1 R_3 (parallel-merging
// with any existing edges). Labels above the center shift down by one.
Graph y_to_delta(const Graph& g, int center);

// Star-mesh (Kron) elimination of one vertex: neighbors s,t gain
// conductance c_s c_t / C with C the total incident conductance. All
// effective resistances among the survivors are preserved exactly.
// Labels above v shift down by one.
Graph eliminate_vertex(const Graph& g, int v);

// Eliminates everything except i and j, lowest degree first, and returns
// the resistance of the surviving edge plus the replayable trace.
std::pair<Rational, ReductionTrace> reduce_to_pair(const Graph& g, int i, int j);

} // namespace ohmnet
