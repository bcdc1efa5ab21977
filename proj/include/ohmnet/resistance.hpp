#pragma once

#include "ohmnet/graph.hpp"
#include "ohmnet/matrix.hpp"

#include <string>

namespace ohmnet {

struct ResistanceReport {
    std::string graph_id;
    int i = 0;
    int j = 0;
    std::string method;
    Rational value;
    std::string decimal;
    std::string trace_ref; // optional, reduction method only
};

// Determinant-ratio method:
//   r(i,j) = det(L minus rows/cols {i,j}) / det(L minus row/col {j}).
// The denominator is the spanning-tree count for unit conductances.
// r(i,i) = 0. Throws ConnectivityError on a disconnected graph.
Rational resistance_det(const Graph& g, int i, int j);

// Current-injection method: grounds j, solves the reduced Laplacian
// against a unit injection at i, and reads the potential at i.
// Agrees with resistance_det exactly on every input.
Rational resistance_solve(const Graph& g, int i, int j);

// All-pairs resistance matrix (0 diagonal), n-1 grounded solves sharing
// one factorization of the grounded Laplacian.
RatMatrix resistance_matrix(const Graph& g);

struct MetricVerdict {
    bool pass = true;
    // violating triple (1-based vertices) and a short description
    int i = 0, j = 0, k = 0;
    std::string detail;
};

// Checks nonnegativity, symmetry, zero diagonal, and the triangle
// inequality over all vertex triples, exactly.
MetricVerdict metric_check(const Graph& g);
MetricVerdict metric_check(const RatMatrix& resistances);

} // namespace ohmnet
