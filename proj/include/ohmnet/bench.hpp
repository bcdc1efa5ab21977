#pragma once

#include "ohmnet/families.hpp"

#include <string>
#include <vector>

namespace ohmnet {

struct BenchConfig {
    Family family = Family::linear2tree;
    std::vector<long> sizes;
    int repetitions = 3;
    // general (matrix-based) methods are skipped above this size
    long matrix_cutoff = 500;
};

struct BenchRow {
    std::string family;
    long size = 0;
    std::string method;
    double millis = 0.0; // median over repetitions
    bool skipped = false;
};

// Wall-clock comparison of {closed, recursion, det, solve, reduce} on
// each family's formula-covered pair across a size sweep.
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string bench_csv(const std::vector<BenchRow>& rows);

} // namespace ohmnet
