#include "ohmnet/bench.hpp"

#include "ohmnet/closed_forms.hpp"
#include "ohmnet/errors.hpp"
#include "ohmnet/resistance.hpp"
#include "ohmnet/transform.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace ohmnet {

namespace {

// the formula-covered pair used for timing comparisons
std::pair<int, int> bench_pair(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::ladder: return {1, 2};
        case Family::fan:
        case Family::wheel: return {1, spec.size};
        default: return {1, family_vertex_count(spec)};
    }
}

double time_millis(const std::function<void()>& work, int repetitions) {
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(repetitions));
    for (int r = 0; r < repetitions; ++r) {
        auto start = std::chrono::steady_clock::now();
        work();
        auto stop = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

} // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    if (config.repetitions < 3) throw DomainError("bench needs at least 3 repetitions");
    std::vector<BenchRow> rows;
    std::string fname = family_name(config.family);
    for (long size : config.sizes) {
        FamilySpec spec{config.family, static_cast<int>(size)};
        if (size < min_size(config.family)) {
            throw DomainError(fname + " bench size below minimum");
        }
        auto [i, j] = bench_pair(spec);
        long n = family_vertex_count(spec);

        struct Method {
            const char* name;
            bool formula;
            std::function<void()> work;
        };
        std::vector<Method> methods = {
            {"closed", true, [=] { (void)closed_form(spec, i, j); }},
            {"recursion", true, [=] { (void)recursion_form(spec, i, j); }},
            {"det", false, [=] { (void)resistance_det(generate(spec), i, j); }},
            {"solve", false, [=] { (void)resistance_solve(generate(spec), i, j); }},
            {"reduce", false, [=] { (void)reduce_to_pair(generate(spec), i, j); }},
        };

        for (const auto& m : methods) {
            BenchRow row{fname, size, m.name, 0.0, false};
            if (!m.formula && n > config.matrix_cutoff) {
                row.skipped = true;
            } else if (m.formula && (config.family == Family::linear3tree)) {
                row.skipped = true; // no closed formula for this family
            } else {
                row.millis = time_millis(m.work, config.repetitions);
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "family,n,method,milliseconds\n";
    for (const auto& row : rows) {
        out << row.family << ',' << row.size << ',' << row.method << ',';
        if (row.skipped) {
            out << "exceeds cutoff";
        } else {
            out << row.millis;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace ohmnet
