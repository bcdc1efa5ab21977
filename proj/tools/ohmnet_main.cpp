// ohmnet command-line tool: exact effective resistance on resistor
// networks by determinant ratio, grounded solve, circuit reduction, and
// per-family closed formulas, with cross-checking, a limit scan, and a
// method benchmark.

#include "ohmnet/bench.hpp"
#include "ohmnet/closed_forms.hpp"
#include "ohmnet/errors.hpp"
#include "ohmnet/families.hpp"
#include "ohmnet/graph.hpp"
#include "ohmnet/resistance.hpp"
#include "ohmnet/transform.hpp"
#include "ohmnet/util.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>

namespace {

using namespace ohmnet;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitThresholdUnmet = 3;

struct InputOptions {
    std::string family;
    int size = 0;
    std::string file;
};

struct OutputOptions {
    std::string format = "text";
    std::string path;
};

std::ostream& open_output(const OutputOptions& out, std::ofstream& file) {
    if (out.path.empty()) return std::cout;
    file.open(out.path);
    if (!file) throw Error("cannot open output file '" + out.path + "'");
    return file;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct LoadedGraph {
    Graph graph;
    std::string id;
    std::optional<FamilySpec> spec;
};

LoadedGraph load_graph(const InputOptions& in) {
    if (!in.file.empty() && !in.family.empty()) {
        throw Error("give either --family or --file, not both");
    }
    if (!in.file.empty()) {
        return {parse_graph(read_file(in.file)), in.file, std::nullopt};
    }
    if (in.family.empty()) throw Error("one of --family or --file is required");
    FamilySpec spec{family_from_name(in.family), in.size};
    return {generate(spec), in.family + "(" + std::to_string(in.size) + ")", spec};
}

Rational run_method(const std::string& method, const LoadedGraph& lg, int i, int j) {
    if (method == "det") return resistance_det(lg.graph, i, j);
    if (method == "solve") return resistance_solve(lg.graph, i, j);
    if (method == "reduce") return reduce_to_pair(lg.graph, i, j).first;
    if (method == "closed" || method == "recursion") {
        if (!lg.spec) {
            throw Error("method '" + method + "' needs a --family input");
        }
        return method == "closed" ? closed_form(*lg.spec, i, j) : recursion_form(*lg.spec, i, j);
    }
    throw Error("unknown method '" + method + "' (det, solve, reduce, closed, recursion)");
}

int cmd_resist(const InputOptions& in, const OutputOptions& out,
               std::vector<int> pair, const std::string& methods_csv) {
    LoadedGraph lg = load_graph(in);
    int i = pair[0], j = pair[1];

    std::vector<ResistanceReport> reports;
    std::istringstream ms(methods_csv);
    std::string method;
    while (std::getline(ms, method, ',')) {
        if (method.empty()) continue;
        Rational value = run_method(method, lg, i, j);
        reports.push_back({lg.id, i, j, method, value, to_decimal(value), ""});
    }
    if (reports.empty()) throw Error("no methods requested");

    std::ofstream file;
    std::ostream& os = open_output(out, file);
    if (out.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            arr.push_back({{"graph", r.graph_id},
                           {"i", r.i},
                           {"j", r.j},
                           {"method", r.method},
                           {"value", to_string(r.value)},
                           {"decimal", r.decimal}});
        }
        os << arr.dump(2) << "\n";
    } else if (out.format == "csv") {
        os << "graph,i,j,method,value,decimal\n";
        for (const auto& r : reports) {
            os << r.graph_id << ',' << r.i << ',' << r.j << ',' << r.method << ','
               << to_string(r.value) << ',' << r.decimal << "\n";
        }
    } else {
        for (const auto& r : reports) {
            os << r.graph_id << " r(" << r.i << "," << r.j << ") [" << r.method
               << "] = " << to_string(r.value) << " ~ " << r.decimal << "\n";
        }
    }

    for (const auto& r : reports) {
        if (r.value != reports.front().value) {
            std::cerr << "method disagreement on " << lg.id << " pair (" << i << "," << j
                      << "): " << reports.front().method << " = "
                      << to_string(reports.front().value) << " but " << r.method << " = "
                      << to_string(r.value) << " -- this is a bug, not a usage error\n";
            return kExitDisagreement;
        }
    }
    return kExitOk;
}

int cmd_matrix(const InputOptions& in, const OutputOptions& out) {
    LoadedGraph lg = load_graph(in);
    RatMatrix l = laplacian(lg.graph);
    std::ofstream file;
    std::ostream& os = open_output(out, file);
    if (out.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < l.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < l.cols(); ++c) row.push_back(to_string(l(r, c)));
            rows.push_back(row);
        }
        os << nlohmann::json{{"graph", lg.id}, {"laplacian", rows}}.dump(2) << "\n";
    } else {
        for (std::size_t r = 0; r < l.rows(); ++r) {
            for (std::size_t c = 0; c < l.cols(); ++c) {
                os << (c ? (out.format == "csv" ? "," : " ") : "") << to_string(l(r, c));
            }
            os << "\n";
        }
    }
    return kExitOk;
}

int cmd_reduce(const InputOptions& in, const OutputOptions& out, std::vector<int> pair) {
    LoadedGraph lg = load_graph(in);
    auto [value, trace] = reduce_to_pair(lg.graph, pair[0], pair[1]);
    nlohmann::json doc = trace_to_json(trace);
    doc["graph"] = lg.id;
    doc["pair"] = pair;
    doc["resistance"] = to_string(value);
    std::ofstream file;
    std::ostream& os = open_output(out, file);
    os << doc.dump(2) << "\n";
    return kExitOk;
}

// all-pairs, all-methods equality plus the metric axioms
int cmd_check(const std::string& family, int max_size, const std::string& file,
              const OutputOptions& out) {
    std::vector<LoadedGraph> instances;
    if (!file.empty()) {
        instances.push_back({parse_graph(read_file(file)), file, std::nullopt});
    } else {
        std::vector<std::string> names;
        if (family == "all") {
            names = {"path", "linear2tree", "linear3tree", "ladder", "fan", "wheel"};
        } else {
            names = {family_name(family_from_name(family))};
        }
        for (const auto& name : names) {
            Family f = family_from_name(name);
            int hi = f == Family::ladder ? max_size / 2 : max_size;
            for (int s = min_size(f); s <= hi; ++s) {
                FamilySpec spec{f, s};
                instances.push_back(
                    {generate(spec), name + "(" + std::to_string(s) + ")", spec});
            }
        }
    }

    std::mutex m;
    long pair_checks = 0;
    long formula_checks = 0;
    std::string failure;

    parallel_for(instances.size(), [&](std::size_t idx) {
        const LoadedGraph& lg = instances[idx];
        std::ostringstream local_fail;
        long local_pairs = 0, local_formulas = 0;

        RatMatrix rm = resistance_matrix(lg.graph);
        int n = lg.graph.vertex_count();
        for (int i = 1; i <= n && local_fail.str().empty(); ++i) {
            for (int j = i + 1; j <= n; ++j) {
                Rational d = resistance_det(lg.graph, i, j);
                Rational s = rm(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1);
                Rational r = reduce_to_pair(lg.graph, i, j).first;
                ++local_pairs;
                if (d != s || d != r) {
                    local_fail << lg.id << " pair (" << i << "," << j << "): det=" << to_string(d)
                               << " solve=" << to_string(s) << " reduce=" << to_string(r);
                    break;
                }
                if (lg.spec) {
                    try {
                        Rational c = closed_form(*lg.spec, i, j);
                        ++local_formulas;
                        if (c != d) {
                            local_fail << lg.id << " pair (" << i << "," << j
                                       << "): closed=" << to_string(c) << " det=" << to_string(d);
                            break;
                        }
                        Rational rec = recursion_form(*lg.spec, i, j);
                        if (rec != d) {
                            local_fail << lg.id << " pair (" << i << "," << j
                                       << "): recursion=" << to_string(rec)
                                       << " det=" << to_string(d);
                            break;
                        }
                    } catch (const UnsupportedPairError&) {
                        // formula does not cover this pair; general methods already agreed
                    }
                }
            }
        }
        if (local_fail.str().empty()) {
            MetricVerdict verdict = metric_check(rm);
            if (!verdict.pass) {
                local_fail << lg.id << " metric violation (" << verdict.i << "," << verdict.j
                           << "," << verdict.k << "): " << verdict.detail;
            }
        }

        std::lock_guard<std::mutex> lock(m);
        pair_checks += local_pairs;
        formula_checks += local_formulas;
        if (failure.empty() && !local_fail.str().empty()) failure = local_fail.str();
    });

    std::ofstream f;
    std::ostream& os = open_output(out, f);
    os << "instances: " << instances.size() << "\n"
       << "pair cross-checks (det=solve=reduce): " << pair_checks << "\n"
       << "formula cross-checks: " << formula_checks << "\n";
    if (!failure.empty()) {
        os << "FAIL: " << failure << "\n";
        return kExitDisagreement;
    }
    os << "all pass\n";
    return kExitOk;
}

int cmd_conjecture(long n_max, const std::string& target_str, double threshold,
                   const OutputOptions& out) {
    Rational target = parse_rational(target_str);
    auto rows = conjecture_delta_scan(n_max, target);

    std::ofstream file;
    std::ostream& os = open_output(out, file);
    os << "n,delta_num,delta_den,abs_err_decimal\n";
    for (const auto& row : rows) {
        std::ostringstream err;
        err << std::scientific << std::setprecision(6) << row.abs_err.get_d();
        os << row.n << ',' << row.delta.get_num().get_str() << ','
           << row.delta.get_den().get_str() << ',' << err.str() << "\n";
    }

    // exact comparison against the threshold; decimals above are display only
    Rational bound(threshold);
    const Rational& final_err = rows.back().abs_err;
    if (final_err >= bound) {
        std::cerr << "final |delta - " << to_string(target) << "| = " << to_decimal(final_err, 20)
                  << " does not meet threshold " << threshold << "\n";
        return kExitThresholdUnmet;
    }
    return kExitOk;
}

int cmd_bench(const std::string& family, const std::vector<long>& sizes, int reps,
              long cutoff, const OutputOptions& out) {
    BenchConfig config;
    config.family = family_from_name(family);
    config.sizes = sizes;
    config.repetitions = reps;
    config.matrix_cutoff = cutoff;
    auto rows = run_bench(config);
    std::ofstream file;
    std::ostream& os = open_output(out, file);
    os << bench_csv(rows);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact effective resistance toolkit"};
    app.require_subcommand(1);

    InputOptions in;
    OutputOptions out;
    std::vector<int> pair{1, 2};
    std::string methods = "det,solve";

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--family", in.family, "graph family name");
        cmd->add_option("--n", in.size, "family size parameter");
        cmd->add_option("--file", in.file, "edge-list input file ('-' for stdin)");
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", out.format, "text, json, or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--output", out.path, "write to file instead of stdout");
    };

    auto* resist = app.add_subcommand("resist", "compute one resistance by chosen methods");
    add_input(resist);
    add_output(resist);
    resist->add_option("--pair", pair, "vertex pair i j")->expected(2);
    resist->add_option("--method", methods, "comma-separated methods");

    auto* matrix = app.add_subcommand("matrix", "print a Laplacian");
    add_input(matrix);
    add_output(matrix);

    auto* reduce = app.add_subcommand("reduce", "emit a reduction trace as JSON");
    add_input(reduce);
    add_output(reduce);
    reduce->add_option("--pair", pair, "vertex pair i j")->expected(2);

    std::string check_family = "all";
    int check_max = 12;
    std::string check_file;
    auto* check = app.add_subcommand("check", "cross-method and metric validation sweep");
    check->add_option("--family", check_family, "family name or 'all'");
    check->add_option("--max", check_max, "largest vertex count per family");
    check->add_option("--file", check_file, "check a single edge-list file instead");
    add_output(check);

    long nmax = 200;
    std::string target = "1/14";
    double threshold = 1e-6;
    auto* conjecture = app.add_subcommand("conjecture", "limit scan of 3-tree corner increments");
    conjecture->add_option("--nmax", nmax, "scan up to this size");
    conjecture->add_option("--target", target, "limit value as a rational");
    conjecture->add_option("--threshold", threshold, "required final absolute error");
    add_output(conjecture);

    std::string bench_family = "linear2tree";
    std::vector<long> sizes{100, 1000, 10000};
    int reps = 3;
    long cutoff = 500;
    auto* bench = app.add_subcommand("bench", "method timing sweep, CSV output");
    bench->add_option("--family", bench_family, "family to sweep");
    bench->add_option("--sizes", sizes, "size sweep (comma separated)")->delimiter(',');
    bench->add_option("--reps", reps, "repetitions per timing (median reported)");
    bench->add_option("--det-cutoff", cutoff, "skip matrix methods above this size");
    add_output(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (resist->parsed()) return cmd_resist(in, out, pair, methods);
        if (matrix->parsed()) return cmd_matrix(in, out);
        if (reduce->parsed()) return cmd_reduce(in, out, pair);
        if (check->parsed()) return cmd_check(check_family, check_max, check_file, out);
        if (conjecture->parsed()) return cmd_conjecture(nmax, target, threshold, out);
        if (bench->parsed()) return cmd_bench(bench_family, sizes, reps, cutoff, out);
    } catch (const ohmnet::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
