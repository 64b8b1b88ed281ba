// randnet: sample random simple graphs from an expected degree sequence and
// reproduce the degree-fidelity experiments. See README.md for the model
// background; subcommand --help lists the flags.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "randnet/edge_prob.hpp"
#include "randnet/experiments.hpp"
#include "randnet/generators.hpp"
#include "randnet/graph.hpp"
#include "randnet/oracle.hpp"
#include "randnet/sampler.hpp"

namespace {

using namespace randnet;

// Exact-rational reporting calls the big-integer oracle; past this size its
// binomials get large enough to notice on the command line, and the decimal
// value is what matters anyway.
constexpr std::uint64_t kExactReportMaxN = 1000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const CLI::App* cmd, std::uint64_t seed) {
    if (cmd->count("--seed") > 0) {
        return seed;
    }
    std::random_device rd;
    const std::uint64_t fresh =
        (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::fprintf(stderr, "seed: %" PRIu64 "\n", fresh);
    return fresh;
}

// Stdout by default, or the --output target; fails loudly, not silently.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) : path_(path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw std::runtime_error("cannot open output file: " + path);
            }
        }
    }
    std::ostream& stream() { return path_.empty() ? std::cout : file_; }
    void finish() {
        stream().flush();
        if (!stream()) {
            throw std::runtime_error("write failed" +
                                     (path_.empty() ? "" : ": " + path_));
        }
    }

private:
    std::string path_;
    std::ofstream file_;
};

bool integral(double v) {
    return std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15;
}

// Small-integer raw ratio like "-5/76" for the strict-mode error message;
// falls back to the decimal for non-integer terms.
std::string format_raw_ratio(const CombinatorialTerms& t) {
    const double den_d = t.x + t.y;
    if (integral(t.x) && integral(den_d) && den_d != 0.0) {
        auto num = static_cast<long long>(std::llround(t.x));
        auto den = static_cast<long long>(std::llround(den_d));
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        std::ostringstream s;
        s << num / g << '/' << den / g;
        return s.str();
    }
    std::ostringstream s;
    s << t.p;
    return s.str();
}

ModelKind parse_single_model(const std::string& name) {
    if (name == "chung-lu") {
        return ModelKind::chung_lu;
    }
    if (name == "combinatorial") {
        return ModelKind::combinatorial;
    }
    throw UsageError("this command needs a single --model, not '" + name + "'");
}

ProbMode parse_mode(const std::string& name) {
    return name == "clamp" ? ProbMode::clamp : ProbMode::strict;
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// ---- prob ------------------------------------------------------------

struct ProbArgs {
    double n = 0;
    double m = 0;
    double wi = 0;
    double wj = 0;
    std::string model = "combinatorial";
    std::string mode = "strict";
    std::string output;
};

std::string prob_line(const ProbArgs& a, ModelKind kind, bool label) {
    std::string line;
    if (label) {
        line += kind == ModelKind::chung_lu ? "chung-lu " : "combinatorial ";
    }
    if (kind == ModelKind::chung_lu) {
        line += fmt12(chung_lu_p(2.0 * a.m, a.wi, a.wj));
        return line;
    }

    const ProbMode mode = parse_mode(a.mode);
    double p;
    try {
        p = combinatorial_p(a.n, a.m, a.wi, a.wj, mode);
    } catch (const NonGraphicalError& e) {
        throw NonGraphicalError(std::string(e.what()) + " (raw value " +
                                    format_raw_ratio(e.terms) + ")",
                                e.terms);
    }
    line += fmt12(p);

    // Annotate with the exact rational when the inputs are honest integers
    // small enough for the oracle.
    if (integral(a.n) && integral(a.m) && integral(a.wi) && integral(a.wj) &&
        a.n >= 2 && a.n <= static_cast<double>(kExactReportMaxN)) {
        try {
            const OracleResult exact = oracle_p(
                static_cast<std::uint64_t>(a.n), std::llround(a.m),
                std::llround(a.wi), std::llround(a.wj));
            line += " (exact: " + exact.p.get_str() + ")";
        } catch (const UndefinedProbabilityError&) {
            // clamped value has no exact counterpart; print the decimal only
        } catch (const std::invalid_argument&) {
            // degrees outside [0, n-1]: formula extends, the oracle does not
        }
    }
    return line;
}

void run_prob(const ProbArgs& a) {
    OutputTarget out(a.output);
    if (a.model == "both") {
        out.stream() << prob_line(a, ModelKind::chung_lu, true) << '\n'
                     << prob_line(a, ModelKind::combinatorial, true) << '\n';
    } else {
        out.stream() << prob_line(a, parse_single_model(a.model), false)
                     << '\n';
    }
    out.finish();
}

// ---- degrees ---------------------------------------------------------

void run_degrees(const std::string& input, const std::string& output) {
    const Graph g = read_edge_list_file(input);
    const auto deg = degree_sequence(g);
    OutputTarget out(output);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out.stream() << g.label(v) << ' ' << deg[v] << '\n';
    }
    out.finish();
}

// ---- randomize -------------------------------------------------------

struct RandomizeArgs {
    std::string input;
    std::string model = "combinatorial";
    std::string mode = "strict";
    std::string algorithm = "skipping";
    std::uint64_t seed = 0;
    std::string output;
};

void run_randomize(const RandomizeArgs& a, const CLI::App* cmd) {
    const Graph g = read_edge_list_file(a.input);
    const auto deg = degree_sequence(g);
    const WeightSeq weights(std::vector<double>(deg.begin(), deg.end()));

    SamplerConfig cfg;
    cfg.model = parse_single_model(a.model);
    cfg.mode = parse_mode(a.mode);
    cfg.algorithm =
        a.algorithm == "naive" ? Algorithm::naive : Algorithm::skipping;
    cfg.seed = resolve_seed(cmd, a.seed);

    const SampleResult r = sample(weights, cfg);
    // Same node set as the input, so carry its labels over.
    const Graph labeled = Graph::from_unique_edges(
        r.graph.node_count(), std::vector<Edge>(r.graph.edges()),
        std::vector<std::string>(g.labels()));
    OutputTarget out(a.output);
    write_edge_list(labeled, out.stream());
    out.finish();
}

// ---- compare ---------------------------------------------------------

struct CompareArgs {
    std::string input;
    std::size_t trials = 500;
    std::uint64_t seed = 0;
    std::string output;
};

void run_compare_cmd(const CompareArgs& a, const CLI::App* cmd) {
    const Graph g = read_edge_list_file(a.input);
    const TrialReport report =
        run_compare(g, a.trials, resolve_seed(cmd, a.seed));
    OutputTarget out(a.output);
    write_trial_report_csv(report, out.stream());
    out.finish();
}

// ---- sweep -----------------------------------------------------------

struct SweepArgs {
    std::string family;
    std::size_t n = 1000;
    std::string densities = "0.1:0.9:0.1";
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::string output;
};

void run_sweep_cmd(const SweepArgs& a, const CLI::App* cmd) {
    const Family family = a.family == "er" ? Family::er : Family::ba;
    const auto rows = run_sweep(family, a.n, parse_densities(a.densities),
                                a.trials, resolve_seed(cmd, a.seed));
    OutputTarget out(a.output);
    write_sweep_csv(rows, out.stream());
    out.finish();
}

// ---- generate --------------------------------------------------------

struct GenerateArgs {
    std::string family;
    std::size_t n = 0;
    std::optional<std::uint64_t> m;
    std::optional<double> density;
    std::optional<double> p;
    std::optional<std::size_t> m_per_node;
    std::optional<std::uint64_t> target_edges;
    std::uint64_t seed = 0;
    std::string output;
};

void run_generate(const GenerateArgs& a, const CLI::App* cmd) {
    const std::uint64_t seed = resolve_seed(cmd, a.seed);
    Graph g = Graph::from_unique_edges(0, {});
    if (a.family == "er") {
        const int given = int(a.m.has_value()) + int(a.density.has_value()) +
                          int(a.p.has_value());
        if (given != 1) {
            throw UsageError(
                "er needs exactly one of --m, --density, --p");
        }
        if (a.p) {
            g = generate_er_gnp(a.n, *a.p, seed);
        } else {
            const std::uint64_t m =
                a.m ? *a.m : er_edge_count(a.n, *a.density);
            g = generate_er_gnm(a.n, m, seed);
        }
    } else {
        const int given =
            int(a.m_per_node.has_value()) + int(a.target_edges.has_value());
        if (given != 1) {
            throw UsageError(
                "ba needs exactly one of --m-per-node, --target-edges");
        }
        const std::size_t m0 = a.m_per_node
                                   ? *a.m_per_node
                                   : ba_calibrate_m_per_node(a.n, *a.target_edges);
        g = generate_ba(a.n, m0, seed);
    }
    OutputTarget out(a.output);
    write_edge_list(g, out.stream());
    out.finish();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"random graph sampling from expected degree sequences"};
    app.require_subcommand(1);

    const std::vector<std::string> models{"chung-lu", "combinatorial", "both"};
    const std::vector<std::string> modes{"strict", "clamp"};
    const std::vector<std::string> algorithms{"skipping", "naive"};
    const std::vector<std::string> families{"er", "ba"};

    ProbArgs prob;
    CLI::App* prob_cmd =
        app.add_subcommand("prob", "edge probability for one pair of degrees");
    prob_cmd->add_option("--n", prob.n, "number of nodes")->required();
    prob_cmd->add_option("--m", prob.m, "number of edges")->required();
    prob_cmd->add_option("--wi", prob.wi, "first node's expected degree")
        ->required();
    prob_cmd->add_option("--wj", prob.wj, "second node's expected degree")
        ->required();
    prob_cmd->add_option("--model", prob.model, "probability model")
        ->check(CLI::IsMember(models));
    prob_cmd->add_option("--mode", prob.mode, "out-of-range handling")
        ->check(CLI::IsMember(modes));
    prob_cmd->add_option("--output", prob.output, "write here instead of stdout");

    std::string degrees_input, degrees_output;
    CLI::App* degrees_cmd =
        app.add_subcommand("degrees", "degree sequence of an edge list");
    degrees_cmd->add_option("--input", degrees_input, "edge list file")
        ->required();
    degrees_cmd->add_option("--output", degrees_output,
                            "write here instead of stdout");

    RandomizeArgs rnd;
    CLI::App* randomize_cmd = app.add_subcommand(
        "randomize", "sample a random graph with the input's expected degrees");
    randomize_cmd->add_option("--input", rnd.input, "edge list file")
        ->required();
    randomize_cmd->add_option("--model", rnd.model, "probability model")
        ->check(CLI::IsMember(models));
    randomize_cmd->add_option("--mode", rnd.mode, "out-of-range handling")
        ->check(CLI::IsMember(modes));
    randomize_cmd->add_option("--algorithm", rnd.algorithm, "sampling algorithm")
        ->check(CLI::IsMember(algorithms));
    randomize_cmd->add_option("--seed", rnd.seed, "master RNG seed");
    randomize_cmd->add_option("--output", rnd.output,
                              "write here instead of stdout");

    CompareArgs cmp;
    CLI::App* compare_cmd = app.add_subcommand(
        "compare", "per-node degree fidelity of both models, as CSV");
    compare_cmd->add_option("--input", cmp.input, "edge list file")->required();
    compare_cmd->add_option("--trials", cmp.trials, "randomizations per model");
    compare_cmd->add_option("--seed", cmp.seed, "master RNG seed");
    compare_cmd->add_option("--output", cmp.output,
                            "write here instead of stdout");

    SweepArgs swp;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "model fidelity across graph densities, as CSV");
    sweep_cmd->add_option("--family", swp.family, "input graph family")
        ->check(CLI::IsMember(families))
        ->required();
    sweep_cmd->add_option("--n", swp.n, "nodes per generated graph");
    sweep_cmd->add_option("--densities", swp.densities,
                          "start:stop:step or comma list");
    sweep_cmd->add_option("--trials", swp.trials, "repetitions per density");
    sweep_cmd->add_option("--seed", swp.seed, "master RNG seed");
    sweep_cmd->add_option("--output", swp.output, "write here instead of stdout");

    GenerateArgs gen;
    CLI::App* generate_cmd =
        app.add_subcommand("generate", "generate a reference input graph");
    generate_cmd->add_option("--family", gen.family, "graph family")
        ->check(CLI::IsMember(families))
        ->required();
    generate_cmd->add_option("--n", gen.n, "number of nodes")->required();
    generate_cmd->add_option("--m", gen.m, "exact edge count (er)");
    generate_cmd->add_option("--density", gen.density, "target density (er)");
    generate_cmd->add_option("--p", gen.p, "per-pair edge probability (er)");
    generate_cmd->add_option("--m-per-node", gen.m_per_node,
                             "attachment edges per node (ba)");
    generate_cmd->add_option("--target-edges", gen.target_edges,
                             "calibrate attachment to this edge count (ba)");
    generate_cmd->add_option("--seed", gen.seed, "master RNG seed");
    generate_cmd->add_option("--output", gen.output,
                             "write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors exit 1, not CLI11's own codes
    }

    try {
        if (prob_cmd->parsed()) {
            run_prob(prob);
        } else if (degrees_cmd->parsed()) {
            run_degrees(degrees_input, degrees_output);
        } else if (randomize_cmd->parsed()) {
            run_randomize(rnd, randomize_cmd);
        } else if (compare_cmd->parsed()) {
            run_compare_cmd(cmp, compare_cmd);
        } else if (sweep_cmd->parsed()) {
            run_sweep_cmd(swp, sweep_cmd);
        } else if (generate_cmd->parsed()) {
            run_generate(gen, generate_cmd);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
