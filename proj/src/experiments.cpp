#include "randnet/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "randnet/generators.hpp"
#include "randnet/rng.hpp"
#include "randnet/sampler.hpp"

namespace randnet {

namespace {

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

WeightSeq weights_from_degrees(const Graph& g) {
    const auto deg = degree_sequence(g);
    return WeightSeq(std::vector<double>(deg.begin(), deg.end()));
}

double population_std(double sum, double sumsq, double count) {
    const double mean = sum / count;
    return std::sqrt(std::max(0.0, sumsq / count - mean * mean));
}

} // namespace

TrialReport run_compare(const Graph& g, std::size_t trials, std::uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("run_compare: need at least one trial");
    }
    const std::size_t n = g.node_count();
    const WeightSeq weights = weights_from_degrees(g);
    const auto original = degree_sequence(g);

    // [model][node] running sums of sampled degree and its square.
    std::vector<double> sum[2]{std::vector<double>(n, 0.0),
                               std::vector<double>(n, 0.0)};
    std::vector<double> sumsq[2]{std::vector<double>(n, 0.0),
                                 std::vector<double>(n, 0.0)};
    const ModelKind kinds[2] = {ModelKind::chung_lu, ModelKind::combinatorial};

    for (int k = 0; k < 2; ++k) {
        const std::uint64_t model_seed = derive_stream(seed, static_cast<std::uint64_t>(k));
        for (std::size_t t = 0; t < trials; ++t) {
            SamplerConfig cfg;
            cfg.model = kinds[k];
            cfg.seed = derive_stream(model_seed, t);
            const SampleResult r = sample(weights, cfg);
            const auto deg = degree_sequence(r.graph);
            for (std::size_t v = 0; v < n; ++v) {
                const auto d = static_cast<double>(deg[v]);
                sum[k][v] += d;
                sumsq[k][v] += d * d;
            }
        }
    }

    TrialReport report;
    report.trials = trials;
    report.rows.resize(n);
    const auto tcount = static_cast<double>(trials);
    for (std::size_t v = 0; v < n; ++v) {
        TrialNodeRow& row = report.rows[v];
        row.node = v;
        row.original_degree = original[v];
        row.mean_degree_cl = sum[0][v] / tcount;
        row.mean_degree_comb = sum[1][v] / tcount;
        row.std_degree_cl = population_std(sum[0][v], sumsq[0][v], tcount);
        row.std_degree_comb = population_std(sum[1][v], sumsq[1][v], tcount);
    }
    std::sort(report.rows.begin(), report.rows.end(),
              [](const TrialNodeRow& a, const TrialNodeRow& b) {
                  return a.original_degree != b.original_degree
                             ? a.original_degree > b.original_degree
                             : a.node < b.node;
              });
    return report;
}

std::string family_name(Family f) {
    return f == Family::er ? "ER" : "BA";
}

std::vector<SweepRow> run_sweep(Family family, std::size_t n,
                                const std::vector<double>& densities,
                                std::size_t trials, std::uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("run_sweep: need at least one trial");
    }
    if (n < 2) {
        throw std::invalid_argument("run_sweep: need at least two nodes");
    }

    std::vector<SweepRow> rows;
    rows.reserve(densities.size());
    for (std::size_t di = 0; di < densities.size(); ++di) {
        const double density = densities[di];
        const std::uint64_t target_m = er_edge_count(n, density);
        const std::size_t ba_m =
            family == Family::ba ? ba_calibrate_m_per_node(n, target_m) : 0;
        const std::uint64_t base = derive_stream(seed, di);

        double abs_sum[2] = {0.0, 0.0};
        double signed_sum[2] = {0.0, 0.0};
        double signed_sumsq[2] = {0.0, 0.0};
        const ModelKind kinds[2] = {ModelKind::chung_lu,
                                    ModelKind::combinatorial};

        for (std::size_t t = 0; t < trials; ++t) {
            const Graph input =
                family == Family::er
                    ? generate_er_gnm(n, target_m, derive_stream(base, 3 * t))
                    : generate_ba(n, ba_m, derive_stream(base, 3 * t));
            const WeightSeq weights = weights_from_degrees(input);
            const double given_mean_degree =
                2.0 * static_cast<double>(input.edge_count()) /
                static_cast<double>(n);

            for (int k = 0; k < 2; ++k) {
                SamplerConfig cfg;
                cfg.model = kinds[k];
                cfg.seed = derive_stream(base, 3 * t + 1 + static_cast<std::uint64_t>(k));
                const SampleResult r = sample(weights, cfg);
                const double diff =
                    2.0 * static_cast<double>(r.graph.edge_count()) /
                        static_cast<double>(n) -
                    given_mean_degree;
                abs_sum[k] += std::fabs(diff);
                signed_sum[k] += diff;
                signed_sumsq[k] += diff * diff;
            }
        }

        const auto tcount = static_cast<double>(trials);
        SweepRow row;
        row.family = family;
        row.n = n;
        row.density = density;
        row.trials = trials;
        row.mean_abs_diff_cl = abs_sum[0] / tcount;
        row.mean_abs_diff_comb = abs_sum[1] / tcount;
        row.signed_diff_cl = signed_sum[0] / tcount;
        row.signed_diff_comb = signed_sum[1] / tcount;
        row.std_cl = population_std(signed_sum[0], signed_sumsq[0], tcount);
        row.std_comb = population_std(signed_sum[1], signed_sumsq[1], tcount);
        rows.push_back(row);
    }
    return rows;
}

std::vector<double> parse_densities(const std::string& text) {
    auto parse_one = [](const std::string& s) {
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("densities: cannot parse '" + s + "'");
        }
        if (used != s.size()) {
            throw std::invalid_argument("densities: cannot parse '" + s + "'");
        }
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument("densities: value out of [0, 1]: " + s);
        }
        return v;
    };
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::size_t begin = 0;
        while (true) {
            const std::size_t end = s.find(sep, begin);
            parts.push_back(s.substr(begin, end - begin));
            if (end == std::string::npos) {
                return parts;
            }
            begin = end + 1;
        }
    };

    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) {
            throw std::invalid_argument(
                "densities: range form is start:stop:step");
        }
        const double start = parse_one(parts[0]);
        const double stop = parse_one(parts[1]);
        std::size_t used = 0;
        const double step = std::stod(parts[2], &used);
        if (used != parts[2].size() || !(step > 0.0)) {
            throw std::invalid_argument("densities: step must be positive");
        }
        if (stop < start) {
            throw std::invalid_argument("densities: stop below start");
        }
        std::vector<double> out;
        // Tolerance keeps 0.1:0.9:0.2 from dropping 0.9 to rounding noise.
        const auto count =
            static_cast<std::size_t>((stop - start) / step + 1e-9) + 1;
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(start + static_cast<double>(i) * step);
        }
        return out;
    }

    std::vector<double> out;
    for (const auto& part : split(text, ',')) {
        out.push_back(parse_one(part));
    }
    return out;
}

void write_trial_report_csv(const TrialReport& report, std::ostream& out) {
    out << "original_degree,mean_degree_cl,mean_degree_comb,"
           "std_degree_cl,std_degree_comb,trials\n";
    for (const TrialNodeRow& row : report.rows) {
        out << row.original_degree << ',' << fmt6(row.mean_degree_cl) << ','
            << fmt6(row.mean_degree_comb) << ',' << fmt6(row.std_degree_cl)
            << ',' << fmt6(row.std_degree_comb) << ',' << report.trials
            << '\n';
    }
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "family,n,density,trials,mean_abs_diff_cl,mean_abs_diff_comb,"
           "signed_diff_cl,signed_diff_comb,std_cl,std_comb\n";
    for (const SweepRow& row : rows) {
        out << family_name(row.family) << ',' << row.n << ','
            << fmt6(row.density) << ',' << row.trials << ','
            << fmt6(row.mean_abs_diff_cl) << ',' << fmt6(row.mean_abs_diff_comb)
            << ',' << fmt6(row.signed_diff_cl) << ','
            << fmt6(row.signed_diff_comb) << ',' << fmt6(row.std_cl) << ','
            << fmt6(row.std_comb) << '\n';
    }
}

} // namespace randnet
