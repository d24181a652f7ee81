#include "qcount/analytic.hpp"
#include "qcount/errors.hpp"
#include "qcount/experiment.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <ostream>

namespace qcount::experiment {

namespace {

// Configuration of one reproduced figure.
struct FigureConfig {
    std::string_view id;
    unsigned n;
    std::uint64_t M;
    std::uint64_t shots;
    // Measurement-outcome histogram of one simple-count step, if shown.
    std::optional<unsigned> step_histogram_k;
    bool simple_vs_k;
    bool simple_vs_shots;
    // PEA: read-out histogram width and the largest t of the M-vs-t series.
    std::optional<unsigned> pea_histogram_t;
    unsigned pea_max_t;
};

constexpr std::array<FigureConfig, 14> kFigures{{
    {"fig3", 3, 1, 1024, 1, true, false, std::nullopt, 0},
    {"fig4", 3, 1, 1024, std::nullopt, false, false, 3, 5},
    {"fig5", 3, 2, 1024, std::nullopt, true, false, 3, 5},
    {"fig6", 3, 3, 1024, std::nullopt, true, false, 3, 5},
    {"fig7", 9, 1, 100, 4, true, false, std::nullopt, 0},
    {"fig8", 9, 1, 1024, std::nullopt, false, false, 8, 8},
    {"fig9", 12, 1, 100, std::nullopt, true, true, std::nullopt, 0},
    {"fig10", 12, 2, 100, std::nullopt, true, true, std::nullopt, 0},
    {"fig11", 12, 4, 100, std::nullopt, true, true, std::nullopt, 0},
    {"fig12", 12, 8, 100, std::nullopt, true, true, 6, 6},
    {"fig13", 12, 16, 100, std::nullopt, true, true, 6, 6},
    {"fig14", 12, 32, 100, std::nullopt, true, true, 6, 6},
    {"fig15", 12, 64, 100, std::nullopt, true, true, 6, 6},
    {"fig16", 12, 128, 100, std::nullopt, true, true, 6, 6},
}};

constexpr std::array<std::uint64_t, 8> kShotLadder{10, 20, 50, 100, 200, 500, 1000, 2000};

const FigureConfig& find_config(std::string_view id) {
    for (const auto& f : kFigures) {
        if (f.id == id) return f;
    }
    throw DomainError("unknown figure id '" + std::string(id) + "'");
}

double pea_count_for(std::uint64_t N, std::uint64_t j, unsigned t) {
    const double s = std::sin(std::numbers::pi * static_cast<double>(j) / std::ldexp(1.0, static_cast<int>(t)));
    return static_cast<double>(N) * s * s;
}

} // namespace

std::vector<std::string> figure_ids() {
    std::vector<std::string> ids;
    for (const auto& f : kFigures) ids.emplace_back(f.id);
    return ids;
}

FigureData reproduce_figure(std::string_view id, const ReproOptions& options) {
    const FigureConfig& cfg = find_config(id);
    const std::uint64_t shots = options.shots.value_or(cfg.shots);
    const GroverProblem problem(oracle_for_count(cfg.n, cfg.M));
    const std::uint64_t N = problem.N();

    FigureData fig;
    fig.id = std::string(cfg.id);
    fig.title = "N = " + std::to_string(N) + ", M = " + std::to_string(cfg.M);
    fig.N = N;
    fig.true_M = cfg.M;

    // Each series draws from its own seed stream.
    std::uint64_t stream = 0;
    auto next_seed = [&] { return derive_seed(options.seed, stream++); };

    std::optional<CountEstimate> run;
    if (cfg.simple_vs_k || cfg.simple_vs_shots) {
        CountingConfig cc;
        cc.shots = shots;
        cc.engine = options.engine;
        cc.seed = next_seed();
        run = run_simple_count(problem, cc);
    }

    if (cfg.step_histogram_k) {
        const unsigned k = *cfg.step_histogram_k;
        const double p1 = step_probability(problem, k, options.engine);
        const std::uint64_t s = shots;
        const std::uint64_t ones = s ? sample_bit(p1, s, next_seed()) : 0;
        const double p1_hat = s ? static_cast<double>(ones) / static_cast<double>(s) : p1;
        const double M_hat = postprocess_arccos(1.0 - 2.0 * p1_hat, k, N).M_hat;
        const std::string name = "simple_step_k" + std::to_string(k);
        fig.series.push_back({name, "outcome"});
        fig.points.push_back({name, 0.0, M_hat, 1.0 - p1_hat, s});
        fig.points.push_back({name, 1.0, M_hat, p1_hat, s});
    }

    if (cfg.simple_vs_k) {
        fig.series.push_back({"simple_vs_k", "k"});
        for (const auto& step : run->trace) {
            const double M_hat = postprocess_arccos(step.p0_hat - step.p1_hat, step.k, N).M_hat;
            fig.points.push_back({"simple_vs_k", static_cast<double>(step.k), M_hat, step.p1_hat, step.shots});
        }
    }

    if (cfg.simple_vs_shots) {
        const unsigned k = run->k_final;
        const std::string name = "simple_vs_shots_k" + std::to_string(k);
        fig.series.push_back({name, "shots"});
        const double p1 = step_probability(problem, k, options.engine);
        for (std::uint64_t s : kShotLadder) {
            const std::uint64_t ones = sample_bit(p1, s, next_seed());
            const double p1_hat = static_cast<double>(ones) / static_cast<double>(s);
            const double M_hat = postprocess_arccos(1.0 - 2.0 * p1_hat, k, N).M_hat;
            fig.points.push_back({name, static_cast<double>(s), M_hat, p1_hat, s});
        }
    }

    if (cfg.pea_histogram_t) {
        const unsigned t = *cfg.pea_histogram_t;
        PEAConfig pc;
        pc.t = t;
        pc.shots = shots;
        pc.engine = options.engine;
        pc.seed = next_seed();
        const auto res = run_pea(problem, pc);
        const std::string name = "pea_histogram_t" + std::to_string(t);
        fig.series.push_back({name, "j"});
        for (std::uint64_t j = 0; j < res.histogram.size(); ++j) {
            fig.points.push_back({name, static_cast<double>(j), pea_count_for(N, j, t), res.histogram[j], shots});
        }
        // exact read-out distribution alongside the sampled one
        const auto exact = pea_distribution(t, grover_angle(problem));
        const std::string exact_name = name + "_exact";
        fig.series.push_back({exact_name, "j"});
        for (std::uint64_t j = 0; j < exact.size(); ++j) {
            fig.points.push_back({exact_name, static_cast<double>(j), pea_count_for(N, j, t), exact[j], 0});
        }
    }

    if (cfg.pea_max_t > 0) {
        fig.series.push_back({"pea_vs_t", "t"});
        for (unsigned t = 1; t <= cfg.pea_max_t; ++t) {
            PEAConfig pc;
            pc.t = t;
            pc.shots = shots;
            pc.engine = options.engine;
            pc.seed = next_seed();
            const auto res = run_pea(problem, pc);
            fig.points.push_back({"pea_vs_t", static_cast<double>(t), res.M_hat, res.best_pair.probability, shots});
        }
    }
    return fig;
}

void write_figure_csv(const FigureData& fig, std::ostream& out) {
    out << "series,x,M_hat,probability,shots\n";
    for (const auto& p : fig.points) {
        out << csv_escape(p.series) << ',' << format_double(p.x) << ',' << format_double(p.M_hat) << ','
            << format_double(p.probability) << ',' << p.shots << '\n';
    }
}

} // namespace qcount::experiment
