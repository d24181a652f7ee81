#include "qcount/analytic.hpp"
#include "qcount/errors.hpp"
#include "qcount/experiment.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

namespace qcount::experiment {

namespace {

// Raised for bad command-line input that CLI11 itself accepts.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw DomainError("unknown format '" + s + "' (expected csv or json)");
}

// Writes through `emit` to `path`, or to `out` when path is empty.
void with_output(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& emit) {
    if (path.empty()) {
        emit(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + path + "'");
    emit(file);
}

void write_sweep_json(const std::vector<SweepRow>& rows, bool timing, std::ostream& out) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j{{"row", r.row},
                                 {"n", r.n},
                                 {"N", r.N},
                                 {"M", r.M},
                                 {"algorithm", to_string(r.algorithm)},
                                 {"k_or_t", r.k_or_t},
                                 {"shots", r.shots},
                                 {"seed", r.seed},
                                 {"probability", r.probability},
                                 {"M_hat", r.M_hat},
                                 {"cost", r.cost},
                                 {"halted", r.halted},
                                 {"doublings", r.doublings},
                                 {"below_min_width", r.below_min_width},
                                 {"status", r.status}};
        if (timing) j["wall_ms"] = r.wall_ms;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<Check> self_checks() {
    std::vector<Check> checks;
    auto add = [&](std::string name, bool pass, std::string detail) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    };

    {
        const GroverProblem p(Oracle::explicit_set(3, {7}));
        const auto e = run_simple_count(p, CountingConfig{});
        add("simple N=8 M=1 exact", e.k_final == 2 && std::abs(e.M_hat - 1.0) < 1e-9,
            "k_final=" + std::to_string(e.k_final) + " M_hat=" + format_double(e.M_hat));
    }
    {
        const GroverProblem p(Oracle::bit_pattern(12, 0xFFF));
        const auto e = run_simple_count(p, CountingConfig{});
        add("simple N=4096 M=1 halts at k=6", e.k_final == 6 && std::abs(e.trace.back().p1_hat - 0.708) < 5e-4,
            "k_final=" + std::to_string(e.k_final) + " p1=" + format_double(e.trace.back().p1_hat));
    }
    {
        const GroverProblem p(Oracle::explicit_set(3, {7}));
        PEAConfig cfg;
        cfg.t = 3;
        const auto r = run_pea(p, cfg);
        add("pea N=8 M=1 t=3",
            r.best_pair.low == 1 && r.best_pair.high == 7 && std::abs(r.best_pair.probability - 0.98) < 0.005 &&
                std::abs(r.M_hat - 1.17) < 0.005,
            "pair prob=" + format_double(r.best_pair.probability) + " M_hat=" + format_double(r.M_hat));
    }
    {
        const GroverProblem p(Oracle::explicit_set(4, {1, 6, 9}));
        double worst = 0.0;
        for (unsigned k = 0; k <= 3; ++k) {
            worst = std::max(worst, std::abs(step_probability(p, k, Engine::Statevector) -
                                             step_probability(p, k, Engine::Analytic)));
        }
        add("statevector vs closed-form step probability", worst < 1e-10, "max diff=" + format_double(worst));
    }
    {
        const GroverProblem p(Oracle::explicit_set(3, {2}));
        const auto sv = pea_statevector_distribution(p, 4);
        const auto an = pea_distribution(4, grover_angle(p));
        double worst = 0.0;
        for (std::size_t j = 0; j < sv.size(); ++j) worst = std::max(worst, std::abs(sv[j] - an[j]));
        add("statevector vs closed-form pea distribution", worst < 1e-9, "max diff=" + format_double(worst));
    }
    return checks;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum counting experiments: amplitude-amplification and phase-estimation counting", "qcount"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run one counting algorithm on one problem");
    std::string run_algo = "simple";
    std::string run_engine = "analytic";
    std::string run_format = "json";
    std::string run_out;
    unsigned run_n = 0;
    std::string run_oracle;
    std::uint64_t run_shots = 0;
    std::uint64_t run_seed = 0;
    double run_threshold = 0.5;
    std::optional<unsigned> run_t;
    std::optional<unsigned> run_max_k;
    run->add_option("--algo", run_algo, "simple or pea");
    run->add_option("--n", run_n, "computation-register width")->required();
    run->add_option("--oracle", run_oracle, "set:i,j,... or mask:<int>")->required();
    run->add_option("--shots", run_shots, "shots per measurement step (0 = exact probabilities)");
    run->add_option("--engine", run_engine, "analytic or statevector");
    run->add_option("--threshold", run_threshold, "halting probability (simple)");
    run->add_option("--t", run_t, "phase-register width (pea)");
    run->add_option("--max-k", run_max_k, "last measurement step tried (simple)");
    run->add_option("--seed", run_seed, "sampling seed");
    run->add_option("--out", run_out, "output file (default stdout)");
    run->add_option("--format", run_format, "json or csv");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run the cartesian product of parameter ranges, one CSV row per run");
    std::string sw_algo = "simple";
    std::string sw_n;
    std::string sw_m;
    std::string sw_oracle;
    std::string sw_t;
    std::string sw_shots = "0";
    std::string sw_engine = "analytic";
    std::string sw_format = "csv";
    std::string sw_out;
    double sw_threshold = 0.5;
    std::uint64_t sw_seed = 0;
    unsigned sw_jobs = 1;
    bool sw_timing = false;
    sweep->add_option("--algo", sw_algo, "comma-separated algorithms (simple,pea)");
    sweep->add_option("--n", sw_n, "register widths, e.g. 12 or 2..12")->required();
    sweep->add_option("--m", sw_m, "marked counts, e.g. 1,2,4..8");
    sweep->add_option("--oracle", sw_oracle, "fixed oracle instead of --m");
    sweep->add_option("--t", sw_t, "phase-register widths (pea)");
    sweep->add_option("--shots", sw_shots, "shot counts");
    sweep->add_option("--engine", sw_engine, "analytic or statevector");
    sweep->add_option("--threshold", sw_threshold, "halting probability (simple)");
    sweep->add_option("--seed", sw_seed, "base seed; row seeds derive from (seed, row index)");
    sweep->add_option("--jobs", sw_jobs, "worker threads");
    sweep->add_flag("--timing", sw_timing, "append a wall_ms column (makes output nondeterministic)");
    sweep->add_option("--out", sw_out, "output file (default stdout)");
    sweep->add_option("--format", sw_format, "csv or json");

    // repro
    auto* repro = app.add_subcommand("repro", "Reproduce a figure as <id>.csv and <id>.svg");
    std::string rp_id;
    std::string rp_out = ".";
    std::string rp_engine = "analytic";
    std::uint64_t rp_seed = 2019;
    std::optional<std::uint64_t> rp_shots;
    repro->add_option("figure", rp_id, "figure id (fig3 ... fig16) or 'all'")->required();
    repro->add_option("--out", rp_out, "output directory");
    repro->add_option("--seed", rp_seed, "base seed");
    repro->add_option("--engine", rp_engine, "analytic or statevector");
    repro->add_option("--shots", rp_shots, "override the per-figure shot count");

    auto* selftest = app.add_subcommand("selftest", "Run quick built-in consistency checks");

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("qcount");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (run->parsed()) {
            RunSpec spec;
            spec.algorithm = parse_algorithm(run_algo);
            spec.n = run_n;
            spec.oracle = run_oracle;
            spec.shots = run_shots;
            spec.seed = run_seed;
            spec.engine = parse_engine(run_engine);
            spec.threshold = run_threshold;
            spec.t = run_t;
            spec.max_k = run_max_k;
            spec.format = parse_format(run_format);
            const RunRecord record = execute(spec);
            with_output(run_out, out, [&](std::ostream& os) {
                if (spec.format == OutputFormat::Json) {
                    write_json(record, os);
                } else {
                    write_csv(record, os);
                }
            });
            return 0;
        }
        if (sweep->parsed()) {
            SweepSpec spec;
            std::string_view algos = sw_algo;
            while (true) {
                const auto comma = algos.find(',');
                spec.algorithms.push_back(parse_algorithm(algos.substr(0, comma)));
                if (comma == std::string_view::npos) break;
                algos.remove_prefix(comma + 1);
            }
            spec.n_values = parse_range_list(sw_n);
            if (!sw_m.empty() || sw_oracle.empty()) spec.m_values = parse_range_list(sw_m);
            if (!sw_oracle.empty()) spec.oracle = sw_oracle;
            if (!sw_t.empty()) spec.t_values = parse_range_list(sw_t);
            spec.shots_values = parse_range_list(sw_shots);
            spec.engine = parse_engine(sw_engine);
            spec.threshold = sw_threshold;
            spec.seed = sw_seed;
            spec.jobs = sw_jobs;
            spec.timing = sw_timing;
            const OutputFormat format = parse_format(sw_format);
            const auto rows = run_sweep(spec);
            with_output(sw_out, out, [&](std::ostream& os) {
                if (format == OutputFormat::Csv) {
                    write_sweep_csv(rows, spec.timing, os);
                } else {
                    write_sweep_json(rows, spec.timing, os);
                }
            });
            return 0;
        }
        if (repro->parsed()) {
            ReproOptions opts;
            opts.seed = rp_seed;
            opts.engine = parse_engine(rp_engine);
            opts.shots = rp_shots;
            const std::vector<std::string> ids = rp_id == "all" ? figure_ids() : std::vector<std::string>{rp_id};
            std::error_code ec;
            std::filesystem::create_directories(rp_out, ec);
            for (const auto& id : ids) {
                const FigureData fig = reproduce_figure(id, opts);
                const auto base = std::filesystem::path(rp_out) / id;
                with_output(base.string() + ".csv", out, [&](std::ostream& os) { write_figure_csv(fig, os); });
                with_output(base.string() + ".svg", out, [&](std::ostream& os) { write_figure_svg(fig, os); });
                out << "wrote " << base.string() << ".csv and " << base.string() << ".svg\n";
            }
            return 0;
        }
        if (selftest->parsed()) {
            bool all = true;
            for (const auto& c : self_checks()) {
                out << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
                all = all && c.pass;
            }
            return all ? 0 : 1;
        }
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace qcount::experiment
