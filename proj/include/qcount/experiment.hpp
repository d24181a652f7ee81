#pragma once

#include "qcount/pea_count.hpp"
#include "qcount/simple_count.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcount::experiment {

enum class Algorithm { Simple, Pea };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Algorithm a);
std::string_view to_string(Engine e);
Algorithm parse_algorithm(std::string_view s);
Engine parse_engine(std::string_view s);

// Text formatting shared by every emitter: 12 significant digits.
std::string format_double(double v);
std::string csv_escape(std::string_view field);

struct RunSpec {
    Algorithm algorithm = Algorithm::Simple;
    unsigned n = 0;
    std::string oracle;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    Engine engine = Engine::Analytic;
    double threshold = 0.5;
    std::optional<unsigned> t;
    std::optional<unsigned> max_k;
    OutputFormat format = OutputFormat::Json;
};

// Problem after the marked-fraction check; `doublings` counts added qubits.
struct PreparedProblem {
    GroverProblem problem;
    unsigned requested_n = 0;
    unsigned doublings = 0;
};

// Validates the spec against every module precondition. Throws DomainError.
PreparedProblem prepare(const RunSpec& spec);

struct RunRecord {
    RunSpec spec;
    PreparedProblem prepared;
    std::optional<CountEstimate> simple;
    std::optional<PEAResult> pea;

    std::uint64_t cost() const;
};

// Throws DomainError (invalid spec) or ResourceError (qubit cap).
RunRecord execute(const RunSpec& spec);

void write_json(const RunRecord& record, std::ostream& out);
void write_csv(const RunRecord& record, std::ostream& out);

// Oracle used by sweeps for a requested (n, M): the high-bit pattern mask
// when M is a power of two, otherwise the explicit set {0, ..., M-1}.
Oracle oracle_for_count(unsigned n, std::uint64_t M);

// Parses "1,2,4", "2..12" or mixtures such as "1,4..6". Throws DomainError on
// malformed or empty input.
std::vector<std::uint64_t> parse_range_list(std::string_view text);

struct SweepSpec {
    std::vector<Algorithm> algorithms;
    std::vector<std::uint64_t> n_values;
    // Either marked counts or a fixed oracle spec.
    std::vector<std::uint64_t> m_values;
    std::optional<std::string> oracle;
    std::vector<std::uint64_t> t_values;
    std::vector<std::uint64_t> shots_values{0};
    Engine engine = Engine::Analytic;
    double threshold = 0.5;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    bool timing = false;
};

struct SweepRow {
    std::uint64_t row = 0;
    unsigned n = 0;
    std::uint64_t N = 0;
    std::uint64_t M = 0;
    Algorithm algorithm = Algorithm::Simple;
    unsigned k_or_t = 0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    double probability = 0.0;
    double M_hat = 0.0;
    std::uint64_t cost = 0;
    bool halted = false;
    unsigned doublings = 0;
    bool below_min_width = false;
    std::string status = "ok";
    double wall_ms = 0.0;
};

// Throws DomainError when a range is empty or the template is inconsistent.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);
void write_sweep_csv(const std::vector<SweepRow>& rows, bool timing, std::ostream& out);

// Minimum phase-register width 2 + ceil(log2 sqrt(N/M)) for resolving M.
unsigned pea_minimum_width(std::uint64_t N, std::uint64_t M);

struct FigurePoint {
    std::string series;
    double x = 0.0;
    double M_hat = 0.0;
    double probability = 0.0;
    std::uint64_t shots = 0;
};

struct FigureSeries {
    std::string name;
    std::string x_label;
};

struct FigureData {
    std::string id;
    std::string title;
    std::uint64_t N = 0;
    std::uint64_t true_M = 0;
    std::vector<FigureSeries> series;
    std::vector<FigurePoint> points;
};

struct ReproOptions {
    std::uint64_t seed = 2019;
    Engine engine = Engine::Analytic;
    // Overrides the per-figure shot count when set.
    std::optional<std::uint64_t> shots;
};

std::vector<std::string> figure_ids();
// Throws DomainError for unknown ids.
FigureData reproduce_figure(std::string_view id, const ReproOptions& options);
void write_figure_csv(const FigureData& fig, std::ostream& out);
void write_figure_svg(const FigureData& fig, std::ostream& out);

// Entry point of the command-line tool. Exit codes: 0 success, 1 failed
// self-test or unexpected error, 2 invalid usage, 3 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qcount::experiment
