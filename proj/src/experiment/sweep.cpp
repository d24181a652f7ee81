#include "qcount/errors.hpp"
#include "qcount/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>
#include <thread>

namespace qcount::experiment {

namespace {

std::uint64_t parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw DomainError("invalid integer '" + std::string(s) + "' in range list");
    }
    return v;
}

struct RowTask {
    unsigned n = 0;
    std::uint64_t M = 0;
    Algorithm algorithm = Algorithm::Simple;
    unsigned t = 0;
    std::uint64_t shots = 0;
};

SweepRow execute_row(const SweepSpec& spec, const RowTask& task, std::uint64_t index) {
    SweepRow row;
    row.row = index;
    row.n = task.n;
    row.algorithm = task.algorithm;
    row.shots = task.shots;
    row.seed = derive_seed(spec.seed, index);
    row.k_or_t = task.t;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Oracle oracle = spec.oracle ? parse_oracle(*spec.oracle, task.n) : oracle_for_count(task.n, task.M);
        auto minority = ensure_minority(GroverProblem(oracle));
        const GroverProblem& problem = minority.problem;
        row.N = problem.N();
        row.M = problem.M();
        row.doublings = minority.doublings;
        if (task.algorithm == Algorithm::Simple) {
            CountingConfig cfg;
            cfg.threshold = spec.threshold;
            cfg.shots = task.shots;
            cfg.engine = spec.engine;
            cfg.seed = row.seed;
            const auto est = run_simple_count(problem, cfg);
            row.k_or_t = est.k_final;
            row.probability = est.trace.back().p1_hat;
            row.M_hat = est.M_hat;
            row.cost = est.cost();
            row.halted = est.halted_on_threshold;
        } else {
            PEAConfig cfg;
            cfg.t = task.t;
            cfg.shots = task.shots;
            cfg.engine = spec.engine;
            cfg.seed = row.seed;
            const auto res = run_pea(problem, cfg);
            row.probability = res.best_pair.probability;
            row.M_hat = res.M_hat;
            row.cost = res.cost();
            row.below_min_width = problem.M() > 0 && task.t < pea_minimum_width(problem.N(), problem.M());
        }
    } catch (const std::exception& e) {
        row.status = e.what();
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

} // namespace

Oracle oracle_for_count(unsigned n, std::uint64_t M) {
    if (n < 1 || n > 62) throw DomainError("n must be in [1, 62]");
    const std::uint64_t N = std::uint64_t{1} << n;
    if (M > N) throw DomainError("M = " + std::to_string(M) + " exceeds N = " + std::to_string(N));
    if (M > 0 && std::has_single_bit(M)) {
        const unsigned free_bits = static_cast<unsigned>(std::countr_zero(M));
        const std::uint64_t mask = (N - 1) & ~((std::uint64_t{1} << free_bits) - 1);
        return Oracle::bit_pattern(n, mask);
    }
    std::vector<BasisIndex> indices(M);
    for (std::uint64_t i = 0; i < M; ++i) indices[i] = i;
    return Oracle::explicit_set(n, std::move(indices));
}

std::vector<std::uint64_t> parse_range_list(std::string_view text) {
    std::vector<std::uint64_t> values;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            values.push_back(parse_u64(item));
        } else {
            const std::uint64_t lo = parse_u64(item.substr(0, dots));
            const std::uint64_t hi = parse_u64(item.substr(dots + 2));
            if (hi < lo) throw DomainError("empty range '" + std::string(item) + "'");
            for (std::uint64_t v = lo; v <= hi; ++v) values.push_back(v);
        }
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (values.empty()) throw DomainError("empty range list");
    return values;
}

unsigned pea_minimum_width(std::uint64_t N, std::uint64_t M) { return 2 + halt_bound(N, M); }

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.algorithms.empty()) throw DomainError("sweep needs at least one algorithm");
    if (spec.n_values.empty()) throw DomainError("sweep needs a nonempty --n range");
    if (spec.oracle && !spec.m_values.empty()) throw DomainError("give either --m or --oracle, not both");
    if (!spec.oracle && spec.m_values.empty()) throw DomainError("sweep needs a nonempty --m range or an --oracle");
    if (spec.shots_values.empty()) throw DomainError("sweep needs a nonempty --shots range");
    const bool has_pea = std::find(spec.algorithms.begin(), spec.algorithms.end(), Algorithm::Pea) != spec.algorithms.end();
    if (has_pea && spec.t_values.empty()) throw DomainError("pea sweeps need a nonempty --t range");

    std::vector<RowTask> tasks;
    const std::vector<std::uint64_t> m_axis = spec.oracle ? std::vector<std::uint64_t>{0} : spec.m_values;
    for (std::uint64_t n : spec.n_values) {
        for (std::uint64_t M : m_axis) {
            for (Algorithm algo : spec.algorithms) {
                const std::vector<std::uint64_t> t_axis =
                    algo == Algorithm::Pea ? spec.t_values : std::vector<std::uint64_t>{0};
                for (std::uint64_t t : t_axis) {
                    for (std::uint64_t shots : spec.shots_values) {
                        tasks.push_back(RowTask{static_cast<unsigned>(n), M, algo, static_cast<unsigned>(t), shots});
                    }
                }
            }
        }
    }

    std::vector<SweepRow> rows(tasks.size());
    const unsigned jobs = std::max(1U, std::min<unsigned>(spec.jobs, static_cast<unsigned>(tasks.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) rows[i] = execute_row(spec, tasks[i], i);
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, bool timing, std::ostream& out) {
    out << "row,n,N,M,algorithm,k_or_t,shots,seed,probability,M_hat,abs_error,cost,halted,doublings,"
           "below_min_width,status";
    if (timing) out << ",wall_ms";
    out << '\n';
    for (const auto& r : rows) {
        const bool ok = r.status == "ok";
        out << r.row << ',' << r.n << ',' << r.N << ',' << r.M << ',' << to_string(r.algorithm) << ',' << r.k_or_t
            << ',' << r.shots << ',' << r.seed << ',' << (ok ? format_double(r.probability) : "") << ','
            << (ok ? format_double(r.M_hat) : "") << ','
            << (ok ? format_double(std::abs(r.M_hat - static_cast<double>(r.M))) : "") << ','
            << (ok ? std::to_string(r.cost) : "") << ',' << (r.halted ? "true" : "false") << ',' << r.doublings << ','
            << (r.below_min_width ? "true" : "false") << ',' << csv_escape(r.status);
        if (timing) out << ',' << format_double(r.wall_ms);
        out << '\n';
    }
}

} // namespace qcount::experiment
