// Batch experiment driver: play games, sweep parameters, check the theory
// against simulation, and emit CSV or JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lazymatch/bounds.hpp"
#include "lazymatch/engine.hpp"
#include "lazymatch/minimax.hpp"
#include "lazymatch/transcript_json.hpp"

using namespace lazymatch;

namespace {

struct ExperimentSpec {
    std::vector<long long> ns;
    std::vector<long long> alphas;
    std::string scheduler = "balance";
    std::string builder = "adversary";
    std::optional<std::uint64_t> seed;
    std::string out;  // empty: stdout
    std::string format = "csv";
    long long max_rounds = 1'000'000;
    int jobs = 0;  // 0: library default
    int minimax_cap = kDefaultMinimaxCap;
    long long terms = 10'000;
    std::string x_override;  // adversary subcommand only
};

// "5", "2..20", or "1,3,9" (pieces may mix: "1,4..6").
std::vector<long long> parse_range(const std::string& text) {
    std::vector<long long> values;
    std::stringstream pieces(text);
    std::string piece;
    while (std::getline(pieces, piece, ',')) {
        const auto dots = piece.find("..");
        if (dots == std::string::npos) {
            values.push_back(std::stoll(piece));
        } else {
            const long long lo = std::stoll(piece.substr(0, dots));
            const long long hi = std::stoll(piece.substr(dots + 2));
            if (hi < lo) throw CLI::ValidationError("range", "empty range: " + piece);
            for (long long v = lo; v <= hi; ++v) values.push_back(v);
        }
    }
    if (values.empty()) throw CLI::ValidationError("range", "empty range: " + text);
    return values;
}

void apply_jobs(const ExperimentSpec& spec) {
    int jobs = spec.jobs;
    if (jobs <= 0) {
        if (const char* env = std::getenv("LAZYMATCH_JOBS")) jobs = std::atoi(env);
    }
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void emit(const ExperimentSpec& spec, const std::vector<std::string>& columns,
          const std::vector<std::vector<std::string>>& rows) {
    Output out(spec.out);
    if (spec.format == "json") {
        nlohmann::json array = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json object;
            for (std::size_t i = 0; i < columns.size(); ++i) object[columns[i]] = row[i];
            array.push_back(object);
        }
        out.stream() << array.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i)
        out.stream() << columns[i] << (i + 1 < columns.size() ? "," : "\n");
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            out.stream() << row[i] << (i + 1 < row.size() ? "," : "\n");
}

std::string format_double(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

std::string join_ints(const std::vector<long long>& values, char sep = ' ') {
    std::string text;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) text += sep;
        text += std::to_string(values[i]);
    }
    return text;
}

int cmd_simulate(const ExperimentSpec& spec) {
    apply_jobs(spec);
    if (spec.builder.rfind("random", 0) == 0 && !spec.seed)
        throw std::invalid_argument("--seed is required with a randomized builder");
    const std::uint64_t seed = spec.seed.value_or(0);

    struct Cell {
        long long n, alpha;
    };
    std::vector<Cell> cells;
    for (long long n : spec.ns)
        for (long long alpha : spec.alphas) cells.push_back({n, alpha});

    std::vector<std::vector<std::string>> rows(cells.size());
    std::string error;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < cells.size(); ++i) {
        try {
            const auto [n, alpha] = cells[i];
            const auto scheduler = make_scheduler(spec.scheduler, seed);
            long long matched = 0, offline = 0;
            std::string builder_name;
            if (spec.builder == "minimax") {
                builder_name = "minimax";
                matched = minimax_value(static_cast<int>(n), static_cast<int>(alpha), *scheduler,
                                        spec.minimax_cap);
                offline = n;
            } else {
                auto builder = make_builder(spec.builder, n, alpha, seed);
                const auto record =
                    run_game(*scheduler, *builder,
                             GameConfig{static_cast<int>(alpha), static_cast<int>(n), false},
                             spec.max_rounds);
                matched = record.result.matched_count;
                offline = record.result.game_size_n;
                builder_name = builder->name();
            }
            const double ratio = offline > 0 ? static_cast<double>(matched) / offline : 0.0;
            rows[i] = {std::to_string(n),       std::to_string(alpha), spec.scheduler,
                       builder_name,            std::to_string(matched),
                       std::to_string(offline), format_double(ratio),  std::to_string(seed)};
        } catch (const std::exception& e) {
#pragma omp critical
            error = e.what();
        }
    }
    if (!error.empty()) throw std::invalid_argument(error);
    emit(spec, {"n", "alpha", "scheduler", "builder", "matched", "n_offline", "ratio", "seed"},
         rows);
    return 0;
}

int cmd_bounds(const ExperimentSpec& spec) {
    apply_jobs(spec);
    struct Cell {
        long long n, alpha;
    };
    std::vector<Cell> cells;
    for (long long n : spec.ns)
        for (long long alpha : spec.alphas) cells.push_back({n, alpha});

    std::vector<std::vector<std::string>> rows(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto [n, alpha] = cells[i];
        const auto exact = max_sum_exact(n, alpha);
        const auto bracket = bal_bounds(n, alpha);
        const long long val = n - exact.best_sum;
        rows[i] = {std::to_string(n),
                   std::to_string(alpha),
                   std::to_string(n / (1 + alpha)),
                   std::to_string(exact.best_sum),
                   join_ints(exact.witness),
                   std::to_string(val),
                   std::to_string(bracket.lower),
                   std::to_string(bracket.upper),
                   rational_str(Rational(val, n))};
    }
    emit(spec,
         {"n", "alpha", "x0", "best_sum", "witness", "val", "lp_lower", "lp_upper",
          "exact_ratio"},
         rows);
    return 0;
}

int cmd_ratio(const ExperimentSpec& spec) {
    std::vector<std::vector<std::string>> rows;
    for (long long alpha : spec.alphas) {
        const auto r = competitive_ratio(alpha);
        rows.push_back({std::to_string(alpha), rational_str(r.exact), format_double(r.approx)});
    }
    const auto limit = ratio_infinity(spec.terms);
    rows.push_back({"inf", "1-pi/cosh(sqrt(3)pi/2)", format_double(limit.analytic_ratio)});
    emit(spec, {"alpha", "exact_ratio", "decimal"}, rows);

    std::ostream& err = std::cerr;
    err << "# limit detail: " << limit.terms << " terms, truncated ratio "
        << format_double(limit.truncated_ratio) << ", analytic "
        << format_double(limit.analytic_ratio) << ", |product difference| "
        << limit.abs_difference << "\n";
    return 0;
}

int cmd_verify(const ExperimentSpec& spec) {
    apply_jobs(spec);
    struct Cell {
        long long n, alpha;
    };
    std::vector<Cell> cells;
    for (long long n : spec.ns)
        for (long long alpha : spec.alphas) cells.push_back({n, alpha});

    std::vector<std::vector<std::string>> rows(cells.size());
    std::vector<std::string> failures(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto [n, alpha] = cells[i];
        const auto exact = max_sum_exact(n, alpha);
        const long long expected = n - exact.best_sum;
        BalanceScheduler balance;
        AdversaryBuilder builder(AdversarySolution{n, alpha, exact.witness});
        const auto record =
            run_game(balance, builder,
                     GameConfig{static_cast<int>(alpha), static_cast<int>(n), false},
                     spec.max_rounds);
        bool pass = record.result.matched_count == expected && record.result.game_size_n == n;

        std::string oracle_column = "-";
        if (n <= spec.minimax_cap && alpha <= 2) {
            GreedyScheduler greedy;
            const int oracle =
                minimax_value_serial(static_cast<int>(n), static_cast<int>(alpha), balance,
                                     spec.minimax_cap);
            const int greedy_oracle =
                minimax_value_serial(static_cast<int>(n), static_cast<int>(alpha), greedy,
                                     spec.minimax_cap);
            oracle_column = std::to_string(oracle);
            pass = pass && oracle == expected && greedy_oracle <= oracle;
        }

        if (!pass) {
            const std::string path = "counterexample_n" + std::to_string(n) + "_a" +
                                     std::to_string(alpha) + ".json";
            std::ofstream dump(path);
            dump << transcript_to_json(record.transcript) << "\n";
            failures[i] = path;
        }
        rows[i] = {std::to_string(n),
                   std::to_string(alpha),
                   std::to_string(exact.best_sum),
                   std::to_string(expected),
                   std::to_string(record.result.matched_count),
                   oracle_column,
                   pass ? "PASS" : "FAIL"};
    }
    emit(spec, {"n", "alpha", "best_sum", "expected", "matched", "minimax", "status"}, rows);

    bool any_failure = false;
    for (const auto& path : failures)
        if (!path.empty()) {
            any_failure = true;
            std::cerr << "verification failed; transcript written to " << path << "\n";
        }
    return any_failure ? 1 : 0;
}

int cmd_minimax(const ExperimentSpec& spec) {
    apply_jobs(spec);
    std::vector<std::vector<std::string>> rows;
    for (long long n : spec.ns)
        for (long long alpha : spec.alphas) {
            const auto scheduler = make_scheduler(spec.scheduler, spec.seed.value_or(0));
            const int value = minimax_value(static_cast<int>(n), static_cast<int>(alpha),
                                            *scheduler, spec.minimax_cap);
            const long long expected = n - max_sum_exact(n, alpha).best_sum;
            rows.push_back({std::to_string(n), std::to_string(alpha), spec.scheduler,
                            std::to_string(value), std::to_string(expected)});
        }
    emit(spec, {"n", "alpha", "scheduler", "worst_case", "certified"}, rows);
    return 0;
}

int cmd_adversary(const ExperimentSpec& spec) {
    const long long n = spec.ns.front();
    const long long alpha = spec.alphas.front();
    AdversarySolution solution{n, alpha, {}};
    if (spec.x_override.empty()) {
        solution.x = max_sum_exact(n, alpha).witness;
    } else {
        for (long long v : parse_range(spec.x_override)) solution.x.push_back(v);
        if (!solution.valid())
            throw std::invalid_argument("infeasible solution vector: " + spec.x_override);
    }
    const auto scheduler = make_scheduler(spec.scheduler, spec.seed.value_or(0));
    AdversaryBuilder builder(solution);
    const auto record =
        run_game(*scheduler, builder,
                 GameConfig{static_cast<int>(alpha), static_cast<int>(n), false},
                 spec.max_rounds);

    std::cout << "n=" << n << " alpha=" << alpha << " x=" << join_ints(solution.x, ',') << "\n";
    std::cout << "ceiling: matched <= " << (n - solution.sum()) << "\n";
    std::cout << "scheduler " << scheduler->name()
              << ": matched = " << record.result.matched_count
              << ", game size = " << record.result.game_size_n << "\n";
    for (std::size_t i = 0; i < builder.retired_blocks().size(); ++i)
        std::cout << "block " << i << ": {" << [&] {
            std::string text;
            for (int d : builder.retired_blocks()[i]) text += std::to_string(d) + " ";
            return text;
        }() << "}\n";
    std::cout << "special vertices: " << [&] {
        std::string text;
        for (int y : builder.special_vertices()) text += std::to_string(y) + " ";
        return text;
    }() << "\n";

    if (!spec.out.empty()) {
        Output out(spec.out);
        out.stream() << transcript_to_json(record.transcript) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator and exact analyzer for lazy on-line bipartite matching"};
    app.require_subcommand(1);

    ExperimentSpec spec;
    std::string n_text = "18";
    std::string alpha_text = "2";

    const auto add_common = [&](CLI::App* cmd, bool needs_n = true) {
        if (needs_n) cmd->add_option("--n", n_text, "game sizes: 18, 2..20, or 1,5,9");
        cmd->add_option("--alpha", alpha_text, "capacities: 2, 1..3, or 1,2,5");
        cmd->add_option("--out", spec.out, "output path (default stdout)");
        cmd->add_option("--format", spec.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--jobs", spec.jobs, "worker threads (env LAZYMATCH_JOBS)");
        cmd->add_option("--max-rounds", spec.max_rounds, "hard cap on rounds per game");
    };

    auto* simulate = app.add_subcommand("simulate", "play scheduler vs builder across a sweep");
    add_common(simulate);
    simulate->add_option("--scheduler", spec.scheduler, "balance | greedy | noop | random");
    simulate->add_option("--builder", spec.builder,
                         "adversary | adversary:x=6,1,1 | random | random:p=0.5 | minimax");
    simulate->add_option("--seed", [&spec](const std::vector<std::string>& v) {
        spec.seed = std::stoull(v.front());
        return true;
    }, "seed for randomized schedulers/builders");

    auto* bounds_cmd = app.add_subcommand("bounds", "integer maximizer and relaxation bracket");
    add_common(bounds_cmd);

    auto* ratio_cmd = app.add_subcommand("ratio", "exact worst-case ratios and the limit");
    add_common(ratio_cmd, false);
    ratio_cmd->add_option("--terms", spec.terms, "terms of the truncated product");

    auto* verify = app.add_subcommand("verify", "theory vs simulation cross-check");
    add_common(verify);
    verify->add_option("--minimax-cap", spec.minimax_cap, "exhaustive oracle size limit");

    auto* minimax_cmd = app.add_subcommand("minimax", "exhaustive worst case at tiny sizes");
    add_common(minimax_cmd);
    minimax_cmd->add_option("--scheduler", spec.scheduler, "balance | greedy | noop");
    minimax_cmd->add_option("--cap", spec.minimax_cap, "exhaustive oracle size limit");

    auto* adversary_cmd =
        app.add_subcommand("adversary", "run one certified game and show the construction");
    add_common(adversary_cmd);
    adversary_cmd->add_option("--scheduler", spec.scheduler, "balance | greedy | noop | random");
    adversary_cmd->add_option("--x", spec.x_override, "solution vector, e.g. 6,1,1");
    adversary_cmd->add_option("--seed", [&spec](const std::vector<std::string>& v) {
        spec.seed = std::stoull(v.front());
        return true;
    }, "seed for a randomized scheduler");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        spec.ns = parse_range(n_text);
        spec.alphas = parse_range(alpha_text);
        if (simulate->parsed()) return cmd_simulate(spec);
        if (bounds_cmd->parsed()) return cmd_bounds(spec);
        if (ratio_cmd->parsed()) return cmd_ratio(spec);
        if (verify->parsed()) return cmd_verify(spec);
        if (minimax_cmd->parsed()) return cmd_minimax(spec);
        if (adversary_cmd->parsed()) return cmd_adversary(spec);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
