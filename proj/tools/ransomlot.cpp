// ransomlot: command-line front end for the attacker-economics toolkit.
//
// Exit codes: 0 success, 2 input error, 3 analytic infeasibility, 4 I/O failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ransomlot/ransomlot.hpp"

namespace fs = std::filesystem;
using namespace ransomlot;

namespace {

enum ExitCode : int { kOk = 0, kInputError = 2, kInfeasible = 3, kIoError = 4 };

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ScenarioFile load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputFailure("cannot read scenario file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_scenario(ss.str());
  } catch (const ScenarioError& e) {
    throw InputFailure(path + ":" + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoFailure("cannot open '" + path + "' for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw IoFailure("failed writing '" + path + "'");
  }
}

std::uint64_t parse_seed(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 0);
    if (used != s.size()) {
      throw std::invalid_argument(s);
    }
    return v;
  } catch (const std::exception&) {
    throw InputFailure("invalid seed '" + s + "'");
  }
}

std::string or_undefined(auto&& compute) {
  try {
    return compute();
  } catch (const Infeasible&) {
    return "undefined";
  }
}

void print_summary(std::ostream& os, const TrialTrace& trace) {
  const TraceSummary s = summarize(trace);
  os << "seed: " << trace.seed << '\n'
     << "p_win: " << format_probability(trace.econ.p_win()) << '\n'
     << "trials: " << s.trials << '\n'
     << "wins: " << s.wins << '\n'
     << "empirical_win_rate: " << format_probability(s.empirical_win_rate) << '\n'
     << "final_bank: " << format_money(s.final_bank) << '\n'
     << "mean_per_trial_profit: " << format_money(s.mean_per_trial_profit) << '\n'
     << "sample_std_per_trial_profit: " << format_money(s.sample_std_per_trial_profit) << '\n';
}

int cmd_ev(const std::string& path) {
  const ScenarioFile sc = load_scenario(path);
  const AttackEconomics& e = sc.economics;
  std::ostringstream os;
  os << "p_win: " << format_probability(e.p_win()) << '\n'
     << "expected_value: " << format_money(expected_utility(e)) << '\n'
     << "break_even_ransom: "
     << or_undefined([&] { return format_money(break_even_ransom(e)); }) << '\n'
     << "break_even_multiplier: "
     << or_undefined([&] { return format_ratio(break_even_multiplier(e.p_win())); }) << '\n'
     << "payout_multiple: " << or_undefined([&] {
          return format_ratio(payout_multiple(e.ransom(), e.cost_total(), e.p_win()));
        }) << '\n';
  std::cout << os.str();
  return kOk;
}

int cmd_breakeven(const std::string& path, const std::string& solve) {
  const ScenarioFile sc = load_scenario(path);
  const AttackEconomics& e = sc.economics;
  std::string value;
  if (solve == "ransom") {
    value = format_money(break_even_ransom(e));
  } else if (solve == "probability") {
    value = format_probability(break_even_pay_probability(e.cost_total(), e.ransom(), e.p_success()));
  } else {
    value = format_money(break_even_cost(e));
  }
  std::cout << value << '\n';
  return kOk;
}

struct SimulateFlags {
  std::string scenario;
  std::string out;
  std::optional<std::uint64_t> trials;
  std::optional<std::string> seed;
  std::optional<double> b0;
};

int cmd_simulate(const SimulateFlags& f) {
  const ScenarioFile sc = load_scenario(f.scenario);
  SimulationSpec sim = sc.simulation.value_or(SimulationSpec{});
  if (f.trials) {
    if (*f.trials == 0) {
      throw InputFailure("--trials must be >= 1");
    }
    sim.trials = *f.trials;
  }
  if (f.seed) {
    sim.seeds = {parse_seed(*f.seed)};
  }
  if (f.b0) {
    sim.b0 = Money(*f.b0);
  }
  const TrialTrace trace = run_trials(sc.economics, sim.trials, sim.b0, sim.seeds.front());
  const std::string csv = write_trace_csv(trace);
  if (f.out == "-") {
    std::cout << csv;
    print_summary(std::cerr, trace);
  } else {
    write_text(f.out, csv);
    print_summary(std::cout, trace);
  }
  return kOk;
}

int cmd_figure1(const std::vector<std::string>& seed_args, std::uint64_t trials,
                const std::string& dir) {
  if (seed_args.size() != 3) {
    throw InputFailure("--seeds takes exactly three values");
  }
  if (trials == 0) {
    throw InputFailure("--trials must be >= 1");
  }
  const std::array<std::uint64_t, 3> seeds{parse_seed(seed_args[0]), parse_seed(seed_args[1]),
                                           parse_seed(seed_args[2])};
  const auto traces = replicate_figure1(seeds, trials);

  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoFailure("cannot create directory '" + dir + "': " + ec.message());
  }
  for (const auto& t : traces) {
    const std::string name = "figure1_p" + format_probability(t.econ.p_win()) + ".csv";
    const fs::path file = fs::path(dir) / name;
    write_text(file.string(), write_trace_csv(t));
    std::cout << "file: " << file.string() << '\n';
    print_summary(std::cout, t);
  }
  return kOk;
}

int cmd_sweep(const std::string& path, const std::string& out, std::uint64_t max_cells,
              unsigned threads) {
  const ScenarioFile sc = load_scenario(path);
  SweepResult result;
  try {
    result = run_sweep(sc.sweep_grid(), {max_cells, threads});
  } catch (const GridTooLarge& e) {
    throw InputFailure(e.what());
  }
  const std::string csv = write_sweep_csv(result);
  if (out == "-") {
    std::cout << csv;
  } else {
    write_text(out, csv);
    std::cout << "rows: " << result.rows.size() << '\n';
  }
  return kOk;
}

int cmd_mitigate(const std::string& path) {
  const ScenarioFile sc = load_scenario(path);
  const std::vector<MitigationAction> actions = sc.mitigation.value_or(std::vector<MitigationAction>{});
  const MitigationReport r = evaluate(sc.economics, actions, sc.annualization);
  std::ostringstream os;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    os << "action." << (i + 1) << ": " << kind_name(actions[i]) << '\n';
  }
  os << "baseline_p_win: " << format_probability(r.baseline.p_win()) << '\n'
     << "transformed_p_success: " << format_probability(r.transformed.p_success()) << '\n'
     << "transformed_p_pay_given_success: "
     << format_probability(r.transformed.p_pay_given_success()) << '\n'
     << "transformed_p_win: " << format_probability(r.transformed.p_win()) << '\n'
     << "baseline_ev: " << format_money(r.baseline_ev) << '\n'
     << "transformed_ev: " << format_money(r.transformed_ev) << '\n'
     << "ev_reduction: " << format_money(r.ev_reduction) << '\n'
     << "still_profitable: " << (r.still_profitable ? "true" : "false") << '\n';
  if (r.annualized) {
    os << "attacks_per_year: " << r.annualized->attacks_per_year << '\n'
       << "annual_ev: " << format_money(r.annualized->annual_ev) << '\n'
       << "salary_threshold: " << format_money(r.annualized->salary_threshold) << '\n'
       << "substitutable: " << (r.annualized->substitutable ? "true" : "false") << '\n';
  }
  std::cout << os.str();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ransomware attacker economics: expected value, break-even, simulation"};
  app.require_subcommand(1, 1);

  std::string scenario;
  std::string solve;
  std::string out;
  SimulateFlags sim;
  std::vector<std::string> seeds{"0xDEC0DE", "0xDEC0DE", "0xDEC0DE"};
  std::uint64_t fig_trials = kFigure1Trials;
  std::uint64_t max_cells = kDefaultSweepCellCap;
  unsigned threads = 1;

  auto* ev = app.add_subcommand("ev", "Expected value, break-even ransom and payout multiple");
  ev->add_option("scenario", scenario, "Scenario file")->required();

  auto* be = app.add_subcommand("breakeven", "Solve for a break-even quantity");
  be->add_option("scenario", scenario, "Scenario file")->required();
  be->add_option("--solve", solve, "Quantity to solve for")
      ->required()
      ->check(CLI::IsMember({"ransom", "probability", "cost"}));

  auto* simulate = app.add_subcommand("simulate", "Run a seeded trial simulation");
  simulate->add_option("scenario", sim.scenario, "Scenario file")->required();
  simulate->add_option("--trials", sim.trials, "Number of attacks (overrides scenario)");
  simulate->add_option("--seed", sim.seed, "64-bit seed, decimal or 0x-hex (overrides scenario)");
  simulate->add_option("--b0", sim.b0, "Starting bank (overrides scenario)");
  simulate->add_option("--out", sim.out, "Trace CSV path, or - for standard output")->required();

  auto* fig = app.add_subcommand("figure1", "Three runs at p = 0.1, 0.3024, 0.5");
  fig->add_option("--seeds", seeds, "Three seeds, comma separated")
      ->delimiter(',')
      ->expected(3)
      ->capture_default_str();
  fig->add_option("--trials", fig_trials, "Trials per run")->capture_default_str();
  fig->add_option("--out", out, "Output directory")->required();

  auto* sweep = app.add_subcommand("sweep", "Expected value over the scenario's [sweep] grid");
  sweep->add_option("scenario", scenario, "Scenario file")->required();
  sweep->add_option("--out", out, "Sweep CSV path, or - for standard output")->required();
  sweep->add_option("--max-cells", max_cells, "Cell cap")->capture_default_str();
  sweep->add_option("--threads", threads, "Worker threads")->capture_default_str();

  auto* mitigate = app.add_subcommand("mitigate", "Evaluate the scenario's [mitigation] portfolio");
  mitigate->add_option("scenario", scenario, "Scenario file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*ev) return cmd_ev(scenario);
    if (*be) return cmd_breakeven(scenario, solve);
    if (*simulate) return cmd_simulate(sim);
    if (*fig) return cmd_figure1(seeds, fig_trials, out);
    if (*sweep) return cmd_sweep(scenario, out, max_cells, threads);
    if (*mitigate) return cmd_mitigate(scenario);
  } catch (const InputFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const IoFailure& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
