#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "shelfmix/errors.hpp"
#include "shelfmix/records.hpp"
#include "shelfmix/simulate.hpp"
#include "shelfmix/tv.hpp"

namespace {

using namespace shelfmix;

BigInt parse_big(const std::string& text, const char* what) {
  try {
    BigInt value(text, 10);
    if (value < 1) throw std::invalid_argument("");
    return value;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(std::string(what) + " must be a positive integer, got '" +
                                text + "'");
  }
}

void check_deck_size(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (max_n > kMaxDeckSize) max_n = kMaxDeckSize;
  if (n > max_n)
    throw bound_error("n=" + std::to_string(n) + " exceeds the configured cap of " +
                      std::to_string(max_n));
}

void emit(const std::string& format, const std::string& csv_header,
          const std::vector<std::string>& csv_rows, const json& records) {
  std::ostringstream out;
  if (format == "json") {
    out << records.dump(2) << '\n';
  } else {
    out << csv_header << '\n';
    for (const auto& row : csv_rows) out << row << '\n';
  }
  std::cout << out.str();
}

struct TvArgs {
  int n = 52;
  std::vector<std::string> m;
  std::string mode = "both";
  std::string format = "csv";
};

int run_tv(const TvArgs& args, int max_n) {
  const bool with_exact = args.mode != "asymptotic";
  const bool with_asym = args.mode != "exact";
  if (with_exact)
    check_deck_size(args.n, max_n);
  else if (args.n < 2)
    throw std::invalid_argument("asymptotic mode requires n >= 2");

  std::vector<std::string> rows;
  json records = json::array();
  for (const std::string& m_text : args.m) {
    const BigInt m = parse_big(m_text, "--m");
    TvRecord rec;
    if (with_exact) {
      rec = make_tv_record(tv_report(args.n, m), true, with_asym);
    } else {
      TVReport report;
      report.n = args.n;
      report.m = m;
      report.tv_asym = tv_asymptotic(args.n, m);
      rec = make_tv_record(report, false, true);
    }
    rows.push_back(to_csv_row(rec));
    records.push_back(to_json(rec));
  }
  emit(args.format, kTvCsvHeader, rows, records);
  return 0;
}

struct Figure1Args {
  int n = 52;
  int m_max = 300;
  int jobs = 0;
  std::string format = "csv";
};

int run_figure1(const Figure1Args& args, int max_n) {
  check_deck_size(args.n, max_n);
  if (args.m_max < 1 || args.m_max > 100000)
    throw bound_error("--m-max must be between 1 and 100000");

  std::vector<TVReport> reports(static_cast<size_t>(args.m_max));
  unsigned jobs = args.jobs > 0 ? static_cast<unsigned>(args.jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(args.m_max));

  // Rows are computed in parallel but assembled by index, so the output is
  // byte-identical for any job count.
  std::atomic<int> next_m{1};
  const auto worker = [&] {
    for (int m = next_m.fetch_add(1); m <= args.m_max; m = next_m.fetch_add(1))
      reports[static_cast<size_t>(m - 1)] = tv_report(args.n, BigInt(m));
  };
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  std::vector<std::string> rows;
  json records = json::array();
  for (const TVReport& report : reports) {
    const TvRecord rec = make_tv_record(report, true, true);
    rows.push_back(to_csv_row(rec));
    records.push_back(to_json(rec));
  }
  emit(args.format, kTvCsvHeader, rows, records);
  return 0;
}

struct MixingArgs {
  int n = 52;
  std::string m;
  double eps = 0.25;
  std::string max_shelves = "1000000000";
  std::string format = "csv";
};

int run_mixing(const MixingArgs& args, int max_n) {
  check_deck_size(args.n, max_n);
  if (!(args.eps > 0)) throw std::invalid_argument("--eps must be positive");
  const BigInt m = parse_big(args.m, "--m");
  const BigInt cap = parse_big(args.max_shelves, "--max-shelves");
  const MixingResult result = mixing_time(args.n, m, args.eps, cap);

  MixingRecord rec;
  rec.n = args.n;
  rec.m = m.get_str();
  rec.eps = args.eps;
  rec.repeats = result.repeats;
  if (result.repeats > 0) rec.effective_shelves = result.effective_m.get_str();
  rec.tv_witness = rat_to_decimal(result.witness_tv, kTvDecimalPlaces);
  emit(args.format, kMixingCsvHeader, {to_csv_row(rec)}, json::array({to_json(rec)}));
  return 0;
}

struct SimulateArgs {
  int n = 52;
  long m = 10;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  std::string format = "csv";
};

int run_simulate(const SimulateArgs& args, int max_n) {
  check_deck_size(args.n, max_n);
  if (args.m < 1) throw std::invalid_argument("--m must be at least 1");
  if (args.samples < 1000) throw std::invalid_argument("--samples must be at least 1000");

  SimulateRecord rec;
  rec.n = args.n;
  rec.m = std::to_string(args.m);
  rec.samples = args.samples;
  rec.seed = args.seed;
  rec.tv_empirical =
      double_decimal(empirical_tv(args.n, args.m, args.samples, args.seed), kTvDecimalPlaces);
  rec.tv_exact = tv_report(args.n, BigInt(args.m)).tv_decimal;
  emit(args.format, kSimulateCsvHeader, {to_csv_row(rec)}, json::array({to_json(rec)}));
  return 0;
}

struct ProfileArgs {
  int n = 52;
  std::string theta = "-3:3:0.5";
  std::string format = "csv";
};

std::vector<double> parse_theta_grid(const std::string& text) {
  double from = 0, to = 0, step = 0;
  char sep1 = 0, sep2 = 0;
  std::istringstream in(text);
  if (!(in >> from >> sep1 >> to >> sep2 >> step) || sep1 != ':' || sep2 != ':' ||
      !(step > 0) || to < from)
    throw std::invalid_argument("--theta expects from:to:step with step > 0, got '" + text + "'");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double theta = from + i * step;
    if (theta > to + step * 1e-9) break;
    grid.push_back(theta);
  }
  return grid;
}

int run_profile(const ProfileArgs& args) {
  if (args.n < 2) throw std::invalid_argument("profile requires n >= 2");
  const std::vector<double> grid = parse_theta_grid(args.theta);
  const auto profile = cutoff_profile(args.n, grid);

  std::vector<std::string> rows;
  json records = json::array();
  for (const auto& [theta, tv] : profile) {
    ProfileRecord rec;
    rec.n = args.n;
    rec.theta = theta;
    rec.tv_asymptotic = double_decimal(tv, kTvDecimalPlaces);
    rows.push_back(to_csv_row(rec));
    records.push_back(to_json(rec));
  }
  emit(args.format, kProfileCsvHeader, rows, records);
  return 0;
}

struct OracleArgs {
  int n = 5;
  long m = 2;
  std::uint64_t budget = kDefaultEnumBudget;
};

int run_oracle(const OracleArgs& args, int max_n) {
  check_deck_size(args.n, max_n);
  if (args.n > 6) throw bound_error("oracle checks require n <= 6 (full enumeration)");
  if (args.m < 1) throw std::invalid_argument("--m must be at least 1");

  int failures = 0;
  const auto report = [&](const char* name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << '\n';
    if (!ok) ++failures;
  };
  const auto skip = [](const char* name, const std::string& why) {
    std::cout << "SKIP " << name << ": " << why << '\n';
  };

  const ValleyTable vt = ValleyTable::build(args.n);
  const BigInt m_big(args.m);
  try {
    q_table(vt, m_big);
    report("q-normalization", true, "class probabilities sum to 1, q nonincreasing");
  } catch (const invariant_error& e) {
    report("q-normalization", false, e.what());
  }

  bool enumerated = false;
  PermDist dist;
  try {
    dist = enumerate_exact(args.n, args.m, args.budget);
    enumerated = true;
  } catch (const bound_error& e) {
    skip("q-equivalence", e.what());
    skip("sufficiency", "enumeration unavailable");
  }

  if (enumerated) {
    bool equiv = true;
    std::string witness;
    std::vector<int> perm(static_cast<size_t>(args.n));
    for (int i = 0; i < args.n; ++i) perm[static_cast<size_t>(i)] = i + 1;
    do {
      const auto it = dist.probs.find(perm);
      const BigRat prob = it == dist.probs.end() ? BigRat(0) : it->second;
      const BigRat expected = q_value(args.n, m_big, count_valleys(perm));
      if (prob != expected) {
        equiv = false;
        std::ostringstream w;
        w << "permutation [";
        for (int v : perm) w << v << ' ';
        w << "] has probability " << prob.get_str() << ", expected " << expected.get_str();
        witness = w.str();
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    report("q-equivalence", equiv,
           equiv ? "every permutation matches the closed form exactly" : witness);

    bool sufficient = true;
    std::string s_witness;
    std::vector<BigRat> class_prob(static_cast<size_t>(vt.u()) + 1, BigRat(-1));
    for (const auto& [p, prob] : dist.probs) {
      const size_t k = static_cast<size_t>(count_valleys(p));
      if (class_prob[k] == -1) {
        class_prob[k] = prob;
      } else if (class_prob[k] != prob) {
        sufficient = false;
        s_witness = "valley class " + std::to_string(k) + " carries unequal probabilities";
        break;
      }
    }
    report("sufficiency", sufficient,
           sufficient ? "probability depends on the valley count alone" : s_witness);
  }

  if (args.m % 2 == 0) {
    try {
      const CompositionReport comp = composition_check(args.n, 1, args.m / 2, args.budget);
      report("composition", comp.equal,
             comp.equal ? "1-shuffle then " + std::to_string(args.m / 2) +
                              "-shuffle composes exactly"
                        : "convolution differs from the direct distribution");
    } catch (const bound_error& e) {
      skip("composition", e.what());
    }
  } else {
    skip("composition", "no factorization 2*m1*m2 = " + std::to_string(args.m) + " exists");
  }

  if (failures > 0) throw invariant_error(std::to_string(failures) + " oracle check(s) failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "shelfmix: exact and asymptotic total variation analysis of shelf-shuffled decks.\n"
      "Exact values use rational arithmetic end to end; the asymptotic value is\n"
      "1 - 2*Phi(-1/(12 c^2 sqrt(10))) with c = m/n^(5/4)."};
  app.require_subcommand(1);

  int max_n = kMaxDeckSize;
  app.add_option("--max-n", max_n, "Deck-size cap (hard ceiling 64)")
      ->envname("SHELFMIX_MAX_N");

  TvArgs tv_args;
  auto* tv_cmd = app.add_subcommand("tv", "Total variation for one or more shelf counts");
  tv_cmd->add_option("--n", tv_args.n, "Deck size")->required();
  tv_cmd->add_option("--m", tv_args.m, "Shelf count (repeatable)")->required();
  tv_cmd->add_option("--mode", tv_args.mode, "exact, asymptotic, or both")
      ->check(CLI::IsMember({"exact", "asymptotic", "both"}))
      ->capture_default_str();
  tv_cmd->add_option("--format", tv_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  Figure1Args fig_args;
  auto* fig_cmd = app.add_subcommand("figure1", "Full m-sweep table for one deck size");
  fig_cmd->add_option("--n", fig_args.n, "Deck size")->capture_default_str();
  fig_cmd->add_option("--m-max", fig_args.m_max, "Largest shelf count")->capture_default_str();
  fig_cmd->add_option("--jobs", fig_args.jobs, "Worker threads (0 = all cores)");
  fig_cmd->add_option("--format", fig_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  MixingArgs mix_args;
  auto* mix_cmd = app.add_subcommand("mixing", "Passes needed to reach a TV tolerance");
  mix_cmd->add_option("--n", mix_args.n, "Deck size")->required();
  mix_cmd->add_option("--m", mix_args.m, "Shelf count per pass")->required();
  mix_cmd->add_option("--eps", mix_args.eps, "TV tolerance")->required();
  mix_cmd->add_option("--max-shelves", mix_args.max_shelves,
                      "Abort once the effective shelf count exceeds this")
      ->capture_default_str();
  mix_cmd->add_option("--format", mix_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  SimulateArgs sim_args;
  auto* sim_cmd = app.add_subcommand("simulate", "Seeded Monte Carlo estimate of the exact TV");
  sim_cmd->add_option("--n", sim_args.n, "Deck size")->required();
  sim_cmd->add_option("--m", sim_args.m, "Shelf count")->required();
  sim_cmd->add_option("--samples", sim_args.samples, "Sample count")->capture_default_str();
  sim_cmd->add_option("--seed", sim_args.seed, "RNG seed")->capture_default_str();
  sim_cmd->add_option("--format", sim_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  OracleArgs oracle_args;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Exhaustive enumeration checks against the closed form");
  oracle_cmd->add_option("--n", oracle_args.n, "Deck size (at most 6)")->required();
  oracle_cmd->add_option("--m", oracle_args.m, "Shelf count")->required();
  oracle_cmd->add_option("--enum-budget", oracle_args.budget, "Enumeration term budget")
      ->envname("SHELFMIX_ENUM_BUDGET");

  ProfileArgs prof_args;
  auto* prof_cmd = app.add_subcommand("profile", "Limiting cutoff profile over a theta grid");
  prof_cmd->add_option("--n", prof_args.n, "Deck size")->capture_default_str();
  prof_cmd->add_option("--theta", prof_args.theta, "Grid as from:to:step")
      ->capture_default_str();
  prof_cmd->add_option("--format", prof_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*tv_cmd) return run_tv(tv_args, max_n);
    if (*fig_cmd) return run_figure1(fig_args, max_n);
    if (*mix_cmd) return run_mixing(mix_args, max_n);
    if (*sim_cmd) return run_simulate(sim_args, max_n);
    if (*oracle_cmd) return run_oracle(oracle_args, max_n);
    if (*prof_cmd) return run_profile(prof_args);
  } catch (const shelfmix::bound_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const shelfmix::invariant_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
