// resint: scenario runner for the residual intersection experiments.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "resint/field.hpp"
#include "resint/gb_cache.hpp"
#include "resint/version.hpp"
#include "runner.hpp"

namespace fs = std::filesystem;
using namespace resint;
using runner::Json;

namespace {

constexpr int kExitUsage = 2;

std::string default_cache_dir() {
  if (const char* env = std::getenv("RESINT_CACHE")) return env;
  return ".resint-cache";
}

void install_cache(const std::string& dir, bool enabled) {
  if (enabled) set_global_gb_cache(std::make_shared<GBCache>(dir));
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

void print_tables(const Json& node, const std::string& path, runner::BettiFormat fmt, const std::string& only,
                  Json& collected) {
  if (!node.is_object()) return;
  for (const auto& [k, v] : node.items()) {
    const std::string p = path.empty() ? k : path + "/" + k;
    if (v.is_object() && v.contains("entries") && v.contains("totals")) {
      if (!only.empty() && p != only) continue;
      BettiTable b = runner::betti_from_json(v);
      if (fmt == runner::BettiFormat::Json) {
        collected[p] = Json::parse(runner::emit_betti(b, fmt));
      } else {
        std::cout << p << ":\n" << runner::emit_betti(b, fmt) << '\n';
      }
    } else {
      print_tables(v, p, fmt, only, collected);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run residual intersection scenarios and report computed invariants"};
  app.set_version_flag("--version", std::string("resint ") + kToolVersion);
  app.require_subcommand(1);

  std::string cache_dir = default_cache_dir();
  bool no_cache = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> characteristic;
  int jobs = 1;
  std::optional<double> max_seconds;
  bool quiet = false;

  auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "override the scenario seed");
    sub->add_option("--char", characteristic, "override the characteristic (a prime)");
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--cache", cache_dir, "Groebner basis cache directory");
    sub->add_flag("--no-cache", no_cache, "do not read or write the cache");
    sub->add_option("--max-seconds", max_seconds, "cap every scenario's wall budget");
    sub->add_flag("-q,--quiet", quiet, "no per-check lines");
  };

  auto* run = app.add_subcommand("run", "run one scenario");
  std::string scenario_path, out_path;
  run->add_option("scenario", scenario_path, "scenario file")->required();
  run->add_option("--out", out_path, "write the JSON report here");
  add_run_flags(run);

  auto* suite = app.add_subcommand("suite", "run every scenario in a directory");
  std::string suite_dir, out_dir;
  suite->add_option("dir", suite_dir, "directory of scenario files")->required();
  suite->add_option("--out-dir", out_dir, "write one report per scenario here");
  add_run_flags(suite);

  auto* betti = app.add_subcommand("betti", "print the Betti tables stored in a report");
  std::string report_path, format = "paper-text", only;
  betti->add_option("report", report_path, "report file")->required();
  betti->add_option("--format", format, "paper-text or json")->check(CLI::IsMember({"paper-text", "json"}));
  betti->add_option("--table", only, "path of one table, e.g. betti/2 for S/I^2");

  auto* cache = app.add_subcommand("cache", "inspect or clear the Groebner basis cache");
  std::string cache_cmd;
  std::size_t sample = 20;
  std::uint64_t verify_seed = 1;
  cache->add_option("command", cache_cmd, "stats, clear or verify")
      ->required()
      ->check(CLI::IsMember({"stats", "clear", "verify"}));
  cache->add_option("--cache", cache_dir, "cache directory");
  cache->add_option("--sample", sample, "entries checked by verify");
  cache->add_option("--seed", verify_seed, "sampling seed for verify");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (characteristic && !is_prime(*characteristic)) {
      std::cerr << "resint: --char " << *characteristic << " is not prime\n";
      return kExitUsage;
    }
    runner::RunOptions ro{seed, characteristic, jobs, max_seconds};

    if (*run) {
      install_cache(cache_dir, !no_cache);
      auto sc = runner::load_scenario(scenario_path);
      Json report = runner::run_scenario(sc, ro);
      if (!out_path.empty()) runner::write_atomically(out_path, pretty(report));
      if (!quiet) std::cout << runner::summary_text(report);
      return runner::exit_code(report);
    }

    if (*suite) {
      install_cache(cache_dir, !no_cache);
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(suite_dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
      std::sort(files.begin(), files.end());
      std::vector<runner::Scenario> scenarios;
      for (const auto& f : files) scenarios.push_back(runner::load_scenario(f));
      if (!out_dir.empty()) fs::create_directories(out_dir);

      // scenarios run concurrently; each one runs its own stages sequentially
      std::vector<Json> reports(scenarios.size());
      std::atomic<std::size_t> next{0};
      std::mutex print;
      auto worker = [&] {
        for (std::size_t i; (i = next++) < scenarios.size();) {
          runner::RunOptions one = ro;
          one.jobs = 1;
          reports[i] = runner::run_scenario(scenarios[i], one);
          if (!out_dir.empty())
            runner::write_atomically(fs::path(out_dir) / (scenarios[i].name + ".report.json"), pretty(reports[i]));
          std::lock_guard<std::mutex> lock(print);
          if (quiet)
            std::cout << scenarios[i].name << ": " << reports[i]["summary"]["status"].get<std::string>() << '\n';
          else
            std::cout << runner::summary_text(reports[i]);
          std::cout.flush();
        }
      };
      std::vector<std::thread> pool;
      for (int t = 0; t < std::max(1, std::min<int>(jobs, static_cast<int>(scenarios.size()))); ++t)
        pool.emplace_back(worker);
      for (auto& t : pool) t.join();

      int failed = 0, budget = 0;
      for (const auto& r : reports) {
        const int rc = runner::exit_code(r);
        failed += rc == 1;
        budget += rc == 3;
      }
      std::cout << "suite: " << reports.size() << " scenarios, " << failed << " failing, " << budget
                << " with budget skips\n";
      return failed ? 1 : 0;
    }

    if (*betti) {
      std::ifstream in(report_path);
      if (!in) {
        std::cerr << "resint: cannot open " << report_path << '\n';
        return kExitUsage;
      }
      Json report = Json::parse(in);
      Json collected = Json::object();
      const auto fmt = format == "json" ? runner::BettiFormat::Json : runner::BettiFormat::PaperText;
      print_tables(report.value("invariants", Json::object()), "", fmt, only, collected);
      if (fmt == runner::BettiFormat::Json) std::cout << collected.dump(2) << '\n';
      return 0;
    }

    if (*cache) {
      GBCache c(cache_dir);
      if (cache_cmd == "stats") {
        auto s = c.stats();
        std::cout << "cache " << c.dir().string() << ": " << s.entries << " entries, " << s.bytes << " bytes\n";
      } else if (cache_cmd == "clear") {
        std::cout << "removed " << c.clear() << " entries\n";
      } else {
        auto v = c.verify(sample, verify_seed);
        std::cout << "checked " << v.checked << ", passed " << v.passed << ", stale " << v.stale << ", corrupt "
                  << v.corrupt.size() << '\n';
        for (const auto& name : v.corrupt) std::cout << "  corrupt: " << name << '\n';
      }
      return 0;
    }
  } catch (const runner::SchemaError& e) {
    std::cerr << "resint: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "resint: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "resint: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
