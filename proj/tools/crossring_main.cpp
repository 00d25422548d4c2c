#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crossring/association.hpp"
#include "crossring/drawing.hpp"
#include "crossring/errors.hpp"
#include "crossring/perturb.hpp"
#include "crossring/robustness.hpp"
#include "crossring/solver.hpp"
#include "crossring/verifier.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw crossring::ParseError("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw crossring::ParseError("cannot write " + path);
  out << text;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

ordered_json analysis_json(const crossring::Drawing& d,
                           const crossring::RobustReport& r) {
  auto opt_arr = [](const std::vector<std::optional<int>>& v) {
    ordered_json a = ordered_json::array();
    for (const std::optional<int>& x : v)
      a.push_back(x ? ordered_json(*x) : ordered_json(nullptr));
    return a;
  };
  ordered_json out;
  out["format"] = "crossring-analysis/1";
  out["digest"] = crossring::drawing_digest(d);
  out["m"] = r.m;
  out["n"] = r.n;
  out["total_crossings"] = d.total_crossings();
  out["b"] = opt_arr(r.b);
  out["a"] = opt_arr(r.a);
  out["max_gap"] =
      r.max_gap ? ordered_json(*r.max_gap) : ordered_json(nullptr);
  out["red_crossings"] = r.red_crossings;
  out["relaxed"] = r.relaxed;
  out["red_nonseparating"] = r.red_nonseparating;
  out["robust"] = r.robust;
  return out;
}

int run_gen(int m, int n, const std::string& out_path) {
  crossring::Drawing d = crossring::canonical_drawing(m, n);
  write_file(out_path, d.to_json());
  std::cout << "wrote " << out_path << " m=" << m << " n=" << n
            << " crossings=" << d.total_crossings()
            << " digest=" << crossring::drawing_digest(d) << "\n";
  return 0;
}

int run_validate(const std::string& path) {
  crossring::Drawing d = crossring::Drawing::from_json(read_file(path));
  std::vector<std::string> issues = d.validate();
  if (issues.empty()) {
    std::cout << "valid m=" << d.graph.m << " n=" << d.graph.n
              << " crossings=" << d.total_crossings()
              << " digest=" << crossring::drawing_digest(d) << "\n";
    return 0;
  }
  for (const std::string& msg : issues) std::cout << "issue: " << msg << "\n";
  return 1;
}

int run_analyze(const std::string& path, const std::string& out_path) {
  crossring::Drawing d = crossring::Drawing::from_json(read_file(path));
  d.require_valid();
  crossring::RobustReport r = crossring::analyze(d);
  emit(analysis_json(d, r).dump(2) + "\n", out_path);
  return 0;
}

int run_certify(const std::string& path, const std::string& out_path,
                const std::string& assoc_path) {
  crossring::Drawing d = crossring::Drawing::from_json(read_file(path));
  crossring::Certificate c = crossring::certify(d);
  emit(crossring::certificate_json(c), out_path);
  if (!assoc_path.empty()) {
    if (c.robust && c.falsifications.empty()) {
      write_file(assoc_path,
                 crossring::association_json(crossring::associate_all(d)));
    } else {
      std::cerr << "no association dump: drawing is not cleanly robust\n";
    }
  }
  if (!c.falsifications.empty()) return 2;
  if (c.robust && !c.guarantee_met) return 2;
  return 0;
}

int run_solve(const std::string& graph_spec, int k_max, std::uint64_t budget,
              const std::string& out_path) {
  const std::string prefix = "cm-cn:";
  if (graph_spec.rfind(prefix, 0) != 0)
    throw crossring::PreconditionError("graph spec must look like cm-cn:3,3");
  const std::string rest = graph_spec.substr(prefix.size());
  const size_t comma = rest.find(',');
  if (comma == std::string::npos)
    throw crossring::PreconditionError("graph spec must look like cm-cn:3,3");
  const int m = std::stoi(rest.substr(0, comma));
  const int n = std::stoi(rest.substr(comma + 1));

  crossring::SmallGraph g = crossring::product_cycles(m, n);
  crossring::SolveResult r = crossring::exact_crossing_search(
      g, k_max, crossring::product_cycle_automorphisms(m, n), budget);

  ordered_json out;
  out["format"] = "crossring-solve/1";
  out["graph"] = graph_spec;
  out["m"] = m;
  out["n"] = n;
  out["k_max"] = k_max;
  out["nodes"] = r.nodes;
  if (r.crossing_number) {
    out["crossing_number"] = *r.crossing_number;
    ordered_json pairs = ordered_json::array();
    for (auto [a, b] : r.witness.pairs) {
      ordered_json pair = ordered_json::array();
      pair.push_back({g.edges[a].first, g.edges[a].second});
      pair.push_back({g.edges[b].first, g.edges[b].second});
      pairs.push_back(std::move(pair));
    }
    out["witness_pairs"] = std::move(pairs);
  } else {
    out["crossing_number"] = nullptr;
  }
  emit(out.dump(2) + "\n", out_path);
  return 0;
}

int run_bound(int m, const std::string& range, const std::string& out_path) {
  const size_t dots = range.find("..");
  if (dots == std::string::npos)
    throw crossring::PreconditionError("n-range must look like 3..40");
  const int lo = std::stoi(range.substr(0, dots));
  const int hi = std::stoi(range.substr(dots + 2));
  if (lo < m)
    throw crossring::PreconditionError("n-range must start at m or later");
  if (hi < lo) throw crossring::PreconditionError("empty n-range");

  std::string csv = "m,n,regime,value,ceiling\n";
  for (int n = lo; n <= hi; ++n) {
    crossring::BoundResult b = crossring::hks_lower_bound(m, n);
    csv += std::to_string(m) + "," + std::to_string(n) + "," + b.regime +
           "," + b.value.str() + "," + std::to_string(b.ceiling()) + "\n";
  }
  emit(csv, out_path);
  return 0;
}

struct FuzzOutcome {
  bool falsified = false;
  std::string diagnosis;
  std::string detail;   // printed for falsified runs
  std::string fixture;  // drawing json for quarantine
  std::uint64_t first_seed = 0;
};

int fuzz_workers(int count) {
  int workers = 0;
  if (const char* env = std::getenv("CROSSRING_THREADS"))
    workers = std::atoi(env);
  if (workers < 1)
    workers = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
  return std::min(workers, std::max(1, count));
}

int run_fuzz(int m, int n, int count, std::uint64_t seed,
             const std::string& quarantine) {
  const crossring::Drawing base = crossring::canonical_drawing(m, n);
  std::vector<FuzzOutcome> results(count);

  auto work = [&](int worker, int stride) {
    for (int t = worker; t < count; t += stride) {
      FuzzOutcome& out = results[t];
      out.first_seed = seed + 1000003ull * static_cast<unsigned>(t);
      crossring::Drawing d = base;
      const int depth = 1 + (t % 8);
      for (int step = 0; step < depth; ++step) {
        try {
          d = crossring::perturb(d, out.first_seed + step);
        } catch (const crossring::BudgetError&) {
          break;
        }
      }
      try {
        crossring::Certificate c = crossring::certify(d);
        out.diagnosis = c.diagnosis;
        if (!c.falsifications.empty() || (c.robust && !c.guarantee_met)) {
          out.falsified = true;
          out.detail = c.falsifications.empty()
                           ? "guarantee missed: claimed " +
                                 std::to_string(c.claimed_total) + " of " +
                                 std::to_string(c.required_total)
                           : c.falsifications.front();
          out.fixture = d.to_json();
        }
      } catch (const std::exception& e) {
        out.falsified = true;
        out.diagnosis = "error";
        out.detail = e.what();
        out.fixture = d.to_json();
      }
    }
  };

  const int workers = fuzz_workers(count);
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (std::thread& th : pool) th.join();
  }

  int robust = 0, heavy = 0, below = 0, failed = 0, other = 0;
  for (int t = 0; t < count; ++t) {
    const FuzzOutcome& out = results[t];
    if (out.falsified) {
      ++failed;
      std::cout << "FALSIFIED t=" << t << " seed=" << out.first_seed << " "
                << out.detail << "\n";
      if (!quarantine.empty()) {
        std::filesystem::create_directories(quarantine);
        const std::string name = quarantine + "/fuzz_m" + std::to_string(m) +
                                 "_n" + std::to_string(n) + "_seed" +
                                 std::to_string(out.first_seed) + "_t" +
                                 std::to_string(t) + ".json";
        write_file(name, out.fixture);
        std::cout << "quarantined " << name << "\n";
      }
    } else if (out.diagnosis == "robust") {
      ++robust;
    } else if (out.diagnosis == "heavy_red_cycle") {
      ++heavy;
    } else if (out.diagnosis == "not_robust_below_threshold") {
      ++below;
    } else {
      ++other;
    }
  }
  std::cout << "fuzz m=" << m << " n=" << n << " count=" << count
            << " robust=" << robust << " heavy=" << heavy
            << " below_threshold=" << below << " other=" << other
            << " falsified=" << failed << "\n";
  return failed > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"drawings of the product of two cycles: generate, validate, "
               "analyze, certify, solve, bound, fuzz"};
  app.require_subcommand(1);

  int m = 3, n = 7;
  std::string out_path, in_path, assoc_path, graph_spec, range, quarantine;
  int k_max = 3, count = 100;
  std::uint64_t seed = 1, budget = 50000000ull;

  CLI::App* gen = app.add_subcommand("gen-canonical",
                                     "write the reference drawing as JSON");
  gen->add_option("--m", m, "ring count")->required();
  gen->add_option("--n", n, "positions per ring")->required();
  gen->add_option("-o,--output", out_path, "output file")->required();

  CLI::App* val = app.add_subcommand("validate", "check a drawing file");
  val->add_option("file", in_path, "drawing JSON")->required();

  CLI::App* ana = app.add_subcommand("analyze", "gap and separation report");
  ana->add_option("file", in_path, "drawing JSON")->required();
  ana->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* cert = app.add_subcommand("certify", "run the full verifier");
  cert->add_option("file", in_path, "drawing JSON")->required();
  cert->add_option("-o,--output", out_path, "certificate file (default stdout)");
  cert->add_option("--assoc", assoc_path, "also dump the association JSON");

  CLI::App* solve = app.add_subcommand("solve", "exact crossing number");
  solve->add_option("--graph", graph_spec, "graph spec, e.g. cm-cn:3,3")
      ->required();
  solve->add_option("--max-k", k_max, "largest crossing count tried")
      ->required();
  solve->add_option("--budget", budget, "planarity test budget");
  solve->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* bound = app.add_subcommand("bound", "closed-form bound table");
  bound->add_option("--m", m, "ring count")->required();
  bound->add_option("--n-range", range, "inclusive range, e.g. 3..40")
      ->required();
  bound->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* fuzz = app.add_subcommand("fuzz", "perturb and certify loop");
  fuzz->add_option("--m", m, "ring count")->required();
  fuzz->add_option("--n", n, "positions per ring")->required();
  fuzz->add_option("--count", count, "iterations");
  fuzz->add_option("--seed", seed, "base seed");
  fuzz->add_option("--quarantine", quarantine,
                   "directory for falsification fixtures");

  try {
    app.parse(argc, argv);

    if (gen->parsed()) return run_gen(m, n, out_path);
    if (val->parsed()) return run_validate(in_path);
    if (ana->parsed()) return run_analyze(in_path, out_path);
    if (cert->parsed()) return run_certify(in_path, out_path, assoc_path);
    if (solve->parsed()) return run_solve(graph_spec, k_max, budget, out_path);
    if (bound->parsed()) return run_bound(m, range, out_path);
    if (fuzz->parsed()) return run_fuzz(m, n, count, seed, quarantine);
    return 64;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  } catch (const crossring::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const crossring::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const crossring::FalsificationError& e) {
    std::cerr << "falsification: " << e.what() << "\n";
    return 2;
  } catch (const crossring::BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const crossring::PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
}
