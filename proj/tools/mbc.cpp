#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mbc/candidates.hpp"
#include "mbc/feasibility.hpp"
#include "mbc/io.hpp"
#include "mbc/oracle.hpp"
#include "mbc/solver_line.hpp"
#include "mbc/solver_mbc.hpp"

using nlohmann::json;

namespace {

struct Common {
  std::string instance;
  std::string mode = "plane";
  bool merge_touching = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--instance", c.instance, "instance JSON file")->required();
  cmd->add_option("--mode", c.mode, "line or plane")->check(CLI::IsMember({"line", "plane"}));
  cmd->add_flag("--merge-touching", c.merge_touching, "merge barriers with b_k == a_{k+1}");
}

mbc::Instance load(const Common& c) {
  return mbc::make_instance(mbc::load_instance(c.instance), {c.merge_touching});
}

json step_json(const mbc::TraceStep& s) {
  return {{"step", s.step},
          {"lo", s.lo},
          {"hi", s.hi},
          {"sensor", s.sensor},
          {"source", s.source == mbc::TraceStep::Source::kS1 ? "S1" : "S2"},
          {"s1_events", s.s1_events},
          {"s2_events", s.s2_events},
          {"envelope_breakpoints", s.envelope_breakpoints},
          {"barrier_events", s.barrier_events},
          {"feasibility_tests", s.feasibility_tests},
          {"hit_beta", s.hit_beta},
          {"R", {{"curve", s.R.is_curve()}, {"sensor", s.R.sensor}, {"c", s.R.c}}}};
}

std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto x = item.find('x');
    if (x == std::string::npos) throw mbc::Error(mbc::ErrorCode::kParse, "size must look like NxM: " + item);
    out.emplace_back(std::stoul(item.substr(0, x)), std::stoul(item.substr(x + 1)));
  }
  return out;
}

template <class F>
double micros(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
}

int exit_code(mbc::ErrorCode code) {
  if (mbc::is_validation_error(code)) return 2;
  if (code == mbc::ErrorCode::kUncoverable) return 3;
  if (code == mbc::ErrorCode::kNumericalFailure) return 4;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiple-barrier coverage solver"};
  app.require_subcommand(1);
  const mbc::ToleranceConfig tol = mbc::ToleranceConfig::from_env();

  Common common;
  double lambda = 0;

  auto* decide = app.add_subcommand("decide", "test one lambda");
  add_common(decide, common);
  decide->add_option("--lambda", lambda, "movement bound")->required();

  auto* solve = app.add_subcommand("solve", "compute the optimal movement bound");
  add_common(solve, common);
  std::string trace_path;
  solve->add_option("--trace", trace_path, "write the parametric trace (plane mode) to this file");

  auto* oracle = app.add_subcommand("oracle", "brute-force reference answers");
  add_common(oracle, common);
  std::string what = "lambda";
  oracle->add_option("--what", what, "decide or lambda")->check(CLI::IsMember({"decide", "lambda"}));
  oracle->add_option("--lambda", lambda, "movement bound for --what decide");

  auto* gen = app.add_subcommand("gen", "seeded random instance");
  mbc::GenerateSpec spec;
  std::string gen_mode = "line", out_path;
  gen->add_option("--n", spec.n, "sensors")->check(CLI::PositiveNumber);
  gen->add_option("--m", spec.m, "barriers")->check(CLI::PositiveNumber);
  gen->add_option("--r", spec.r, "sensing half-range")->check(CLI::PositiveNumber);
  gen->add_option("--spread", spec.spread, "coordinate range")->check(CLI::PositiveNumber);
  gen->add_option("--seed", spec.seed, "random seed");
  gen->add_option("--grid", spec.grid, "round coordinates to this step");
  gen->add_option("--y-range", spec.y_range, "plane sensors get |y| <= this (default spread/4)");
  gen->add_option("--mode", gen_mode, "line or plane")->check(CLI::IsMember({"line", "plane"}));
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* cands = app.add_subcommand("candidates", "inspect candidate arrays");
  cands->require_subcommand(1);
  auto* dump = cands->add_subcommand("dump", "materialize every candidate array");
  Common dump_common;
  std::size_t max_size = 100000;
  dump->add_option("--instance", dump_common.instance, "instance JSON file")->required();
  dump->add_flag("--merge-touching", dump_common.merge_touching, "merge touching barriers");
  dump->add_option("--max-size", max_size, "refuse to emit more elements than this");

  auto* bench = app.add_subcommand("bench", "timing rows as CSV");
  std::string sizes = "100x10", bench_mode = "line", events_path;
  int seeds = 3;
  std::uint64_t base_seed = 1;
  bench->add_option("--sizes", sizes, "comma-separated NxM list");
  bench->add_option("--seeds", seeds, "instances per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", base_seed, "first seed");
  bench->add_option("--mode", bench_mode, "line or plane")->check(CLI::IsMember({"line", "plane"}));
  bench->add_option("--events", events_path, "write per-step event counts (plane mode) as CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*decide) {
      const auto inst = load(common);
      const mbc::Decision d =
          common.mode == "line" ? mbc::decide_line(inst, lambda, tol) : mbc::decide_plane(inst, lambda, tol);
      json out{{"feasible", d.feasible}, {"placement", nullptr}};
      if (d.placement) out["placement"] = json::parse(mbc::placement_json(inst, lambda, *d.placement));
      std::cout << out.dump() << '\n';
    } else if (*solve) {
      const auto inst = load(common);
      if (common.mode == "line") {
        const auto sol = mbc::solve_line(inst, {tol, {}});
        std::cout << mbc::placement_json(inst, sol.lambda_star, sol.placement) << '\n';
      } else {
        const auto sol = mbc::solve_plane(inst, {tol, false});
        std::cout << mbc::placement_json(inst, sol.lambda_star, sol.placement) << '\n';
        if (!trace_path.empty()) {
          json t{{"lambda", sol.lambda_star},
                 {"termination", sol.termination},
                 {"presort", {sol.presort_interval.lo, sol.presort_interval.hi}},
                 {"sequence", sol.sequence},
                 {"feasibility_tests", sol.feasibility_tests},
                 {"steps", json::array()}};
          for (const auto& s : sol.trace) t["steps"].push_back(step_json(s));
          std::ofstream(trace_path) << t.dump(2) << '\n';
        }
      }
    } else if (*oracle) {
      const auto inst = load(common);
      if (what == "decide") {
        std::cout << json{{"feasible", mbc::oracle_decide(inst, lambda, tol)}}.dump() << '\n';
      } else {
        const double v =
            common.mode == "line" ? mbc::oracle_lambda_line(inst, tol) : mbc::oracle_lambda_plane(inst, tol);
        std::cout << json{{"lambda", v}}.dump() << '\n';
      }
    } else if (*gen) {
      spec.plane = gen_mode == "plane";
      const auto raw = mbc::generate(spec);
      if (out_path.empty()) {
        std::cout << mbc::dump_instance(raw) << '\n';
      } else {
        mbc::save_instance(raw, out_path);
      }
    } else if (*dump) {
      const auto inst = load(dump_common);
      json out;
      auto rows = [&](const std::vector<mbc::CandidateValue>& vals, const char* index_name) {
        json arr = json::array();
        for (const auto& v : vals) arr.push_back({{"array", v.p}, {index_name, v.q}, {"value", v.value}});
        return arr;
      };
      const auto left = mbc::build_lambda1_arrays(inst);
      const auto right = mbc::mirror_lambda2(inst);
      out["left"] = rows(mbc::materialize(left, max_size), "t");
      out["right"] = rows(mbc::materialize(right, max_size), "t");
      out["pairs"] = rows(mbc::materialize(mbc::lambda3_arrays(inst), max_size), "b");
      json groups = json::array();
      for (const auto& g : left.groups) {
        groups.push_back({{"k1", g.k1}, {"k2", g.k2}, {"sigma", g.sigma}, {"alpha_n", g.alpha_n}, {"beta_n", g.beta_n}});
      }
      out["groups"] = groups;
      std::cout << out.dump() << '\n';
    } else if (*bench) {
      std::ofstream events;
      if (!events_path.empty()) {
        events.open(events_path);
        events << "n,m,seed,step,s1_events,s2_events,envelope_breakpoints,barrier_events,feas_tests\n";
      }
      std::cout << "n,m,t_decide_us,t_solve_us,feas_tests\n";
      for (const auto& [n, m] : parse_sizes(sizes)) {
        for (int s = 0; s < seeds; ++s) {
          mbc::GenerateSpec g;
          g.n = n;
          g.m = m;
          g.spread = 10.0 * static_cast<double>(std::max(n, m));
          g.r = 0.5 * g.spread / static_cast<double>(n);
          g.y_range = 2 * g.r;
          g.seed = base_seed + static_cast<std::uint64_t>(s);
          g.plane = bench_mode == "plane";
          const auto inst = mbc::make_instance(mbc::generate(g));
          const double probe = inst.max_abs_y() + g.spread / 4;
          const double t_decide = micros([&] { (void)mbc::decide_plane(inst, probe, tol); });
          std::size_t tests = 0;
          double t_solve = 0;
          if (g.plane) {
            mbc::PlaneSolution sol;
            t_solve = micros([&] { sol = mbc::solve_plane(inst, {tol, false}); });
            tests = sol.feasibility_tests;
            if (events.is_open()) {
              for (const auto& st : sol.trace) {
                events << n << ',' << m << ',' << g.seed << ',' << st.step << ',' << st.s1_events << ','
                       << st.s2_events << ',' << st.envelope_breakpoints << ',' << st.barrier_events << ','
                       << st.feasibility_tests << '\n';
              }
            }
          } else {
            mbc::LineSolution sol;
            t_solve = micros([&] { sol = mbc::solve_line(inst, {tol, {}}); });
            tests = sol.feasibility_tests;
          }
          std::printf("%zu,%zu,%.1f,%.1f,%zu\n", n, m, t_decide, t_solve, tests);
        }
      }
    }
  } catch (const mbc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
