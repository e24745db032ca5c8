//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Exit status: 0 pass, 1 verification failure,
// 2 usage or parse error, 3 budget or depth exceeded.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "zdchaos/chaos.hpp"
#include "zdchaos/covering_file.hpp"
#include "zdchaos/dot.hpp"
#include "zdchaos/provider.hpp"

namespace fs = std::filesystem;
using namespace zdchaos;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string gen;
  std::string file;
  std::size_t levels = 0;
};

void add_input(CLI::App *cmd, InputOptions &in) {
  auto *g = cmd->add_option("--gen", in.gen, "built-in generator: fixed-point or odometer");
  auto *f = cmd->add_option("--file,file", in.file, "covering file");
  g->excludes(f);
}

struct Loaded {
  CoveringSequence covering;
  std::vector<AnchorHint> hints;
  ProviderPtr provider;  // generator, or the file wrapped with its anchors
  bool generator = false;
};

// Generators are materialized to `depth` levels; files keep their own depth.
Loaded load(const InputOptions &in, std::size_t depth) {
  Loaded out;
  if (!in.gen.empty()) {
    out.provider = make_generator(in.gen);
    if (!out.provider) throw UsageError("unknown generator " + in.gen);
    out.generator = true;
    if (depth > 0) out.covering = materialize(*out.provider, depth);
    return out;
  }
  if (in.file.empty()) throw UsageError("give --gen <name> or a covering file");
  CoveringFile f = load_covering(in.file);
  out.covering = std::move(f.covering);
  out.hints = std::move(f.hints);
  const CoveringReport rep = validate_covering(out.covering);
  if (rep.chain_transitive && rep.all_covers) {
    AnchorData a = select_anchor_threads(out.covering, out.covering.depth(), out.hints);
    out.provider = std::make_shared<ExplicitProvider>(out.covering, std::move(a));
  }
  return out;
}

ProviderPtr require_provider(const Loaded &l) {
  if (!l.provider)
    throw std::runtime_error("input is not a chain transitive covering; run validate");
  return l.provider;
}

int emit(const WitnessReport &r) {
  std::cout << r.to_text();
  std::cerr << "cost " << r.claim << " elapsed_ms=" << r.elapsed_ms
            << " nodes=" << r.nodes_visited << "\n";
  for (const auto &n : r.notes) std::cerr << "note " << r.claim << ": " << n << "\n";
  return r.pass ? kPass : kFail;
}

void check_budget(const ImplicitTower &t, std::size_t levels, std::size_t budget) {
  for (std::size_t n = 1; n <= levels; ++n) {
    const BigInt v = t.vertex_count(n);
    if (v > budget)
      throw BudgetExceeded("level " + std::to_string(n) + " would have " +
                           to_decimal(v) + " vertices; budget is " +
                           std::to_string(budget));
  }
}

// ---- validate -------------------------------------------------------------

int cmd_validate(const InputOptions &in) {
  Loaded l = load(in, in.levels ? in.levels : 4);
  const CoveringReport rep = validate_covering(l.covering);
  std::cout << "covering " << l.covering.name << " depth " << l.covering.depth() << "\n"
            << rep.to_text();
  return rep.ok() && rep.chain_transitive ? kPass : kFail;
}

// ---- build ----------------------------------------------------------------

struct BuildOptions {
  std::size_t l11 = 1, l21 = 1;
  std::size_t budget = kDefaultVertexBudget;
  std::string dot;
};

Embedding build_tower(const Loaded &l, std::size_t levels, const BuildOptions &o) {
  EmbeddingOptions eo;
  eo.l11 = o.l11;
  eo.l21 = o.l21;
  eo.vertex_budget = o.budget;
  if (l.generator) {
    eo.anchors = anchors_of(*l.provider, levels);
  } else {
    if (levels > l.covering.depth())
      throw DepthExceeded("the covering file has " +
                          std::to_string(l.covering.depth()) + " levels");
    eo.anchors = select_anchor_threads(l.covering, levels, l.hints);
  }
  return build_embedding(l.covering, levels, eo);
}

int cmd_build(const InputOptions &in, const BuildOptions &o) {
  const std::size_t levels = in.levels ? in.levels : 3;
  if (!in.gen.empty()) {
    // Refuse before materializing anything large.
    auto gen = make_generator(in.gen);
    if (!gen) throw UsageError("unknown generator " + in.gen);
    ImplicitTower t(gen, o.l11, o.l21);
    check_budget(t, levels, o.budget);
  }
  Loaded l = load(in, levels);
  const CoveringReport rep = validate_covering(l.covering);
  if (!rep.chain_transitive || !rep.all_covers) {
    std::cout << rep.to_text();
    return kFail;
  }
  const Embedding e = build_tower(l, levels, o);
  std::cout << "level l1 l2 lw vertices edges\n";
  for (std::size_t n = 1; n <= e.max_level(); ++n) {
    const auto &lv = e.levels[n];
    std::cout << n << " " << lv.l1 << " " << lv.l2 << " " << lv.w->length() << " "
              << lv.graph->num_vertices() << " " << lv.graph->num_edges() << "\n";
  }
  if (!o.dot.empty()) {
    fs::create_directories(o.dot);
    for (const auto &lv : e.levels) {
      const fs::path p = fs::path(o.dot) / ("level" + std::to_string(lv.n) + ".dot");
      std::ofstream(p) << to_dot(lv);
    }
  }
  return emit(verify_construction(e));
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
  std::string claim = "all";
  std::string mode = "relaxed";
  std::size_t m = 2, n = 1, k = 1, N = 1;
  std::optional<std::size_t> res;
  std::optional<std::size_t> level;
  std::size_t samples = 16;
  std::uint64_t seed = 0;
  std::optional<std::string> a, b;
  std::string horizon = "0";
  BuildOptions build;
};

const std::vector<std::string> kClaims = {
    "well-defined", "fixed-point-pattern", "property1", "property2",
    "triple-cover", "density",             "proximal",  "recurrent",
    "invariant",    "scrambled",           "outside-homeo", "transitive"};

int run_claim(const std::string &claim, const Loaded &l, const VerifyOptions &o) {
  const ScheduleMode mode = o.mode == "strict" ? ScheduleMode::kStrict : ScheduleMode::kRelaxed;
  const ImplicitTower t(require_provider(l), o.build.l11, o.build.l21);
  auto sched = [&] { return schedule(t, 1, o.k + 1, mode); };
  auto stage_m = [&](std::size_t k) {
    return static_cast<std::size_t>(schedule(t, 1, k, mode)[k - 1].m);
  };

  if (claim == "well-defined" || claim == "outside-homeo") {
    const std::size_t top = o.level ? *o.level : stage_m(o.k);
    if (l.generator) check_budget(t, top, o.build.budget);
    Loaded local = l;
    if (l.generator) local.covering = materialize(*l.provider, top);
    const Embedding e = build_tower(local, top, o.build);
    return claim == "well-defined" ? emit(verify_construction(e))
                                   : emit(verify_outside_bidirectional(e, top));
  }
  if (claim == "fixed-point-pattern") return emit(verify_fixed_point_pattern(t, o.m, o.n));
  if (claim == "property1") return emit(verify_property1(t, o.m, o.n, mode));
  if (claim == "property2") return emit(verify_property2(t, o.m, o.n, mode));
  const auto s = sched();
  if (claim == "triple-cover") return emit(verify_triple_cover(t, s, o.k, mode));
  if (claim == "density") return emit(verify_density(t, s, o.k, mode));
  const SampleOptions so{o.samples, o.seed};
  if (claim == "proximal")
    return emit(proximality_witness(t, s, o.N, o.k, o.res.value_or(1), so, mode));
  if (claim == "recurrent")
    return emit(recurrence_witness(t, s, o.N, o.k, o.res.value_or(1), so, mode));
  if (claim == "invariant") return emit(verify_invariance(t, s, o.N, o.k, mode));
  if (claim == "scrambled") {
    const CantorApprox c = cantor_approx(t, s, o.N, o.k + 1);
    const BigInt a = o.a ? from_decimal(*o.a) : c.cylinders.at(0).first;
    const BigInt b = o.b ? from_decimal(*o.b) : c.cylinders.at(1).first;
    return emit(scrambled_pair_witness(t, c.level, a, b, o.res.value_or(1),
                                       from_decimal(o.horizon), mode));
  }
  if (claim == "transitive") {
    const auto &st = s[o.k - 1];
    const std::size_t m = static_cast<std::size_t>(st.m);
    const BigInt a = o.a ? from_decimal(*o.a)
                         : t.q_interval(m, static_cast<std::size_t>(st.n)).first;
    return emit(transitivity_witness(t, s, o.k, a, o.res.value_or(m), mode));
  }
  throw UsageError("unknown claim " + claim);
}

int cmd_verify(const InputOptions &in, const VerifyOptions &o) {
  if (o.mode != "strict" && o.mode != "relaxed")
    throw UsageError("--mode must be strict or relaxed");
  if (o.claim != "all" &&
      std::find(kClaims.begin(), kClaims.end(), o.claim) == kClaims.end())
    throw UsageError("unknown claim " + o.claim);
  Loaded l = load(in, 0);
  if (o.claim != "all") return run_claim(o.claim, l, o);

  // The full suite at stage k: every claim at the schedule's own parameters.
  const ImplicitTower t(require_provider(l), o.build.l11, o.build.l21);
  const ScheduleMode mode = o.mode == "strict" ? ScheduleMode::kStrict : ScheduleMode::kRelaxed;
  const auto s = schedule(t, 1, o.k + 1, mode);
  VerifyOptions p = o;
  p.m = static_cast<std::size_t>(s[o.k - 1].m);
  p.n = static_cast<std::size_t>(s[o.k - 1].n);
  int worst = kPass;
  for (const auto &claim : kClaims) {
    int status;
    try {
      status = run_claim(claim, l, p);
    } catch (const BudgetExceeded &e) {
      std::cerr << claim << ": " << e.what() << "\n";
      status = kBudget;
    } catch (const DepthExceeded &e) {
      std::cerr << claim << ": " << e.what() << "\n";
      status = kBudget;
    }
    worst = std::max(worst, status);
  }
  return worst;
}

// ---- schedule -------------------------------------------------------------

int cmd_schedule(const InputOptions &in, std::size_t K, std::size_t n0,
                 std::size_t l11, std::size_t l21) {
  Loaded l = load(in, 0);
  const ImplicitTower t(require_provider(l), l11, l21);
  int status = kPass;
  for (ScheduleMode mode : {ScheduleMode::kStrict, ScheduleMode::kRelaxed}) {
    std::cout << to_string(mode) << ":";
    try {
      const auto s = schedule(t, n0, K, mode);
      for (const auto &e : s) std::cout << " (" << e.n << "," << e.m << ")";
      std::cout << "\n";
      for (std::size_t k = 0; k < s.size(); ++k)
        std::cout << "  k=" << k + 1 << " n=" << s[k].n << " m=" << s[k].m
                  << " l1_n=" << s[k].l1_n << "\n";
    } catch (const DepthExceeded &e) {
      std::cout << "\n";
      std::cerr << to_string(mode) << ": " << e.what() << "\n";
      status = kBudget;
    }
  }
  return status;
}

// ---- simulate -------------------------------------------------------------

int cmd_simulate(const InputOptions &in, const std::string &thread,
                 std::size_t steps, std::size_t depth) {
  if (depth < steps) throw UsageError("--depth must be at least --steps");
  Loaded l = load(in, 0);
  const ImplicitTower t(require_provider(l));
  auto top = t.parse_label(depth, thread);
  if (!top) throw UsageError("no vertex '" + thread + "' at level " + std::to_string(depth));
  const ThreadPrefix start = thread_through(t, *top);
  for (std::size_t s = 0; s <= steps; ++s) {
    const ThreadPrefix p = push_forward(t, start, s);
    std::cout << "t=" << s << " depth=" << p.depth();
    for (const Address &a : p.entries) std::cout << " " << t.label(a);
    std::cout << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Chaotic zero-dimensional systems from graph coverings"};
  app.require_subcommand(1);

  InputOptions in;
  BuildOptions bo;
  VerifyOptions vo;
  std::size_t K = 2, n0 = 1, steps = 5, depth = 6;
  std::string thread = "H";

  auto *validate = app.add_subcommand("validate", "check a covering");
  add_input(validate, in);
  validate->add_option("--levels", in.levels, "generator depth (default 4)");

  auto *build = app.add_subcommand("build", "build the augmented tower");
  add_input(build, in);
  build->add_option("--levels", in.levels, "tower depth (default 3)");
  build->add_option("--l11", bo.l11, "length of p_{1,1}")->check(CLI::PositiveNumber);
  build->add_option("--l21", bo.l21, "length of p_{2,1}")->check(CLI::PositiveNumber);
  build->add_option("--budget", bo.budget, "vertex budget per level");
  build->add_option("--dot", bo.dot, "directory for one DOT file per level");

  auto *verify = app.add_subcommand("verify", "run a checker");
  add_input(verify, in);
  verify->add_option("--claim", vo.claim, "claim id or 'all'");
  verify->add_option("--mode", vo.mode, "strict or relaxed");
  verify->add_option("--m", vo.m);
  verify->add_option("--n", vo.n);
  verify->add_option("--k", vo.k)->check(CLI::PositiveNumber);
  verify->add_option("--N", vo.N)->check(CLI::PositiveNumber);
  verify->add_option("--res", vo.res, "resolution level");
  verify->add_option("--level", vo.level, "explicit tower level");
  verify->add_option("--samples", vo.samples);
  verify->add_option("--seed", vo.seed);
  verify->add_option("--a", vo.a, "first point (position on p_1)");
  verify->add_option("--b", vo.b, "second point (position on p_1)");
  verify->add_option("--horizon", vo.horizon, "scrambled-pair horizon, 0 = 4 l_{1,M}");
  verify->add_option("--l11", vo.build.l11)->check(CLI::PositiveNumber);
  verify->add_option("--l21", vo.build.l21)->check(CLI::PositiveNumber);
  verify->add_option("--budget", vo.build.budget);

  auto *sched = app.add_subcommand("schedule", "print the level schedules");
  add_input(sched, in);
  sched->add_option("--k", K, "number of stages")->check(CLI::PositiveNumber);
  sched->add_option("--n0", n0, "first resolution level")->check(CLI::PositiveNumber);
  sched->add_option("--l11", bo.l11)->check(CLI::PositiveNumber);
  sched->add_option("--l21", bo.l21)->check(CLI::PositiveNumber);

  auto *sim = app.add_subcommand("simulate", "push a thread prefix forward");
  add_input(sim, in);
  sim->add_option("--thread", thread, "vertex label at level --depth");
  sim->add_option("--steps", steps);
  sim->add_option("--depth", depth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*validate) return cmd_validate(in);
    if (*build) return cmd_build(in, bo);
    if (*verify) return cmd_verify(in, vo);
    if (*sched) return cmd_schedule(in, K, n0, bo.l11, bo.l21);
    if (*sim) return cmd_simulate(in, thread, steps, depth);
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError &e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded &e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const DepthExceeded &e) {
    std::cerr << "depth exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
