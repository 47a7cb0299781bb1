// Command-line surface over the library: parse instances, decide
// complete-intersection status, inspect cones, and emit deterministic
// reports. Exit codes: 0 ok/true, 1 false (--check only), 2 input or
// usage error, 3 budget exceeded.

#include "cicone/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <future>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace cicone;

InstanceFile load(const std::string& path) {
  if (path == "-") return parse_instance(std::cin, "<stdin>");
  return parse_instance_file(path);
}

std::string ray_lines(const std::vector<IVec>& rays, const std::string& indent) {
  std::string out;
  for (const IVec& r : rays) out += indent + to_string(r) + "\n";
  return out;
}

struct AnalyzeOptions {
  bool oracle = false;
  Index max_gens = 16;
  long budget = 2000000;
};

Json analyze_one(const InstanceFile& f, const AnalyzeOptions& opt) {
  const GeneratorSet& A = f.generators;
  if (A.size() > opt.max_gens) throw BudgetExceeded("instance exceeds --max-gens");
  Json j;
  if (!f.name.empty()) j["name"] = f.name;
  j["m"] = A.size();
  j["ambient"] = A.ambient();
  j["dim"] = cone_dim(A);
  const ConvexityResult cv = is_strongly_convex(A);
  j["pointed"] = cv.pointed;
  if (!cv.pointed) {
    j["line_witness"] = json_of(*cv.line_witness);
    j["extreme_rays"] = nullptr;
    j["is_ci"] = nullptr;
    j["is_ci_cone"] = nullptr;
    j["bipyramidal"] = nullptr;
    j["bound"] = nullptr;
    j["oracle"] = nullptr;
    return j;
  }
  const std::vector<IVec> rays = extreme_rays(A);
  Json jr = Json::array();
  for (const IVec& r : rays) jr.push_back(json_of(r));
  j["extreme_rays"] = std::move(jr);

  const DecisionResult ci = is_complete_intersection(A);
  j["is_ci"] = Json{{"verdict", ci.verdict}, {"tree", json_of(ci.tree)}};
  const DecisionResult cone = is_ci_cone(A);
  j["is_ci_cone"] = Json{{"verdict", cone.verdict}, {"tree", json_of(cone.tree)}};
  const bool bip = is_general_bipyramidal(A).first;
  j["bipyramidal"] = bip;

  const Index n = cone_dim(A);
  if (n >= 2 && cone.verdict) {
    BoundReport rep;
    rep.n = n;
    rep.k = static_cast<Index>(rays.size());
    rep.bound_holds = rep.k <= 2 * n - 2;
    rep.equality = rep.k == 2 * n - 2;
    rep.bipyramidal = bip;
    j["bound"] = json_of(rep);
  } else {
    j["bound"] = nullptr;
  }

  j["oracle"] = nullptr;
  if (opt.oracle) {
    try {
      OracleBudget b;
      b.max_steps = opt.budget;
      j["oracle"] = json_of(is_ci_oracle(A, b));
    } catch (const BudgetExceeded& e) {
      j["oracle_skipped"] = e.what();
    }
  }
  return j;
}

std::string analyze_text(const Json& j, double elapsed_ms) {
  std::string out;
  if (j.contains("name")) out += "# instance " + j["name"].get<std::string>() + "\n";
  out += "m: " + j["m"].dump() + "\n";
  out += "ambient: " + j["ambient"].dump() + "\n";
  out += "dim: " + j["dim"].dump() + "\n";
  out += "pointed: " + j["pointed"].dump() + "\n";
  if (!j["pointed"].get<bool>()) {
    out += "line_witness: " + j["line_witness"].dump() + "\n";
    return out;
  }
  out += "extreme_rays: " + j["extreme_rays"].dump() + "\n";
  out += "is_ci: " + j["is_ci"]["verdict"].dump() + "\n";
  out += "is_ci_cone: " + j["is_ci_cone"]["verdict"].dump() + "\n";
  out += "bipyramidal: " + j["bipyramidal"].dump() + "\n";
  if (!j["bound"].is_null()) {
    const Json& b = j["bound"];
    out += "bound: n=" + b["n"].dump() + " k=" + b["k"].dump() +
           " holds=" + b["bound_holds"].dump() + " equality=" + b["equality"].dump() + "\n";
  }
  if (!j["oracle"].is_null()) {
    const Json& o = j["oracle"];
    out += "oracle: mu=" + o["mu"].dump() + " height=" + o["height"].dump() +
           " is_ci=" + o["is_ci"].dump() + "\n";
  } else if (j.contains("oracle_skipped")) {
    out += "oracle: skipped (" + j["oracle_skipped"].get<std::string>() + ")\n";
  }
  out += "elapsed_ms: " + std::to_string(elapsed_ms) + "\n";
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"complete intersection toric variety toolkit"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string file1, file2;
  bool json = false, oracle = false, check = false;
  AnalyzeOptions opt;
  int jobs = 1;
  Index dim = 0, steps = 0;
  std::uint64_t seed = 0;
  std::string mode = "gluing";

  auto* analyze = app.add_subcommand("analyze", "full report on one or more instances");
  analyze->add_option("files", files, "instance files ('-' = stdin)")->required();
  analyze->add_flag("--json", json);
  analyze->add_flag("--oracle", oracle);
  analyze->add_flag("--check", check);
  analyze->add_option("--max-gens", opt.max_gens);
  analyze->add_option("--budget", opt.budget);
  analyze->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* isci = app.add_subcommand("is-ci", "decide complete intersection");
  isci->add_option("file", file1)->required();
  isci->add_flag("--json", json);
  isci->add_flag("--check", check);
  isci->add_option("--max-gens", opt.max_gens);

  auto* iscicone = app.add_subcommand("is-ci-cone", "decide complete intersection cone");
  iscicone->add_option("file", file1)->required();
  iscicone->add_flag("--json", json);
  iscicone->add_flag("--check", check);
  iscicone->add_option("--max-gens", opt.max_gens);

  auto* rays_cmd = app.add_subcommand("rays", "extreme rays");
  rays_cmd->add_option("file", file1)->required();
  rays_cmd->add_flag("--json", json);

  auto* dsum = app.add_subcommand("direct-sum", "sum two cones along their shared line");
  dsum->add_option("file1", file1)->required();
  dsum->add_option("file2", file2)->required();
  dsum->add_flag("--json", json);

  auto* bip = app.add_subcommand("bipyramid", "canonical 2n-2 ray family");
  bip->add_option("--dim", dim)->required();

  auto* wit = app.add_subcommand("witness", "coprime scaling witness for two parts");
  wit->add_option("file1", file1)->required();
  wit->add_option("file2", file2)->required();
  wit->add_flag("--json", json);

  auto* rnd = app.add_subcommand("random-ci", "seeded random instance");
  rnd->add_option("--seed", seed)->required();
  rnd->add_option("--dim", dim)->required();
  rnd->add_option("--steps", steps)->required();
  rnd->add_option("--mode", mode)->check(CLI::IsMember({"gluing", "s-gluing"}));

  auto* orc = app.add_subcommand("oracle", "algebraic oracle report");
  orc->add_option("file", file1)->required();
  orc->add_flag("--json", json);
  orc->add_option("--budget", opt.budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  opt.oracle = oracle;

  if (analyze->parsed()) {
    std::vector<InstanceFile> instances;
    for (const std::string& f : files) instances.push_back(load(f));
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Json> reports(instances.size());
    if (jobs > 1 && instances.size() > 1) {
      std::vector<std::future<Json>> futs;
      for (const InstanceFile& inst : instances)
        futs.push_back(std::async(std::launch::async, [&inst, &opt] { return analyze_one(inst, opt); }));
      for (size_t i = 0; i < futs.size(); ++i) reports[i] = futs[i].get();
    } else {
      for (size_t i = 0; i < instances.size(); ++i) reports[i] = analyze_one(instances[i], opt);
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    if (json) {
      if (reports.size() == 1) {
        std::cout << canonical_dump(reports[0]);
      } else {
        Json arr = Json::array();
        for (Json& r : reports) arr.push_back(std::move(r));
        std::cout << canonical_dump(arr);
      }
    } else {
      for (const Json& r : reports) std::cout << analyze_text(r, ms / double(reports.size()));
    }
    if (check) {
      for (const Json& r : reports) {
        if (r["is_ci"].is_null() || !r["is_ci"]["verdict"].get<bool>()) return 1;
      }
    }
    return 0;
  }

  if (isci->parsed() || iscicone->parsed()) {
    const InstanceFile f = load(file1);
    if (f.generators.size() > opt.max_gens) throw BudgetExceeded("instance exceeds --max-gens");
    const DecisionResult r =
        isci->parsed() ? is_complete_intersection(f.generators) : is_ci_cone(f.generators);
    if (json) {
      Json j;
      j["verdict"] = r.verdict;
      j["tree"] = json_of(r.tree);
      std::cout << canonical_dump(j);
    } else {
      std::cout << "verdict: " << (r.verdict ? "true" : "false") << "\n";
    }
    return check ? (r.verdict ? 0 : 1) : 0;
  }

  if (rays_cmd->parsed()) {
    const InstanceFile f = load(file1);
    const std::vector<IVec> rays = extreme_rays(f.generators);
    if (json) {
      Json arr = Json::array();
      for (const IVec& r : rays) arr.push_back(json_of(r));
      std::cout << canonical_dump(arr);
    } else {
      // one ray per line, reusable as an instance file
      IMat m(static_cast<Index>(rays.size()), f.generators.ambient());
      for (size_t i = 0; i < rays.size(); ++i) m.row(static_cast<Index>(i)) = rays[i].transpose();
      std::cout << text_of(GeneratorSet(std::move(m)));
    }
    return 0;
  }

  if (dsum->parsed()) {
    const InstanceFile f1 = load(file1);
    const InstanceFile f2 = load(file2);
    const auto r = direct_sum(f1.generators, f2.generators);
    if (json) {
      Json j;
      j["sum"] = r ? json_of(*r) : Json(nullptr);
      std::cout << canonical_dump(j);
    } else if (r) {
      std::cout << "sum_type: " << (r->sum_type == SumType::Internal ? "internal" : "external")
                << "\n"
                << "a: " << to_string(r->a) << "\n"
                << "dim: " << r->dim << "\n"
                << "predicted_rays: " << r->predicted_rays << "\n"
                << "actual_rays:\n"
                << ray_lines(r->actual_rays, "  ");
    } else {
      std::cout << "no direct sum: the spans share no line inside both cones\n";
    }
    return 0;
  }

  if (bip->parsed()) {
    std::cout << text_of(bipyramid(dim));
    return 0;
  }

  if (wit->parsed()) {
    const InstanceFile f1 = load(file1);
    const InstanceFile f2 = load(file2);
    const auto w = ci_witness(f1.generators, f2.generators);
    if (json) {
      Json j;
      j["witness"] = w ? json_of(*w) : Json(nullptr);
      std::cout << canonical_dump(j);
    } else if (w) {
      std::cout << "mu: " << w->mu << "\ntau: " << w->tau << "\ng: " << w->g << "\noutput:\n"
                << text_of(w->A_out);
    } else {
      std::cout << "no witness: neither sign of the shared generator lies in both cones\n";
    }
    return 0;
  }

  if (rnd->parsed()) {
    const GenMode m = mode == "gluing" ? GenMode::Gluing : GenMode::SGluing;
    std::cout << text_of(random_ci_instance(seed, dim, steps, m));
    return 0;
  }

  if (orc->parsed()) {
    const InstanceFile f = load(file1);
    OracleBudget b;
    b.max_steps = opt.budget;
    const OracleReport rep = is_ci_oracle(f.generators, b);
    if (json) {
      std::cout << canonical_dump(json_of(rep));
    } else {
      std::cout << "mu: " << rep.mu << "\nheight: " << rep.height
                << "\nis_ci: " << (rep.is_ci ? "true" : "false") << "\n";
    }
    return 0;
  }

  return 2;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cicone::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const cicone::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
