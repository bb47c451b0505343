// drht: command-line front end for the discrete homotopy library.
//
// Exit codes: 0 success / holds, 1 negative verdict or law violation,
// 2 invalid input, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "drht/analytic.hpp"
#include "drht/io.hpp"
#include "drht/laws.hpp"

using namespace drht;

namespace {

constexpr int kOk = 0, kNegative = 1, kInvalid = 2, kBudget = 3;

struct Common {
  std::string out;
  std::string format = "json";
  std::size_t budget = kDefaultBudget;
  std::size_t workers = 1;
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Error("cannot write " + c.out);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<Rational> parse_r_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_scalar(item));
  if (out.empty()) throw Error("empty --r-list");
  return out;
}

std::vector<Rect> parse_holes(const std::string& s) {
  std::vector<Rect> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    Rect r{};
    if (std::sscanf(item.c_str(), "%d,%d,%d,%d", &r.x0, &r.y0, &r.x1, &r.y1) != 4)
      throw Error("hole must be x0,y0,x1,y1: " + item);
    out.push_back(r);
  }
  return out;
}

Space read_space(const std::string& path) {
  const std::filesystem::path p(path);
  return space_ref(read_json_file(p), p.parent_path());
}

json sweep_json(const std::vector<SweepRow>& rows) {
  json a = json::array();
  for (const auto& row : rows) a.push_back({{"r", scalar_json(row.r)}, {"value", value_json(row.result)}});
  return a;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string s = "r,value\n";
  for (const auto& row : rows) s += row.r.str() + "," + row.result.value_string() + "\n";
  return s;
}

int distance_code(const DistanceResult& d) {
  switch (d.kind) {
    case DistanceResult::Kind::finite: return kOk;
    case DistanceResult::Kind::infinite: return kNegative;
    case DistanceResult::Kind::bounded: return kBudget;
  }
  return kInvalid;
}

json invariant_json(const InvariantResult& res, const std::string& what, const Rational& r) {
  json cover = json::array();
  for (const auto& u : res.value.cover) {
    json pts = json::array();
    for (auto p : u.points) pts.push_back(u.space->label(p));
    cover.push_back(std::move(pts));
  }
  json j{{"kind", what}, {"method", to_string(res.method)}, {"r", scalar_json(r)}, {"value", value_json(res.value)},
         {"cover", std::move(cover)}};
  if (what == "cat") {
    json wit = json::array();
    for (const auto& h : res.value.witnesses) wit.push_back(frames_json(h));
    j["witnesses"] = std::move(wit);  // frames on each cover set, ending at a constant
  }
  if (!res.value.reason.empty()) j["reason"] = res.value.reason;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete (s,r)-homotopy, homotopic distance, category and topological complexity"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--out", c.out, "Write the report here instead of stdout");
  auto* format_opt = app.add_option("--format", c.format, "json or csv (sweep defaults to csv)")
                         ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--budget", c.budget, "Visited-frame budget per homotopy search")->capture_default_str();
  app.add_option("--workers", c.workers, "Worker threads for the law suite")->capture_default_str();

  std::string s_str, r_str = "1", r_list, metric_str = "l1", method_str;
  std::string f_path, g_path, space_path, map_path;

  // validate
  auto* validate = app.add_subcommand("validate", "Check a space, map, homotopy, distance certificate or motion plan");
  std::vector<std::string> files;
  validate->add_option("files", files, "JSON files")->required();

  // generate
  auto* generate = app.add_subcommand("generate", "Write a generated space as JSON");
  std::string kind;
  std::size_t gen_m = 4, gen_n = 6, points = 5;
  int gw = 5, gh = 5;
  std::string unit = "1", cycle_metric = "geodesic", holes;
  std::uint64_t seed = 1;
  generate->add_option("kind", kind, "interval | cycle | grid | two-hole | random")
      ->required()
      ->check(CLI::IsMember({"interval", "cycle", "grid", "two-hole", "random"}));
  generate->add_option("--m", gen_m, "interval: points 0..m");
  generate->add_option("--n", gen_n, "cycle: number of points");
  generate->add_option("--cycle-metric", cycle_metric, "geodesic | chord")->check(CLI::IsMember({"geodesic", "chord"}));
  generate->add_option("--width", gw, "grid width");
  generate->add_option("--height", gh, "grid height");
  generate->add_option("--unit", unit, "grid unit length");
  generate->add_option("--holes", holes, "two-hole: \"x0,y0,x1,y1;x0,y0,x1,y1\"");
  generate->add_option("--points", points, "random: number of points");
  generate->add_option("--seed", seed, "random: seed");

  // homotopy / distance / sweep
  auto* homotopy = app.add_subcommand("homotopy", "Decide f ~(s,r) g");
  auto* distance = app.add_subcommand("distance", "Compute D_r(f, g) with a certificate");
  auto* sweep = app.add_subcommand("sweep", "D_r(f, g) over ascending r (CSV r,value)");
  for (auto* sc : {homotopy, distance, sweep}) {
    sc->add_option("--f", f_path, "map file for f")->required();
    sc->add_option("--g", g_path, "map file for g")->required();
    sc->add_option("--s", s_str, "Lipschitz bound (default: max Lip(f), Lip(g))");
  }
  homotopy->add_option("--r", r_str, "step bound")->required();
  distance->add_option("--r", r_str, "step bound")->required();
  sweep->add_option("--r-list", r_list, "comma-separated ascending r values")->required();

  // cat / tc
  auto* cat = app.add_subcommand("cat", "cat_r of a space (--space) or of a map (--map)");
  cat->add_option("--space", space_path, "space file");
  cat->add_option("--map", map_path, "map file");
  cat->add_option("--s", s_str, "map: Lipschitz bound (default Lip(f))");
  cat->add_option("--r", r_str, "step bound")->required();
  cat->add_option("--method", method_str, "by-definition | via-distance")
      ->check(CLI::IsMember({"by-definition", "via-distance"}));
  auto* tc = app.add_subcommand("tc", "TC_r of a space with motion plans");
  tc->add_option("--space", space_path, "space file")->required();
  tc->add_option("--r", r_str, "step bound")->required();
  tc->add_option("--product-metric", metric_str, "l1 | max")->check(CLI::IsMember({"l1", "max"}));
  tc->add_option("--method", method_str, "by-definition | via-distance")
      ->check(CLI::IsMember({"by-definition", "via-distance"}));

  // laws
  auto* laws = app.add_subcommand("laws", "Run the law suite");
  std::vector<std::string> only;
  std::size_t trials = 200;
  std::uint64_t law_seed = 1;
  std::size_t law_budget = 100'000;
  laws->add_option("--only", only, "law ids")->delimiter(',');
  laws->add_option("--trials", trials, "trials per law")->capture_default_str();
  laws->add_option("--seed", law_seed, "suite seed")->capture_default_str();
  laws->add_option("--law-budget", law_budget, "budget per search inside a trial")->capture_default_str();
  laws->add_option("--product-metric", metric_str, "l1 | max")->check(CLI::IsMember({"l1", "max"}));
  bool list_laws = false;
  laws->add_flag("--list", list_laws, "print law ids and statements");

  // example
  auto* example = app.add_subcommand("example", "Worked examples: circle | two-hole");
  std::string which;
  int pn = 1, pk = 2;
  std::size_t samples = 120, path_samples = 3;
  example->add_option("which", which, "circle | two-hole")->required()->check(CLI::IsMember({"circle", "two-hole"}));
  example->add_option("--n", pn, "circle: exponent of f");
  example->add_option("--k", pk, "circle: exponent of g");
  example->add_option("--r", r_str, "circle: step bound");
  example->add_option("--samples", samples, "circle: sample points");
  example->add_option("--path-samples", path_samples, "two-hole: points of the path domain");
  example->add_option("--r-list", r_list, "two-hole: r values (default straddles the measured thresholds)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*validate) {
      int code = kOk;
      std::string text;
      for (const auto& file : files) {
        const std::filesystem::path p(file);
        auto out = validate_json(read_json_file(p), p.parent_path());
        text += file + ": " + out.kind + (out.report.ok ? " ok" : " INVALID") + "\n";
        for (const auto& v : out.report.violations) text += "  " + v + "\n";
        if (!out.report.ok) code = kNegative;
      }
      emit(c, text);
      return code;
    }

    if (*generate) {
      Space x;
      if (kind == "interval") x = interval(gen_m);
      else if (kind == "cycle") x = cycle(gen_n, cycle_metric == "chord" ? CycleMetric::chord : CycleMetric::geodesic);
      else if (kind == "grid") x = grid(gw, gh, parse_scalar(unit));
      else if (kind == "two-hole") {
        auto hs = parse_holes(holes);
        if (hs.size() != 2) throw Error("two-hole needs exactly two --holes");
        x = holed_grid(gw, gh, hs);
      } else {
        Rng rng(seed);
        x = random_space(rng, points, "p");
      }
      emit(c, dump(to_json(*x)));
      return kOk;
    }

    if (*homotopy || *distance || *sweep) {
      auto f = read_map(f_path), g = read_map(g_path);
      const Rational s = s_str.empty() ? default_s(f, g) : parse_scalar(s_str);
      if (*homotopy) {
        const ScaleParams params{s, parse_scalar(r_str)};
        auto v = find_homotopy(f, g, params, c.budget);
        json j{{"verdict", to_string(v.kind)}, {"states", v.states}, {"s", scalar_json(s)}, {"r", scalar_json(params.r)}};
        if (v.homotopy) {
          j["length"] = v.homotopy->length();
          j["witness"] = to_json(*v.homotopy);
        }
        emit(c, dump(j));
        return v.found() ? kOk : v.kind == HomotopyVerdict::Kind::not_homotopic ? kNegative : kBudget;
      }
      if (*distance) {
        const ScaleParams params{s, parse_scalar(r_str)};
        auto d = homotopic_distance(f, g, params, c.budget);
        emit(c, dump(to_json(d, f, g, params)));
        return distance_code(d);
      }
      auto rows = dr_sweep(f, g, s, parse_r_list(r_list), c.budget);
      emit(c, format_opt->count() && c.format == "json" ? dump(sweep_json(rows)) : sweep_csv(rows));
      return kOk;
    }

    if (*cat) {
      const Rational r = parse_scalar(r_str);
      const Method m = method_str == "via-distance" ? Method::via_distance : Method::by_definition;
      if (space_path.empty() == map_path.empty()) throw Error("cat needs exactly one of --space or --map");
      InvariantResult res;
      if (!space_path.empty()) {
        res = cat_space(read_space(space_path), r, m, c.budget);
      } else {
        auto f = read_map(map_path);
        std::optional<Rational> s;
        if (!s_str.empty()) s = parse_scalar(s_str);
        res = cat_map(f, r, s, m, c.budget);
      }
      emit(c, dump(invariant_json(res, "cat", r)));
      return distance_code(res.value);
    }

    if (*tc) {
      const Rational r = parse_scalar(r_str);
      const Method m = method_str == "by-definition" ? Method::by_definition : Method::via_distance;
      const ProductMetric metric = parse_product_metric(metric_str);
      auto res = tc_space(read_space(space_path), r, metric, m, c.budget);
      json j = invariant_json(res, "tc", r);
      j["product_metric"] = to_string(metric);
      json plans = json::array();
      for (const auto& p : res.plans) plans.push_back(to_json(p, r, metric));
      j["plans"] = std::move(plans);
      emit(c, dump(j));
      return distance_code(res.value);
    }

    if (*laws) {
      if (list_laws) {
        std::string text;
        for (const auto& l : all_laws()) text += l.id + "  " + l.statement + "\n";
        emit(c, text);
        return kOk;
      }
      LawConfig cfg{law_budget, parse_product_metric(metric_str)};
      auto rep = run_suite(only, trials, law_seed, cfg, c.workers);
      if (c.format == "csv") {
        std::string text = "law,tried,passed,skipped,counterexamples,ok\n";
        for (const auto& l : rep.laws)
          text += l.id + "," + std::to_string(l.tried) + "," + std::to_string(l.passed) + "," +
                  std::to_string(l.skipped) + "," + std::to_string(l.counterexamples.size()) + "," +
                  (l.ok() ? "1" : "0") + "\n";
        emit(c, text);
      } else {
        json a = json::array();
        for (const auto& l : rep.laws) {
          json ce = json::array();
          for (const auto& x : l.counterexamples) ce.push_back({{"trial_seed", x.trial_seed}, {"detail", x.detail}});
          a.push_back({{"law", l.id}, {"tried", l.tried}, {"passed", l.passed}, {"skipped", l.skipped},
                       {"exercised_enough", l.exercised_enough}, {"counterexamples", std::move(ce)}});
        }
        emit(c, dump({{"seed", law_seed}, {"trials", trials}, {"ok", rep.ok()}, {"laws", std::move(a)}}));
      }
      return rep.ok() ? kOk : kNegative;
    }

    if (*example) {
      if (which == "circle") {
        const Rational r = parse_scalar(r_str);
        auto h = power_map_homotopy(pn, pk, r, samples);
        auto rep = verify_analytic(h, std::max(pn, pk), r.to_double());
        std::ostringstream os;
        os << "n=" << pn << " k=" << pk << " r=" << r.str() << " samples=" << samples << " m=" << h.m << "\n"
           << "max_lipschitz_ratio=" << rep.max_lipschitz_ratio << " (s=" << rep.s << ")\n"
           << "max_step=" << rep.max_step << " (r=" << rep.r << ")\n"
           << (rep.ok ? "pass" : "FAIL") << "\n";
        for (const auto& v : rep.violations) os << "  " << v << "\n";
        emit(c, os.str());
        return rep.ok ? kOk : kNegative;
      }
      auto inst = default_two_hole_instance(path_samples);
      auto rs = r_list.empty() ? two_hole_r_values(inst) : parse_r_list(r_list);
      auto rows = dr_sweep(inst.f, inst.g, inst.s, rs, c.budget);
      std::string text = "# d0=" + inst.d0.str() + " d1=" + inst.d1.str() + " s=" + inst.s.str() + "\n" + sweep_csv(rows);
      emit(c, text);
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "drht: " << e.what() << "\n";
    return kInvalid;
  } catch (const json::exception& e) {
    std::cerr << "drht: malformed JSON: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
