// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.
// Each criterion builds a deterministic report string; timings are printed
// separately so criterion 7 can compare reports byte for byte.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "drht/analytic.hpp"
#include "drht/laws.hpp"
#include "oracle.hpp"

using namespace drht;

namespace {

struct Outcome {
  bool pass = true;
  std::string report;
};

std::string show(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "inf"; }

Outcome distance_oracle() {
  Outcome out;
  std::size_t finite = 0, matched = 0;
  std::ostringstream bad;
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto in = generate_instance(mix_seed(1'000'000 + i), {1, 5}, {1, 6});
    const Rational s = max(in.lip_f, in.lip_g);
    auto d = homotopic_distance(in.f, in.g, {s, in.r});
    auto ref = oracle::distance(in.f, in.g, s, in.r);
    const bool same = d.finite() ? ref && d.value == *ref : d.kind == DistanceResult::Kind::infinite && !ref;
    const bool cert = verify_distance_certificate(d, in.f, in.g).ok;
    if (same && cert) {
      ++matched;
    } else if (bad.tellp() == 0) {
      bad << " first mismatch at instance " << i << ": " << d.value_string() << " vs " << show(ref);
    }
    finite += ref.has_value();
  }
  out.pass = matched == 100;
  out.report = std::to_string(matched) + "/100 match (" + std::to_string(finite) + " finite)" + bad.str();
  return out;
}

Outcome homotopy_oracle() {
  Outcome out;
  std::size_t matched = 0, found = 0, longest = 0;
  std::ostringstream bad;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto in = generate_instance(mix_seed(2'000'000 + i), {1, 5}, {1, 6});
    const Rational s = max(in.lip_f, in.lip_g);
    auto v = find_homotopy(in.f, in.g, {s, in.r});
    auto ref = oracle::homotopy_length(oracle::matrix(*in.x), oracle::matrix(*in.y), in.f.values(), in.g.values(),
                                       s, in.r);
    bool same = v.kind != HomotopyVerdict::Kind::budget_exceeded && v.found() == ref.has_value();
    if (same && ref) {
      same = v.homotopy->length() == *ref && verify_homotopy(*v.homotopy, in.f, in.g).ok;
      ++found;
      longest = std::max(longest, *ref);
    }
    if (same) {
      ++matched;
    } else if (bad.tellp() == 0) {
      bad << " first mismatch at instance " << i;
    }
  }
  out.pass = matched == 200;
  out.report = std::to_string(matched) + "/200 match (" + std::to_string(found) + " homotopic, longest " +
               std::to_string(longest) + ")" + bad.str();
  return out;
}

Outcome law_suite() {
  Outcome out;
  auto rep = run_suite({}, 200, 1, {}, 4);
  std::size_t min_exercised = 200, violations = 0;
  for (const auto& l : rep.laws) {
    min_exercised = std::min(min_exercised, l.passed + l.counterexamples.size());
    violations += l.counterexamples.size();
    if (!l.ok()) out.report += " [" + l.id + " failed]";
  }
  out.pass = rep.ok() && violations == 0 && min_exercised >= 20;
  out.report = std::to_string(rep.laws.size()) + " laws x 200 trials, " + std::to_string(violations) +
               " violations, least exercised " + std::to_string(min_exercised) + out.report;
  return out;
}

Outcome power_maps() {
  Outcome out;
  struct Case {
    int n, k;
    Rational r;
  };
  std::ostringstream os;
  for (const auto& c : {Case{1, 2, Rational(1, 2)}, Case{2, 3, Rational(1, 5)}, Case{3, 5, Rational(1)}}) {
    auto h = power_map_homotopy(c.n, c.k, c.r, 120);
    const double s = std::max(c.n, c.k);
    auto rep = verify_analytic(h, s, c.r.to_double());
    const std::size_t expect_m = static_cast<std::size_t>(2 * (Rational(2) / c.r).floor() + 1);
    const bool ok = rep.ok && h.m == expect_m && h.frames.size() == h.m + 1;
    out.pass = out.pass && ok;
    char buf[160];
    std::snprintf(buf, sizeof buf, " (%d,%d,%s): m=%zu lip=%.6f step=%.6f %s;", c.n, c.k, c.r.str().c_str(), h.m,
                  rep.max_lipschitz_ratio, rep.max_step, ok ? "ok" : "bad");
    os << buf;
  }
  out.report = "N=120" + os.str();
  return out;
}

Outcome two_hole() {
  Outcome out;
  auto inst = default_two_hole_instance();
  std::vector<Rational> rs;
  for (const auto& r : two_hole_r_values(inst))
    if (r >= Rational(1)) rs.push_back(r);  // below the grid step nothing moves
  auto rows = dr_sweep(inst.f, inst.g, inst.s, rs);
  std::ostringstream os;
  os << "d0=" << inst.d0 << " d1=" << inst.d1 << " s=" << inst.s << " r:got/want";
  for (const auto& row : rows) {
    const std::string want = row.r < inst.d0 ? "2" : row.r < inst.d1 ? "1" : "0";
    const std::string got = row.result.value_string();
    out.pass = out.pass && got == want;
    os << " " << row.r << ":" << got << "/" << want;
  }
  out.report = os.str();
  return out;
}

Outcome small_invariants() {
  Outcome out;
  std::ostringstream os;
  auto cat_check = [&](std::size_t n, std::size_t want) {
    auto x = cycle(n);
    auto res = cat_space(x, 1);
    auto ref = oracle::cat(oracle::matrix(*x), 1);
    bool certs = res.value.finite() && res.value.cover.size() == res.value.witnesses.size();
    for (std::size_t i = 0; certs && i < res.value.cover.size(); ++i) {
      const auto& h = res.value.witnesses[i];
      certs = verify_homotopy(h, inclusion(res.value.cover[i]), h.frame(h.length())).ok &&
              lipschitz_constant(h.frame(h.length())).is_zero();
    }
    const bool ok = res.value.finite() && res.value.value == want && ref == want && certs;
    out.pass = out.pass && ok;
    os << " cat_1(C" << n << ")=" << res.value.value_string() << " oracle=" << show(ref) << (ok ? " ok;" : " bad;");
  };
  cat_check(4, 0);
  cat_check(6, 1);

  auto x = interval(1);
  auto tc = tc_space(x, 1);
  auto by_def = tc_space(x, 1, ProductMetric::l1, Method::by_definition);
  auto ref = oracle::tc(oracle::matrix(*x), 1);
  const auto xx = product(x, x);
  bool certs = verify_distance_certificate(tc.value, projection1(x, xx), projection2(x, xx)).ok;
  for (const auto& p : tc.plans) certs = certs && verify_motion_plan(p, 1).ok;
  for (const auto& p : by_def.plans) certs = certs && verify_motion_plan(p, 1).ok;
  const bool ok = tc.value.finite() && tc.value.value == 0 && by_def.value == tc.value && ref == 0u && certs;
  out.pass = out.pass && ok;
  os << " TC_1(two-point)=" << tc.value.value_string() << " oracle=" << show(ref) << (ok ? " ok" : " bad");
  out.report = os.str().substr(1);
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "distance vs brute force", 300, distance_oracle},
      {2, "homotopy vs explicit graph", 300, homotopy_oracle},
      {3, "law suite", 900, law_suite},
      {4, "power-map homotopies", 10, power_maps},
      {5, "two-hole staircase", 120, two_hole},
      {6, "small invariants", 30, small_invariants},
  };
  bool all = true;
  std::vector<std::string> reports;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.pass && in_time;
    all = all && pass;
    reports.push_back(o.report);
    std::printf("%s criterion %d (%s): %s [%.2f s, limit %.0f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.report.c_str(), secs, c.limit_s, in_time ? "" : ", over time");
    std::fflush(stdout);
  }

  // Criterion 7: rerun every criterion and compare the reports byte for byte.
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t same = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) same += criteria[i].run().report == reports[i];
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool det = same == criteria.size();
  all = all && det;
  std::printf("%s criterion 7 (determinism): %zu/%zu reports identical on rerun [%.2f s]\n", det ? "PASS" : "FAIL",
              same, criteria.size(), secs);
  return all ? 0 : 1;
}
