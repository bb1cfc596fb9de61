// Acceptance suite: one line per criterion, exact tolerances, nonzero exit
// on any failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "omega/catalog.hpp"
#include "omega/construct.hpp"
#include "omega/errors.hpp"
#include "omega/lanes.hpp"
#include "omega/lattice.hpp"
#include "omega/membership.hpp"

using namespace omega;

namespace {

int g_failures = 0;

void report(const char* criterion, bool pass, const std::string& detail) {
  std::printf("%s %s - %s\n", criterion, pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::uint64_t suite_seed() {
  if (const char* env = std::getenv("OMEGA_LATTICE_SEED"); env && *env)
    return std::stoull(env);
  return 0x5eed0123;
}

// One pass over [0,B): per-value hit counts below N plus c_obs, reused by
// the soundness checks.
struct WindowPass {
  std::vector<std::uint64_t> hits;
  std::uint64_t c_obs = 0;
};

WindowPass window_pass(const Transformation& f, std::uint64_t N,
                       std::uint64_t B) {
  WindowPass wp;
  wp.hits.assign(N, 0);
  std::set<std::uint64_t> distinct;
  for (std::uint64_t n = 0; n < B; ++n) {
    std::uint64_t v = f(n);
    if (v < N) ++wp.hits[v];
    if (n < N) distinct.insert(v);
  }
  wp.c_obs = N - distinct.size();
  return wp;
}

bool strictly_grows(const std::vector<std::uint64_t>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] >= v[i + 1]) return false;
  return true;
}

// Class-level consequences of the composition inequalities for a pair
// with certified exact parameters, checked against window observations of
// the product at N = 1600.
int check_pair_consequences(const Transformation& f, const Transformation& g,
                            std::string& first_bad) {
  int violations = 0;
  auto fail = [&](const std::string& what) {
    ++violations;
    if (first_bad.empty())
      first_bad = f.id() + " ; " + g.id() + ": " + what;
  };

  const Profile p = f.certified()->profile;
  const Profile q = g.certified()->profile;
  auto h = compose(f, g);

  const Schedule& sched = default_schedule();
  std::vector<std::uint64_t> c_series, d_series;
  WindowPass last;
  for (const auto& w : sched) {
    auto wp = window_pass(h, w.N, w.B);
    c_series.push_back(wp.c_obs);
    std::uint64_t d_obs = 0;
    for (auto hcount : wp.hits)
      if (hcount == 0) ++d_obs;
    d_series.push_back(d_obs);
    last = std::move(wp);
  }

  // c(h) >= c(f) holds pointwise on every window.
  auto fpass = window_pass(f, 1600, 16000);
  if (last.c_obs < fpass.c_obs) fail("window collapse shrank");

  // c(h) <= c(f) + c(g) when finite.
  ExtNat csum = f.exact_c() + g.exact_c();
  if (csum.is_finite() && ExtNat(last.c_obs) > csum)
    fail("window collapse exceeds c(f)+c(g)");

  // Values outside im(g) stay outside im(fg).
  if (g.caps().in_image) {
    for (std::uint64_t m = 0; m < 1600; ++m)
      if (!g.caps().in_image(m) && last.hits[m] != 0) {
        fail("product hit a value outside im(g)");
        break;
      }
  }

  // Lemma parts (iii) and (iv): the forced-infinite directions must keep
  // growing across the schedule.
  if (p.d == CdClass::Inf && q.c != CdClass::Inf && !strictly_grows(d_series))
    fail("d(fg) should be infinite but the proxy stalled");
  if (p.d != CdClass::Inf && q.c == CdClass::Inf && !strictly_grows(c_series))
    fail("c(fg) should be infinite but the proxy stalled");

  // The estimated classes must fit some filter survivor.
  auto est = estimate_classes(h, sched);
  if (!estimate_consistent_with(est, lemma31_filter(p, q)))
    fail("window-certified classes fall outside the filter");

  return violations;
}

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = true;
  try {
    auto rel = build_comp_rel();
    auto sets = enumerate_interval(rel);
    int interval = 0, unnamed = 0, multi = 0;
    for (const auto& cs : sets) {
      if (!cs.endpoint) ++interval;
      if (cs.names.empty()) ++unnamed;
      if (cs.names.size() > 1) ++multi;
    }
    double dt = seconds_since(t0);
    pass = interval == 38 && unnamed == 0 && multi == 0 &&
           sets.size() == 40 && dt < 5.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "38 expected strictly-between sets, got %d; unnamed %d; "
                  "multiply-named %d; %.2fs",
                  interval, unnamed, multi, dt);
    detail = buf;
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report("AC1", pass, detail);
}

void criterion2() {
  std::string detail;
  bool pass = true;
  try {
    auto rel = build_comp_rel();
    auto sets = enumerate_interval(rel);
    int checked = 0;
    std::string bad;
    bool erratum_flagged = false;
    for (const auto& exp : maximality_expectations()) {
      auto got = maximal_in(exp.name, sets);
      ++checked;
      if (!(got == exp.expected) && bad.empty()) bad = exp.name.to_string();
      if (exp.statement_erratum) erratum_flagged = true;
    }
    // The base intersection is covered by exactly the five four-fold
    // intersections.
    auto edges = hasse(sets);
    int base_idx = -1;
    for (int i = 0; i < static_cast<int>(sets.size()); ++i)
      if (sets[i].profiles == profile_set(base_name())) base_idx = i;
    int base_covers = 0;
    for (const auto& e : edges)
      if (e.from == base_idx) ++base_covers;
    pass = bad.empty() && checked == 39 && base_covers == 5 &&
           erratum_flagged;
    detail = bad.empty()
                 ? "all 39 maximality lists reproduced (S2 statement erratum "
                   "flagged, proof-implied list used); base covered by 5"
                 : "first mismatch at " + bad;
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report("AC2", pass, detail);
}

void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = true;
  try {
    auto rep = table_crosscheck();
    double dt = seconds_since(t0);
    pass = rep.interval_rows == 38 && rep.mismatches == 0 && dt < 1.0;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "%d interval rows, %d mismatches, %.3fs", rep.interval_rows,
                  rep.mismatches, dt);
    detail = buf;
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report("AC3", pass, detail);
}

void criterion4() {
  std::string detail;
  bool pass = true;
  try {
    int violations = 0;
    std::string first_bad;

    // All 144 ordered pairs of mandatory witnesses.
    const auto& mand = mandatory_witnesses();
    for (const auto& f : mand)
      for (const auto& g : mand)
        violations += check_pair_consequences(f, g, first_bad);

    // 1000 seeded composite pairs drawn from the witness plans of the
    // composition relation: their profiles are exact by construction.
    std::mt19937_64 rng(suite_seed());
    std::vector<std::vector<int>> plans;
    for (const auto& p : valid_profiles())
      for (const auto& q : valid_profiles())
        for (const auto& r : comp_achievable(p, q).to_vector()) {
          auto plan = lanes::solve_plan(p, q, r);
          if (plan && plan->size() > 1) plans.push_back(*plan);
        }
    for (int i = 0; i < 1000; ++i) {
      const auto& plan1 = plans[rng() % plans.size()];
      const auto& plan2 = plans[rng() % plans.size()];
      auto w1 = lanes::assemble(plan1);
      auto w2 = lanes::assemble(plan2);
      violations += check_pair_consequences(w1.h, w2.h, first_bad);
    }

    pass = violations == 0;
    detail = violations == 0
                 ? "144 catalog pairs + 1000 seeded composite pairs, 0 "
                   "violations at N=1600"
                 : std::to_string(violations) + " violations; first: " +
                       first_bad;
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report("AC4", pass, detail);
}

struct LemmaInstance {
  LemmaFamily family;
  LemmaPart part;
  const char* u;
  const char* v;  // may be nullptr
  const char* t;  // may be nullptr
  const char* f;
};

void criterion5() {
  using F = LemmaFamily;
  using P = LemmaPart;
  static const std::vector<LemmaInstance> instances = {
      {F::Tech, P::I, "merge01", nullptr, nullptr, "merge012"},
      {F::Tech, P::I, "merge012", nullptr, nullptr, "merge01"},
      {F::Tech, P::I, "merge01", nullptr, nullptr, "merge23s"},
      {F::Tech, P::II, "double", "pred", nullptr, "pred2"},
      {F::Tech, P::II, "merge01_double", "halve", nullptr, "pred"},
      {F::Tech, P::II, "double", "halve", nullptr, "pred2"},
      {F::Tech, P::III, "double", nullptr, nullptr, "merge01_double"},
      {F::Tech, P::III, "oddmap", nullptr, nullptr, "merge01_double"},
      {F::Tech, P::III, "quad", nullptr, nullptr, "double"},
      {F::Tech, P::IV, "succ", "merge01_double", nullptr, "merge01_double"},
      {F::Tech, P::IV, "succ2", "merge01_double", nullptr, "double"},
      {F::Tech, P::IV, "oddmap", "double", nullptr, "merge01_double"},
      {F::Tech2, P::I, "succ", nullptr, nullptr, "succ2"},
      {F::Tech2, P::I, "merge01", nullptr, nullptr, "merge23s"},
      {F::Tech2, P::I, "cproj_shift", nullptr, nullptr, "halve_shift"},
      {F::Tech2, P::II, "halve", "double", nullptr, "succ"},
      {F::Tech2, P::II, "halve_shift", "double", nullptr, "succ2"},
      {F::Tech2, P::II, "halve", "succ", nullptr, "succ2"},
      {F::Tech2, P::III, "halve", nullptr, nullptr, "halve_shift"},
      {F::Tech2, P::III, "fold", nullptr, nullptr, "quarter"},
      {F::Tech2, P::III, "sink0", nullptr, nullptr, "halve_shift"},
      {F::Tech2, P::IV, "pred", "halve_shift", nullptr, "quarter"},
      {F::Tech2, P::IV, "pred", "halve", nullptr, "halve_shift"},
      {F::Tech2, P::IV, "halve", "halve_shift", nullptr, "quarter"},
      {F::TechK, P::I, "cproj", nullptr, nullptr, "cproj_double"},
      {F::TechK, P::I, "cproj_double", nullptr, nullptr,
       "cproj_double_shift"},
      {F::TechK, P::I, "cproj_even", nullptr, nullptr, "cproj_double"},
      {F::TechK, P::II, "cproj_double", "halve_shift", nullptr, "cproj_shift"},
      {F::TechK, P::II, "cproj_shift", "halve_shift", nullptr, "cproj_shift"},
      {F::TechK, P::II, "cproj_double", "halve_shift", nullptr,
       "cproj_double"},
      {F::TechK, P::III, "cproj_double", "halve", nullptr, "cproj"},
      {F::TechK, P::III, "cproj", "fold", nullptr, "cproj_shift"},
      {F::TechK, P::III, "cproj_even", "halve", nullptr, "cproj_double"},
      {F::TechK, P::IV, "cproj_double", "halve_shift", "pred", "cproj"},
      {F::TechK, P::IV, "cproj", "halve_shift", "halve", "cproj_shift"},
      {F::TechK, P::IV, "cproj_even", "halve", "pred", "cproj_double"},
  };

  std::string detail;
  bool pass = true;
  try {
    int count[3][4] = {};
    int total = 0, ok = 0;
    std::string first_bad;
    for (const auto& inst : instances) {
      std::optional<Transformation> v, t;
      if (inst.v) v = witness(inst.v);
      if (inst.t) t = witness(inst.t);
      auto cert = lemma_dispatch(inst.family, inst.part, witness(inst.u), v,
                                 t, witness(inst.f));
      bool good = verify_certificate(cert, 1000).ok &&
                  verify_certificate(cert, 4000).ok;
      ++total;
      if (good) {
        ++ok;
        ++count[static_cast<int>(inst.family)][static_cast<int>(inst.part)];
      } else if (first_bad.empty()) {
        first_bad = cert.lemma_tag + " on " + inst.f;
      }
    }
    bool coverage = true;
    for (int fam = 0; fam < 3; ++fam)
      for (int part = 0; part < 4; ++part)
        if (count[fam][part] < 3) coverage = false;
    pass = (ok == total) && coverage;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%d/%d certificates verified at N=1000 and N=4000; >=3 "
                  "instances in each of the 12 parts%s%s",
                  ok, total, first_bad.empty() ? "" : "; first failure: ",
                  first_bad.c_str());
    detail = buf;
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report("AC5", pass, detail);
}

void criterion6() {
  std::string detail;
  bool pass = true;
  try {
    std::mt19937_64 rng(suite_seed() ^ 0x9e3779b97f4a7c15ull);
    int violations = 0;
    std::string first_bad;
    for (const auto& name : names_in_scope()) {
      auto set = profile_set(name);
      std::vector<Transformation> members;
      for (const auto& t : all_witnesses())
        if (set.contains(t.certified()->profile)) members.push_back(t);
      for (int trial = 0; trial < 200; ++trial) {
        const auto& f = members[rng() % members.size()];
        const auto& g = members[rng() % members.size()];
        auto h = compose(f, g);
        bool inside;
        if (h.has_certified()) {
          inside = set.contains(h.certified()->profile);
        } else {
          auto est = estimate_classes(h, default_schedule());
          inside = estimate_consistent_with(est, set);
        }
        if (!inside) {
          ++violations;
          if (first_bad.empty())
            first_bad = name.to_string() + ": " + f.id() + " ; " + g.id();
        }
      }
    }
    pass = violations == 0;
    detail = violations == 0
                 ? "40 named sets x 200 seeded member pairs, 0 violations"
                 : std::to_string(violations) + " violations; first: " +
                       first_bad;
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report("AC6", pass, detail);
}

void criterion7() {
  std::string detail;
  bool pass = true;
  try {
    std::set<int> realized;
    std::string bad;
    for (const auto& p : valid_profiles()) {
      auto ws = catalog(p);
      if (ws.empty()) {
        bad = "no witness for " + p.to_string();
        break;
      }
      bool any = false;
      for (const auto& w : ws)
        if (consistency_check(w).passed) any = true;
      if (!any) {
        bad = "no consistent witness for " + p.to_string();
        break;
      }
      realized.insert(p.index());
    }
    bool rejected = false;
    try {
      classify(ExtNat(3), ExtNat(0), ExtNat::infinity());
    } catch (const InvalidTriple&) {
      rejected = true;
    }
    pass = bad.empty() && realized.size() == 12 && rejected;
    detail = bad.empty()
                 ? "12/12 profiles realized with consistent witnesses; "
                   "invalid triple (k=inf, c<inf) rejected"
                 : bad;
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report("AC7", pass, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
