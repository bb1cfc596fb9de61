#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "omega/catalog.hpp"
#include "omega/errors.hpp"
#include "omega/lanes.hpp"
#include "omega/lattice.hpp"

using namespace omega;

namespace {

Profile prof(const char* s) { return Profile::parse(s); }

const CompRel& rel() {
  static const CompRel r = build_comp_rel();
  return r;
}

const std::vector<ClosedSet>& sets() {
  static const std::vector<ClosedSet> s = enumerate_interval(rel());
  return s;
}

}  // namespace

TEST_CASE("composition relation is total, witnessed and filter-bounded") {
  for (const auto& e : rel().entries()) {
    CHECK(!e.achievable.empty());
    CHECK(e.achievable.subset_of(lemma31_filter(e.p, e.q)));
    CHECK(e.witnesses.size() == static_cast<std::size_t>(e.achievable.size()));
    CHECK(static_cast<int>(e.exclusions.size()) ==
          12 - e.achievable.size());
    for (const auto& x : e.exclusions) CHECK(!x.note.empty());
  }
}

TEST_CASE("a starved search budget fails loudly instead of guessing") {
  CHECK_THROWS_AS(build_comp_rel(1), UnresolvedTriples);
}

TEST_CASE("composition relation spot checks") {
  // Permutations compose to permutations.
  auto perm = prof("c=0,d=0,k=fin");
  CHECK(rel().achievable(perm, perm) == ProfileSet::of({perm}));
  // Doubling then halving is the identity.
  CHECK(rel()
            .achievable(prof("c=0,d=inf,k=fin"), prof("c=inf,d=0,k=fin"))
            .contains(perm));
  // A fat projection followed by doubling turns everything infinite.
  CHECK(rel()
            .achievable(prof("c=inf,d=0,k=inf"), prof("c=0,d=inf,k=fin"))
            .contains(prof("c=inf,d=inf,k=inf")));
}

TEST_CASE("assembled witnesses corroborate the relation empirically") {
  // Every witness pair composes to a map whose windows behave like the
  // claimed product profile.
  for (const auto& e : rel().entries()) {
    for (const auto& w : e.witnesses) {
      auto plan = lanes::solve_plan(e.p, e.q, w.r);
      REQUIRE(plan.has_value());
      auto wp = lanes::assemble(*plan);
      auto h = compose(wp.f, wp.g);
      // The lane product is certified as w.r; the raw composition matches
      // it pointwise.
      CHECK(wp.h.certified()->profile == w.r);
      for (std::uint64_t n = 0; n < 700; ++n) CHECK(h(n) == wp.h(n));
    }
  }
}

TEST_CASE("no catalog composition lands on an excluded product profile") {
  // Empirical pressure on the exclusion side of the relation: whenever a
  // composition of catalog witnesses determines all three classes, the
  // resulting profile must be one the relation claims achievable.
  Schedule sched{{50, 500, 3}, {200, 2000, 3}};
  for (const auto& p : valid_profiles()) {
    for (const auto& q : valid_profiles()) {
      auto achievable = rel().achievable(p, q);
      for (const auto& f : catalog(p)) {
        for (const auto& g : catalog(q)) {
          auto h = compose(f, g);
          std::optional<Profile> found;
          if (h.has_certified())
            found = h.certified()->profile;
          else
            found = estimate_profile(h, sched);
          if (!found) continue;
          INFO(f.id() << " ; " << g.id() << " -> " << found->to_string());
          CHECK(achievable.contains(*found));
        }
      }
    }
  }
}

TEST_CASE("exactly 38 closed sets strictly between the endpoints") {
  int interval = 0, endpoints = 0, unnamed = 0;
  for (const auto& cs : sets()) {
    if (cs.endpoint)
      ++endpoints;
    else
      ++interval;
    if (cs.names.empty()) ++unnamed;
  }
  CHECK(sets().size() == 40);
  CHECK(endpoints == 2);
  CHECK(interval == 38);
  CHECK(unnamed == 0);
  // Every enumerated set matches exactly one canonical name.
  for (const auto& cs : sets()) CHECK(cs.names.size() == 1);
}

TEST_CASE("the base set is closed and the full set is present") {
  bool base_found = false, full_found = false;
  for (const auto& cs : sets()) {
    if (cs.profiles == profile_set(base_name())) base_found = true;
    if (cs.profiles == ProfileSet::all()) full_found = true;
  }
  CHECK(base_found);
  CHECK(full_found);
}

TEST_CASE("hasse diagram covering relations") {
  auto edges = hasse(sets());
  auto index_of = [&](const char* name) {
    auto target = profile_set(SemigroupName::parse(name));
    for (int i = 0; i < static_cast<int>(sets().size()); ++i)
      if (sets()[i].profiles == target) return i;
    return -1;
  };
  int base = index_of("S{1,2,3,4,5}");
  int s1234 = index_of("S{1,2,3,4}");
  int full = index_of("Omega");
  REQUIRE(base >= 0);
  REQUIRE(s1234 >= 0);
  REQUIRE(full >= 0);

  auto has_edge = [&](int a, int b) {
    for (const auto& e : edges)
      if (e.from == a && e.to == b) return true;
    return false;
  };
  CHECK(has_edge(base, s1234));
  CHECK(!has_edge(base, full));  // not a covering pair

  int out_degree = 0;
  for (const auto& e : edges)
    if (e.from == base) ++out_degree;
  CHECK(out_degree == 5);
}

TEST_CASE("maximal_in reproduces the headline lists") {
  auto names_of = [](const std::vector<SemigroupName>& v) {
    std::set<std::string> out;
    for (const auto& n : v) out.insert(n.to_string());
    return out;
  };
  CHECK(names_of(maximal_in(SemigroupName::full(), sets())) ==
        std::set<std::string>{"S1", "S2", "S3", "S4", "S5"});
  CHECK(names_of(maximal_in(SemigroupName::parse("S5"), sets())) ==
        std::set<std::string>{"S{1,5}", "S{2,5}", "S{3,5}", "S{4,5}"});
  CHECK(names_of(maximal_in(SemigroupName::parse("V&S{2,5}"), sets())) ==
        std::set<std::string>{"S{1,2,4,5}"});
  // Redundant spellings resolve through their profile sets: U∩V is the
  // four-fold intersection without S5.
  CHECK(maximal_in(SemigroupName::parse("U&V"), sets()) ==
        maximal_in(SemigroupName::parse("S{1,2,3,4}"), sets()));
}

TEST_CASE("every maximality expectation is reproduced") {
  for (const auto& exp : maximality_expectations()) {
    auto got = maximal_in(exp.name, sets());
    INFO(exp.name.to_string());
    CHECK(got == exp.expected);
    if (exp.statement_erratum) CHECK(!(got == exp.statement_list));
  }
}

TEST_CASE("collapse/defect duality maps the family to itself") {
  // The swap of the collapse and defect classes is an involution of the
  // profiles with finite contraction index (on the others validity breaks
  // the symmetry), and every closed set living inside that subfamily
  // swaps to another closed set.
  auto swap_profile = [](const Profile& p) {
    return Profile{p.d, p.c, p.k};
  };
  std::set<std::uint16_t> masks;
  for (const auto& cs : sets()) masks.insert(cs.profiles.bits());
  int swapped_sets = 0;
  for (const auto& cs : sets()) {
    bool k_finite = true;
    for (const auto& p : cs.profiles.to_vector())
      if (p.k == KClass::Inf) k_finite = false;
    if (!k_finite) continue;
    ProfileSet image;
    for (const auto& p : cs.profiles.to_vector())
      image.insert(swap_profile(p));
    ++swapped_sets;
    CHECK(masks.count(image.bits()) == 1);
  }
  CHECK(swapped_sets >= 15);

  // At the level of names the duality is the relabeling 1<->2, 3<->4,
  // U<->V; it permutes the family in scope.
  auto swap_name = [](const SemigroupName& n) {
    SemigroupName out;
    for (Atom a : n.atoms()) {
      switch (a) {
        case Atom::S1:
          out = out.with(Atom::S2);
          break;
        case Atom::S2:
          out = out.with(Atom::S1);
          break;
        case Atom::S3:
          out = out.with(Atom::S4);
          break;
        case Atom::S4:
          out = out.with(Atom::S3);
          break;
        case Atom::S5:
          out = out.with(Atom::S5);
          break;
        case Atom::U:
          out = out.with(Atom::V);
          break;
        case Atom::V:
          out = out.with(Atom::U);
          break;
      }
    }
    return out;
  };
  std::set<std::string> in_scope;
  for (const auto& n : names_in_scope()) in_scope.insert(n.to_string());
  for (const auto& n : names_in_scope())
    CHECK(in_scope.count(swap_name(n).to_string()) == 1);
}

TEST_CASE("serialized relation matches the committed data file") {
  std::ifstream in(std::string(OMEGA_REPO_DATA_DIR) + "/comp_rel.json",
                   std::ios::binary);
  REQUIRE_MESSAGE(bool(in), "data/comp_rel.json missing; regenerate with "
                            "omega-gendata");
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == rel().to_json());
}

TEST_CASE("lattice exports are deterministic and well-formed") {
  auto edges = hasse(sets());
  auto j1 = lattice_to_json(sets(), edges);
  auto j2 = lattice_to_json(sets(), edges);
  CHECK(j1 == j2);
  CHECK(j1.find("\"interval_count\": 38") != std::string::npos);
  auto dot = lattice_to_dot(sets(), edges);
  CHECK(dot.find("digraph interval") == 0);
  CHECK(dot.find("S{1,2,3,4,5}") != std::string::npos);
}
