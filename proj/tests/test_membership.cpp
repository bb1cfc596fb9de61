#include <doctest.h>

#include <random>
#include <set>

#include "omega/catalog.hpp"
#include "omega/errors.hpp"
#include "omega/membership.hpp"

using namespace omega;

namespace {

std::uint64_t test_seed() {
  if (const char* env = std::getenv("OMEGA_LATTICE_SEED"); env && *env)
    return std::stoull(env);
  return 0x5eed0123;
}

Profile prof(const char* s) { return Profile::parse(s); }

}  // namespace

TEST_CASE("semigroup names parse and print canonically") {
  CHECK(SemigroupName::parse("Omega").is_full());
  CHECK(SemigroupName::parse("S3").to_string() == "S3");
  CHECK(SemigroupName::parse("S{3}").to_string() == "S3");
  CHECK(SemigroupName::parse("S{1,3}").to_string() == "S{1,3}");
  CHECK(SemigroupName::parse("U&S{1,5}").to_string() == "U&S{1,5}");
  CHECK(SemigroupName::parse("V&S2").to_string() == "V&S2");
  CHECK_THROWS_AS(SemigroupName::parse("S6"), UnknownName);
  CHECK_THROWS_AS(SemigroupName::parse("W"), UnknownName);
}

TEST_CASE("atom semantics") {
  CHECK(atom_profiles(Atom::S5).size() == 9);
  for (const auto& p : atom_profiles(Atom::S5).to_vector())
    CHECK(p.k == KClass::Fin);

  // U: infinite defect, or finite positive collapse, or a bijection.
  auto u = atom_profiles(Atom::U);
  CHECK(u.contains(prof("c=0,d=0,k=fin")));
  CHECK(u.contains(prof("c=0,d=inf,k=fin")));
  CHECK(u.contains(prof("c=fin,d=0,k=fin")));
  CHECK(u.contains(prof("c=inf,d=inf,k=inf")));
  CHECK(!u.contains(prof("c=inf,d=0,k=fin")));
  CHECK(u.size() == 7);

  // S1 is an intersection-shaped condition: c>0 and d=0 fails it.
  CHECK(!atom_profiles(Atom::S1).contains(prof("c=fin,d=0,k=fin")));
}

TEST_CASE("profile sets of intersections") {
  CHECK(profile_set(SemigroupName::full()).size() == 12);
  auto base = profile_set(base_name());
  CHECK(base.size() == 3);
  CHECK(base.contains(prof("c=0,d=0,k=fin")));
  CHECK(base.contains(prof("c=fin,d=fin,k=fin")));
  CHECK(base.contains(prof("c=inf,d=inf,k=fin")));

  // V∩S{2,5}: infinite collapse with k finite, or both parameters finite
  // positive, or a bijection.
  auto vs25 = profile_set(SemigroupName::parse("V&S{2,5}"));
  CHECK(vs25 ==
        ProfileSet::of({prof("c=0,d=0,k=fin"), prof("c=fin,d=fin,k=fin"),
                        prof("c=inf,d=0,k=fin"), prof("c=inf,d=fin,k=fin"),
                        prof("c=inf,d=inf,k=fin")}));
}

TEST_CASE("monotonicity: adding an atom never grows the profile set") {
  for (const auto& n : names_in_scope()) {
    auto s = profile_set(n);
    for (int a = 0; a < 7; ++a) {
      auto bigger = n.with(static_cast<Atom>(a));
      CHECK(profile_set(bigger).subset_of(s));
    }
  }
}

TEST_CASE("semantic equality collapses redundant spellings") {
  // U is inside S3, so adding S3 changes nothing.
  auto u = SemigroupName::parse("U");
  auto us3 = SemigroupName::parse("U&S3");
  CHECK(semantically_equal(u, us3));
  CHECK(!(u == us3));
  // U∩V coincides with the four-fold intersection without S5.
  CHECK(semantically_equal(SemigroupName::parse("U&V"),
                           SemigroupName::parse("S{1,2,3,4}")));
}

TEST_CASE("the 40 names in scope have pairwise distinct profile sets") {
  const auto& names = names_in_scope();
  CHECK(names.size() == 40);
  std::set<std::uint16_t> masks;
  for (const auto& n : names) masks.insert(profile_set(n).bits());
  CHECK(masks.size() == 40);
}

TEST_CASE("membership of witnesses") {
  CHECK(contains(SemigroupName::parse("S3"), witness("double")));
  // succ has c=0 and d=1: it fails both disjuncts of the S{1,2} row.
  CHECK(!contains(SemigroupName::parse("S{1,2}"), witness("succ")));
  for (const auto& n : names_in_scope())
    CHECK(contains(n, witness("id")));
  Transformation bare("bare", "no certificate",
                      [](std::uint64_t n) { return n; });
  CHECK_THROWS_AS(contains(SemigroupName::parse("S1"), bare),
                  CapabilityMissing);
}

TEST_CASE("description parser handles the table's condition shapes") {
  CHECK(parse_description("sym") ==
        ProfileSet::of({prof("c=0,d=0,k=fin")}));
  CHECK(parse_description("k<inf").size() == 9);
  CHECK(parse_description("( c=inf & d=inf ) or ( 0<c<inf & 0<d<inf ) or sym")
            .size() == 4);
  CHECK_THROWS_AS(parse_description("c=banana"), ParseError);
  CHECK_THROWS_AS(parse_description("( c=0"), ParseError);
}

TEST_CASE("the classification table crosschecks row for row") {
  auto rep = table_crosscheck();
  CHECK(rep.rows.size() == 39);  // 38 interval rows plus the base row
  CHECK(rep.interval_rows == 38);
  for (const auto& row : rep.rows) {
    INFO(row.row.name.to_string());
    CHECK(row.match);
  }
  CHECK(rep.mismatches == 0);
}

TEST_CASE("crosscheck surfaces a tampered row instead of correcting it") {
  // Same machinery on a deliberately wrong description.
  auto parsed = parse_description("c=0 or d>0");
  CHECK(parsed == profile_set(SemigroupName::parse("S1")));
  auto wrong = parse_description("c=0 or d=0");
  CHECK(wrong != profile_set(SemigroupName::parse("S1")));
}

TEST_CASE("closure sampling inside U and V") {
  // Products of members stay inside, profile-wise, whenever the composite
  // certifies or estimates.
  std::mt19937_64 rng(test_seed());
  for (const char* nm : {"U", "V"}) {
    auto name = SemigroupName::parse(nm);
    auto set = profile_set(name);
    std::vector<Transformation> members;
    for (const auto& t : all_witnesses())
      if (set.contains(t.certified()->profile)) members.push_back(t);
    REQUIRE(members.size() >= 4);
    for (int trial = 0; trial < 60; ++trial) {
      const auto& f = members[rng() % members.size()];
      const auto& g = members[rng() % members.size()];
      auto h = compose(f, g);
      if (h.has_certified()) {
        CHECK(set.contains(h.certified()->profile));
      } else {
        auto est = estimate_classes(h, default_schedule());
        CHECK(estimate_consistent_with(est, set));
      }
    }
  }
}
