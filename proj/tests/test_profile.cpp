#include <doctest.h>

#include <set>

#include "omega/errors.hpp"
#include "omega/profile.hpp"

using namespace omega;

namespace {
const ExtNat inf = ExtNat::infinity();
}

TEST_CASE("extended naturals saturate and order totally") {
  CHECK(ExtNat(0) < ExtNat(1));
  CHECK(ExtNat(1) < inf);
  CHECK(ExtNat(3) + ExtNat(4) == ExtNat(7));
  CHECK(ExtNat(3) + inf == inf);
  CHECK(inf + inf == inf);
  CHECK(ExtNat::parse("17") == ExtNat(17));
  CHECK(ExtNat::parse("inf") == inf);
  CHECK_THROWS_AS(ExtNat::parse("x7"), ParseError);
  CHECK_THROWS_AS(inf.finite_value(), Error);
}

TEST_CASE("classify sends exact triples to their classes") {
  CHECK(classify(0, 0, 0) ==
        Profile{CdClass::Zero, CdClass::Zero, KClass::Fin});
  CHECK(classify(5, 3, 0) ==
        Profile{CdClass::FinPos, CdClass::FinPos, KClass::Fin});
  CHECK(classify(inf, inf, inf) ==
        Profile{CdClass::Inf, CdClass::Inf, KClass::Inf});
}

TEST_CASE("classify rejects triples no map realizes") {
  // A point with an infinite fiber removes infinitely many points from
  // any transversal, so k >= 1 forces c = inf.
  CHECK_THROWS_AS(classify(0, 0, inf), InvalidTriple);
  CHECK_THROWS_AS(classify(0, inf, inf), InvalidTriple);
  CHECK_THROWS_AS(classify(7, 0, 1), InvalidTriple);
  CHECK_NOTHROW(classify(inf, 0, 1));
}

TEST_CASE("exactly 12 valid profiles in canonical order") {
  const auto& all = valid_profiles();
  CHECK(all.size() == 12);
  CHECK(all.front() == Profile{CdClass::Zero, CdClass::Zero, KClass::Fin});
  for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] < all[i + 1]);
  for (const auto& p : all) CHECK(p.valid());
  // Realized by f(0)=f(1)=0, f(n)=2n.
  Profile fin_inf{CdClass::FinPos, CdClass::Inf, KClass::Fin};
  CHECK(fin_inf.index() >= 0);
}

TEST_CASE("profile strings and json round-trip bit-exactly") {
  for (const auto& p : valid_profiles()) {
    CHECK(Profile::parse(p.to_string()) == p);
    CHECK(Profile::from_json(p.to_json()) == p);
  }
  CHECK(Profile::parse("c=0,d=fin,k=fin").to_string() == "c=0,d=fin,k=fin");
  CHECK_THROWS_AS(Profile::parse("c=0,d=0,k=inf"), UnknownProfile);
  CHECK_THROWS_AS(Profile::parse("c=0,d=0"), ParseError);
}

TEST_CASE("lemma31 filter: composing after a map with infinite defect") {
  // c(g) finite and d(f) infinite force d(fg) infinite.
  Profile p{CdClass::Zero, CdClass::Inf, KClass::Fin};
  Profile q{CdClass::FinPos, CdClass::Zero, KClass::Fin};
  for (const auto& r : lemma31_filter(p, q).to_vector())
    CHECK(r.d == CdClass::Inf);
}

TEST_CASE("lemma31 filter: a permutation on the left passes q through") {
  Profile perm{CdClass::Zero, CdClass::Zero, KClass::Fin};
  for (const auto& q : valid_profiles()) {
    auto fs = lemma31_filter(perm, q);
    CHECK(fs.contains(q));
    // The defect of the product is pinned to d(q).
    for (const auto& r : fs.to_vector()) CHECK(r.d == q.d);
  }
}

TEST_CASE("lemma31 filter: finite collapse and zero defect both survive") {
  Profile p{CdClass::FinPos, CdClass::Zero, KClass::Fin};
  auto fs = lemma31_filter(p, p);
  CHECK(fs.size() == 1);
  CHECK(fs.contains(p));
}

TEST_CASE("filter is nonempty and valid on all 144 pairs") {
  for (const auto& p : valid_profiles()) {
    for (const auto& q : valid_profiles()) {
      auto fs = lemma31_filter(p, q);
      CHECK(!fs.empty());
      for (const auto& r : fs.to_vector()) CHECK(r.valid());
    }
  }
}

TEST_CASE("exact relation refines the filter and stays nonempty") {
  for (const auto& p : valid_profiles()) {
    for (const auto& q : valid_profiles()) {
      auto exact = comp_achievable(p, q);
      auto filter = lemma31_filter(p, q);
      CHECK(!exact.empty());
      CHECK(exact.subset_of(filter));
      // Saturated product profile is always achievable.
      Profile sat{cd_add(p.c, q.c), cd_add(p.d, q.d), k_add(p.k, q.k)};
      CHECK(exact.contains(sat));
      // Excluded entries all carry a documented clause.
      for (const auto& r : valid_profiles())
        if (!exact.contains(r))
          CHECK(!comp_excluded_by(p, q, r).note.empty());
    }
  }
}

TEST_CASE("profile sets behave as sets") {
  ProfileSet s;
  CHECK(s.empty());
  s.insert(valid_profiles()[3]);
  s.insert(valid_profiles()[3]);
  CHECK(s.size() == 1);
  CHECK(ProfileSet::all().size() == 12);
  CHECK(s.subset_of(ProfileSet::all()));
  s.erase(valid_profiles()[3]);
  CHECK(s.empty());
}
