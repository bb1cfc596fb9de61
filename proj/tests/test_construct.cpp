#include <doctest.h>

#include "omega/catalog.hpp"
#include "omega/construct.hpp"
#include "omega/errors.hpp"

using namespace omega;

TEST_CASE("with_kernel_and_image: identity kernel onto the evens doubles") {
  ImageSpec evens;
  evens.description = "evens";
  evens.enumerate = [](std::uint64_t i) { return 2 * i; };
  evens.member = [](std::uint64_t m) { return m % 2 == 0; };
  evens.complement_size = ExtNat::infinity();
  auto g = with_kernel_and_image(witness("id"), evens,
                                 KernelPolicy::FiniteFibers);
  for (std::uint64_t n = 0; n < 1000; ++n) CHECK(g(n) == 2 * n);
  CHECK(g.certified()->profile ==
        Profile{CdClass::Zero, CdClass::Inf, KClass::Fin});
}

TEST_CASE("with_kernel_and_image: halve's kernel onto N reproduces halve") {
  auto g = with_kernel_and_image(witness("halve"), image_all(),
                                 KernelPolicy::FiniteFibers);
  const auto& hv = witness("halve");
  for (std::uint64_t n = 0; n < 1000; ++n) CHECK(g(n) == hv(n));
}

TEST_CASE("with_kernel_and_image: single sink over cproj has k = 1") {
  auto g = with_kernel_and_image(witness("cproj"), image_all(),
                                 KernelPolicy::SingleSink);
  CHECK(g.exact_k() == ExtNat(1));
  CHECK(g.exact_c() == ExtNat::infinity());
  // The designated class goes to one point.
  auto alpha = g(cantor_pair(0, 0));
  for (std::uint64_t j = 0; j < 50; ++j)
    CHECK(g(cantor_pair(0, j)) == alpha);
  // Other classes map injectively.
  CHECK(g(cantor_pair(1, 0)) != g(cantor_pair(1, 1)));
  CHECK(consistency_check(g).passed);
}

TEST_CASE("with_kernel_and_image wants the kernel oracle") {
  Transformation bare("bare", "no oracles",
                      [](std::uint64_t n) { return n; });
  CHECK_THROWS_AS(
      with_kernel_and_image(bare, image_all(), KernelPolicy::FiniteFibers),
      CapabilityMissing);
}

TEST_CASE("complete_by_permutation: identity to identity") {
  auto q = complete_by_permutation(witness("id"), witness("id"));
  for (std::uint64_t n = 0; n < 1000; ++n) CHECK(q.forward(n) == n);
}

TEST_CASE("complete_by_permutation: doubling to the odd map") {
  auto q = complete_by_permutation(witness("double"), witness("oddmap"));
  // q matches 2m to 2m+1 and the complements (odds to evens) in order.
  for (std::uint64_t m = 0; m < 500; ++m) {
    CHECK(q.forward(2 * m) == 2 * m + 1);
    CHECK(q.forward(2 * m + 1) == 2 * m);
  }
  const auto& dbl = witness("double");
  const auto& odd = witness("oddmap");
  for (std::uint64_t n = 0; n < 1000; ++n) {
    CHECK(q.forward(dbl(n)) == odd(n));
    CHECK(q.backward(q.forward(n)) == n);
  }
}

TEST_CASE("complete_by_permutation rejects unequal defects") {
  CHECK_THROWS_AS(complete_by_permutation(witness("double"), witness("succ")),
                  DefectMismatch);
  CHECK_THROWS_AS(complete_by_permutation(witness("halve"), witness("pred")),
                  KernelMismatch);
}

TEST_CASE("lemma tech(i): finite collapse transfers along u") {
  auto cert = lemma_tech(LemmaPart::I, witness("merge01"), std::nullopt,
                         witness("merge012"));
  CHECK(verify_certificate(cert, 1000).ok);
  CHECK(cert.factors.size() == 3);
  CHECK(cert.factors[0].kind == Factor::Kind::Base);
  CHECK(cert.factors[1].kind == Factor::Kind::Given);
  CHECK(cert.factors[2].kind == Factor::Kind::Perm);
}

TEST_CASE("lemma tech(i) rejects a defect mismatch") {
  // d(u) = 1 but d(f) = 0.
  CHECK_THROWS_AS(lemma_tech(LemmaPart::I, witness("merge01"), std::nullopt,
                             witness("pred")),
                  HypothesisViolated);
}

TEST_CASE("lemma tech(iii): injective targets ride on u directly") {
  auto cert = lemma_tech(LemmaPart::III, witness("oddmap"), std::nullopt,
                         witness("double"));
  CHECK(verify_certificate(cert, 1000).ok);
  // c(f) = 0 branch: no base factor needed.
  CHECK(cert.factors.size() == 2);
}

TEST_CASE("lemma tech2(i) handles each collapse regime") {
  auto c0 = lemma_tech2(LemmaPart::I, witness("succ"), std::nullopt,
                        witness("succ2"));
  CHECK(verify_certificate(c0, 1000).ok);
  auto cfin = lemma_tech2(LemmaPart::I, witness("merge01"), std::nullopt,
                          witness("merge23s"));
  CHECK(verify_certificate(cfin, 1000).ok);
  auto cinf = lemma_tech2(LemmaPart::I, witness("cproj_shift"), std::nullopt,
                          witness("halve_shift"));
  CHECK(verify_certificate(cinf, 1000).ok);
  CHECK_THROWS_AS(lemma_tech2(LemmaPart::I, witness("succ"), std::nullopt,
                              witness("cproj_shift")),
                  HypothesisViolated);  // k(f) infinite
}

TEST_CASE("lemma techk(i): fat kernels transfer") {
  auto cert = lemma_techk(LemmaPart::I, witness("cproj_double"), std::nullopt,
                          std::nullopt, witness("cproj_double_shift"));
  CHECK(verify_certificate(cert, 1000).ok);
}

TEST_CASE("lemma techk(iii) through a surjective collapse") {
  auto cert = lemma_techk(LemmaPart::III, witness("cproj_double"),
                          witness("halve"), std::nullopt, witness("cproj"));
  CHECK(verify_certificate(cert, 1000).ok);
}

TEST_CASE("lemma techk(ii) rejects a surjective u") {
  CHECK_THROWS_AS(
      lemma_techk(LemmaPart::II, witness("cproj"), witness("halve_shift"),
                  std::nullopt, witness("cproj_shift")),
      HypothesisViolated);  // d(u) = 0
}

TEST_CASE("verify_certificate notices tampering") {
  auto cert = lemma_tech(LemmaPart::I, witness("merge01"), std::nullopt,
                         witness("merge012"));
  REQUIRE(verify_certificate(cert, 1000).ok);
  cert.factors[1].map = witness("succ");
  auto rep = verify_certificate(cert, 1000);
  CHECK(!rep.ok);
  CHECK(rep.mismatch_at.has_value());
}

TEST_CASE("the empty word certifies the identity") {
  Certificate cert;
  cert.lemma_tag = "empty";
  cert.target = witness("id");
  cert.target_id = "id";
  CHECK(verify_certificate(cert, 1000).ok);
}

TEST_CASE("base factors outside the base set are rejected") {
  Certificate cert;
  cert.lemma_tag = "bogus";
  cert.target = witness("succ");
  cert.target_id = "succ";
  Factor f;
  f.kind = Factor::Kind::Base;
  f.label = "succ";
  f.map = witness("succ");
  cert.factors = {f};
  auto rep = verify_certificate(cert, 100);
  CHECK(!rep.ok);
  CHECK(rep.failure.find("outside the base set") != std::string::npos);
}

TEST_CASE("generate_in follows the case analysis of the target") {
  // Inside S5: an infinite-collapse target with finite defect dispatches
  // through the dual lemma with the surjective and the fat generators.
  auto cert = generate_in(
      SemigroupName::parse("S5"), witness("quarter"),
      {witness("pred"), witness("succ"), witness("halve_shift"),
       witness("merge01_double")});
  CHECK(verify_certificate(cert, 1000).ok);
  CHECK(cert.lemma_tag.find("tech2:iv") == 0);

  // Inside S4: an injective target with small positive defect uses the
  // dual part (i).
  auto cert2 = generate_in(SemigroupName::parse("S4"), witness("succ2"),
                           {witness("succ")});
  CHECK(verify_certificate(cert2, 1000).ok);
  CHECK(cert2.lemma_tag.find("tech2:i") == 0);

  // Not a member: precondition error.
  CHECK_THROWS_AS(generate_in(SemigroupName::parse("S1"), witness("pred"),
                              {witness("succ")}),
                  Error);
}

TEST_CASE("profile saturation: any witness generates its profile-mates") {
  // For each profile, the second catalog witness is expressible over the
  // first one plus base elements and permutations, via the dispatcher.
  for (const auto& p : valid_profiles()) {
    auto ws = catalog(p);
    if (ws.size() < 2) continue;
    const auto& f1 = ws[0];
    const auto& f2 = ws[1];
    // The smallest named set containing p works as the ambient target.
    SemigroupName target = SemigroupName::full();
    int best = 13;
    for (const auto& n : names_in_scope()) {
      auto ps = profile_set(n);
      if (ps.contains(p) && ps.size() < best) {
        best = ps.size();
        target = n;
      }
    }
    INFO(p.to_string() << " inside " << target.to_string());
    auto cert = generate_in(target, f2, {f1, f1, f1});
    CHECK(verify_certificate(cert, 1000).ok);
    // Given factors draw only on f1.
    for (const auto& fac : cert.factors)
      if (fac.kind == Factor::Kind::Given) CHECK(fac.label == f1.id());
  }
}

TEST_CASE("certificates serialize with their factor words") {
  auto cert = lemma_tech(LemmaPart::I, witness("merge01"), std::nullopt,
                         witness("merge012"));
  auto js = cert.to_json();
  CHECK(js.find("\"lemma_tag\":\"tech:i\"") != std::string::npos);
  CHECK(js.find("\"kind\":\"given\"") != std::string::npos);
  CHECK(js.find("\"windows\"") != std::string::npos);
}
