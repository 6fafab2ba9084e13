#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "derlie/sullivan.hpp"

using namespace derlie;
using tests::corpus;

TEST_CASE("the sphere model validates and is minimal") {
  const SullivanModel& s4 = corpus().model("S4");
  ValidationReport r = s4.validate();
  CHECK(r.pass);
  CHECK(r.minimal);
  CHECK(r.issues.empty());
}

TEST_CASE("a degree violation fails validation") {
  GradedAlgebra alg({{"x", 4}, {"y", 7}});
  std::vector<AlgElement> diff(2);
  diff[1] = alg.genElement(0);  // d y = x, degree 4 instead of 8
  SullivanModel bad("bad", {{"x", 4}, {"y", 7}}, diff);
  ValidationReport r = bad.validate();
  CHECK(!r.pass);
  REQUIRE(!r.issues.empty());
  CHECK(r.issues.front().kind == "degree");
}

TEST_CASE("a d-squared violation fails validation") {
  // Lambda(a:2, b:3, c:4) with d b = a^2, d c = a b has d(dc) = a^3 != 0
  std::vector<Generator> gens{{"a", 2}, {"b", 3}, {"c", 4}};
  GradedAlgebra alg(gens);
  std::vector<AlgElement> diff(3);
  Monomial a2 = alg.unitMonomial();
  a2[0] = 2;
  diff[1] = alg.monomialElement(a2);
  Monomial ab = alg.unitMonomial();
  ab[0] = 1;
  ab[1] = 1;
  diff[2] = alg.monomialElement(ab);
  SullivanModel bad("bad2", gens, diff);
  ValidationReport r = bad.validate();
  CHECK(!r.pass);
  bool sawDSquared = false;
  for (const auto& issue : r.issues) sawDSquared = sawDSquared || issue.kind == "d-squared";
  CHECK(sawDSquared);
}

TEST_CASE("every example model validates (regression corpus)") {
  for (const std::string& name : tests::corpusModelNames()) {
    ValidationReport r = corpus().model(name).validate();
    CHECK_MESSAGE(r.pass, name);
  }
}

TEST_CASE("classification: sphere, odd base, homogeneous space") {
  Classification s4 = corpus().model("S4").classify();
  CHECK(s4.pure);
  CHECK(s4.f0Candidate);
  CHECK(s4.evenGens == 1);
  CHECK(s4.oddGens == 1);

  Classification y2 = corpus().model("Y2").classify();
  CHECK(y2.pure);
  CHECK(!y2.f0Candidate);
  CHECK(y2.evenGens == 0);
  CHECK(y2.oddGens == 3);

  Classification su6 = corpus().model("SU6").classify();
  CHECK(su6.pure);
  CHECK(!su6.f0Candidate);
  CHECK(su6.evenGens == 2);
  CHECK(su6.oddGens == 3);
}

TEST_CASE("separability verdicts with witnesses") {
  SeparabilityVerdict ex1 = corpus().relative("Ex1").separability();
  CHECK(ex1.separable);
  CHECK(*ex1.minFiber == 5);
  CHECK(ex1.maxBase == 3);

  SeparabilityVerdict hopf = corpus().relative("Hopf").separability();
  CHECK(!hopf.separable);
  REQUIRE(hopf.witness.has_value());
  CHECK(hopf.witness->first == "z");
  CHECK(hopf.witness->second == "x");
}

TEST_CASE("a point base is separable (empty-set conventions)") {
  SullivanModel total("justFiber", {{"w1", 5}, {"w2", 7}}, {});
  RelativeModel rm("pointBase", std::move(total), 0);
  SeparabilityVerdict v = rm.separability();
  CHECK(v.separable);
  CHECK(v.maxBase == 0);

  SullivanModel pt("alsoNoFiber", {{"v", 3}}, {});
  RelativeModel rm2("noFiber", std::move(pt), 1);
  SeparabilityVerdict v2 = rm2.separability();
  CHECK(v2.separable);
  CHECK(!v2.minFiber.has_value());
}

TEST_CASE("property: separability is monotone when fiber degrees only grow") {
  const RelativeModel& ex1 = corpus().relative("Ex1");
  SeparabilityVerdict before = ex1.separability();

  SullivanModel total("grown", {{"v1", 3}, {"w1", 5}, {"w2", 7}, {"w3", 9}}, {});
  RelativeModel grown("grown", std::move(total), 1);
  SeparabilityVerdict after = grown.separability();
  CHECK(before.separable == after.separable);
}

TEST_CASE("property: forgetting the base/fiber split leaves a valid model") {
  for (const std::string& name : tests::corpusRelativeNames()) {
    const RelativeModel& rm = corpus().relative(name);
    CHECK_MESSAGE(rm.total().validate().pass, name);
    CHECK_MESSAGE(rm.base().validate().pass, name);
  }
}

TEST_CASE("the base view agrees with the total differential") {
  const RelativeModel& ex2 = corpus().relative("Ex2");
  const SullivanModel& base = ex2.base();
  for (std::size_t i = 0; i < ex2.baseCount(); ++i)
    CHECK(ex2.embedBase(base.diffOf(i)) == ex2.total().diffOf(i));
}
