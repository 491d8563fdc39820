#include <doctest.h>

#include <algorithm>
#include <random>

#include "mmlab/ideal.hpp"
#include "mmlab/mayr_meyer.hpp"
#include "mmlab/parse.hpp"
#include "test_util.hpp"

using namespace mmlab;
using testutil::P;

namespace {

Ideal ideal_of(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(ring, g));
  return Ideal(ring, std::move(ps));
}

}  // namespace

TEST_CASE("contains: spec examples") {
  for (int d : {1, 2}) {
    std::string D = std::to_string(d);
    MayrMeyerInstance inst = make_instance(d, FieldSpec::rationals());
    Polynomial w = P(inst.ring, "c4*(s - f*b3^" + D + ")");
    Ideal sf = ideal_of(inst.ring, {"s", "f"});
    CHECK(contains(sf, w));
    Ideal J = build_J(inst, RingProfile::Full);
    CHECK(!contains(J, w));
    CHECK(contains(J, Polynomial::zero(inst.ring)));
  }
}

TEST_CASE("membership certificate re-expands to the member") {
  MayrMeyerInstance inst = make_instance(1, FieldSpec::rationals());
  Ideal J = build_J(inst, RingProfile::Full);
  Polynomial member = P(inst.ring, "s*(c1 - c4)");
  auto cert = membership_certificate(J, member);
  REQUIRE(cert);
  Polynomial expansion = Polynomial::zero(inst.ring);
  for (size_t j = 0; j < J.gens().size(); ++j)
    expansion = expansion + (*cert)[j] * J.gens()[j];
  CHECK(expansion == member);
  CHECK(!membership_certificate(J, P(inst.ring, "c4*(s - f*b3)")));
}

TEST_CASE("ideal_equal: spec examples") {
  RingPtr ring = testutil::small_ring(2);
  CHECK(ideal_equal(ideal_of(ring, {"x", "y"}), ideal_of(ring, {"y", "x + y"})));
  CHECK(!ideal_equal(ideal_of(ring, {"x"}), ideal_of(ring, {"y"})));
  for (int d : {1, 2}) {
    MayrMeyerInstance inst = make_instance(d, FieldSpec::rationals());
    Ideal J = build_J(inst, RingProfile::Full);
    Ideal min = build_minimal_intersection(inst, RingProfile::Full);
    CHECK(!ideal_equal(J, min));  // they differ by s*c2*(b1^d - b2^d)
  }
}

TEST_CASE("ideal_equal is an equivalence invariant under shuffles") {
  std::mt19937 rng(53);
  RingPtr ring = testutil::small_ring(3);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k)
      gens.push_back(testutil::random_poly(rng, ring, 4, 2, 5));
    Ideal I(ring, gens);
    std::vector<Polynomial> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    Ideal Ishuf(ring, shuffled);
    CHECK(ideal_equal(I, I));
    CHECK(ideal_equal(I, Ishuf));
    CHECK(ideal_equal(Ishuf, I));
  }
}

TEST_CASE("sum and product: spec examples") {
  RingPtr ring = testutil::small_ring(2);
  Ideal I = ideal_of(ring, {"x + y", "x*y"});
  CHECK(ideal_equal(sum(I, Ideal::zero(ring)), I));
  CHECK(ideal_equal(product(ideal_of(ring, {"x"}), ideal_of(ring, {"y"})),
                    ideal_of(ring, {"x*y"})));
}

TEST_CASE("intersect: spec examples") {
  RingPtr ring = testutil::small_ring(2);
  CHECK(ideal_equal(intersect(ideal_of(ring, {"x"}), ideal_of(ring, {"y"})),
                    ideal_of(ring, {"x*y"})));
  Ideal I = ideal_of(ring, {"x^2 - y", "x*y"});
  CHECK(ideal_equal(intersect(I, I), I));
}

TEST_CASE("intersect: first-two-rows identity of the decomposition proof") {
  for (int d : {1, 2}) {
    std::string D = std::to_string(d);
    MayrMeyerInstance inst = make_instance(d, FieldSpec::rationals());
    const RingPtr& ring = inst.ring_short;
    Ideal row1 = ideal_of(ring, {"c1", "c2", "c3", "c4"});
    Ideal row2 = ideal_of(
        ring, {"c4 - c1", "c3 - c2", "c1 - c2*b1^" + D, "s - f*b1^" + D,
               "b1 - b4", "b2 - b3", "b1^" + D + " - b2^" + D});
    Ideal lhs = intersect(row1, row2);
    Ideal rhs = sum(
        ideal_of(ring, {"c4 - c1", "c3 - c2", "c1 - c2*b1^" + D}),
        product(row1, ideal_of(ring, {"s - f*b1^" + D, "b1 - b4", "b2 - b3",
                                      "b1^" + D + " - b2^" + D})));
    CHECK(ideal_equal(lhs, rhs));
  }
}

TEST_CASE("intersect soundness: sampled membership equivalence") {
  std::mt19937 rng(59);
  RingPtr ring = testutil::small_ring(3);
  Ideal I = ideal_of(ring, {"x^2 - y", "y*z"});
  Ideal J = ideal_of(ring, {"x*z - 1", "y^2"});
  Ideal meet = intersect(I, J);
  int in_both = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial h = testutil::random_poly(rng, ring, 4, 3, 5);
    // bias: half the samples are crafted members of I*J
    if (trial % 2 == 0) h = h * I.gens()[trial % 2] * J.gens()[0];
    bool lhs = contains(meet, h);
    bool rhs = contains(I, h) && contains(J, h);
    CHECK(lhs == rhs);
    if (lhs) ++in_both;
  }
  CHECK(in_both > 10);  // the biased half must actually exercise membership
}

TEST_CASE("eliminate: spec examples") {
  RingPtr ring3 = RingSpec::make({"t", "x", "y"}, FieldSpec::rationals());
  Ideal I = ideal_of(ring3, {"t*x", "(1 - t)*y"});
  Ideal elim = eliminate(I, {0});
  CHECK(ideal_equal(elim, ideal_of(ring3, {"x*y"})));
  // oracle: the t-trick computes (x) cap (y); sample membership agreement
  std::mt19937 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial h = testutil::random_poly(rng, ring3, 4, 2, 5);
    bool inx = contains(ideal_of(ring3, {"x"}), h);
    bool iny = contains(ideal_of(ring3, {"y"}), h);
    CHECK(contains(elim, h) == (inx && iny));
  }

  Ideal graph = ideal_of(ring3, {"t - x^2"});
  CHECK(eliminate(graph, {0}).is_zero_ideal());
  Ideal same = ideal_of(ring3, {"x*y - t"});
  CHECK(ideal_equal(eliminate(same, {}), same));
}

TEST_CASE("colon: spec examples") {
  RingPtr ring = testutil::small_ring(2);
  Ideal I = ideal_of(ring, {"x^2*y", "x*y^2"});
  CHECK(ideal_equal(colon(I, P(ring, "1")), I));
  CHECK(ideal_equal(colon(I, P(ring, "x*y")), ideal_of(ring, {"x", "y"})));
  CHECK_THROWS_AS(colon(I, Polynomial::zero(ring)), std::invalid_argument);
  CHECK(ideal_equal(colon_ideal(I, ideal_of(ring, {"x", "y"})),
                    ideal_of(ring, {"x*y"})));
}

TEST_CASE("colon soundness: sampled membership equivalence") {
  std::mt19937 rng(67);
  RingPtr ring = testutil::small_ring(3);
  Ideal I = ideal_of(ring, {"x^2 - y*z", "y^2"});
  Polynomial f = P(ring, "x*y");
  Ideal quot = colon(I, f);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial g = testutil::random_poly(rng, ring, 4, 2, 5);
    CHECK(contains(quot, g) == contains(I, g * f));
  }
}

TEST_CASE("radical_member: spec examples") {
  RingPtr ring = testutil::small_ring(2);
  CHECK(radical_member(ideal_of(ring, {"x^2"}), P(ring, "x")));
  CHECK(!radical_member(ideal_of(ring, {"x^2"}), P(ring, "y")));
  CHECK(radical_member(ideal_of(ring, {"x"}), Polynomial::zero(ring)));
  for (int d : {1, 2}) {
    std::string D = std::to_string(d);
    MayrMeyerInstance inst = make_instance(d, FieldSpec::rationals());
    Ideal J = build_J(inst, RingProfile::Full);
    CHECK(radical_member(J, P(inst.ring, "f*b3*(c3 - c2)")));
    Polynomial w = P(inst.ring, "c4*(s - f*b3^" + D + ")");
    CHECK(radical_member(J, w));
    CHECK(!contains(J, w));
  }
}

TEST_CASE("radical consistency: contains implies radical_member; powers land in I") {
  std::mt19937 rng(71);
  RingPtr ring = testutil::small_ring(3);
  Ideal I = ideal_of(ring, {"x^2 - y", "y^3"});
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial h = testutil::random_poly(rng, ring, 3, 2, 4);
    if (contains(I, h)) CHECK(radical_member(I, h));
  }
  // radical members have a power inside, k <= 32 on the Mayr-Meyer instances
  for (int d : {1, 2}) {
    std::string D = std::to_string(d);
    MayrMeyerInstance inst = make_instance(d, FieldSpec::rationals());
    Ideal J = build_J(inst, RingProfile::Full);
    const std::vector<std::string> members = {
        "f*b3*(c3 - c2)", "f*b3*c2*(b1^" + D + " - b2^" + D + ")",
        "c4*(s - f*b3^" + D + ")"};
    for (const std::string& text : members) {
      Polynomial g = P(inst.ring, text);
      REQUIRE(radical_member(J, g));
      Polynomial power = Polynomial::constant(inst.ring, Scalar(1));
      bool landed = false;
      for (int k = 1; k <= 32; ++k) {
        power = power * g;
        if (contains(J, power)) {
          landed = true;
          break;
        }
      }
      CHECK(landed);
    }
  }
}

TEST_CASE("dimension: spec examples") {
  MayrMeyerInstance inst = make_instance(1, FieldSpec::rationals());
  const RingPtr& ring = inst.ring;
  CHECK(dimension(Ideal::zero(ring)) == 12);
  CHECK(dimension(ideal_of(ring, {"1"})) == -1);
  CHECK(dimension(ideal_of(ring, {"s1 - s*c1", "f1 - s*c4", "c1", "c2", "c3",
                                  "c4"})) == 6);
  CHECK(dimension(ideal_of(ring, {"s1 - s*c1", "f1 - s*c4", "s", "f", "c1",
                                  "c2", "c3", "c4", "b2 - b3", "b1 - b4"})) ==
        2);
}

TEST_CASE("dimension is order-independent") {
  // same independent-set computation on lex leading terms must agree
  auto dim_under = [](const Ideal& I, const MonomialOrder& ord) {
    const GroebnerBasis& gb = I.groebner(ord);
    if (gb.is_unit()) return -1;
    size_t n = I.ring()->nvars();
    std::vector<uint64_t> supports;
    for (const auto& e : gb.elements)
      supports.push_back(leading_term_under(e, ord).mono.support());
    int best = 0;
    for (uint64_t s = 0; s < (uint64_t(1) << n); ++s) {
      bool independent = true;
      for (uint64_t lm : supports)
        if ((lm & ~s) == 0) {
          independent = false;
          break;
        }
      if (independent)
        best = std::max(best, __builtin_popcountll(s));
    }
    return best;
  };
  std::mt19937 rng(73);
  RingPtr ring = testutil::small_ring(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k)
      gens.push_back(testutil::random_poly(rng, ring, 3, 2, 4));
    Ideal I(ring, gens);
    CHECK(dimension(I) == dim_under(I, MonomialOrder::lex()));
  }
  MayrMeyerInstance inst = make_instance(2, FieldSpec::rationals());
  Ideal J = build_J(inst, RingProfile::Full);
  CHECK(dimension(J) == dim_under(J, MonomialOrder::lex()));
}

TEST_CASE("unit and zero ideals propagate through every operation") {
  RingPtr ring = testutil::small_ring(2);
  Ideal unit = ideal_of(ring, {"1"});
  Ideal zero = Ideal::zero(ring);
  Ideal I = ideal_of(ring, {"x^2", "x*y"});
  CHECK(ideal_equal(intersect(unit, I), I));
  CHECK(intersect(zero, I).is_zero_ideal());
  CHECK(ideal_equal(colon(I, P(ring, "7")), I));
  CHECK(colon(zero, P(ring, "x")).is_zero_ideal());
  CHECK(ideal_equal(colon_ideal(I, zero), unit));
  CHECK(contains(unit, P(ring, "x - 1")));
  CHECK(!contains(zero, P(ring, "x")));
  CHECK(radical_member(unit, P(ring, "y")));
  CHECK(ideal_equal(sum(zero, I), I));
  CHECK(dimension(zero) == 2);
}
