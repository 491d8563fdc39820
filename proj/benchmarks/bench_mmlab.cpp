#include <benchmark/benchmark.h>

#include "mmlab/certificates.hpp"
#include "mmlab/mayr_meyer.hpp"
#include "mmlab/parse.hpp"

using namespace mmlab;

static void BM_BuchbergerJ(benchmark::State& state) {
  MayrMeyerInstance inst =
      make_instance(int(state.range(0)), FieldSpec::rationals());
  std::vector<Polynomial> gens = build_J(inst, RingProfile::Full).gens();
  for (auto _ : state) {
    GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex());
    benchmark::DoNotOptimize(gb.elements.size());
  }
}
BENCHMARK(BM_BuchbergerJ)->Arg(1)->Arg(2)->Arg(3);

static void BM_Theorem1Shortened(benchmark::State& state) {
  MayrMeyerInstance inst =
      make_instance(int(state.range(0)), FieldSpec::rationals());
  for (auto _ : state) {
    auto comps = build_components(inst, ComponentMode::Combined,
                                  RingProfile::Shortened);
    Ideal meet = comps[0].ideal;
    for (size_t k = 1; k < comps.size(); ++k)
      meet = intersect(meet, comps[k].ideal);
    bool eq = ideal_equal(meet, build_J(inst, RingProfile::Shortened));
    benchmark::DoNotOptimize(eq);
  }
}
BENCHMARK(BM_Theorem1Shortened)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_RadicalMember(benchmark::State& state) {
  MayrMeyerInstance inst =
      make_instance(int(state.range(0)), FieldSpec::rationals());
  Ideal J = build_J(inst, RingProfile::Full);
  Polynomial w = parse_polynomial(
      "c4*(s - f*b3^" + std::to_string(inst.d) + ")", inst.ring);
  for (auto _ : state) {
    bool member = radical_member(J, w);
    benchmark::DoNotOptimize(member);
  }
}
BENCHMARK(BM_RadicalMember)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_CertificateRestricted(benchmark::State& state) {
  int d = int(state.range(0));
  MayrMeyerInstance inst = make_instance(d, FieldSpec::rationals());
  Polynomial target = parse_polynomial("s*(c4 - c1)", inst.ring);
  std::vector<Polynomial> gens = build_J(inst, RingProfile::Full).gens();
  std::vector<int> b_vars;
  for (const char* b : {"b1", "b2", "b3", "b4"})
    b_vars.push_back(int(inst.ring->var_index_checked(b)));
  std::vector<std::vector<int>> blocks(2);
  for (const char* v : {"s", "f"})
    blocks[0].push_back(int(inst.ring->var_index_checked(v)));
  for (const char* v : {"c1", "c2", "c3", "c4"})
    blocks[1].push_back(int(inst.ring->var_index_checked(v)));
  Restriction restricted = Restriction::subring(b_vars).with_blocks(blocks);
  for (auto _ : state) {
    auto result = min_certificate_degree(target, gens, 2 * d - 1, restricted);
    benchmark::DoNotOptimize(result->first);
  }
}
BENCHMARK(BM_CertificateRestricted)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CertificateFullRing(benchmark::State& state) {
  int d = int(state.range(0));
  MayrMeyerInstance inst = make_instance(d, FieldSpec::rationals());
  Polynomial target = parse_polynomial("s*(c4 - c1)", inst.ring);
  std::vector<Polynomial> gens = build_J(inst, RingProfile::Full).gens();
  for (auto _ : state) {
    auto result =
        min_certificate_degree(target, gens, 2 * d - 1,
                               Restriction::full_ring());
    benchmark::DoNotOptimize(result->first);
  }
}
BENCHMARK(BM_CertificateFullRing)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
