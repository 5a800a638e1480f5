#include <benchmark/benchmark.h>

#include <random>

#include "jrel/engine.hpp"
#include "jrel/identity.hpp"

using namespace jrel;

namespace {

const CaseSpec& cs(const std::string& name, int prime) { return find_case(name, prime); }

void BM_resolve_sp_lambda2(benchmark::State& state) {
    const CaseSpec& c = cs("Sp", 2);
    for (auto _ : state) benchmark::DoNotOptimize(resolve_character(c, 2));
}
BENCHMARK(BM_resolve_sp_lambda2);

void BM_resolve_e7_lambda3(benchmark::State& state) {
    const CaseSpec& c = cs("E7", 3);
    for (auto _ : state) benchmark::DoNotOptimize(resolve_character(c, 3));
}
BENCHMARK(BM_resolve_e7_lambda3);

void BM_restriction_relations(benchmark::State& state) {
    Character c = resolve_character(cs("E6", 2), 1);
    for (auto _ : state) benchmark::DoNotOptimize(restriction_relations(c, 16, "(E6 l1)"));
}
BENCHMARK(BM_restriction_relations);

void BM_build_system(benchmark::State& state) {
    const CaseSpec& c = cs("Sp", 2);
    for (auto _ : state) {
        auto rels = build_case_relations(c, 2, Source::both, c.i_max, c.window);
        benchmark::DoNotOptimize(build_matrix(rels, c.window));
    }
}
BENCHMARK(BM_build_system);

void BM_minimal_multiple(benchmark::State& state) {
    const CaseSpec& c = cs("Sp", 2);
    auto rels = build_case_relations(c, 2, Source::both, c.i_max, c.window);
    auto M = build_matrix(rels, c.window);
    for (auto _ : state) benchmark::DoNotOptimize(minimal_multiple(M, 1));
}
BENCHMARK(BM_minimal_multiple);

void BM_minimal_multiple_with_certificate(benchmark::State& state) {
    const CaseSpec& c = cs("E7", 3);
    auto rels = build_case_relations(c, 3, Source::printed, c.i_max, c.window);
    auto M = build_matrix(rels, c.window);
    for (auto _ : state) benchmark::DoNotOptimize(minimal_multiple(M, 1, true));
}
BENCHMARK(BM_minimal_multiple_with_certificate);

void BM_check_identity(benchmark::State& state) {
    const CaseSpec& c = cs("F4", 2);
    auto rels = build_case_relations(c, 2, Source::both, c.i_max, c.window);
    auto M = build_matrix(rels, c.window);
    auto lhs = parse_identity("t^8 = 4t^2 + 1");
    for (auto _ : state) benchmark::DoNotOptimize(check_identity(M, lhs, 2));
}
BENCHMARK(BM_check_identity);

void BM_certificate_roundtrip(benchmark::State& state) {
    const CaseSpec& c = cs("E7", 3);
    auto rels = build_case_relations(c, 3, Source::printed, c.i_max, c.window);
    auto M = build_matrix(rels, c.window);
    for (auto _ : state) {
        Certificate cert = extract_certificate(M, 1, Int(1));
        benchmark::DoNotOptimize(verify_certificate(cert, M));
    }
}
BENCHMARK(BM_certificate_roundtrip);

void BM_hermite_random(benchmark::State& state) {
    std::mt19937_64 gen(12345);
    std::uniform_int_distribution<long> dist(-9, 9);
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(state.range(0)));
    for (auto& r : rows) {
        r.resize(static_cast<std::size_t>(state.range(0)) + 4);
        for (auto& x : r) x = Int(dist(gen));
    }
    for (auto _ : state) benchmark::DoNotOptimize(hermite_form(rows));
}
BENCHMARK(BM_hermite_random)->Arg(8)->Arg(24)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
