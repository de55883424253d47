#include "djp/homology.hpp"
#include "djp/pbw.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace djp;

namespace {

std::vector<Word> random_words(int count, int letters, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<Word> out;
    for (int i = 0; i < count; ++i) {
        Word w = random_monomial(rng, letters).word();
        std::shuffle(w.begin(), w.end(), rng);  // force out-of-order pairs
        out.push_back(std::move(w));
    }
    return out;
}

Matrix random_matrix(int n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

} // namespace

static void BM_normal_form(benchmark::State& state) {
    // shuffled words, so every pass exercises the rewriting rules
    auto words = random_words(64, int(state.range(0)), 42);
    size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(normal_form(words[k % words.size()]));
        ++k;
    }
}
BENCHMARK(BM_normal_form)->Arg(6)->Arg(10)->Arg(14);

static void BM_multiply(benchmark::State& state) {
    std::mt19937 rng(7);
    AlgebraElement a, b;
    for (int i = 0; i < 12; ++i) {
        a.add_term(random_monomial(rng, int(state.range(0))), Rational(i + 1, 3));
        b.add_term(random_monomial(rng, int(state.range(0))), Rational(2 * i - 5));
    }
    for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_multiply)->Arg(4)->Arg(8);

static void BM_coproduct(benchmark::State& state) {
    auto words = random_words(32, int(state.range(0)), 11);
    std::vector<AlgebraElement> elems;
    for (const auto& w : words) elems.push_back(normal_form(w));
    size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(coproduct(elems[k % elems.size()]));
        ++k;
    }
}
BENCHMARK(BM_coproduct)->Arg(5)->Arg(9);

static void BM_kernel(benchmark::State& state) {
    Matrix m = random_matrix(int(state.range(0)), 2024);
    // shave some rank so the kernel is nonzero
    for (int j = 0; j < m.cols(); ++j) m.at(m.rows() - 1, j) = m.at(0, j) + m.at(1, j);
    for (auto _ : state) benchmark::DoNotOptimize(kernel(m));
}
BENCHMARK(BM_kernel)->Arg(16)->Arg(32)->Arg(64);

static void BM_build_and_verify_T(benchmark::State& state) {
    const int m = int(state.range(0));
    for (auto _ : state) {
        FdModule t = build_T(2, m);
        benchmark::DoNotOptimize(verify_module(t).ok);
    }
}
BENCHMARK(BM_build_and_verify_T)->Arg(1)->Arg(2)->Arg(3);

static void BM_ext_cell(benchmark::State& state) {
    const int n = int(state.range(0));
    FdModule a = build_simple(n + 2), b = build_simple(n);
    for (auto _ : state) benchmark::DoNotOptimize(ext1(a, b).dimension);
}
BENCHMARK(BM_ext_cell)->Arg(0)->Arg(2)->Arg(4);

static void BM_hom_space(benchmark::State& state) {
    FdModule t = build_T(2, int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hom_space(t, t).dim());
}
BENCHMARK(BM_hom_space)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
