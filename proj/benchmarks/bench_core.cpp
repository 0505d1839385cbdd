#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "voltail/bo_pdf.hpp"
#include "voltail/fit.hpp"
#include "voltail/histogram.hpp"
#include "voltail/montecarlo.hpp"
#include "voltail/special_fn.hpp"
#include "voltail/stationary.hpp"

namespace {

using namespace voltail;

void BM_LnBesselK(benchmark::State& state) {
    const double nu = static_cast<double>(state.range(0)) / 10.0;
    double z = 1e-3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ln_bessel_k(nu, z));
        z = z < 500.0 ? z * 1.03 : 1e-3;
    }
}
BENCHMARK(BM_LnBesselK)->Arg(5)->Arg(45)->Arg(300);

void BM_PdfTsallis(benchmark::State& state) {
    const TsallisParams tp{0.861, 1.03, 1.0};
    double x = -10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pdf_tsallis(tp, x));
        x = x < 10.0 ? x + 0.01 : -10.0;
    }
}
BENCHMARK(BM_PdfTsallis);

void BM_BoPdfQuadrature(benchmark::State& state) {
    const ModelParams p{1.0, 1.0, 1.0, 0.0};
    const BoPdf bo(p, ModelKind::HullWhite, DriftScheme::ZeroDrift, 1.0);
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bo.pdf(x));
        x = x < 8.0 ? x + 0.5 : 0.0;
    }
}
BENCHMARK(BM_BoPdfQuadrature);

void BM_HestonClosedForm(benchmark::State& state) {
    const ModelParams p{1.0, 1.0, 1.0, 0.0};
    const HestonPdf heston(p, DriftScheme::Ito, 1.0);
    double x = -8.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(heston.pdf(x));
        x = x < 8.0 ? x + 0.01 : -8.0;
    }
}
BENCHMARK(BM_HestonClosedForm);

void BM_SimulateJoint(benchmark::State& state) {
    SimConfig cfg;
    cfg.params = {2.0, 1.0, 0.5, 0.0};
    cfg.kind = ModelKind::Heston;
    cfg.dt = 0.01;
    cfg.horizon = 1.0;
    cfg.paths = static_cast<std::size_t>(state.range(0));
    cfg.v0 = 1.0;
    cfg.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_joint(cfg));
    }
    state.SetItemsProcessed(state.iterations() * cfg.paths * cfg.steps());
}
BENCHMARK(BM_SimulateJoint)->Arg(1000);

void BM_BinData(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> normal;
    std::vector<double> data(1u << 20);
    for (auto& d : data) d = normal(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bin_data(data, 100));
    }
    state.SetItemsProcessed(state.iterations() * data.size());
}
BENCHMARK(BM_BinData);

void BM_FitTsallis(benchmark::State& state) {
    std::mt19937_64 rng(11);
    StationaryDist stat{ModelKind::HullWhite, 2.0, 1.0};
    std::normal_distribution<double> normal;
    std::vector<double> data(200000);
    for (auto& d : data) d = std::sqrt(stat.draw_v(rng)) * normal(rng);
    const EmpiricalHist hist = bin_data(data, 100);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_tsallis(hist, 1));
    }
}
BENCHMARK(BM_FitTsallis);

}  // namespace

BENCHMARK_MAIN();
