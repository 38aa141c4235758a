// SPDX-License-Identifier: Apache-2.0
//
// rissim: 1-bit reconfigurable reflecting surface simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include <benchmark/benchmark.h>

#include <filesystem>

#include "rissim/analysis.hpp"
#include "rissim/scenario_file.hpp"

using namespace rissim;

namespace
{
    const LoadedScenario &bundled()
    {
        static const LoadedScenario s =
            load_scenario(std::filesystem::path(RISSIM_SCENARIO_DIR) / "oblique45.cfg");
        return s;
    }

    ArrayGeometry square(std::size_t n) { return ArrayGeometry(n, n, 2.3e-3); }
}

static void BM_ScatteredField(benchmark::State &state)
{
    const auto &s = bundled();
    const auto g = square(static_cast<std::size_t>(state.range(0)));
    const auto cfg = synthesize(s.scenario, g, s.response);
    for (auto _ : state)
        benchmark::DoNotOptimize(scattered_field(s.scenario, g, cfg, s.response, s.scenario.rx_pos, 27.5));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}
BENCHMARK(BM_ScatteredField)->Arg(4)->Arg(20)->Arg(64);

static void BM_Synthesize(benchmark::State &state)
{
    const auto &s = bundled();
    for (auto _ : state)
        benchmark::DoNotOptimize(synthesize(s.scenario, s.geometry, s.response));
}
BENCHMARK(BM_Synthesize);

static void BM_EnhancementSweep(benchmark::State &state)
{
    const auto &s = bundled();
    const auto cfg = synthesize(s.scenario, s.geometry, s.response);
    const auto freqs = s.file.sweep.freqs();
    for (auto _ : state)
        benchmark::DoNotOptimize(enhancement_db(s.scenario, s.geometry, s.response, cfg, freqs));
}
BENCHMARK(BM_EnhancementSweep)->Unit(benchmark::kMillisecond);

static void BM_PatternScan(benchmark::State &state)
{
    const auto &s = bundled();
    const auto cfg = synthesize(s.scenario, s.geometry, s.response);
    const auto angles = s.file.scan.angles();
    for (auto _ : state)
        benchmark::DoNotOptimize(pattern_scan(s.scenario, s.geometry, cfg, s.response, 27.5, 0.2, angles));
}
BENCHMARK(BM_PatternScan)->Unit(benchmark::kMillisecond);

static void BM_PhaseErrorReport(benchmark::State &state)
{
    const auto &s = bundled();
    const auto cfg = synthesize(s.scenario, s.geometry, s.response);
    for (auto _ : state)
        benchmark::DoNotOptimize(phase_error_report(s.scenario, s.geometry, s.response, cfg, 27.5));
}
BENCHMARK(BM_PhaseErrorReport);
BENCHMARK_MAIN();
