/*
 Copyright 2026 The sbl Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#include "sbl/behavior.hpp"
#include "sbl/ilc.hpp"
#include "sbl/scenario.hpp"
#include "sbl/similarity.hpp"
#include "sbl/transfer.hpp"

#include <benchmark/benchmark.h>

namespace {

const char* host_for(int64_t example) { return example == 1 ? "example1-host" : "example2-host"; }
const char* guest_for(int64_t example) { return example == 1 ? "example1-guest" : "example2-guest"; }

sbl::BehaviorRep probe(const char* name)
{
    sbl::ModelPlant plant(sbl::builtin_model(name));
    const sbl::Dims dims = plant.model().dims();
    return sbl::build_representation(
        sbl::run_tests(plant, dims, sbl::design_test_inputs(dims.nu, dims.horizon)));
}

void BM_RunTests(benchmark::State& state)
{
    sbl::ModelPlant plant(sbl::builtin_model(host_for(state.range(0))));
    const sbl::Dims dims = plant.model().dims();
    const sbl::Matrix design = sbl::design_test_inputs(dims.nu, dims.horizon);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sbl::run_tests(plant, dims, design));
    }
}
BENCHMARK(BM_RunTests)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BuildRepresentation(benchmark::State& state)
{
    sbl::ModelPlant plant(sbl::builtin_model(host_for(state.range(0))));
    const sbl::Dims dims = plant.model().dims();
    const sbl::TestDataset data = sbl::run_tests(plant, dims, sbl::design_test_inputs(dims.nu, dims.horizon));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sbl::build_representation(data));
    }
}
BENCHMARK(BM_BuildRepresentation)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_CheckSimilarity(benchmark::State& state)
{
    const sbl::BehaviorRep host = probe(host_for(state.range(0)));
    const sbl::BehaviorRep guest = probe(guest_for(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sbl::check_similarity(host, guest));
    }
}
BENCHMARK(BM_CheckSimilarity)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_SimilarityIndexes(benchmark::State& state)
{
    const sbl::BehaviorRep host = probe(host_for(state.range(0)));
    const sbl::BehaviorRep guest = probe(guest_for(state.range(0)));
    const sbl::SimilarityCheck check = sbl::check_similarity(host, guest);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sbl::similarity_indexes(host, guest, check, sbl::Override::diagnostic));
    }
}
BENCHMARK(BM_SimilarityIndexes)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Transfer(benchmark::State& state)
{
    const sbl::BehaviorRep host = probe(host_for(state.range(0)));
    const sbl::BehaviorRep guest = probe(guest_for(state.range(0)));
    const sbl::SimilarityReport report =
        sbl::similarity_indexes(host, guest, sbl::check_similarity(host, guest), sbl::Override::diagnostic);
    const sbl::Vector w_g = guest.offset() + guest.differences().col(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sbl::transfer(host, guest, report, w_g));
    }
}
BENCHMARK(BM_Transfer)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_IlcTrack(benchmark::State& state)
{
    const int64_t example = state.range(0);
    sbl::ModelPlant plant(sbl::builtin_model(guest_for(example)));
    const sbl::BehaviorRep rep = probe(guest_for(example));
    const sbl::Vector reference = example == 1 ? sbl::example1_reference() : sbl::example2_reference();
    sbl::IlcOptions options;
    options.max_iters = example == 1 ? 300 : 200;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sbl::ilc_track(plant, rep, reference, options));
    }
}
BENCHMARK(BM_IlcTrack)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
