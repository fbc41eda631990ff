// SPDX-License-Identifier: Apache-2.0
//
// mmwavesim - statistical mmWave channel simulation and MU-MIMO evaluation
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
//
// Compares the serial reference campaign against the OpenMP-parallel one at
// several worker counts and reports drops/second.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "mmwavesim/montecarlo.hpp"

using namespace mmwavesim;
using clock_type = std::chrono::steady_clock;

namespace
{

double time_run(const SystemConfig &config, bool parallel)
{
    auto t0 = clock_type::now();
    CampaignResult r = parallel ? run_campaign(config) : run_campaign_serial(config);
    auto t1 = clock_type::now();
    (void)r;
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char **argv)
{
    setenv("OPENBLAS_NUM_THREADS", "1", 0);

    SystemConfig config;
    config.drops = argc > 1 ? std::atoi(argv[1]) : 50;
    if (config.drops < 1)
    {
        std::fprintf(stderr, "usage: %s [drops]\n", argv[0]);
        return 1;
    }

    std::printf("campaign benchmark: %d drops, %d users, models=all\n", config.drops, config.users);

    double t_serial = time_run(config, false);
    std::printf("%-18s %8.2f s   %8.2f drops/s\n", "serial reference", t_serial,
                config.drops / t_serial);

    int max_threads = omp_get_max_threads();
    for (int workers = 1; workers <= max_threads; workers *= 2)
    {
        setenv("MMWAVESIM_WORKERS", std::to_string(workers).c_str(), 1);
        double t = time_run(config, true);
        std::printf("openmp %2d worker%s %8.2f s   %8.2f drops/s   speedup %.2fx\n", workers,
                    workers == 1 ? " " : "s", t, config.drops / t, t_serial / t);
    }
    return 0;
}
