// Copyright 2026 The VHD Simulator Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "vhd/optimizer.hpp"

namespace vhd {

int worker_threads(int requested, int tasks) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("VHD_SIM_THREADS")) {
      try {
        n = std::stoi(env);
      } catch (const std::exception&) {
        n = 0;
      }
    }
  }
  if (n <= 0) n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return std::max(1, std::min(n, tasks));
}

RestartResult run_restart(const PauliSum& h, const DiagonalPauliSum& budget, const LayeredAnsatz& a,
                          double dt, const OptConfig& opt, int restart) {
  Engine rng = make_engine({opt.seed, static_cast<std::uint64_t>(restart)});
  RestartResult r;
  r.restart = restart;
  r.initial = random_start(h, budget, a, rng);

  VffOptions vo;
  vo.iterations = opt.max_iterations;
  vo.step = opt.vff_step();
  vo.checkpoint_interval = opt.checkpoint_interval;
  r.vff = vff_optimize(h, dt, a, budget.with_gammas(r.initial.gamma), r.initial.theta, vo);
  r.transfer = transfer_parameters(r.vff.gamma, r.vff.theta, h, budget, a, dt);
  r.vhd = vhd_optimize(h, budget, a, {r.transfer.theta, r.transfer.gamma}, opt,
                       static_cast<std::uint64_t>(restart));
  r.exact = cost_vhd(h, budget.with_gammas(r.vhd.gamma), a, r.vhd.theta);
  r.trace = r.vff.trace;
  r.trace.append(r.vhd.trace);
  return r;
}

PipelineResult run_pipeline(const PauliSum& h, const DiagonalPauliSum& budget, const LayeredAnsatz& a,
                            double dt, const OptConfig& opt) {
  opt.validate();
  require_compatible(h, budget, a);
  PipelineResult out;
  out.dt = dt;
  out.termination_threshold = termination_cost(opt.f_term, opt.t_target, static_cast<double>(a.dim()));
  out.restarts.resize(static_cast<std::size_t>(opt.restarts));

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (int i = next++; i < opt.restarts; i = next++) {
      try {
        out.restarts[static_cast<std::size_t>(i)] = run_restart(h, budget, a, dt, opt, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = worker_threads(opt.threads, opt.restarts);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (int i = 1; i < opt.restarts; ++i) {
    if (out.restarts[static_cast<std::size_t>(i)].vhd.best.c_vhd_normalized <
        out.best().vhd.best.c_vhd_normalized) {
      out.best_index = i;
    }
  }
  return out;
}

}  // namespace vhd
