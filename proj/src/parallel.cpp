#include "octoprime/parallel.hpp"

#include <atomic>

#include <omp.h>

namespace octoprime {

namespace {
std::atomic<int> g_workers{0};
std::atomic<Exec> g_exec{Exec::parallel};
} // namespace

void set_workers(int n)
{
  g_workers = n < 0 ? 0 : n;
  if (n > 0)
    omp_set_num_threads(n);
}

int workers()
{
  int const n = g_workers.load();
  return n > 0 ? n : omp_get_max_threads();
}

Exec default_exec() { return g_exec.load(); }

void set_default_exec(Exec e) { g_exec = e; }

} // namespace octoprime
