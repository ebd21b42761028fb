#pragma once

#include <cstddef>

namespace octoprime {

/// Selects the serial reference path or the OpenMP kernel.
enum class Exec
{
  serial,
  parallel,
};

/// Worker count used by Exec::parallel kernels. 0 means the OpenMP default.
void set_workers(int n);
int workers();

/// Policy used when callers do not pass one explicitly.
Exec default_exec();
void set_default_exec(Exec e);

} // namespace octoprime
