#pragma once

namespace legweb {

// Selects the serial reference loop or the OpenMP loop for a kernel.
enum class Exec { serial, parallel };

// Worker count for parallel kernels. LEGWEB_THREADS caps it when set to a
// positive integer; otherwise the OpenMP default is used.
int worker_count();

}  // namespace legweb
