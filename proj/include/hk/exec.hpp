#pragma once

namespace hk {

// Serial is the reference path; Parallel uses OpenMP and must produce identical results.
enum class Exec { Serial, Parallel };

}  // namespace hk
