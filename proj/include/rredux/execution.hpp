#pragma once

namespace rredux {

/// Selects between the OpenMP kernel and the serial reference implementation.
/// Both produce bit-identical results; the serial path exists for testing and
/// benchmarking.
enum class Execution { serial, parallel };

} // namespace rredux
