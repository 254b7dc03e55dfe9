#pragma once

// Physical constants (CODATA 2018, SI). Pinned here so every module and the
// CLI metadata sidecar agree on the exact values in use.

namespace casimir::constants {

inline constexpr double pi = 3.14159265358979323846;

inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double c = 299792458.0;         // m/s (exact)
inline constexpr double k_B = 1.380649e-23;      // J/K (exact)
inline constexpr double eV = 1.602176634e-19;    // J (exact)

}  // namespace casimir::constants
