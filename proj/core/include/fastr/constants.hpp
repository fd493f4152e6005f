#pragma once

#include <cmath>

namespace fastr {

// Magnetic flux quantum (Wb).
inline constexpr double kPhi0Wb = 2.067833848e-15;

// Boltzmann constant (J/K).
inline constexpr double kBoltzmannJperK = 1.380649e-23;

// Feedline characteristic impedance (ohm), used by the coupling-Q convention.
inline constexpr double kFeedlineOhm = 50.0;

// Largest tolerable local-oscillator retune of the readout band (Hz).
inline constexpr double kMaxLoOffsetHz = 750e6;

inline double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts / 1e-3); }

}  // namespace fastr
