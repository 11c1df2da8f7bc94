#ifndef MMWSAR_CORE_GEOMETRY_HPP
#define MMWSAR_CORE_GEOMETRY_HPP

#include <vector>

#include "types.hpp"

namespace mmwsar {

/// Wavenumber of fast-time sample n: k_n = 2*pi*(f0 + K*n/f_sample)/c.
/// Strictly increasing, affine in the sample index.
std::vector<double> wavenumberAxis(const ChirpConfig& chirp);

/// Midpoint phase centers of all Tx/Rx pairs, Tx-major (TDM firing order).
std::vector<Vec2> virtualChannels(const ArrayLayout& layout);

struct BandwidthInfo {
    double bandwidth_hz = 0.0; ///< K * (n_samples - 1) / f_sample
    double wavelength_m = 0.0; ///< c / f0
};

BandwidthInfo bandwidthAndWavelength(const ChirpConfig& chirp);

} // namespace mmwsar

#endif
