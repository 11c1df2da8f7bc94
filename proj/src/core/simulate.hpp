#ifndef MMWSAR_CORE_SIMULATE_HPP
#define MMWSAR_CORE_SIMULATE_HPP

#include <cstdint>
#include <vector>

#include "types.hpp"

namespace mmwsar {

struct SimulateOptions {
    /// When true, weight each target contribution by 1/(R_T*R_R).
    /// Off by default: the baseline model carries no spreading loss.
    bool spherical_spreading = false;
};

/// Synthesize the beat cube of a point-scatterer scene.
///
/// Every sample accumulates sum_t p_t * exp(+j*k*(R_T + R_R)) with R_T/R_R
/// the exact 3D distances from the transmit and receive elements at the
/// current scan position to the target. In effective-monostatic mode both
/// distances are measured from the Tx/Rx midpoint, giving exp(+j*2kR).
BeatCube simulateBeat(const Scene& scene, const ChirpConfig& chirp, const ApertureScan& scan,
                      const ArrayLayout& layout, const SimulateOptions& opts = {});

/// Same forward model over an explicit wavenumber list (no chirp needed);
/// used for phase-convention checks where the k axis is synthetic.
void simulateIntoCube(const Scene& scene, const std::vector<double>& k_axis, BeatCube& cube,
                      const SimulateOptions& opts = {});

/// Add circularly-symmetric complex white Gaussian noise scaled so that
/// mean signal power / noise power equals 10^(snr_db/10).
///
/// snr_db = +infinity returns the cube unchanged. The generator is a
/// mt19937_64 seeded with `seed`, mapped through a Box-Muller transform,
/// so output is reproducible bit-for-bit for a given seed.
BeatCube addNoise(const BeatCube& cube, double snr_db, std::uint64_t seed);

} // namespace mmwsar

#endif
