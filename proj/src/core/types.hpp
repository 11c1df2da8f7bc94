#ifndef MMWSAR_CORE_TYPES_HPP
#define MMWSAR_CORE_TYPES_HPP

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace mmwsar {

using cdouble = std::complex<double>;

/// Propagation speed default: vacuum speed of light (m/s).
inline constexpr double kSpeedOfLight = 299792458.0;

/// Linear FMCW chirp description. The beat signal is modelled directly in
/// the wavenumber domain: sample n of a chirp sees the instantaneous
/// frequency f = f0 + K * n / f_sample.
struct ChirpConfig {
    double f0_hz = 0.0;          ///< sweep start frequency
    double slope_hz_per_s = 0.0; ///< chirp rate K
    double t_chirp_s = 0.0;      ///< chirp duration T
    std::size_t n_samples = 0;   ///< fast-time samples per chirp
    double f_sample_hz = 0.0;    ///< ADC sampling rate
    double c_m_per_s = kSpeedOfLight;

    /// Swept bandwidth over the sampled window: K * (n_samples - 1) / f_sample.
    double bandwidthHz() const;
    /// Carrier wavelength at the start frequency: c / f0.
    double wavelengthM() const;

    /// Throws std::invalid_argument when any field violates its constraints.
    void validate() const;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

enum class ArrayMode {
    EffectiveMonostatic, ///< each Tx/Rx pair acts as a transceiver at its midpoint
    Bistatic             ///< exact per-element two-way path lengths
};

/// Physical MIMO array: element offsets relative to the sensor reference
/// point. Virtual channels are enumerated Tx-major (TDM firing order).
struct ArrayLayout {
    std::vector<Vec2> tx_offsets_m;
    std::vector<Vec2> rx_offsets_m;
    ArrayMode mode = ArrayMode::EffectiveMonostatic;

    std::size_t channelCount() const { return tx_offsets_m.size() * rx_offsets_m.size(); }
    void validate() const;
};

/// Planar rectilinear scan of the sensor across the aperture.
/// Scan position (ix, iy) sits at (origin_x + ix*dx, origin_y + iy*dy, z_plane).
struct ApertureScan {
    std::size_t nx = 0;
    std::size_t ny = 0;
    double dx_m = 0.0;
    double dy_m = 0.0;
    double origin_x_m = 0.0;
    double origin_y_m = 0.0;
    double z_plane_m = 0.0;

    double extentXM() const { return (nx > 0 ? double(nx - 1) : 0.0) * dx_m; }
    double extentYM() const { return (ny > 0 ? double(ny - 1) : 0.0) * dy_m; }
    void validate() const;
};

struct PointScatterer {
    double x_m = 0.0;
    double y_m = 0.0;
    double z_m = 0.0;
    cdouble reflectivity{1.0, 0.0};
};

struct Scene {
    std::vector<PointScatterer> scatterers;
};

/// Sampled beat signal over the full synthetic aperture,
/// indexed [ix_scan][iy_scan][channel][sample], sample fastest.
struct BeatCube {
    ChirpConfig chirp;
    ApertureScan scan;
    ArrayLayout layout;
    std::vector<cdouble> data;

    BeatCube() = default;
    BeatCube(ChirpConfig c, ApertureScan s, ArrayLayout l);

    std::size_t sampleCount() const { return data.size(); }
    std::size_t index(std::size_t ix, std::size_t iy, std::size_t ch, std::size_t ik) const {
        return ((ix * scan.ny + iy) * layout.channelCount() + ch) * chirp.n_samples + ik;
    }
    cdouble& at(std::size_t ix, std::size_t iy, std::size_t ch, std::size_t ik) {
        return data[index(ix, iy, ch, ik)];
    }
    const cdouble& at(std::size_t ix, std::size_t iy, std::size_t ch, std::size_t ik) const {
        return data[index(ix, iy, ch, ik)];
    }
};

/// Dense effective-monostatic aperture samples s(x0, y0, k) produced by
/// collapsing the virtual array into the scan grid. Indexed [ix][iy][ik].
struct ApertureGrid {
    std::size_t nx = 0;
    std::size_t ny = 0;
    double dx_m = 0.0;
    double dy_m = 0.0;
    double origin_x_m = 0.0;
    double origin_y_m = 0.0;
    double z_plane_m = 0.0;
    std::vector<double> k_axis; ///< radial wavenumbers, strictly increasing
    std::vector<cdouble> data;

    std::size_t index(std::size_t ix, std::size_t iy, std::size_t ik) const {
        return (ix * ny + iy) * k_axis.size() + ik;
    }
    cdouble& at(std::size_t ix, std::size_t iy, std::size_t ik) { return data[index(ix, iy, ik)]; }
    const cdouble& at(std::size_t ix, std::size_t iy, std::size_t ik) const {
        return data[index(ix, iy, ik)];
    }
};

enum class StoltStage { PreStolt, PostStolt };

/// Aperture-domain spectrum S(kx, ky, ·). Before Stolt resampling the third
/// axis is the radial wavenumber k; afterwards it is a uniform kz grid.
/// Indexed [ikx][iky][i3], third axis fastest. kx/ky axes are in natural DFT
/// bin order (DC first, negative frequencies in the upper half).
struct KSpaceSpectrum {
    StoltStage stage = StoltStage::PreStolt;
    std::vector<double> kx_axis;
    std::vector<double> ky_axis;
    std::vector<double> third_axis;
    std::vector<cdouble> data;

    // image-mapping metadata carried through the pipeline
    double dx_m = 0.0;
    double dy_m = 0.0;
    double origin_x_m = 0.0;
    double origin_y_m = 0.0;
    double z_plane_m = 0.0;
    double z_ref_m = 0.0; ///< current z reference of the spectral phase
    std::vector<std::string> notes;

    std::size_t index(std::size_t ikx, std::size_t iky, std::size_t i3) const {
        return (ikx * ky_axis.size() + iky) * third_axis.size() + i3;
    }
    cdouble& at(std::size_t ikx, std::size_t iky, std::size_t i3) {
        return data[index(ikx, iky, i3)];
    }
    const cdouble& at(std::size_t ikx, std::size_t iky, std::size_t i3) const {
        return data[index(ikx, iky, i3)];
    }
};

/// Complex reflectivity volume on a uniform voxel grid.
/// Indexed [ix][iy][iz], z fastest. Voxel (0,0,0) sits at the origin.
struct ImageVolume {
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::size_t nz = 0;
    double dx_m = 0.0;
    double dy_m = 0.0;
    double dz_m = 0.0;
    double origin_x_m = 0.0;
    double origin_y_m = 0.0;
    double origin_z_m = 0.0;
    std::vector<cdouble> data;
    std::map<std::string, std::string> meta; ///< reconstruction parameter record

    std::size_t voxelCount() const { return nx * ny * nz; }
    std::size_t index(std::size_t ix, std::size_t iy, std::size_t iz) const {
        return (ix * ny + iy) * nz + iz;
    }
    cdouble& at(std::size_t ix, std::size_t iy, std::size_t iz) {
        return data[index(ix, iy, iz)];
    }
    const cdouble& at(std::size_t ix, std::size_t iy, std::size_t iz) const {
        return data[index(ix, iy, iz)];
    }
    double xAt(std::size_t ix) const { return origin_x_m + double(ix) * dx_m; }
    double yAt(std::size_t iy) const { return origin_y_m + double(iy) * dy_m; }
    double zAt(std::size_t iz) const { return origin_z_m + double(iz) * dz_m; }
};

/// Voxel grid request for backprojection.
struct VoxelGrid {
    std::size_t nx = 0, ny = 0, nz = 0;
    double dx_m = 0.0, dy_m = 0.0, dz_m = 0.0;
    double origin_x_m = 0.0, origin_y_m = 0.0, origin_z_m = 0.0;
};

} // namespace mmwsar

#endif
