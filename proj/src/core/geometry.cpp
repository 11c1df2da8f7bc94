#include "geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mmwsar {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double ChirpConfig::bandwidthHz() const {
    return slope_hz_per_s * double(n_samples - 1) / f_sample_hz;
}

double ChirpConfig::wavelengthM() const { return c_m_per_s / f0_hz; }

void ChirpConfig::validate() const {
    if (!(f0_hz > 0.0))
        throw std::invalid_argument("chirp: f0 must be positive");
    if (!(slope_hz_per_s > 0.0))
        throw std::invalid_argument("chirp: slope K must be positive");
    if (n_samples < 2)
        throw std::invalid_argument("chirp: need at least 2 fast-time samples");
    if (!(f_sample_hz > 0.0))
        throw std::invalid_argument("chirp: sampling rate must be positive");
    if (!(t_chirp_s > 0.0))
        throw std::invalid_argument("chirp: chirp duration must be positive");
    if (double(n_samples) / f_sample_hz > t_chirp_s * (1.0 + 1e-12))
        throw std::invalid_argument("chirp: sampled window n_samples/f_sample exceeds chirp duration");
    if (!(c_m_per_s > 0.0))
        throw std::invalid_argument("chirp: propagation speed must be positive");
    if (!(bandwidthHz() > 0.0))
        throw std::invalid_argument("chirp: swept bandwidth must be positive");
}

void ArrayLayout::validate() const {
    if (tx_offsets_m.empty() || rx_offsets_m.empty())
        throw std::invalid_argument("array: need at least one Tx and one Rx element");
    for (const Vec2& v : tx_offsets_m)
        if (!std::isfinite(v.x) || !std::isfinite(v.y))
            throw std::invalid_argument("array: non-finite Tx offset");
    for (const Vec2& v : rx_offsets_m)
        if (!std::isfinite(v.x) || !std::isfinite(v.y))
            throw std::invalid_argument("array: non-finite Rx offset");
}

void ApertureScan::validate() const {
    if (nx < 1 || ny < 1)
        throw std::invalid_argument("scan: nx and ny must be at least 1");
    if (!(dx_m > 0.0) || !(dy_m > 0.0))
        throw std::invalid_argument("scan: dx and dy must be positive");
    if (!std::isfinite(origin_x_m) || !std::isfinite(origin_y_m) || !std::isfinite(z_plane_m))
        throw std::invalid_argument("scan: non-finite origin or aperture plane");
}

BeatCube::BeatCube(ChirpConfig c, ApertureScan s, ArrayLayout l)
    : chirp(c), scan(s), layout(std::move(l)) {
    chirp.validate();
    scan.validate();
    layout.validate();
    data.assign(scan.nx * scan.ny * layout.channelCount() * chirp.n_samples, cdouble{0.0, 0.0});
}

std::vector<double> wavenumberAxis(const ChirpConfig& chirp) {
    chirp.validate();
    std::vector<double> k(chirp.n_samples);
    const double scale = kTwoPi / chirp.c_m_per_s;
    for (std::size_t n = 0; n < chirp.n_samples; ++n)
        k[n] = scale * (chirp.f0_hz + chirp.slope_hz_per_s * double(n) / chirp.f_sample_hz);
    return k;
}

std::vector<Vec2> virtualChannels(const ArrayLayout& layout) {
    layout.validate();
    std::vector<Vec2> centers;
    centers.reserve(layout.channelCount());
    for (const Vec2& t : layout.tx_offsets_m)
        for (const Vec2& r : layout.rx_offsets_m)
            centers.push_back({0.5 * (t.x + r.x), 0.5 * (t.y + r.y)});
    return centers;
}

BandwidthInfo bandwidthAndWavelength(const ChirpConfig& chirp) {
    chirp.validate();
    return {chirp.bandwidthHz(), chirp.wavelengthM()};
}

} // namespace mmwsar
