#pragma once

#include <cstdint>

#include "crd2d/rng.hpp"
#include "crd2d/units.hpp"

namespace crd2d {

enum class LinkKind {
    Cellular,  // BS <-> device path
    D2d,       // device <-> device path
};

// Fading model for one link kind: log-normal shadowing (sigma in dB) and a
// gamma-distributed small-scale power gain. Gamma(1, 1) is exponential power
// fading, i.e. a Rayleigh amplitude.
struct FadingParams {
    double shadow_sigma_db = 0.0;
    double gamma_shape = 1.0;
    double gamma_scale = 1.0;
};

// One per-link realization for a TTI. All gains are linear power factors;
// received power = tx_power * large * small / 10^(path_loss_db / 10).
struct ChannelDraw {
    double large_scale_gain = 1.0;
    double small_scale_gain = 1.0;
    double path_loss_db = 0.0;

    double received_power_w(double tx_power_w) const {
        return tx_power_w * large_scale_gain * small_scale_gain * db_to_linear(-path_loss_db);
    }
};

// Distances below this are clamped so the path-loss model stays non-singular.
constexpr double kMinLinkDistanceKm = 0.001;

// 128.1 + 37.6 log10(d[km])
double path_loss_cellular_db(double distance_km, double min_distance_km = kMinLinkDistanceKm);

// 148 + 40 log10(d[km])
double path_loss_d2d_db(double distance_km, double min_distance_km = kMinLinkDistanceKm);

double path_loss_db(LinkKind kind, double distance_km, double min_distance_km = kMinLinkDistanceKm);

// How many path-loss evaluations were clamped to the minimum distance since
// start or last reset. Clamping is not an error; this counter is the signal.
std::uint64_t path_loss_clamp_count();
void reset_path_loss_clamp_count();

ChannelDraw draw_channel(LinkKind kind, double distance_km, const FadingParams& params,
                         RngStream& rng, double min_distance_km = kMinLinkDistanceKm);

}  // namespace crd2d
