#include "crd2d/channel.hpp"

#include <atomic>
#include <cmath>

namespace crd2d {

namespace {

std::atomic<std::uint64_t> g_clamp_count{0};

double clamp_distance(double distance_km, double min_distance_km) {
    if (distance_km < min_distance_km) {
        g_clamp_count.fetch_add(1, std::memory_order_relaxed);
        return min_distance_km;
    }
    return distance_km;
}

}  // namespace

double path_loss_cellular_db(double distance_km, double min_distance_km) {
    const double d = clamp_distance(distance_km, min_distance_km);
    return 128.1 + 37.6 * std::log10(d);
}

double path_loss_d2d_db(double distance_km, double min_distance_km) {
    const double d = clamp_distance(distance_km, min_distance_km);
    return 148.0 + 40.0 * std::log10(d);
}

double path_loss_db(LinkKind kind, double distance_km, double min_distance_km) {
    return kind == LinkKind::Cellular ? path_loss_cellular_db(distance_km, min_distance_km)
                                      : path_loss_d2d_db(distance_km, min_distance_km);
}

std::uint64_t path_loss_clamp_count() { return g_clamp_count.load(std::memory_order_relaxed); }

void reset_path_loss_clamp_count() { g_clamp_count.store(0, std::memory_order_relaxed); }

ChannelDraw draw_channel(LinkKind kind, double distance_km, const FadingParams& params,
                         RngStream& rng, double min_distance_km) {
    ChannelDraw draw;
    const double shadow_db = rng.normal(0.0, params.shadow_sigma_db);
    draw.large_scale_gain = db_to_linear(shadow_db);
    draw.small_scale_gain = rng.gamma(params.gamma_shape, params.gamma_scale);
    draw.path_loss_db = path_loss_db(kind, distance_km, min_distance_km);
    return draw;
}

}  // namespace crd2d
