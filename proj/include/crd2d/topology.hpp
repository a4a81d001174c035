#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "crd2d/geometry.hpp"

namespace crd2d {

struct ScenarioConfig;

enum class Region { A, B, C, Outside };

std::string_view region_name(Region r);

// Near/mid/far bands of one cell. Serving-spectrum D2D transmitters are
// confined to Region B; CR-D2D transmitters may sit anywhere in coverage.
struct CellGeometry {
    Point bs_position;
    double bs_height_m = 30.0;
    double coverage_radius_m = 500.0;
    double region_a_outer_m = 150.0;
    double region_b_outer_m = 350.0;
};

// Half-open bands: A = [0, a), B = [a, b), C = [b, coverage], else Outside.
Region classify_region(const Point& p, const CellGeometry& geometry);

struct D2dPair {
    Point tx;
    Point rx;
    Region tx_region = Region::B;
};

// One drop: immutable after creation, safe to share across threads.
// cr_d2d_pairs lists pairs whose transmitter is outside Region B; they can
// only be served on the neighboring carrier.
struct NodeSet {
    std::vector<Point> serving_ues;
    std::vector<Point> neighbor_ues;
    std::vector<D2dPair> d2d_pairs;
    std::vector<std::size_t> cr_d2d_pairs;
};

struct ArrivalProcess {
    double lambda = 20.0;  // mean new D2D demands per TTI
    std::uint64_t rng_seed = 0;
};

// Poisson count of new D2D demands; deterministic in (rng_seed, tti_index).
int draw_arrivals(const ArrivalProcess& process, std::uint64_t tti_index);

// Uniform UE placement over each cell disc; demand transmitters uniform over
// the permitted region; receivers on a ring of uniform radius in
// [d2d_dist_min_m, d2d_dist_max_m] around their transmitter.
NodeSet deploy_nodes(const ScenarioConfig& config, std::uint64_t seed, int d2d_demand);

}  // namespace crd2d
