// Walker-grid routing between two ground stations: nearest-satellite
// selection, the two Manhattan candidate paths on the (plane, slot) torus,
// per-path rate evaluation, and time-swept end-to-end rates.
#pragma once

#include <array>
#include <compare>
#include <vector>

#include "leoqnet/linkbudget.hpp"
#include "leoqnet/orbitprop.hpp"

namespace leoqnet {

struct GridIndex {
    int plane = 0;
    int slot = 0;

    auto operator<=>(const GridIndex&) const = default;
};

enum class PathColor { black, white };

/// A lattice path on the constellation grid. Consecutive nodes are torus
/// nearest neighbors (plane +-1 same slot, or slot +-1 same plane, indices
/// wrapping); the pair source sits at the middle node.
struct GridPath {
    std::vector<GridIndex> nodes;
    PathColor color = PathColor::black;
    int eps_index = 0; // floor(len/2)
};

/// Satellite with the smallest slant distance to the ground point at time t;
/// ties broken toward the lowest (plane, slot) in lexicographic order.
GridIndex nearest_satellite(const Vec3Ecef& ground_point, const Constellation& constellation,
                            double t_s, const EarthModel& earth = {});

/// The black (in-plane first, then across planes) and white (across planes
/// first, then in-plane) candidate paths from s1 to s2, both following the
/// shortest wrapped displacement on the N x M torus; displacement ties break
/// toward the positive index direction. s1 == s2 yields the single-node path
/// twice.
std::array<GridPath, 2> candidate_paths(GridIndex s1, GridIndex s2, int planes, int slots_per_plane);

/// Rate of one candidate path at time t: the middle satellite emits, each arm
/// traverses the ISLs to its end satellite and then the downlink to its
/// ground station. Zero when any hop dips below the Karman line, a cross-
/// plane hop is disabled by the latitude threshold, or a downlink fails the
/// admission or horizon rules.
double path_rate_hz(const GridPath& path, const Constellation& constellation, const Vec3Ecef& ogs1,
                    const Vec3Ecef& ogs2, double t_s, const LinkParams& params,
                    const EarthModel& earth = {});

struct BestRate {
    double rate_hz = 0.0;
    GridPath path;
};

/// Best rate over the two candidate paths between the satellites nearest the
/// two ground stations (ties prefer black). The evaluation is canonicalized
/// on the OGS pair so exchanging the two stations yields identical results.
BestRate best_rate(const GeodeticPoint& ogs1, const GeodeticPoint& ogs2,
                   const Constellation& constellation, double t_s, const LinkParams& params,
                   const EarthModel& earth = {});

/// Sampled end-to-end rate over a simulation window plus summary statistics.
/// mean_all averages every sample; mean_visible averages only the nonzero
/// ones (zero when no sample is nonzero).
struct RateTimeSeries {
    std::vector<double> times_s;
    std::vector<double> rates_hz;
    std::vector<PathColor> path_colors;
    std::vector<GridIndex> eps_nodes;
    double max_rate_hz = 0.0;
    double mean_all_hz = 0.0;
    double mean_visible_hz = 0.0;
};

/// Sample best_rate on a uniform grid t = 0, step, ..., <= window. Ground
/// stations stay fixed in the rotating frame; satellites move on their
/// inertial orbits.
RateTimeSeries time_sweep(const GeodeticPoint& ogs1, const GeodeticPoint& ogs2,
                          const Constellation& constellation, double window_s, double step_s,
                          const LinkParams& params, const EarthModel& earth = {});

} // namespace leoqnet
