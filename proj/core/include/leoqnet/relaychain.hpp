// Single-chain relay scenario: minimum relay count under the Karman-line
// constraint, chain geometry with end satellites at the OGS zeniths and the
// pair source in the middle, and the rate-vs-distance sweep.
#pragma once

#include <span>
#include <vector>

#include "leoqnet/linkbudget.hpp"

namespace leoqnet {

/// Geometry of an odd-length satellite chain spanning the great-circle arc
/// between two ground stations at a shared altitude. For a single satellite
/// (count 1) the chain degenerates to the midpoint zenith case and the
/// spacing/chord fields are zero.
struct ChainGeometry {
    double ground_distance_km = 0.0; // OGS1 - OGS2 arc length D
    double altitude_km = 500.0;      // shared satellite altitude h
    int satellite_count = 1;         // k, odd
    double angular_spacing_rad = 0.0; // D/R_E / (k-1) between neighbors
    double hop_chord_km = 0.0;        // straight-line hop length
    int eps_index = 0;                // middle satellite, (k-1)/2
};

/// Smallest odd satellite count that spans ground distance D at altitude h
/// with every inter-satellite hop staying above the Karman line. A single
/// satellite (k=1, at the arc midpoint) qualifies only when both ground
/// stations are inside its downlink admission region.
int min_relay_count(double ground_distance_km, double altitude_km, const LinkParams& params,
                    const EarthModel& earth = {});

/// Chain with the minimum feasible satellite count, equally spaced along the
/// arc, end satellites at the OGS zeniths. Re-validates the Karman constraint
/// on every hop of the constructed geometry.
ChainGeometry build_chain(double ground_distance_km, double altitude_km, const LinkParams& params,
                          const EarthModel& earth = {});

/// End-to-end pair rate of a chain: each arm is (k-1)/2 inter-satellite hops
/// at the hop chord followed by one zenith downlink; the k=1 chain is the
/// midpoint single-satellite case with two slant downlinks.
double chain_rate_hz(const ChainGeometry& chain, const LinkParams& params,
                     const EarthModel& earth = {});

/// Rate of a single satellite hovering over the arc midpoint (the no-relay
/// baseline); zero when either ground station is outside its admission region.
double single_sat_midpoint_rate_hz(double ground_distance_km, double altitude_km,
                                   const LinkParams& params, const EarthModel& earth = {});

struct ChainSweepPoint {
    double ground_distance_km = 0.0;
    int satellite_count = 0;
    double rate_hz = 0.0;
    double single_sat_rate_hz = 0.0; // no-relay baseline at the same D
};

/// Ground distance at which the satellite count steps from count_before to
/// count_after (the largest D feasible with count_before).
struct ChainDiscontinuity {
    double ground_distance_km = 0.0;
    int count_before = 0;
    int count_after = 0;
};

struct ChainCurve {
    double altitude_km = 0.0;
    std::vector<ChainSweepPoint> points;
    std::vector<ChainDiscontinuity> discontinuities;
};

/// Rate-vs-distance curves, one per altitude, with the single-satellite
/// baseline and the satellite-count increment locations.
std::vector<ChainCurve> sweep_chain(std::span<const double> ground_distance_grid_km,
                                    std::span<const double> altitudes_km, const LinkParams& params,
                                    const EarthModel& earth = {});

} // namespace leoqnet
