#include "leoqnet/relaychain.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace leoqnet {

namespace {

constexpr int kMaxChainSatellites = 9999;

void check_chain_inputs(double d_km, double h_km, const EarthModel& earth) {
    if (!(d_km >= 0.0)) {
        throw std::invalid_argument("relay chain: ground distance must be >= 0");
    }
    if (d_km > kPi * earth.radius_km) {
        throw std::invalid_argument("relay chain: ground distance " + std::to_string(d_km) +
                                    " km exceeds half the Earth circumference");
    }
    if (!(h_km > earth.karman_altitude_km)) {
        throw std::invalid_argument("relay chain: altitude must exceed the Karman line");
    }
}

// Minimum altitude of the chord between two satellites at altitude h
// separated by central angle delta.
double hop_min_altitude_km(double h_km, double delta_rad, const EarthModel& earth) {
    return (earth.radius_km + h_km) * std::cos(delta_rad / 2.0) - earth.radius_km;
}

bool single_sat_covers(double d_km, double h_km, const LinkParams& params, const EarthModel& earth) {
    return d_km / 2.0 <= max_downlink_ground_range_km(h_km, params, earth);
}

std::vector<LinkSegment> chain_arm(const ChainGeometry& chain, const LinkParams& params,
                                   const EarthModel& earth, bool strip_eps_relay) {
    std::vector<LinkSegment> arm;
    const int hops = (chain.satellite_count - 1) / 2;
    arm.reserve(static_cast<std::size_t>(hops) + 1);
    for (int i = 0; i < hops; ++i) {
        LinkSegment seg = isl_transmittance(chain.hop_chord_km * 1000.0, params);
        if (i == 0 && strip_eps_relay) {
            seg.breakdown.relay = 1.0;
            seg.transmittance = seg.breakdown.product();
        }
        arm.push_back(seg);
    }
    if (chain.satellite_count == 1) {
        const double slant = slant_range_km(chain.altitude_km, chain.ground_distance_km / 2.0, earth);
        arm.push_back(downlink_transmittance(chain.altitude_km, slant, params, earth));
    } else {
        arm.push_back(downlink_transmittance(chain.altitude_km, chain.altitude_km, params, earth));
    }
    if (strip_eps_relay && chain.satellite_count == 1) {
        arm.back().breakdown.relay = 1.0;
        arm.back().transmittance = arm.back().breakdown.product();
    }
    return arm;
}

} // namespace

int min_relay_count(double ground_distance_km, double altitude_km, const LinkParams& params,
                    const EarthModel& earth) {
    check_chain_inputs(ground_distance_km, altitude_km, earth);
    if (single_sat_covers(ground_distance_km, altitude_km, params, earth)) {
        return 1;
    }
    const double alpha = ground_distance_km / earth.radius_km;
    for (int k = 3; k <= kMaxChainSatellites; k += 2) {
        const double delta = alpha / (k - 1);
        if (hop_min_altitude_km(altitude_km, delta, earth) >= earth.karman_altitude_km) {
            return k;
        }
    }
    throw std::invalid_argument("min_relay_count: no feasible chain within " +
                                std::to_string(kMaxChainSatellites) + " satellites");
}

ChainGeometry build_chain(double ground_distance_km, double altitude_km, const LinkParams& params,
                          const EarthModel& earth) {
    ChainGeometry chain;
    chain.ground_distance_km = ground_distance_km;
    chain.altitude_km = altitude_km;
    chain.satellite_count = min_relay_count(ground_distance_km, altitude_km, params, earth);
    chain.eps_index = (chain.satellite_count - 1) / 2;
    if (chain.satellite_count > 1) {
        const double alpha = ground_distance_km / earth.radius_km;
        chain.angular_spacing_rad = alpha / (chain.satellite_count - 1);
        chain.hop_chord_km =
            2.0 * (earth.radius_km + altitude_km) * std::sin(chain.angular_spacing_rad / 2.0);

        // Re-check the Karman constraint on the constructed Cartesian hops.
        const double r = earth.radius_km + altitude_km;
        for (int i = 0; i + 1 < chain.satellite_count; ++i) {
            const double t0 = i * chain.angular_spacing_rad;
            const double t1 = (i + 1) * chain.angular_spacing_rad;
            const Vec3Ecef a{r * std::cos(t0), r * std::sin(t0), 0.0};
            const Vec3Ecef b{r * std::cos(t1), r * std::sin(t1), 0.0};
            if (los_min_altitude_km(a, b, earth) < earth.karman_altitude_km - 1e-6) {
                throw std::logic_error("build_chain: constructed hop dips below the Karman line");
            }
        }
    }
    return chain;
}

double chain_rate_hz(const ChainGeometry& chain, const LinkParams& params, const EarthModel& earth) {
    const bool strip_eps = !params.include_eps_relay_loss;
    const std::vector<LinkSegment> arm1 = chain_arm(chain, params, earth, strip_eps);
    const std::vector<LinkSegment> arm2 = chain_arm(chain, params, earth, strip_eps);
    return pair_rate_hz(arm1, arm2, params);
}

double single_sat_midpoint_rate_hz(double ground_distance_km, double altitude_km,
                                   const LinkParams& params, const EarthModel& earth) {
    check_chain_inputs(ground_distance_km, altitude_km, earth);
    ChainGeometry chain;
    chain.ground_distance_km = ground_distance_km;
    chain.altitude_km = altitude_km;
    chain.satellite_count = 1;
    return chain_rate_hz(chain, params, earth);
}

std::vector<ChainCurve> sweep_chain(std::span<const double> ground_distance_grid_km,
                                    std::span<const double> altitudes_km, const LinkParams& params,
                                    const EarthModel& earth) {
    if (ground_distance_grid_km.empty() || altitudes_km.empty()) {
        throw std::invalid_argument("sweep_chain: grids must be non-empty");
    }
    std::vector<ChainCurve> curves;
    curves.reserve(altitudes_km.size());
    for (const double h : altitudes_km) {
        ChainCurve curve;
        curve.altitude_km = h;
        curve.points.reserve(ground_distance_grid_km.size());
        for (const double d : ground_distance_grid_km) {
            const ChainGeometry chain = build_chain(d, h, params, earth);
            ChainSweepPoint point;
            point.ground_distance_km = d;
            point.satellite_count = chain.satellite_count;
            point.rate_hz = chain_rate_hz(chain, params, earth);
            point.single_sat_rate_hz = single_sat_midpoint_rate_hz(d, h, params, earth);
            curve.points.push_back(point);
        }

        // Count-increment locations: the largest D feasible for each k in the
        // swept range. For k=1 that is twice the downlink admission radius;
        // for k>=3 it is where the hop chord grazes the Karman line. The
        // counts on either side are re-derived from min_relay_count so the
        // labels stay correct even when a count is skipped entirely.
        const double d_lo = ground_distance_grid_km.front();
        const double d_hi = ground_distance_grid_km.back();
        auto add_boundary = [&](double d_star) {
            if (!(d_star >= d_lo && d_star < d_hi)) return;
            const int before = min_relay_count(std::max(d_star - 1e-6, d_lo), h, params, earth);
            const int after = min_relay_count(std::min(d_star + 1e-6, d_hi), h, params, earth);
            if (after > before) {
                curve.discontinuities.push_back({d_star, before, after});
            }
        };
        const double d1 = 2.0 * max_downlink_ground_range_km(h, params, earth);
        add_boundary(d1);
        const double beta =
            std::acos((earth.radius_km + earth.karman_altitude_km) / (earth.radius_km + h));
        for (int k = 3;; k += 2) {
            const double dk = 2.0 * (k - 1) * beta * earth.radius_km;
            if (dk >= d_hi || dk > kPi * earth.radius_km) break;
            if (dk > d1) {
                add_boundary(dk);
            }
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

} // namespace leoqnet
