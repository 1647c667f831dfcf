#include "leoqnet/constellnet.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace leoqnet {

namespace {

// Shortest wrapped displacement from a to b modulo n, ties toward positive.
int wrapped_displacement(int a, int b, int n) {
    int d = (b - a) % n;
    if (d < 0) d += n;
    if (d > n / 2) d -= n;
    if (2 * d == -n) d += n; // exact half-way tie: go positive
    return d;
}

int wrap_index(int i, int n) {
    int r = i % n;
    if (r < 0) r += n;
    return r;
}

void append_slot_moves(std::vector<GridIndex>& nodes, int displacement, int slots) {
    const int step = displacement >= 0 ? 1 : -1;
    for (int i = 0; i != displacement; i += step) {
        GridIndex next = nodes.back();
        next.slot = wrap_index(next.slot + step, slots);
        nodes.push_back(next);
    }
}

void append_plane_moves(std::vector<GridIndex>& nodes, int displacement, int planes) {
    const int step = displacement >= 0 ? 1 : -1;
    for (int i = 0; i != displacement; i += step) {
        GridIndex next = nodes.back();
        next.plane = wrap_index(next.plane + step, planes);
        nodes.push_back(next);
    }
}

} // namespace

GridIndex nearest_satellite(const Vec3Ecef& ground_point, const Constellation& constellation,
                            double t_s, const EarthModel& earth) {
    GridIndex best{0, 0};
    double best_d2 = std::numeric_limits<double>::infinity();
    for (int p = 0; p < constellation.planes; ++p) {
        for (int s = 0; s < constellation.slots_per_plane; ++s) {
            const Vec3Ecef pos = constellation.state_ecef(p, s, t_s, earth);
            const Vec3Ecef d = pos - ground_point;
            const double d2 = dot(d, d);
            if (d2 < best_d2) { // strict: first (lowest lex) index wins ties
                best_d2 = d2;
                best = {p, s};
            }
        }
    }
    return best;
}

std::array<GridPath, 2> candidate_paths(GridIndex s1, GridIndex s2, int planes,
                                        int slots_per_plane) {
    if (planes < 1 || slots_per_plane < 1) {
        throw std::invalid_argument("candidate_paths: grid dimensions must be >= 1");
    }
    if (s1.plane < 0 || s1.plane >= planes || s2.plane < 0 || s2.plane >= planes ||
        s1.slot < 0 || s1.slot >= slots_per_plane || s2.slot < 0 || s2.slot >= slots_per_plane) {
        throw std::invalid_argument("candidate_paths: node index outside the grid");
    }
    const int dp = wrapped_displacement(s1.plane, s2.plane, planes);
    const int ds = wrapped_displacement(s1.slot, s2.slot, slots_per_plane);

    GridPath black;
    black.color = PathColor::black;
    black.nodes.push_back(s1);
    append_slot_moves(black.nodes, ds, slots_per_plane);
    append_plane_moves(black.nodes, dp, planes);
    black.eps_index = static_cast<int>(black.nodes.size()) / 2;

    GridPath white;
    white.color = PathColor::white;
    white.nodes.push_back(s1);
    append_plane_moves(white.nodes, dp, planes);
    append_slot_moves(white.nodes, ds, slots_per_plane);
    white.eps_index = static_cast<int>(white.nodes.size()) / 2;

    return {std::move(black), std::move(white)};
}

namespace {

// Arm of the photon path from the source node outward to one end node and
// its ground station. Returns false when a hop violates the Karman line or a
// cross-plane hop is disabled by the latitude threshold.
bool build_arm(const GridPath& path, const std::vector<Vec3Ecef>& positions, int from, int to,
               const Vec3Ecef& ogs, const LinkParams& params, const EarthModel& earth,
               std::vector<LinkSegment>& arm) {
    arm.clear();
    const int step = (to >= from) ? 1 : -1;
    const double max_lat_sin =
        std::sin(deg_to_rad(std::clamp(params.cross_plane_max_abs_lat_deg, 0.0, 90.0)));
    for (int i = from; i != to; i += step) {
        const Vec3Ecef& a = positions[static_cast<std::size_t>(i)];
        const Vec3Ecef& b = positions[static_cast<std::size_t>(i + step)];
        if (los_min_altitude_km(a, b, earth) < earth.karman_altitude_km) {
            return false;
        }
        const bool cross_plane = path.nodes[static_cast<std::size_t>(i)].plane !=
                                 path.nodes[static_cast<std::size_t>(i + step)].plane;
        if (cross_plane && params.cross_plane_max_abs_lat_deg < 90.0) {
            const double sin_lat_a = std::abs(a.z) / norm(a);
            const double sin_lat_b = std::abs(b.z) / norm(b);
            if (sin_lat_a > max_lat_sin || sin_lat_b > max_lat_sin) {
                return false;
            }
        }
        LinkSegment seg = isl_transmittance(distance_km(a, b) * 1000.0, params);
        if (i == from && !params.include_eps_relay_loss) {
            seg.breakdown.relay = 1.0;
            seg.transmittance = seg.breakdown.product();
        }
        arm.push_back(seg);
    }
    const Vec3Ecef& end = positions[static_cast<std::size_t>(to)];
    const double altitude = norm(end) - earth.radius_km;
    const double slant = distance_km(end, ogs);
    LinkSegment down = downlink_transmittance(altitude, std::max(slant, altitude), params, earth);
    if (from == to && !params.include_eps_relay_loss) {
        down.breakdown.relay = 1.0;
        down.transmittance = down.breakdown.product();
    }
    arm.push_back(down);
    return true;
}

} // namespace

double path_rate_hz(const GridPath& path, const Constellation& constellation, const Vec3Ecef& ogs1,
                    const Vec3Ecef& ogs2, double t_s, const LinkParams& params,
                    const EarthModel& earth) {
    if (path.nodes.empty()) {
        throw std::invalid_argument("path_rate_hz: empty path");
    }
    std::vector<Vec3Ecef> positions;
    positions.reserve(path.nodes.size());
    for (const GridIndex& node : path.nodes) {
        positions.push_back(constellation.state_ecef(node.plane, node.slot, t_s, earth));
    }
    const int last = static_cast<int>(path.nodes.size()) - 1;
    std::vector<LinkSegment> arm1;
    std::vector<LinkSegment> arm2;
    if (!build_arm(path, positions, path.eps_index, 0, ogs1, params, earth, arm1) ||
        !build_arm(path, positions, path.eps_index, last, ogs2, params, earth, arm2)) {
        return 0.0;
    }
    return pair_rate_hz(arm1, arm2, params);
}

BestRate best_rate(const GeodeticPoint& ogs1, const GeodeticPoint& ogs2,
                   const Constellation& constellation, double t_s, const LinkParams& params,
                   const EarthModel& earth) {
    // Canonical OGS order makes the result exactly symmetric under exchange.
    auto key = [](const GeodeticPoint& p) {
        return std::make_tuple(p.latitude_deg, p.longitude_deg, p.altitude_km);
    };
    const GeodeticPoint& a = key(ogs2) < key(ogs1) ? ogs2 : ogs1;
    const GeodeticPoint& b = key(ogs2) < key(ogs1) ? ogs1 : ogs2;

    const Vec3Ecef pa = geodetic_to_ecef(a, earth);
    const Vec3Ecef pb = geodetic_to_ecef(b, earth);
    const GridIndex s1 = nearest_satellite(pa, constellation, t_s, earth);
    const GridIndex s2 = nearest_satellite(pb, constellation, t_s, earth);

    auto paths = candidate_paths(s1, s2, constellation.planes, constellation.slots_per_plane);
    BestRate best;
    best.rate_hz = path_rate_hz(paths[0], constellation, pa, pb, t_s, params, earth);
    best.path = std::move(paths[0]);
    const double white_rate = path_rate_hz(paths[1], constellation, pa, pb, t_s, params, earth);
    if (white_rate > best.rate_hz) {
        best.rate_hz = white_rate;
        best.path = std::move(paths[1]);
    }
    return best;
}

RateTimeSeries time_sweep(const GeodeticPoint& ogs1, const GeodeticPoint& ogs2,
                          const Constellation& constellation, double window_s, double step_s,
                          const LinkParams& params, const EarthModel& earth) {
    if (!(step_s > 0.0) || !(window_s >= step_s)) {
        throw std::invalid_argument("time_sweep: need step_s > 0 and window_s >= step_s");
    }
    const std::size_t samples = static_cast<std::size_t>(window_s / step_s) + 1;
    RateTimeSeries series;
    series.times_s.reserve(samples);
    series.rates_hz.reserve(samples);
    series.path_colors.reserve(samples);
    series.eps_nodes.reserve(samples);

    double sum = 0.0;
    double visible_sum = 0.0;
    std::size_t visible_count = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) * step_s;
        const BestRate best = best_rate(ogs1, ogs2, constellation, t, params, earth);
        series.times_s.push_back(t);
        series.rates_hz.push_back(best.rate_hz);
        series.path_colors.push_back(best.path.color);
        series.eps_nodes.push_back(best.path.nodes[static_cast<std::size_t>(best.path.eps_index)]);
        series.max_rate_hz = std::max(series.max_rate_hz, best.rate_hz);
        sum += best.rate_hz;
        if (best.rate_hz > 0.0) {
            visible_sum += best.rate_hz;
            ++visible_count;
        }
    }
    series.mean_all_hz = sum / static_cast<double>(samples);
    series.mean_visible_hz =
        visible_count == 0 ? 0.0 : visible_sum / static_cast<double>(visible_count);
    return series;
}

} // namespace leoqnet
