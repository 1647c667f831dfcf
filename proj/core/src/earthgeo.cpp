#include "leoqnet/earthgeo.hpp"

#include <algorithm>

namespace leoqnet {

Vec3Ecef geodetic_to_ecef(const GeodeticPoint& p, const EarthModel& earth) {
    p.validate();
    const double lat = deg_to_rad(p.latitude_deg);
    const double lon = deg_to_rad(p.longitude_deg);
    const double r = earth.radius_km + p.altitude_km;
    return {r * std::cos(lat) * std::cos(lon), r * std::cos(lat) * std::sin(lon), r * std::sin(lat)};
}

GeodeticPoint ecef_to_geodetic(const Vec3Ecef& v, const EarthModel& earth) {
    const double r = norm(v);
    if (r == 0.0) {
        throw std::invalid_argument("ecef_to_geodetic: zero-length position vector");
    }
    GeodeticPoint p;
    p.latitude_deg = rad_to_deg(std::asin(std::clamp(v.z / r, -1.0, 1.0)));
    p.longitude_deg = (v.x == 0.0 && v.y == 0.0) ? 0.0 : rad_to_deg(std::atan2(v.y, v.x));
    p.altitude_km = r - earth.radius_km;
    return p;
}

Vec3Ecef eci_to_ecef(const Vec3Eci& v, double t_s, const EarthModel& earth) {
    const double theta = earth.rotation_rate_rad_s * t_s;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    // Rz(-theta): the Earth-fixed frame rotates eastward under the inertial one.
    return {v.x * c + v.y * s, -v.x * s + v.y * c, v.z};
}

double slant_range_km(double altitude_km, double ground_km, const EarthModel& earth) {
    const double re = earth.radius_km;
    const double rs = re + altitude_km;
    const double alpha = ground_km / re;
    // Law of cosines in the (Earth center, ground point, satellite) triangle.
    const double l2 = re * re + rs * rs - 2.0 * re * rs * std::cos(alpha);
    return std::sqrt(std::max(l2, 0.0));
}

double ground_distance_km(double altitude_km, double slant_km, const EarthModel& earth) {
    const double re = earth.radius_km;
    const double rs = re + altitude_km;
    const double cos_alpha = (re * re + rs * rs - slant_km * slant_km) / (2.0 * re * rs);
    return re * std::acos(std::clamp(cos_alpha, -1.0, 1.0));
}

} // namespace leoqnet
