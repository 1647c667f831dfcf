// Spherical-Earth geometry: frame-tagged Cartesian vectors, geodetic
// conversions, Earth rotation, and line-of-sight altitude tests.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace leoqnet {

inline constexpr double kPi = 3.14159265358979323846;

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Spherical Earth with sidereal spin. The simulation epoch t=0 aligns the
/// inertial (ECI) and rotating (ECEF) frames.
struct EarthModel {
    double radius_km = 6371.0;                 // mean Earth radius R_E
    double rotation_rate_rad_s = 7.2921159e-5; // sidereal rotation rate
    double karman_altitude_km = 100.0;         // top of the atmosphere

    void validate() const {
        if (radius_km <= 0.0 || rotation_rate_rad_s <= 0.0 || karman_altitude_km <= 0.0) {
            throw std::invalid_argument("EarthModel: all parameters must be positive");
        }
    }
};

/// Coordinate frame tag. ECI is inertial; ECEF co-rotates with the Earth.
/// Mixing frames in a distance or angle computation is a compile error.
enum class Frame { eci, ecef };

template <Frame F>
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
};

using Vec3Eci = Vec3<Frame::eci>;
using Vec3Ecef = Vec3<Frame::ecef>;

template <Frame F>
inline double dot(const Vec3<F>& a, const Vec3<F>& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <Frame F>
inline Vec3<F> cross(const Vec3<F>& a, const Vec3<F>& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <Frame F>
inline double norm(const Vec3<F>& v) {
    return std::sqrt(dot(v, v));
}

template <Frame F>
inline double distance_km(const Vec3<F>& a, const Vec3<F>& b) {
    return norm(a - b);
}

/// Ground-station or surface location on the spherical Earth
/// (geocentric latitude; altitude 0 for optical ground stations).
struct GeodeticPoint {
    double latitude_deg = 0.0;  // [-90, 90]
    double longitude_deg = 0.0; // [-180, 180]
    double altitude_km = 0.0;   // >= 0

    void validate() const {
        if (!(latitude_deg >= -90.0 && latitude_deg <= 90.0)) {
            throw std::invalid_argument("GeodeticPoint: latitude " + std::to_string(latitude_deg) +
                                        " outside [-90, 90]");
        }
        if (!(longitude_deg >= -180.0 && longitude_deg <= 180.0)) {
            throw std::invalid_argument("GeodeticPoint: longitude " + std::to_string(longitude_deg) +
                                        " outside [-180, 180]");
        }
        if (!(altitude_km >= 0.0)) {
            throw std::invalid_argument("GeodeticPoint: altitude must be >= 0 km");
        }
    }
};

/// Spherical mapping to Earth-fixed Cartesian, |result| = R_E + altitude.
Vec3Ecef geodetic_to_ecef(const GeodeticPoint& p, const EarthModel& earth = {});

/// Inverse of geodetic_to_ecef.
GeodeticPoint ecef_to_geodetic(const Vec3Ecef& v, const EarthModel& earth = {});

/// Rotate an inertial position into the Earth-fixed frame at time t
/// (rotation about the z axis by -omega*t; norm and z are preserved).
Vec3Ecef eci_to_ecef(const Vec3Eci& v, double t_s, const EarthModel& earth = {});

/// Angle subtended at the Earth center by two position vectors, in [0, pi].
/// Great-circle ground distance is R_E times this angle.
template <Frame F>
double central_angle_rad(const Vec3<F>& a, const Vec3<F>& b) {
    const double na = norm(a);
    const double nb = norm(b);
    if (na == 0.0 || nb == 0.0) {
        throw std::invalid_argument("central_angle_rad: zero-length position vector");
    }
    // atan2 form is well-conditioned near 0 and pi.
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

/// Minimum altitude above the sphere along the straight segment a->b, in km.
/// Negative if the segment dips below the surface. If the perpendicular foot
/// from the Earth center lies outside the segment, the minimum is at an
/// endpoint.
template <Frame F>
double los_min_altitude_km(const Vec3<F>& a, const Vec3<F>& b, const EarthModel& earth = {}) {
    const Vec3<F> d = b - a;
    const double dd = dot(d, d);
    double t = 0.0;
    if (dd > 0.0) {
        t = -dot(a, d) / dd;
        t = std::clamp(t, 0.0, 1.0);
    }
    const Vec3<F> closest = a + t * d;
    return norm(closest) - earth.radius_km;
}

/// Slant range from a ground point to a satellite at altitude h whose nadir
/// is ground_km away along the great circle.
double slant_range_km(double altitude_km, double ground_km, const EarthModel& earth = {});

/// Great-circle distance from a ground point to the satellite nadir, given
/// the slant range (inverse of slant_range_km).
double ground_distance_km(double altitude_km, double slant_km, const EarthModel& earth = {});

} // namespace leoqnet
