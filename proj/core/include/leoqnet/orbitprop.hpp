// Circular two-body orbit propagation and Walker polar-constellation
// generation. Two-body uniform circular motion only; no J2, no drag.
#pragma once

#include <vector>

#include "leoqnet/earthgeo.hpp"

namespace leoqnet {

/// Standard gravitational parameter of the Earth [km^3/s^2].
inline constexpr double kMuEarthKm3S2 = 3.986004418e5;

/// One satellite on a circular orbit. phase_rad is the argument of latitude
/// at t=0, measured from the ascending node.
struct CircularOrbit {
    double altitude_km = 500.0;   // [160, 36000]
    double inclination_rad = 0.0; // [0, pi]
    double raan_rad = 0.0;        // [0, 2*pi)
    double phase_rad = 0.0;       // [0, 2*pi)

    void validate() const;
};

/// Wrap an angle into [0, 2*pi).
double wrap_two_pi(double angle_rad);

/// Keplerian period of a circular orbit at the given altitude.
double orbital_period_s(double altitude_km, const EarthModel& earth = {});

/// Constant orbital speed 2*pi*(R_E+h)/T.
double orbital_speed_km_s(double altitude_km, const EarthModel& earth = {});

/// Inertial position at time t: uniform motion in the orbital plane, the
/// plane tilted by the inclination and rotated by the RAAN about z.
/// |result| = R_E + altitude.
Vec3Eci propagate(const CircularOrbit& orbit, double t_s, const EarthModel& earth = {});

/// N x M grid of satellites indexed by (plane, slot). All satellites share
/// altitude and inclination; plane RAANs and in-plane phases are equispaced.
struct Constellation {
    int planes = 1;
    int slots_per_plane = 1;
    double altitude_km = 500.0;
    double inclination_rad = 0.0;
    std::vector<CircularOrbit> orbits; // plane-major order, planes*slots_per_plane entries

    /// Polar Walker grid: inclinations pi/2, plane RAANs equispaced over 180
    /// degrees by default (a polar plane covers both hemispheres, so planes at
    /// RAAN and RAAN+pi coincide; the 360-degree spread is kept as an option
    /// for sensitivity checks). Phase of slot j in plane i is
    /// j*2*pi/M + i*phase_offset_rad.
    static Constellation walker_polar(int planes, int slots_per_plane, double altitude_km,
                                      double phase_offset_rad = 0.0, bool full_360_spread = false);

    /// Single-satellite "constellation" wrapping one orbit.
    static Constellation single(const CircularOrbit& orbit);

    const CircularOrbit& orbit(int plane, int slot) const;

    /// Inertial position of satellite (plane, slot) at time t.
    Vec3Eci state_eci(int plane, int slot, double t_s, const EarthModel& earth = {}) const;

    /// Earth-fixed position of satellite (plane, slot) at time t.
    Vec3Ecef state_ecef(int plane, int slot, double t_s, const EarthModel& earth = {}) const;
};

} // namespace leoqnet
