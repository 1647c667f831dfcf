#include "leoqnet/orbitprop.hpp"

#include <stdexcept>
#include <string>

namespace leoqnet {

void CircularOrbit::validate() const {
    if (!(altitude_km >= 160.0 && altitude_km <= 36000.0)) {
        throw std::invalid_argument("CircularOrbit: altitude " + std::to_string(altitude_km) +
                                    " km outside [160, 36000]");
    }
    if (!(inclination_rad >= 0.0 && inclination_rad <= kPi)) {
        throw std::invalid_argument("CircularOrbit: inclination outside [0, pi]");
    }
    if (!(raan_rad >= 0.0 && raan_rad < 2.0 * kPi)) {
        throw std::invalid_argument("CircularOrbit: RAAN outside [0, 2*pi)");
    }
    if (!(phase_rad >= 0.0 && phase_rad < 2.0 * kPi)) {
        throw std::invalid_argument("CircularOrbit: phase outside [0, 2*pi)");
    }
}

double wrap_two_pi(double angle_rad) {
    double a = std::fmod(angle_rad, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}

double orbital_period_s(double altitude_km, const EarthModel& earth) {
    const double a = earth.radius_km + altitude_km;
    return 2.0 * kPi * std::sqrt(a * a * a / kMuEarthKm3S2);
}

double orbital_speed_km_s(double altitude_km, const EarthModel& earth) {
    const double a = earth.radius_km + altitude_km;
    return 2.0 * kPi * a / orbital_period_s(altitude_km, earth);
}

Vec3Eci propagate(const CircularOrbit& orbit, double t_s, const EarthModel& earth) {
    const double r = earth.radius_km + orbit.altitude_km;
    const double period = orbital_period_s(orbit.altitude_km, earth);
    // Reduce t modulo the period before forming the angle; keeps long sweeps
    // from losing precision in the trig argument.
    const double u = orbit.phase_rad + 2.0 * kPi * (std::fmod(t_s, period) / period);

    const double cu = std::cos(u);
    const double su = std::sin(u);
    const double ci = std::cos(orbit.inclination_rad);
    const double si = std::sin(orbit.inclination_rad);
    const double co = std::cos(orbit.raan_rad);
    const double so = std::sin(orbit.raan_rad);

    // Rz(raan) * Rx(inclination) * (r*cos u, r*sin u, 0)
    const double xp = r * cu;
    const double yp = r * su * ci;
    const double zp = r * su * si;
    return {xp * co - yp * so, xp * so + yp * co, zp};
}

Constellation Constellation::walker_polar(int planes, int slots_per_plane, double altitude_km,
                                          double phase_offset_rad, bool full_360_spread) {
    if (planes < 1 || slots_per_plane < 1) {
        throw std::invalid_argument("walker_polar: planes and slots_per_plane must be >= 1");
    }
    Constellation c;
    c.planes = planes;
    c.slots_per_plane = slots_per_plane;
    c.altitude_km = altitude_km;
    c.inclination_rad = kPi / 2.0;
    c.orbits.reserve(static_cast<std::size_t>(planes) * slots_per_plane);
    const double raan_span = full_360_spread ? 2.0 * kPi : kPi;
    for (int i = 0; i < planes; ++i) {
        const double raan = wrap_two_pi(raan_span * i / planes);
        for (int j = 0; j < slots_per_plane; ++j) {
            CircularOrbit o;
            o.altitude_km = altitude_km;
            o.inclination_rad = kPi / 2.0;
            o.raan_rad = raan;
            o.phase_rad = wrap_two_pi(2.0 * kPi * j / slots_per_plane + i * phase_offset_rad);
            o.validate();
            c.orbits.push_back(o);
        }
    }
    return c;
}

Constellation Constellation::single(const CircularOrbit& orbit) {
    orbit.validate();
    Constellation c;
    c.planes = 1;
    c.slots_per_plane = 1;
    c.altitude_km = orbit.altitude_km;
    c.inclination_rad = orbit.inclination_rad;
    c.orbits = {orbit};
    return c;
}

const CircularOrbit& Constellation::orbit(int plane, int slot) const {
    if (plane < 0 || plane >= planes || slot < 0 || slot >= slots_per_plane) {
        throw std::out_of_range("Constellation::orbit: index (" + std::to_string(plane) + ", " +
                                std::to_string(slot) + ") outside " + std::to_string(planes) + "x" +
                                std::to_string(slots_per_plane));
    }
    return orbits[static_cast<std::size_t>(plane) * slots_per_plane + slot];
}

Vec3Eci Constellation::state_eci(int plane, int slot, double t_s, const EarthModel& earth) const {
    return propagate(orbit(plane, slot), t_s, earth);
}

Vec3Ecef Constellation::state_ecef(int plane, int slot, double t_s, const EarthModel& earth) const {
    return eci_to_ecef(state_eci(plane, slot, t_s, earth), t_s, earth);
}

} // namespace leoqnet
