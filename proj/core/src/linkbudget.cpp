#include "leoqnet/linkbudget.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace leoqnet {

void LinkParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0)) {
            throw std::invalid_argument(std::string("LinkParams: ") + name + " must be > 0");
        }
    };
    positive(wavelength_m, "wavelength_m");
    positive(beam_waist_m, "beam_waist_m");
    positive(ogs_aperture_m, "ogs_aperture_m");
    positive(sat_aperture_m, "sat_aperture_m");
    positive(source_rate_hz, "source_rate_hz");
    positive(max_downlink_ground_km, "max_downlink_ground_km");
    auto efficiency = [](double v, const char* name) {
        if (!(v > 0.0 && v <= 1.0)) {
            throw std::invalid_argument(std::string("LinkParams: ") + name + " must be in (0, 1]");
        }
    };
    efficiency(eta_zenith, "eta_zenith");
    efficiency(relay_efficiency, "relay_efficiency");
    efficiency(pointing_efficiency, "pointing_efficiency");
    if (!(cross_plane_max_abs_lat_deg >= 0.0 && cross_plane_max_abs_lat_deg <= 90.0)) {
        throw std::invalid_argument("LinkParams: cross_plane_max_abs_lat_deg must be in [0, 90]");
    }
}

double LinkParams::zenith_cutoff_rad(const EarthModel& earth) const {
    const double slant = slant_range_km(kDownlinkDesignAltitudeKm, max_downlink_ground_km, earth);
    const double zeta = zenith_angle_rad(kDownlinkDesignAltitudeKm, slant, earth);
    // Never admit at or past the horizon.
    return std::min(zeta, kPi / 2.0 - 1e-9);
}

double rayleigh_range_m(double beam_waist_m, double wavelength_m) {
    if (!(beam_waist_m > 0.0) || !(wavelength_m > 0.0)) {
        throw std::invalid_argument("rayleigh_range_m: waist and wavelength must be > 0");
    }
    return kPi * beam_waist_m * beam_waist_m / wavelength_m;
}

double eta_fs(double length_m, double beam_waist_m, double aperture_m, double wavelength_m) {
    if (!(length_m >= 0.0)) {
        throw std::invalid_argument("eta_fs: length must be >= 0");
    }
    const double d_r = rayleigh_range_m(beam_waist_m, wavelength_m);
    if (!(aperture_m > 0.0)) {
        throw std::invalid_argument("eta_fs: aperture must be > 0");
    }
    const double ratio = length_m / d_r;
    const double spot = beam_waist_m * beam_waist_m * (1.0 + ratio * ratio);
    return -std::expm1(-2.0 * aperture_m * aperture_m / spot);
}

double eta_fs_farfield(double length_m, double beam_waist_m, double aperture_m, double wavelength_m) {
    if (!(length_m > 0.0)) {
        throw std::invalid_argument("eta_fs_farfield: length must be > 0");
    }
    const double amp = std::sqrt(2.0) * kPi * aperture_m * beam_waist_m / (length_m * wavelength_m);
    return amp * amp;
}

double zenith_angle_rad(double altitude_km, double slant_km, const EarthModel& earth) {
    if (slant_km < altitude_km) {
        throw std::invalid_argument("zenith_angle_rad: slant range " + std::to_string(slant_km) +
                                    " km below altitude " + std::to_string(altitude_km) + " km");
    }
    if (slant_km == 0.0) return 0.0;
    const double c = altitude_km / slant_km -
                     0.5 * (slant_km * slant_km - altitude_km * altitude_km) / (slant_km * earth.radius_km);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

double eta_atm(double altitude_km, double slant_km, double eta_zenith, const EarthModel& earth) {
    const double zeta = zenith_angle_rad(altitude_km, slant_km, earth);
    const double cz = std::cos(zeta);
    if (!(zeta < kPi / 2.0) || !(cz > 0.0)) {
        return 0.0;
    }
    return std::pow(eta_zenith, 1.0 / cz);
}

double optimal_beam_waist_m(double length_m, double wavelength_m) {
    if (!(length_m > 0.0) || !(wavelength_m > 0.0)) {
        throw std::invalid_argument("optimal_beam_waist_m: length and wavelength must be > 0");
    }
    return std::sqrt(length_m * wavelength_m / kPi);
}

LinkSegment isl_transmittance(double length_m, const LinkParams& params) {
    if (!(length_m > 0.0)) {
        throw std::invalid_argument("isl_transmittance: length must be > 0");
    }
    const double waist = params.beam_waist_mode == BeamWaistMode::per_link_optimal
                             ? optimal_beam_waist_m(length_m, params.wavelength_m)
                             : params.beam_waist_m;
    LinkSegment seg;
    seg.kind = SegmentKind::isl;
    seg.length_km = length_m / 1000.0;
    seg.breakdown.diffraction = eta_fs(length_m, waist, params.sat_aperture_m, params.wavelength_m);
    seg.breakdown.relay = params.relay_efficiency;
    seg.breakdown.pointing = params.pointing_efficiency;
    seg.transmittance = seg.breakdown.product();
    return seg;
}

LinkSegment downlink_transmittance(double altitude_km, double slant_km, const LinkParams& params,
                                   const EarthModel& earth) {
    if (slant_km < altitude_km) {
        throw std::invalid_argument("downlink_transmittance: slant range below altitude");
    }
    LinkSegment seg;
    seg.kind = SegmentKind::downlink;
    seg.length_km = slant_km;
    seg.breakdown.relay = params.relay_efficiency;
    seg.breakdown.pointing = params.pointing_on_downlink ? params.pointing_efficiency : 1.0;

    const double zeta = zenith_angle_rad(altitude_km, slant_km, earth);
    if (zeta > params.zenith_cutoff_rad(earth)) {
        seg.breakdown.diffraction = 0.0;
        seg.breakdown.atmosphere = 0.0;
        seg.transmittance = 0.0;
        return seg;
    }
    seg.breakdown.diffraction =
        eta_fs(slant_km * 1000.0, params.beam_waist_m, params.ogs_aperture_m, params.wavelength_m);
    seg.breakdown.atmosphere = eta_atm(altitude_km, slant_km, params.eta_zenith, earth);
    seg.transmittance = seg.breakdown.product();
    return seg;
}

namespace {

double arm_transmittance(std::span<const LinkSegment> arm) {
    if (arm.empty()) {
        throw std::invalid_argument("pair_rate_hz: arm must contain at least one segment");
    }
    if (arm.back().kind != SegmentKind::downlink) {
        throw std::invalid_argument("pair_rate_hz: arm must end in a downlink segment");
    }
    double t = 1.0;
    for (std::size_t i = 0; i < arm.size(); ++i) {
        if (i + 1 < arm.size() && arm[i].kind == SegmentKind::downlink) {
            throw std::invalid_argument("pair_rate_hz: downlink segment before the end of an arm");
        }
        t *= arm[i].transmittance;
    }
    return t;
}

} // namespace

double pair_rate_hz(std::span<const LinkSegment> arm1, std::span<const LinkSegment> arm2,
                    const LinkParams& params) {
    return params.source_rate_hz * arm_transmittance(arm1) * arm_transmittance(arm2);
}

double max_downlink_ground_range_km(double altitude_km, const LinkParams& params,
                                    const EarthModel& earth) {
    const double c = std::cos(params.zenith_cutoff_rad(earth));
    const double re = earth.radius_km;
    const double h = altitude_km;
    // Solve the zenith-angle relation for the slant range at the cutoff:
    // L^2 + 2*R_E*c*L - (2*R_E*h + h^2) = 0.
    const double slant = -re * c + std::sqrt(re * re * c * c + 2.0 * re * h + h * h);
    return ground_distance_km(altitude_km, slant, earth);
}

double to_db_loss(double transmittance) {
    if (transmittance <= 0.0) return std::numeric_limits<double>::infinity();
    return -10.0 * std::log10(transmittance);
}

double from_db_loss(double db) {
    return std::pow(10.0, -db / 10.0);
}

} // namespace leoqnet
