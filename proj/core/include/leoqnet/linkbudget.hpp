// Per-link transmittance physics for free-space optical photon channels:
// Gaussian-beam diffraction, Beer-Lambert atmosphere, relay and pointing
// efficiencies, and the two-arm entangled-pair rate composition.
#pragma once

#include <span>
#include <vector>

#include "leoqnet/earthgeo.hpp"

namespace leoqnet {

/// Transmit beam-waist policy for inter-satellite links. Downlinks always use
/// the fixed waist.
enum class BeamWaistMode { fixed, per_link_optimal };

/// Optical and source parameters shared by every link evaluation.
///
/// The downlink admission rule: a satellite talks to a ground station only
/// while the line of sight stays inside a maximum zenith angle. That bound is
/// calibrated so that at the 500 km design altitude it equals a nadir-to-OGS
/// ground distance of max_downlink_ground_km; at other altitudes the same
/// zenith-angle bound applies, which keeps the admitted region tied to the
/// atmospheric-loss knee rather than to a fixed arc length.
struct LinkParams {
    double wavelength_m = 810e-9;       // operating wavelength
    double beam_waist_m = 0.10;         // transmit waist w0 (fixed mode, and all downlinks)
    double ogs_aperture_m = 0.75;       // ground telescope aperture radius
    double sat_aperture_m = 0.25;       // satellite telescope aperture radius
    double eta_zenith = 0.47;           // atmospheric transmittance at zenith
    double relay_efficiency = 0.99;     // per-satellite port-to-port throughput
    double pointing_efficiency = 0.80;  // per-ISL pointing-error factor
    double source_rate_hz = 1e9;        // entangled-pair generation rate N_EPS
    double max_downlink_ground_km = 1000.0; // admission radius at the 500 km design altitude
    BeamWaistMode beam_waist_mode = BeamWaistMode::fixed;

    bool pointing_on_downlink = false;   // apply the pointing factor to downlinks too
    bool include_eps_relay_loss = true;  // count the source satellite's optics as one relay loss
    double cross_plane_max_abs_lat_deg = 90.0; // disable cross-plane ISLs above this latitude

    void validate() const;

    /// Zenith-angle bound implied by max_downlink_ground_km at the design
    /// altitude, capped just below the horizon.
    double zenith_cutoff_rad(const EarthModel& earth = {}) const;
};

/// Altitude at which max_downlink_ground_km is defined.
inline constexpr double kDownlinkDesignAltitudeKm = 500.0;

enum class SegmentKind { isl, downlink };

struct LossBreakdown {
    double diffraction = 1.0;
    double atmosphere = 1.0;
    double relay = 1.0;
    double pointing = 1.0;

    double product() const { return diffraction * atmosphere * relay * pointing; }
};

/// One hop of a photon path with its transmittance and loss factors.
/// transmittance equals the product of the breakdown factors.
struct LinkSegment {
    SegmentKind kind = SegmentKind::isl;
    double length_km = 0.0;
    LossBreakdown breakdown;
    double transmittance = 1.0;
};

/// Rayleigh range d_R = pi*w0^2/lambda of a Gaussian beam.
double rayleigh_range_m(double beam_waist_m, double wavelength_m);

/// Free-space (diffraction-only) transmittance of a Gaussian beam of waist w0
/// collected by an aperture of radius r_a after distance L:
/// 1 - exp(-2*r_a^2 / (w0^2 * (1 + (L/d_R)^2))).
double eta_fs(double length_m, double beam_waist_m, double aperture_m, double wavelength_m);

/// Far-field approximation (sqrt(2)*pi*r_a*w0 / (L*lambda))^2, valid for
/// L >> d_R and small collected fraction; falls off as 1/L^2.
double eta_fs_farfield(double length_m, double beam_waist_m, double aperture_m, double wavelength_m);

/// Zenith angle at a ground station seeing a satellite at altitude h over
/// slant range L: cos(zeta) = h/L - (L^2 - h^2) / (2*L*R_E).
double zenith_angle_rad(double altitude_km, double slant_km, const EarthModel& earth = {});

/// Beer-Lambert atmospheric transmittance eta0^sec(zeta); zero at or below
/// the horizon.
double eta_atm(double altitude_km, double slant_km, double eta_zenith, const EarthModel& earth = {});

/// Waist maximizing eta_fs at distance L: w0* = sqrt(L*lambda/pi). At this
/// waist L equals the Rayleigh range.
double optimal_beam_waist_m(double length_m, double wavelength_m);

/// Inter-satellite hop: diffraction at the satellite aperture (fixed or
/// per-link-optimal waist), one relay loss, one pointing loss, no atmosphere.
LinkSegment isl_transmittance(double length_m, const LinkParams& params);

/// Satellite-to-ground hop: diffraction at the OGS aperture with the fixed
/// waist, atmospheric loss, one relay loss for the emitting satellite optics.
/// Zero outside the downlink admission region (see LinkParams).
LinkSegment downlink_transmittance(double altitude_km, double slant_km, const LinkParams& params,
                                   const EarthModel& earth = {});

/// Entangled-pair rate received by the two arms:
/// N_EPS * prod(arm1 transmittances) * prod(arm2 transmittances).
/// Each arm must be non-empty and end in exactly one downlink segment.
double pair_rate_hz(std::span<const LinkSegment> arm1, std::span<const LinkSegment> arm2,
                    const LinkParams& params);

/// Largest admitted nadir-to-OGS ground distance for a downlink from
/// altitude h under the zenith-angle admission rule.
double max_downlink_ground_range_km(double altitude_km, const LinkParams& params,
                                    const EarthModel& earth = {});

/// Loss in dB, -10*log10(transmittance); +inf for zero transmittance.
double to_db_loss(double transmittance);

/// Inverse of to_db_loss.
double from_db_loss(double db);

} // namespace leoqnet
