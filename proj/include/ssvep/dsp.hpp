#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ssvep/epoch.hpp"

namespace ssvep {

/// Band-pass design parameters. `order` counts total poles and must be
/// even: the filter is realized as an order/2 Butterworth high-pass at
/// low_hz cascaded with an order/2 Butterworth low-pass at high_hz, each
/// built by bilinear transform and run as second-order sections.
struct BandpassSpec {
    double low_hz = 4.0;
    double high_hz = 45.0;
    int order = 6;
};

/// One second-order section, a0 normalized to 1. First-order sections set
/// b2 = a2 = 0.
struct Biquad {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;
};

/// Cascade design for `spec` at sampling rate F. Throws if the band edges
/// are not 0 < low < high < F/2 or the order is not a positive even count.
std::vector<Biquad> design_bandpass(const BandpassSpec& spec, double sample_rate_hz);

/// Cascade magnitude response at freq_hz, in dB.
double cascade_gain_db(const std::vector<Biquad>& sections, double freq_hz,
                       double sample_rate_hz);

/// Causal forward filtering of one sample sequence through the cascade,
/// zero initial state.
Eigen::RowVectorXd filter_sequence(const std::vector<Biquad>& sections,
                                   const Eigen::RowVectorXd& x);

/// Causal band-pass of every channel. Output shape equals input shape.
Epoch bandpass(const Epoch& e, const BandpassSpec& spec);

/// Per-channel zero-mean, unit population variance. Throws naming the
/// channel if a row is constant.
Epoch standardize(const Epoch& e);

/// Amplitude and phase of the least-squares fit
///   x[k] ~ A * cos(2*pi*f*t_k + phase),  t_k = k/F, k = 1..P,
/// with phase in degrees wrapped to [-180, 180). Cosine-referenced: a pure
/// cosine at f reports phase 0, a pure sine reports -90.
struct PhaseMeasurement {
    double freq_hz = 0.0;
    double phase_deg = 0.0;   // in [-180, 180)
    double amplitude = 0.0;
};

PhaseMeasurement single_bin_phase(const Eigen::RowVectorXd& x, double freq_hz,
                                  double sample_rate_hz);

/// Wraps an angle in degrees to [-180, 180).
double wrap_deg(double deg);

/// Signed circular difference a - b in degrees, wrapped to (-180, 180].
double circular_diff_deg(double a_deg, double b_deg);

}  // namespace ssvep
