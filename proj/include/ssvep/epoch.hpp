#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ssvep {

/// One multichannel trial segment: C channel rows by P sample columns.
///
/// Samples are kept as 64-bit floats in memory regardless of the 32-bit
/// on-disk width; covariance products square the dynamic range and the
/// eigen-solvers downstream want the headroom.
struct Epoch {
    Eigen::MatrixXd samples;                  // C x P
    std::vector<std::string> channel_labels;  // size C, distinct
    double sample_rate_hz = 0.0;
    std::optional<double> stim_freq_hz;       // absent for unlabeled test data

    [[nodiscard]] Eigen::Index channels() const { return samples.rows(); }
    [[nodiscard]] Eigen::Index points() const { return samples.cols(); }
    [[nodiscard]] double duration_s() const {
        return static_cast<double>(points()) / sample_rate_hz;
    }

    /// Copy with the attended-frequency label removed. The recognition path
    /// works on label-free epochs only.
    [[nodiscard]] Epoch without_label() const {
        Epoch e = *this;
        e.stim_freq_hz.reset();
        return e;
    }
};

/// Throws std::invalid_argument if the epoch violates its invariants
/// (C >= 1, P >= 2, finite samples, distinct labels matching C, F > 0).
void validate_epoch(const Epoch& e);

/// Returns the row index of `label`, or throws naming the unknown channel.
Eigen::Index channel_index(const Epoch& e, const std::string& label);

/// Extracts the requested channel rows, in the requested order, and the
/// first floor(tw_seconds * F) columns (stimulus-onset-aligned window).
Epoch slice_epoch(const Epoch& e, const std::vector<std::string>& channels,
                  double tw_seconds);

/// All trials recorded at one stimulus frequency. Trials must agree in
/// shape, sampling rate, and channel labels; N >= 2.
struct TrialSet {
    double stim_freq_hz = 0.0;
    std::vector<Epoch> trials;

    [[nodiscard]] std::size_t size() const { return trials.size(); }
};

void validate_trial_set(const TrialSet& ts);

}  // namespace ssvep
