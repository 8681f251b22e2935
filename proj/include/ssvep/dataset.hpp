#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ssvep/epoch.hpp"

namespace ssvep {

/// A full recording session: one trial per (stimulus frequency, run) pair.
///
/// On disk this is a directory holding `manifest.json` plus one
/// `trial_f{m}_r{r}.f32` file per trial (little-endian float32, row-major,
/// channel rows). Indices m and r are zero-based.
struct Dataset {
    std::vector<double> stim_freqs_hz;        // M entries, strictly increasing
    int runs = 0;                             // R
    std::vector<std::vector<Epoch>> trials;   // [m][r]
    double sample_rate_hz = 0.0;
    std::vector<std::string> channel_labels;
    nlohmann::json generator;                 // present for synthetic data

    [[nodiscard]] std::size_t freq_count() const { return stim_freqs_hz.size(); }

    [[nodiscard]] const Epoch& trial(std::size_t m, int r) const {
        return trials.at(m).at(static_cast<std::size_t>(r));
    }

    /// All trials at frequency index m across runs, in run order.
    [[nodiscard]] TrialSet trial_set(std::size_t m) const;

    /// As trial_set(m) but skipping one run (leave-one-run-out training
    /// side). Pass exclude_run = -1 to keep every run.
    [[nodiscard]] TrialSet trial_set_excluding(std::size_t m, int exclude_run) const;
};

void validate_dataset(const Dataset& ds);

void save_dataset(const Dataset& ds, const std::filesystem::path& dir);
Dataset load_dataset(const std::filesystem::path& dir);

/// Reads one raw trial file against a known channel/point geometry.
/// Throws "shape mismatch" if the byte count disagrees with C*P floats.
Eigen::MatrixXd load_trial_file(const std::filesystem::path& file,
                                Eigen::Index channels, Eigen::Index points);

void save_trial_file(const Eigen::MatrixXd& samples,
                     const std::filesystem::path& file);

}  // namespace ssvep
