#pragma once

#include "germcq/cones.hpp"
#include "germcq/germ.hpp"
#include "germcq/normal_form.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace germcq {

/// Floating-point evidence gatherer. Everything is driven by the explicit
/// seed; identical seeds give identical output.
struct OracleConfig {
    std::vector<double> radii = {1e-1, 1e-2, 1e-3, 1e-4};
    int samples_per_radius = 20000;
    std::uint64_t seed = 1;
    double cluster_angle_deg = 5.0;
    double dir_tol = 1e-2;        // angular tolerance for membership checks
    long witness_budget = 40000;  // probe evaluations per direction
    int member_samples = 24;      // descriptor directions fed to the witness search
    int jobs = 1;                 // worker threads across radii; merge is by index
};

struct DirectionEstimate {
    std::vector<std::vector<double>> directions;  // cluster representatives, unit
    std::vector<int> weights;                     // samples per cluster
    double radius_used = 0;                       // smallest radius that produced samples
    std::uint64_t seed = 0;
    std::vector<std::string> notes;
};

DirectionEstimate estimate_tangent_directions(const ConstraintGerm& germ,
                                              const OracleConfig& cfg);

struct WitnessResult {
    bool found = false;
    std::vector<double> perturbation;  // the v that worked
    double final_angle = 0;
    long probes = 0;
};

/// Searches scaled sequences x(m) = d/m + theta v/m^(5/4) over a coarse grid
/// of perturbations v and m in {10,...,1e6} for feasible points converging
/// directionally to d. Absence of a witness is evidence, not proof.
WitnessResult witness_direction(const ConstraintGerm& germ, const std::vector<double>& d,
                                const OracleConfig& cfg);

struct AgreementReport {
    int clusters = 0;
    int necessity_checked = 0;
    int necessity_passed = 0;
    int sufficiency_sampled = 0;
    int sufficiency_witnessed = 0;
    int excluded_probes = 0;
    int excluded_witnessed = 0;
    std::vector<std::string> notes;

    double witness_rate() const {
        return sufficiency_sampled == 0
                   ? 1.0
                   : static_cast<double>(sufficiency_witnessed) / sufficiency_sampled;
    }
    bool agreement(double min_rate = 0.95) const {
        return necessity_passed == necessity_checked && witness_rate() >= min_rate;
    }
};

/// Cross-checks the sampled tangent directions of realize(nf) against the
/// exact descriptor, then tries to witness a generating sample of descriptor
/// directions (and probes excluded ones, which should stay unwitnessed).
AgreementReport cone_agreement(const NormalForm& nf, const OracleConfig& cfg);

}  // namespace germcq
