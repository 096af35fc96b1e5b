#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wxz/catalog.hpp"

namespace wxz {

struct VerifyOptions {
    std::string scope = "all";  // ybe | wxx | xxz | wxz | all
    int samples = 0;            // 0 = scope default (20 for ybe, 10 otherwise)
    std::uint64_t seed = 1;
    double tau = 1e-9;
    bool approx_backend = false;
    bool second_inverse = false;  // additionally require W, Z second-invertible
    bool parallel = true;
};

struct EntryResult {
    std::string id;
    std::string description;
    int checks = 0;
    int exact_checks = 0;
    double max_residual = 0.0;
    bool pass = true;
    std::string note;  // first failure, or sampling trouble
};

struct VerificationReport {
    std::string scope;
    std::uint64_t seed = 0;
    int samples = 0;
    double tau = 0.0;
    std::string backend;
    std::vector<EntryResult> entries;
    int passed = 0;
    int failed = 0;
    long total_checks = 0;
    long exact_checks = 0;

    double exact_fraction() const {
        return total_checks ? static_cast<double>(exact_checks) / total_checks : 0.0;
    }
    bool all_passed() const { return failed == 0; }
    std::string to_json_text() const;
};

/// Runs the verification sweep over the chosen scope. Entries are processed
/// independently (OpenMP when enabled) with per-entry derived seeds, so the
/// report is identical for any thread count.
VerificationReport run_verification(const Catalog& cat, const VerifyOptions& opts);

} // namespace wxz
