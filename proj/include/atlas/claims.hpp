#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace atlas {

struct ClaimOptions {
    uint64_t seed = 20240001;
    size_t samples = 2000;
    bool exhaustive_jacobi_large = false;  // sampled by default for dim > 35
    /// Test hook: perturb one input before checking ("root", "structconst").
    std::string perturbation;
};

struct ReportEntry {
    std::string id;
    std::string anchor;  // what the claim pins down
    bool pass = false;
    std::string witness;  // failure details or headline numbers
    double seconds = 0.0;
};

struct ClaimReport {
    std::vector<ReportEntry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return !entries.empty();
    }
};

std::vector<std::string> claim_ids();

/// Runs every claim whose id starts with the filter (all when empty).
/// Unknown prefixes throw std::invalid_argument.
ClaimReport run_all(const std::string& filter = "", const ClaimOptions& options = {});

}  // namespace atlas
