// Acceptance suite: one line per criterion, exit 0 only when all pass.
#include <cstdio>

#include "atlas/claims.hpp"

int main() {
    atlas::ClaimOptions options;  // fixed seed, sampled Jacobi above dim 35
    atlas::ClaimReport report = atlas::run_all("", options);
    for (const auto& entry : report.entries)
        std::printf("%-18s %-4s %8.2fs  %s\n", entry.id.c_str(), entry.pass ? "pass" : "FAIL", entry.seconds,
                    entry.witness.c_str());
    std::printf("%zu/%zu criteria pass\n",
                (size_t)std::count_if(report.entries.begin(), report.entries.end(),
                                      [](const atlas::ReportEntry& e) { return e.pass; }),
                report.entries.size());
    return report.all_pass() ? 0 : 1;
}
