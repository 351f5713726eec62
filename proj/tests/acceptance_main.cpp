// Acceptance suite: runs every verification criterion at full scale and
// prints one pass/fail line per criterion.

#include <cstdio>

#include "ogw/verify.hpp"

int main() {
    ogw::RunReport report = ogw::verify_all(4, 42, /*full_scale=*/true);
    for (const auto& c : report.criteria) {
        std::printf("%s  %2d %-26s  checks=%lld passed=%lld  [%.2fs]%s%s\n",
                    c.ok() ? "PASS" : "FAIL", c.id, c.name.c_str(), c.attempted, c.passed,
                    c.seconds, c.first_failure.empty() ? "" : "  first failure: ",
                    c.first_failure.c_str());
    }
    std::printf("%s  acceptance: %lld/%lld checks in %.2fs\n", report.ok() ? "PASS" : "FAIL",
                report.passed(), report.attempted(), report.seconds);
    return report.ok() ? 0 : 1;
}
