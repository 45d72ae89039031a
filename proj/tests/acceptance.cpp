// One line per acceptance criterion, then the suite runtime. Exit status is
// the number of failed lines.

#include <chrono>
#include <cstdio>
#include <string>

#include <fmt/format.h>

#include "gbound/report.hpp"

using namespace gbound;

namespace {

struct Criterion {
    const char* id;
    bool value_row; // enclosure width <= 1e-4 also required
};

constexpr Criterion kCriteria[] = {
    {"THM1_A3", true},      {"THM1_A4", true},       {"THM1_A5", true},         {"THM2_D43", true},
    {"THM2_D54", true},     {"THM3_H22", true},      {"GAMMA2", true},          {"THM4_GAMMA3", true},
    {"GAMMA4", true},       {"EDGE_TABLE", false},   {"ORACLE_EQ13", false},    {"ORACLE_INEQ", false},
    {"ORACLE_GAMMA", false}, {"PROPERTY_BNB_SOUND", false}, {"PROPERTY_CURVES", false},
};

std::string first_failure(const ClaimRow& r)
{
    for (const std::string& n : r.notes) {
        if (n.find("FAIL") != std::string::npos) {
            return n.substr(0, n.find_last_not_of(' ') + 1);
        }
    }
    return {};
}

} // namespace

int main()
{
    int failed = 0;
    int index = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const Criterion& c : kCriteria) {
        ++index;
        const ClaimRow r = run_claim(c.id);
        bool ok = r.status == Status::Pass;
        std::string detail;
        if (c.value_row) {
            ok = ok && r.computed.width() <= 1e-4;
            detail = fmt::format("[{:.9f}, {:.9f}] vs {:.3f}", r.computed.lo(), r.computed.hi(), r.paper_value);
            if (r.argmax) {
                detail += fmt::format(" at ({:.6f}, {:.6f}) {}", r.argmax->x.mid(), r.argmax->y.mid(), r.kind);
            }
        } else {
            detail = fmt::format("{:.0f} of {:.0f} checks", r.computed.mid(), r.paper_value);
        }
        if (!ok) {
            const std::string why = first_failure(r);
            if (!why.empty()) {
                detail += "; " + why;
            }
            ++failed;
        }
        std::printf("%s %2d %-19s %s\n", ok ? "PASS" : "FAIL", index, c.id, detail.c_str());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool fast = seconds <= 60.0;
    failed += fast ? 0 : 1;
    std::printf("%s    %-19s %.2f s (limit 60 s)\n", fast ? "PASS" : "FAIL", "SUITE_RUNTIME", seconds);
    std::printf("%d failed\n", failed);
    return failed;
}
