#include "balcube/report.hpp"

namespace balcube {

std::string render_text(const VerificationReport& report) {
    std::string out = "report: " + report.subject + "\n";
    for (const auto& c : report.checks) {
        out += c.pass ? "  [pass] " : "  [FAIL] ";
        out += c.name;
        if (c.m) out += " m=" + std::to_string(*c.m);
        if (c.measured) out += " measured=" + std::to_string(*c.measured);
        if (c.bound) out += " bound=" + std::to_string(*c.bound);
        if (!c.detail.empty()) out += " " + c.detail;
        if (!c.witness.empty()) out += " witness=" + c.witness;
        out += '\n';
    }
    out += report.all_pass() ? "result: pass\n" : "result: FAIL\n";
    return out;
}

}  // namespace balcube
