#include "cyclotqft/report.hpp"

#include <cctype>
#include <sstream>

#include "cyclotqft/version.hpp"

namespace cyclotqft {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
        case CheckStatus::cap_exceeded: return "cap_exceeded";
    }
    return "unknown";
}

std::vector<AssumptionRecord> standing_assumptions() {
    return {
        {"gauss-sign",
         "sqrt(p) is represented by the quadratic Gauss sum (times -i when p = 3 mod 4); "
         "its positive-real embedding is re-validated numerically at every construction",
         "every check that divides by sqrt(p)"},
        {"fusion-labels",
         "the fusion ring lives on the r+4 labels 1, Z, Y_1..Y_r, X, X' with the encoded "
         "product rules; associativity, commutativity, completeness and dimension "
         "consistency are machine-validated rather than assumed",
         "fusion"},
        {"heisenberg-lift",
         "SL(2, Z/p) acts on the Heisenberg group by (x,y) -> (ax+by, cx+dy), "
         "z -> z + (ac x^2 + 2bc xy + bd y^2)/2; the lift is machine-checked to be a "
         "composition-compatible automorphism action fixing the center",
         "heisenberg"},
    };
}

bool VerificationReport::any_failed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) return true;
    return false;
}

bool VerificationReport::any_cap_exceeded() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::cap_exceeded) return true;
    return false;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json out;
    out["schema"] = 1;
    out["tool"] = kToolName;
    out["version"] = kToolVersion;
    out["prime"] = p;
    out["ring_order"] = ring_order;
    out["pass"] = pass();
    out["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["claim"] = c.claim;
        jc["status"] = to_string(c.status);
        jc["wall_ms"] = c.wall_ms;
        jc["witness"] = c.witness;
        out["checks"].push_back(std::move(jc));
    }
    out["assumptions"] = nlohmann::ordered_json::array();
    for (const auto& a : standing_assumptions()) {
        nlohmann::ordered_json ja;
        ja["name"] = a.name;
        ja["statement"] = a.statement;
        ja["validated_by"] = a.validated_by;
        out["assumptions"].push_back(std::move(ja));
    }
    return out;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << kToolName << " " << kToolVersion << ": p = " << p
       << " (integer ring order " << ring_order << ")\n";
    std::size_t passed = 0, failed = 0, skipped = 0, capped = 0;
    for (const auto& c : checks) {
        std::string tag = to_string(c.status);
        for (auto& ch : tag) ch = static_cast<char>(std::toupper(ch));
        os << "[" << tag << "]";
        for (std::size_t i = tag.size(); i < 12; ++i) os << ' ';
        os << c.name;
        for (std::size_t i = c.name.size(); i < 14; ++i) os << ' ';
        os << c.wall_ms << " ms  " << c.claim << "\n";
        switch (c.status) {
            case CheckStatus::pass: ++passed; break;
            case CheckStatus::fail: ++failed; break;
            case CheckStatus::skipped: ++skipped; break;
            case CheckStatus::cap_exceeded: ++capped; break;
        }
    }
    os << "summary: " << checks.size() << " checks, " << passed << " passed, "
       << failed << " failed, " << skipped << " skipped, " << capped
       << " capped\n";
    return os.str();
}

}  // namespace cyclotqft
