#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cyclotqft {

enum class CheckStatus { pass, fail, skipped, cap_exceeded };

const char* to_string(CheckStatus s);

/** One executed (or skipped) check: machine-readable verdict plus the
 *  structured witness data the check chose to expose. Everything except
 *  wall_ms is deterministic, byte for byte. */
struct CheckRecord {
    std::string name;
    std::string claim;
    CheckStatus status = CheckStatus::skipped;
    long long wall_ms = 0;
    nlohmann::ordered_json witness;
};

/** A named background convention the verdicts rely on, together with the
 *  check that exercises it. */
struct AssumptionRecord {
    std::string name;
    std::string statement;
    std::string validated_by;
};

std::vector<AssumptionRecord> standing_assumptions();

struct VerificationReport {
    long p = 0;
    long ring_order = 0;
    std::vector<CheckRecord> checks;

    bool any_failed() const;
    bool any_cap_exceeded() const;
    /** True when no check failed and none hit its cap. */
    bool pass() const { return !any_failed() && !any_cap_exceeded(); }

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

}  // namespace cyclotqft
