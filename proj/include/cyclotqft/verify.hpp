#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cyclotqft/report.hpp"

namespace cyclotqft {

struct VerifyOptions {
    long p = 0;
    /** Check names to run; empty means the full catalog. Naming a check
     *  explicitly overrides its default runtime guard. */
    std::vector<std::string> checks;
    std::size_t closure_cap = 1000000;
};

/** The catalog, in execution order. */
std::vector<std::string> check_names();

/** True when the name is in the catalog. */
bool is_check_name(const std::string& name);

/** Runs the selected checks for the odd prime p >= 5 and collects the
 *  records. Throws std::invalid_argument for a bad prime or an unknown
 *  check name. */
VerificationReport run_checks(const VerifyOptions& opt);

}  // namespace cyclotqft
