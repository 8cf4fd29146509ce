#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclotqft/closure.hpp"
#include "cyclotqft/integrality.hpp"
#include "cyclotqft/matrix.hpp"
#include "cyclotqft/modular_data.hpp"
#include "cyclotqft/numtheory.hpp"
#include "cyclotqft/verify.hpp"
#include "cyclotqft/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

long max_prime_limit() {
    const char* env = std::getenv("CYCLOTQFT_MAX_PRIME");
    if (!env || !*env) return 13;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 5) {
        throw CLI::ValidationError("CYCLOTQFT_MAX_PRIME",
                                   "must be an integer >= 5 when set");
    }
    return v;
}

long parse_prime(long p) {
    if (p < 5 || p % 2 == 0 || !cyclotqft::is_prime(p))
        throw CLI::ValidationError("--prime", "must be an odd prime >= 5");
    const long limit = max_prime_limit();
    if (p > limit) {
        std::ostringstream os;
        os << "p = " << p << " exceeds the configured limit " << limit
           << " (raise CYCLOTQFT_MAX_PRIME to allow larger primes)";
        throw CLI::ValidationError("--prime", os.str());
    }
    return p;
}

std::vector<std::string> parse_checks(const std::string& csv) {
    std::vector<std::string> out;
    if (csv.empty() || csv == "all") return out;  // empty selection = full catalog
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (!cyclotqft::is_check_name(item)) {
            std::ostringstream os;
            os << "unknown check '" << item << "'; known checks:";
            for (const auto& n : cyclotqft::check_names()) os << ' ' << n;
            throw CLI::ValidationError("--checks", os.str());
        }
        out.push_back(item);
    }
    return out;
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CLI::ValidationError("--out", "cannot open '" + path + "' for writing");
    f << payload;
}

std::pair<cyclotqft::CycloMatrix, cyclotqft::CycloMatrix> generator_pair(
    long p, const std::string& basis, const std::string& space) {
    using namespace cyclotqft;
    if (space == "h1") return h1_generators(p);  // integral in every basis
    if (space == "h2") {
        auto [s, t] = h2_generators(p);
        if (basis != "integral") return {std::move(s), std::move(t)};
        const CycloMatrix dv = d_matrix(p) * v_matrix(p);
        const CycloMatrix dvi = dv.inverse();
        return {dvi * s * dv, dvi * t * dv};
    }
    if (basis == "original") return full_generators(p);
    const CycloMatrix c = basis == "split" ? u_matrix(p) : w_matrix(p);
    const CycloMatrix ci = c.inverse();
    return {ci * rho_sigma(p) * c, ci * rho_tau(p) * c};
}

int run_verify(long p, const std::string& checks_csv, const std::string& format,
               const std::string& out, std::size_t cap) {
    cyclotqft::VerifyOptions opt;
    opt.p = parse_prime(p);
    opt.checks = parse_checks(checks_csv);
    opt.closure_cap = cap;
    const auto report = cyclotqft::run_checks(opt);
    if (format == "json")
        write_output(out, report.to_json().dump(2) + "\n");
    else
        write_output(out, report.to_text());
    if (report.any_failed()) return kExitCheckFailed;
    if (report.any_cap_exceeded()) return kExitCapExceeded;
    return kExitOk;
}

int run_matrices(long p, const std::string& basis, const std::string& space,
                 const std::string& out) {
    parse_prime(p);
    const auto [s, t] = generator_pair(p, basis, space);
    write_output(out, s.dump() + t.dump());
    return kExitOk;
}

int run_closure(long p, const std::string& space, std::size_t cap,
                const std::string& format, const std::string& out) {
    using namespace cyclotqft;
    parse_prime(p);
    std::pair<CycloMatrix, CycloMatrix> gens =
        space == "h1" ? h1_generators(p)
                      : (space == "h2" ? h2_generators(p) : full_generators(p));
    const auto res = projective_closure({gens.first, gens.second}, cap);

    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["tool"] = kToolName;
        j["version"] = kToolVersion;
        j["prime"] = p;
        j["space"] = space;
        j["cap"] = cap;
        j["complete"] = res.complete;
        if (res.complete) {
            j["order"] = res.order;
            j["digest"] = res.digest;
        } else {
            j["visited"] = res.visited;
        }
        write_output(out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "closure of the " << space << " image at p = " << p << ": ";
        if (res.complete)
            os << "complete, order " << res.order << ", digest " << res.digest << "\n";
        else
            os << "cap " << cap << " exceeded after " << res.visited << " classes\n";
        write_output(out, os.str());
    }
    return res.complete ? kExitOk : kExitCapExceeded;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the genus-one modular-group representation data"};
    app.set_version_flag("--version",
                         std::string(cyclotqft::kToolName) + " " + cyclotqft::kToolVersion);
    app.require_subcommand(1);

    long p = 0;
    std::string checks = "all";
    std::string format = "json";
    std::string out;
    std::string basis = "original";
    std::string space = "full";
    std::size_t cap = 1000000;

    auto* verify = app.add_subcommand("verify", "run checks and emit a report");
    verify->add_option("--prime", p, "odd prime >= 5")->required();
    verify->add_option("--checks", checks,
                       "comma-separated check names, or 'all' (registry order applies)");
    verify->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out, "write the report to this file instead of stdout");
    verify->add_option("--cap", cap, "class cap for the closure checks");

    auto* matrices = app.add_subcommand("matrices", "emit a generator pair as matrix dumps");
    matrices->add_option("--prime", p, "odd prime >= 5")->required();
    matrices->add_option("--basis", basis, "original, split or integral")
        ->check(CLI::IsMember({"original", "split", "integral"}));
    matrices->add_option("--space", space, "full, h1 or h2")
        ->check(CLI::IsMember({"full", "h1", "h2"}));
    matrices->add_option("--out", out, "write the dumps to this file instead of stdout");

    auto* closure = app.add_subcommand("closure", "enumerate the projective image");
    closure->add_option("--prime", p, "odd prime >= 5")->required();
    closure->add_option("--space", space, "full, h1 or h2")
        ->check(CLI::IsMember({"full", "h1", "h2"}));
    closure->add_option("--cap", cap, "stop after this many classes");
    closure->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    closure->add_option("--out", out, "write the result to this file instead of stdout");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(verify)) return run_verify(p, checks, format, out, cap);
        if (app.got_subcommand(matrices)) return run_matrices(p, basis, space, out);
        return run_closure(p, space, cap, format, out);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
