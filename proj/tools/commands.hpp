#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "report.hpp"

namespace cubicdet::cli {

using report::json;

class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised by verify when a check fails; the report lists every check.
class VerificationFailure : public std::runtime_error {
  public:
    VerificationFailure(const std::string& what, json report) : std::runtime_error(what), report_(std::move(report)) {}
    const json& report() const { return report_; }

  private:
    json report_;
};

enum class Mode { Auto, Exact, Float };

struct Options {
    std::uint64_t seed = 1;
    double tol = 1e-8;
    Mode mode = Mode::Auto;
    std::size_t jobs = 1;
};

/// Exactly one of builtin, coefficients, points is set.
struct SurfaceSpec {
    std::string builtin;
    std::optional<json> coefficients;
    std::optional<json> points;
};

SurfaceSpec spec_from_builtin(const std::string& name);

/// {"builtin": name} | {"coefficients": [20 scalars]} | {"points": [6 x 3 scalars]}
SurfaceSpec spec_from_json(const json& j);

Mode parse_mode(const std::string& s);

inline constexpr const char* kCommands[] = {"lines", "reps", "classify-real", "selfadjoint", "definiteness", "verify"};

json run_command(const std::string& command, const SurfaceSpec& spec, const Options& opts);

json error_record(const std::string& command, const std::string& kind, const std::string& message);

}  // namespace cubicdet::cli
