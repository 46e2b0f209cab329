#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace jordan::cli {

enum class Format { Text, Structured };

/// Exit codes of `run`.
enum ExitCode : int {
    kOk = 0,
    kMalformedInput = 1,
    kPrecondition = 2,
    kVerificationFailed = 3,
};

struct Command {
    std::string verb;  // analyze | spectrum | factorize | decompose | verify-oiso | demo-nonlinear | selftest
    std::optional<std::string> algebra_path;
    std::optional<std::string> element_path;
    std::optional<std::string> map_path;
    std::optional<std::string> form_path;
    std::uint64_t seed = 0;
    int trials = 1000;
    Format format = Format::Text;
    int grid = 8;
    double lambda = 2.0;  // demo-nonlinear exponent on the scalar half
};

struct Outcome {
    int exit_code = kOk;
    std::string output;
};

/// Executes one verb. Never throws: input errors map to exit 1, failed
/// mathematical preconditions to exit 2 and verification failures to 3.
Outcome run(const Command& command);

inline constexpr const char* kSchemaVersion = "1";

}  // namespace jordan::cli
