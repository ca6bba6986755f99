#pragma once

#include <optional>
#include <string>

#include "cfgspace/serialization.hpp"

namespace cfgspace {

struct CliOptions {
    bool pretty = false;
    std::size_t limit = 1'000'000;
    std::uint64_t seed = 20240901;
};

/// One job file = one command over one ring. Every object in the file is
/// validated against the declared ring while parsing.
json cmd_classify(const json& input, const CliOptions& options);
json cmd_solve(const json& input, const CliOptions& options);
json cmd_interpolate(const json& input, const CliOptions& options);
json cmd_orthogonalize(const json& input, const CliOptions& options);
json cmd_base(const json& input, const CliOptions& options);
/// With an input document, runs the suite for its ring; without one, sweeps
/// the default envelope p in {2,3,5}, omega <= 2, n <= 2.
json cmd_verify(const std::optional<json>& input, const CliOptions& options);

json run_command(const std::string& command, const std::optional<json>& input,
                 const CliOptions& options);

} // namespace cfgspace
