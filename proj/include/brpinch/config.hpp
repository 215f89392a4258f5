#pragma once

// JSON configuration documents (schemaVersion 1). The schema is strict:
// unknown keys are rejected so that a typo cannot silently change which
// rules apply.

#include <string_view>

#include <json.hpp>

#include "brpinch/pinch.hpp"

namespace brpinch::cli {

using Json = nlohmann::ordered_json;

/// Parses and validates a configuration document.
/// Throws Error(parse_error) for malformed JSON, Error(schema_error) for
/// structural violations, Error(config_error) for validation failures.
pinch::PinchingConfig parse_config(std::string_view json_text);

/// Canonical echo of a configuration, with defaults materialized; parsing
/// the echo reproduces the configuration exactly.
Json config_echo(const pinch::PinchingConfig& config);

}  // namespace brpinch::cli
