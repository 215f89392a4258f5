#pragma once

#include <stdexcept>
#include <string>

namespace brpinch {

/// Machine-readable failure classes; the CLI maps these onto exit codes.
enum class Errc {
    invalid_argument,
    inconsistent_configuration,
    incomplete_configuration,
    theorem_not_applicable,
    invalid_chain,
    oracle_too_large,
    oracle_not_applicable,
    parse_error,
    schema_error,
    config_error,
    io_error,
    overflow,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace brpinch
