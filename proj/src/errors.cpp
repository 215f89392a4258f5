#include "brpinch/errors.hpp"

namespace brpinch {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_argument: return "invalid-argument";
        case Errc::inconsistent_configuration: return "inconsistent-configuration";
        case Errc::incomplete_configuration: return "incomplete-configuration";
        case Errc::theorem_not_applicable: return "theorem-not-applicable";
        case Errc::invalid_chain: return "invalid-chain";
        case Errc::oracle_too_large: return "oracle-too-large";
        case Errc::oracle_not_applicable: return "oracle-not-applicable";
        case Errc::parse_error: return "parse-error";
        case Errc::schema_error: return "schema-error";
        case Errc::config_error: return "config-error";
        case Errc::io_error: return "io-error";
        case Errc::overflow: return "overflow";
    }
    return "unknown-error";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace brpinch
