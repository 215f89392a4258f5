#pragma once

// Report emission: canonical JSON (byte-stable for identical input) and an
// aligned plain-text rendering.

#include <string>

#include "brpinch/config.hpp"
#include "brpinch/oracle.hpp"
#include "brpinch/theorems.hpp"

namespace brpinch::cli {

struct OracleOutcome {
    enum class Kind : unsigned char { not_run, pass, fail, skipped } kind = Kind::not_run;
    std::string detail;

    static OracleOutcome not_run() { return {}; }
    static OracleOutcome from(const oracle::VerifyResult& r);

    std::string str() const;
};

Json report_document(const pinch::PinchingConfig& config, const theorems::BrauerReport& report,
                     const OracleOutcome& oracle_outcome);
std::string report_json(const pinch::PinchingConfig& config, const theorems::BrauerReport& report,
                        const OracleOutcome& oracle_outcome);
std::string report_text(const pinch::PinchingConfig& config, const theorems::BrauerReport& report,
                        const OracleOutcome& oracle_outcome);

}  // namespace brpinch::cli
