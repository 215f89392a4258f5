#pragma once

// Built-in example corpus: each entry pairs a configuration document with
// its committed expected report. Changing a formula requires consciously
// regenerating the expected reports (see `brpinch corpus --dump`).

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brpinch::cli {

struct CorpusEntry {
    std::string_view name;
    std::string_view config_json;
    std::string_view expected_report_json;
};

std::span<const CorpusEntry> corpus_entries();

/// Parse, analyze (oracle enabled) and serialize one entry.
std::string corpus_actual_report(const CorpusEntry& entry);

struct CorpusOutcome {
    bool pass = true;
    std::vector<std::string> mismatched;  // entry names
};

/// Runs every entry and diffs against the committed reports. Mismatch
/// details go to `diagnostics` when provided.
CorpusOutcome run_corpus(std::ostream* diagnostics);

}  // namespace brpinch::cli
