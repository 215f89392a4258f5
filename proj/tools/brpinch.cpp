// brpinch — invariants of varieties obtained by pinching a cover along a
// finite closed subscheme, computed from a declarative field/degree config.
//
// Exit codes: 0 success, 1 computation or configuration error,
//             2 corpus or selfcheck mismatch, 64 usage error.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "brpinch/corpus.hpp"
#include "brpinch/errors.hpp"
#include "brpinch/report.hpp"
#include "brpinch/selfcheck.hpp"

namespace {

using namespace brpinch;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_analyze(const std::string& path, const std::string& format, bool with_oracle) {
    pinch::PinchingConfig config = cli::parse_config(read_file(path));
    theorems::BrauerReport report = theorems::analyze(config);
    cli::OracleOutcome outcome = cli::OracleOutcome::not_run();
    if (with_oracle)
        outcome = cli::OracleOutcome::from(oracle::verify_report(config, report, oracle::Caps::from_env()));
    if (format == "json")
        std::cout << cli::report_json(config, report, outcome) << "\n";
    else
        std::cout << cli::report_text(config, report, outcome);
    if (outcome.kind == cli::OracleOutcome::Kind::fail) {
        std::cerr << "oracle verification failed: " << outcome.detail << "\n";
        return 1;
    }
    return 0;
}

int cmd_corpus(bool dump) {
    if (dump) {
        // Regeneration aid: prints the include file with current reports.
        std::ostringstream names;
        std::cout << "// Committed expected reports for the built-in corpus. Regenerate with\n"
                  << "// `brpinch corpus --dump` after a deliberate formula change.\n";
        for (const auto& entry : cli::corpus_entries()) {
            std::string ident = "k";
            bool up = true;
            for (char c : entry.name) {
                if (c == '-') { up = true; continue; }
                ident += up ? static_cast<char>(std::toupper(c)) : c;
                up = false;
            }
            std::cout << "\nconstexpr std::string_view " << ident << "Expected = R\"==(";
            std::cout << cli::corpus_actual_report(entry);
            std::cout << ")==\";\n";
        }
        return 0;
    }
    cli::CorpusOutcome outcome = cli::run_corpus(&std::cerr);
    if (!outcome.pass) {
        std::cerr << outcome.mismatched.size() << " corpus entr"
                  << (outcome.mismatched.size() == 1 ? "y" : "ies") << " mismatched\n";
        return 2;
    }
    std::cout << "corpus: " << cli::corpus_entries().size() << " entries reproduced\n";
    return 0;
}

int cmd_selfcheck(Int max_order, int census_samples) {
    cli::SelfcheckOutcome outcome = cli::run_selfcheck(max_order, census_samples, oracle::Caps::from_env());
    for (const auto& f : outcome.failures) std::cerr << f << "\n";
    if (!outcome.pass) return 2;
    std::cout << "selfcheck: " << outcome.lattice_pairs << " lattice pairs, " << outcome.census_samples
              << " census samples\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brauer-group invariants of pinched covers"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "text";
    bool with_oracle = false;
    auto* analyze = app.add_subcommand("analyze", "analyze a JSON configuration file");
    analyze->add_option("file", file, "configuration document")->required();
    analyze->add_option("--format", format, "output format (json|text)")
        ->check(CLI::IsMember({"json", "text"}));
    analyze->add_flag("--oracle", with_oracle, "verify the report with the enumeration oracle");

    bool dump = false;
    auto* corpus = app.add_subcommand("corpus", "reproduce the built-in example corpus");
    corpus->add_flag("--dump", dump, "print the expected-report include file for regeneration");

    Int max_order = 200;
    int census_samples = 200;
    auto* selfcheck = app.add_subcommand("selfcheck", "run the enumeration-oracle suites");
    selfcheck->add_option("--max-order", max_order, "largest cyclic order for the lattice sweep")
        ->check(CLI::PositiveNumber);
    selfcheck->add_option("--census-samples", census_samples, "random census comparisons")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 64;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(file, format, with_oracle);
        if (corpus->parsed()) return cmd_corpus(dump);
        if (selfcheck->parsed()) return cmd_selfcheck(max_order, census_samples);
    } catch (const brpinch::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
