#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "clifford/text.hpp"

namespace clifford::cli {

enum class Verb { SignatureInfo, Eval, IdealClassify, Primes, Radical, Chains, Nilpotency, Support };

const char* verb_name(Verb verb) noexcept;

struct Command {
    Verb verb = Verb::SignatureInfo;
    ParsedSignature signature;
    std::string expression;
    std::string gens;
    unsigned k = 0;
    bool ascending = true;
    bool descending = true;
    bool json = false;
    std::uint64_t seed = 1;
};

struct Report {
    std::string command;
    Signature signature;
    std::vector<unsigned> relabel;
    nlohmann::json result;
    double elapsed_ms = 0;

    friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

/// Human-readable rendering of a report.
std::string render_text(const Report& report);

/// Throws std::invalid_argument for usage errors.
Command parse_command(const std::vector<std::string>& args);

/// Runs the library operations behind a command. Domain failures propagate
/// as exceptions.
Report execute(const Command& command);

struct Outcome {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Full front end: parse, execute, render. Never throws. Exit code 0 on
/// success, 1 for domain errors, 2 for usage errors.
Outcome run(const std::vector<std::string>& args);

} // namespace clifford::cli
