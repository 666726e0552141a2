#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cardoracle/game.hpp"
#include "cardoracle/oracle.hpp"

namespace cardoracle::cli {

enum class Command { VerifyOracle, Payoff, Enumerate };
enum class Mode { Analytic, MonteCarlo };
enum class OutputFormat { Text, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultTrials = 1'000'000;
inline constexpr std::uint64_t kDefaultSeed = 0;

struct CliConfig {
    Command command = Command::VerifyOracle;
    game::StrategyKind strategy = game::StrategyKind::Naive;
    std::string scheme_name = "original";
    Mode mode = Mode::Analytic;
    std::uint64_t trials = kDefaultTrials;
    std::uint64_t seed = kDefaultSeed;
    OutputFormat output = OutputFormat::Text;

    [[nodiscard]] game::PayoffScheme scheme() const;
};

/// Bad command line; the message names the offending flag or command.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// `args` excludes the program name.
CliConfig parse_args(const std::vector<std::string>& args);

nlohmann::json rational_json(const Rational& r);
nlohmann::json verify_oracle_json(const oracle::TrivialityReport& report);
nlohmann::json analytic_payoff_json(const game::ExpectedPayoff& payoff);
nlohmann::json mc_payoff_json(const game::MCEstimate& est);
nlohmann::json enumerate_json(game::StrategyKind strategy, const std::vector<game::OutcomeRow>& rows);

int cmd_verify_oracle(const CliConfig& config, std::ostream& out);
int cmd_payoff(const CliConfig& config, std::ostream& out);
int cmd_enumerate(const CliConfig& config, std::ostream& out);

int dispatch(const CliConfig& config, std::ostream& out);

/// Parses and dispatches. Returns 0 on success, 1 on a failed verification or
/// runtime error, 2 on a usage error. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cardoracle::cli
