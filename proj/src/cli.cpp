#include "cardoracle/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace cardoracle::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kStrategyNames{"naive", "observe", "oracle-withdraw"};
const std::vector<std::string> kSchemeNames{"original", "fair"};

// Text output reuses the JSON number formatting so both renderings agree digit for digit.
std::string number(double x) {
    return json(x).dump();
}

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

void emit_json(std::ostream& out, const json& j) {
    out << j.dump(2) << '\n';
}

} // namespace

game::PayoffScheme CliConfig::scheme() const {
    if (auto s = game::parse_scheme(scheme_name)) {
        return *s;
    }
    throw UsageError("--scheme: unknown scheme '" + scheme_name + "'");
}

CliConfig parse_args(const std::vector<std::string>& args) {
    CliConfig cfg;
    std::string strategy = "naive";
    std::string mode = "analytic";
    bool as_json = false;

    CLI::App app{"Card-game oracle and payoff verification", "cardoracle"};
    app.require_subcommand(1, 1);

    auto* verify = app.add_subcommand("verify-oracle", "Simulate both oracle circuits for all 8 card records");
    verify->add_flag("--json", as_json, "Emit JSON");

    auto add_game_flags = [&](CLI::App* sub) {
        sub->add_option("--strategy", strategy, "Bob's strategy")
            ->check(CLI::IsMember(kStrategyNames))
            ->capture_default_str();
        sub->add_option("--scheme", cfg.scheme_name, "Payoff scheme")
            ->check(CLI::IsMember(kSchemeNames))
            ->capture_default_str();
        sub->add_flag("--json", as_json, "Emit JSON");
    };

    auto* payoff = app.add_subcommand("payoff", "Expected payoffs, exact or Monte Carlo");
    add_game_flags(payoff);
    payoff->add_option("--mode", mode, "analytic or mc")
        ->check(CLI::IsMember({"analytic", "mc"}))
        ->capture_default_str();
    payoff->add_option("--trials", cfg.trials, "Monte Carlo trials")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()))
        ->capture_default_str();
    payoff->add_option("--seed", cfg.seed, "Monte Carlo seed")->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate", "List every atomic outcome with exact probability");
    add_game_flags(enumerate);

    // CLI11 consumes arguments from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (verify->parsed()) {
        cfg.command = Command::VerifyOracle;
    } else if (payoff->parsed()) {
        cfg.command = Command::Payoff;
    } else {
        cfg.command = Command::Enumerate;
    }
    cfg.strategy = *game::parse_strategy(strategy);
    cfg.mode = mode == "mc" ? Mode::MonteCarlo : Mode::Analytic;
    cfg.output = as_json ? OutputFormat::Json : OutputFormat::Text;
    return cfg;
}

json rational_json(const Rational& r) {
    return {{"num", r.num()}, {"den", r.den()}};
}

json verify_oracle_json(const oracle::TrivialityReport& report) {
    json cases = json::array();
    for (const auto& c : report.cases) {
        cases.push_back({
            {"r", {int{c.record.r[0]}, int{c.record.r[1]}, int{c.record.r[2]}}},
            {"fig1_index", c.fig1_index},
            {"fig2_index", c.fig2_index},
            {"max_off_target", c.max_off_target},
            {"pass", c.pass},
        });
    }
    return {{"command", "verify-oracle"}, {"pass", report.pass}, {"cases", cases}};
}

json analytic_payoff_json(const game::ExpectedPayoff& payoff) {
    return {{"alice", rational_json(payoff.alice)}, {"bob", rational_json(payoff.bob)}};
}

json mc_payoff_json(const game::MCEstimate& est) {
    return {
        {"trials", est.trials},
        {"seed", est.seed},
        {"mean_alice", est.mean_alice},
        {"mean_bob", est.mean_bob},
        {"stderr_alice", est.stderr_alice},
        {"stderr_bob", est.stderr_bob},
    };
}

json enumerate_json(game::StrategyKind strategy, const std::vector<game::OutcomeRow>& rows) {
    json out_rows = json::array();
    Rational total;
    for (const auto& row : rows) {
        total += row.probability;
        out_rows.push_back({
            {"outcome", row.description(strategy)},
            {"chosen_card", row.chosen_card},
            {"result", std::string(game::to_string(row.result))},
            {"probability", rational_json(row.probability)},
            {"alice", row.payoff.alice},
            {"bob", row.payoff.bob},
        });
    }
    const game::ExpectedPayoff e = game::expectation(rows);
    return {
        {"rows", out_rows},
        {"total_probability", rational_json(total)},
        {"expected", analytic_payoff_json(e)},
    };
}

int cmd_verify_oracle(const CliConfig& config, std::ostream& out) {
    const oracle::TrivialityReport report = oracle::verify_triviality();
    if (config.output == OutputFormat::Json) {
        emit_json(out, verify_oracle_json(report));
    } else {
        out << "r    fig1_index  fig2_index  max_off_target  pass\n";
        std::size_t passed = 0;
        for (const auto& c : report.cases) {
            passed += c.pass ? 1 : 0;
            out << c.record.to_string() << "  " << std::setw(10) << c.fig1_index << "  " << std::setw(10)
                << c.fig2_index << "  " << std::setw(14) << number(c.max_off_target) << "  " << yes_no(c.pass)
                << '\n';
        }
        out << "oracle readout " << (report.pass ? "PASS" : "FAIL") << ": " << passed << "/"
            << report.cases.size() << " card records map to |r> and |r>|r> with phase +1\n";
    }
    return report.pass ? kExitOk : kExitFailed;
}

int cmd_payoff(const CliConfig& config, std::ostream& out) {
    const game::PayoffScheme scheme = config.scheme();
    if (config.mode == Mode::Analytic) {
        const game::ExpectedPayoff e = game::analytic_payoff(config.strategy, scheme);
        if (config.output == OutputFormat::Json) {
            emit_json(out, analytic_payoff_json(e));
        } else {
            out << "strategy  " << game::to_string(config.strategy) << '\n'
                << "scheme    " << config.scheme_name << '\n'
                << "alice     " << e.alice << '\n'
                << "bob       " << e.bob << '\n';
        }
        return kExitOk;
    }

    const game::MCEstimate est = game::mc_payoff(config.strategy, scheme, config.trials, config.seed);
    if (config.output == OutputFormat::Json) {
        emit_json(out, mc_payoff_json(est));
    } else {
        out << "strategy  " << game::to_string(config.strategy) << '\n'
            << "scheme    " << config.scheme_name << '\n'
            << "trials    " << est.trials << '\n'
            << "seed      " << est.seed << '\n'
            << "alice     mean " << number(est.mean_alice) << "  stderr " << number(est.stderr_alice) << '\n'
            << "bob       mean " << number(est.mean_bob) << "  stderr " << number(est.stderr_bob) << '\n';
    }
    return kExitOk;
}

int cmd_enumerate(const CliConfig& config, std::ostream& out) {
    const auto rows = game::enumerate_outcomes(config.strategy, config.scheme());
    if (config.output == OutputFormat::Json) {
        emit_json(out, enumerate_json(config.strategy, rows));
        return kExitOk;
    }

    std::size_t width = 0;
    for (const auto& row : rows) {
        width = std::max(width, row.description(config.strategy).size());
    }
    out << std::left << std::setw(static_cast<int>(width)) << "outcome" << "  card  " << std::setw(10)
        << "result" << "  " << std::setw(5) << "p" << "  alice  bob\n";
    Rational total;
    for (const auto& row : rows) {
        total += row.probability;
        out << std::setw(static_cast<int>(width)) << row.description(config.strategy) << "  " << std::setw(4)
            << row.chosen_card << "  " << std::setw(10) << game::to_string(row.result) << "  " << std::setw(5)
            << row.probability.to_string() << "  " << std::setw(5) << row.payoff.alice << "  " << row.payoff.bob
            << '\n';
    }
    const game::ExpectedPayoff e = game::expectation(rows);
    out << "total probability " << total << '\n'
        << "expected alice " << e.alice << "  bob " << e.bob << '\n';
    return kExitOk;
}

int dispatch(const CliConfig& config, std::ostream& out) {
    switch (config.command) {
    case Command::VerifyOracle:
        return cmd_verify_oracle(config, out);
    case Command::Payoff:
        return cmd_payoff(config, out);
    case Command::Enumerate:
        return cmd_enumerate(config, out);
    }
    return kExitFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig config;
    try {
        config = parse_args(args);
    } catch (const HelpRequested& help) {
        out << help.what();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n' << "run 'cardoracle --help' for usage\n";
        return kExitUsage;
    }

    try {
        return dispatch(config, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailed;
    }
}

} // namespace cardoracle::cli
