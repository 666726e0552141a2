#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cardoracle/rational.hpp"
#include "cardoracle/splitmix.hpp"

namespace cardoracle::game {

enum class Face : std::uint8_t { Circle, Dot };

struct Card {
    Face face_a;
    Face face_b;

    [[nodiscard]] constexpr bool identical() const { return face_a == face_b; }
};

/// Circle/circle, dot/dot, circle/dot, in that order.
inline constexpr std::array<Card, 3> kDeck{{
    {Face::Circle, Face::Circle},
    {Face::Dot, Face::Dot},
    {Face::Circle, Face::Dot},
}};

/// Which face of each card is up: false = face_a, true = face_b.
using Orientations = std::array<bool, 3>;

/// One atomic outcome of a round.
///
/// `drawn_index` is Bob's blind draw (Naive, OracleWithdraw). `observe_pick`
/// selects between the two non-minority cards, lower index first, and is only
/// read by Observe.
struct ShuffleOutcome {
    Orientations orientations{};
    std::size_t drawn_index = 0;
    std::size_t observe_pick = 0;

    /// Samples every field; orientations are fair bits, draws are uniform.
    static ShuffleOutcome sample(SplitMix64& rng);
};

struct PayoffPair {
    int alice = 0;
    int bob = 0;

    friend constexpr bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

struct PayoffScheme {
    PayoffPair on_alice_win;
    PayoffPair on_bob_win;

    /// Winner takes one from the loser.
    static constexpr PayoffScheme original() { return {{+1, -1}, {-1, +1}}; }
    /// Alice wins one, Bob wins two.
    static constexpr PayoffScheme fair() { return {{+1, -1}, {-2, +2}}; }

    [[nodiscard]] constexpr bool zero_sum() const {
        return on_alice_win.alice + on_alice_win.bob == 0 && on_bob_win.alice + on_bob_win.bob == 0;
    }
};

enum class StrategyKind : std::uint8_t { Naive, Observe, OracleWithdraw };
enum class GameResult : std::uint8_t { AliceWins, BobWins, Withdrawn };

inline constexpr std::array<StrategyKind, 3> kAllStrategies{
    StrategyKind::Naive, StrategyKind::Observe, StrategyKind::OracleWithdraw};

std::string_view to_string(Face f);
std::string_view to_string(StrategyKind s);
std::string_view to_string(GameResult r);

/// Parses "naive", "observe", "oracle-withdraw".
std::optional<StrategyKind> parse_strategy(std::string_view name);
/// Parses "original", "fair".
std::optional<PayoffScheme> parse_scheme(std::string_view name);

Face upper_face(const Card& card, bool orientation);

/// Index of the card whose upper face differs from the other two. Cards 0
/// and 1 always show one circle and one dot, so this always exists and the
/// card found always has identical faces.
std::size_t minority_card_index(const Orientations& orientations);

/// The two cards other than the minority one, ascending.
std::array<std::size_t, 2> non_minority_cards(const Orientations& orientations);

GameResult play_one(StrategyKind strategy, const ShuffleOutcome& shuffle);
GameResult play_one(StrategyKind strategy, SplitMix64& rng);

/// Withdrawn pays nothing to either side.
PayoffPair payoff_for(GameResult result, const PayoffScheme& scheme);

struct ExpectedPayoff {
    Rational alice;
    Rational bob;

    friend bool operator==(const ExpectedPayoff&, const ExpectedPayoff&) = default;
};

/// Exact probability of each result under a strategy.
struct ResultDistribution {
    Rational alice_wins;
    Rational bob_wins;
    Rational withdrawn;
};

ResultDistribution result_distribution(StrategyKind strategy);

/// Exact expected payoffs over all atomic outcomes.
ExpectedPayoff analytic_payoff(StrategyKind strategy, const PayoffScheme& scheme);

struct OutcomeRow {
    ShuffleOutcome outcome;
    std::size_t chosen_card = 0; // card Bob ends up holding
    GameResult result = GameResult::AliceWins;
    Rational probability;
    PayoffPair payoff;

    /// e.g. "up=(O,D,O) draw=1"
    [[nodiscard]] std::string description(StrategyKind strategy) const;
};

/// Every atomic outcome with its exact probability: 8 orientations x 3 draws,
/// or 8 x 2 non-minority picks for Observe.
std::vector<OutcomeRow> enumerate_outcomes(StrategyKind strategy, const PayoffScheme& scheme);

/// Probability-weighted payoff sum over the rows.
ExpectedPayoff expectation(const std::vector<OutcomeRow>& rows);

struct MCEstimate {
    std::uint64_t trials = 0;
    double mean_alice = 0.0;
    double mean_bob = 0.0;
    double stderr_alice = 0.0; // sample standard deviation / sqrt(trials)
    double stderr_bob = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const MCEstimate&, const MCEstimate&) = default;
};

/// Monte Carlo estimate. Trial i draws from SplitMix64::for_trial(seed, i),
/// and the accumulators are integers, so the result does not depend on
/// `threads` (0 picks the hardware concurrency).
MCEstimate mc_payoff(StrategyKind strategy, const PayoffScheme& scheme, std::uint64_t trials,
                     std::uint64_t seed, unsigned threads = 0);

} // namespace cardoracle::game
