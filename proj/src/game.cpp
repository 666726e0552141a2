#include "cardoracle/game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace cardoracle::game {

namespace {

char face_symbol(Face f) {
    return f == Face::Circle ? 'O' : 'D';
}

std::array<Face, 3> upper_faces(const Orientations& o) {
    return {upper_face(kDeck[0], o[0]), upper_face(kDeck[1], o[1]), upper_face(kDeck[2], o[2])};
}

Orientations orientations_from_bits(unsigned bits) {
    return {(bits & 4U) != 0, (bits & 2U) != 0, (bits & 1U) != 0};
}

GameResult by_card(std::size_t card) {
    return kDeck[card].identical() ? GameResult::AliceWins : GameResult::BobWins;
}

struct Accumulator {
    std::int64_t sum_alice = 0;
    std::int64_t sq_alice = 0;
    std::int64_t sum_bob = 0;
    std::int64_t sq_bob = 0;

    void add(const PayoffPair& p) {
        sum_alice += p.alice;
        sq_alice += std::int64_t{p.alice} * p.alice;
        sum_bob += p.bob;
        sq_bob += std::int64_t{p.bob} * p.bob;
    }

    Accumulator& operator+=(const Accumulator& o) {
        sum_alice += o.sum_alice;
        sq_alice += o.sq_alice;
        sum_bob += o.sum_bob;
        sq_bob += o.sq_bob;
        return *this;
    }
};

Accumulator run_trials(StrategyKind strategy, const PayoffScheme& scheme, std::uint64_t seed,
                       std::uint64_t begin, std::uint64_t end) {
    Accumulator acc;
    for (std::uint64_t i = begin; i < end; ++i) {
        SplitMix64 rng = SplitMix64::for_trial(seed, i);
        acc.add(payoff_for(play_one(strategy, rng), scheme));
    }
    return acc;
}

// Sample standard error from exact integer moments.
double standard_error(std::int64_t sum, std::int64_t sum_sq, std::uint64_t n) {
    if (n < 2) {
        return 0.0;
    }
    const auto nn = static_cast<__int128>(n);
    const __int128 scaled = nn * sum_sq - static_cast<__int128>(sum) * sum; // n^2 * biased var
    const double variance = static_cast<double>(scaled) / (static_cast<double>(n) * static_cast<double>(n - 1));
    return std::sqrt(std::max(variance, 0.0) / static_cast<double>(n));
}

} // namespace

ShuffleOutcome ShuffleOutcome::sample(SplitMix64& rng) {
    ShuffleOutcome s;
    s.orientations = orientations_from_bits(static_cast<unsigned>(rng() >> 61U));
    s.drawn_index = static_cast<std::size_t>(rng.below(3));
    s.observe_pick = static_cast<std::size_t>(rng.below(2));
    return s;
}

std::string_view to_string(Face f) {
    return f == Face::Circle ? "circle" : "dot";
}

std::string_view to_string(StrategyKind s) {
    switch (s) {
    case StrategyKind::Naive:
        return "naive";
    case StrategyKind::Observe:
        return "observe";
    case StrategyKind::OracleWithdraw:
        return "oracle-withdraw";
    }
    return "unknown";
}

std::string_view to_string(GameResult r) {
    switch (r) {
    case GameResult::AliceWins:
        return "alice-wins";
    case GameResult::BobWins:
        return "bob-wins";
    case GameResult::Withdrawn:
        return "withdrawn";
    }
    return "unknown";
}

std::optional<StrategyKind> parse_strategy(std::string_view name) {
    for (StrategyKind s : kAllStrategies) {
        if (to_string(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

std::optional<PayoffScheme> parse_scheme(std::string_view name) {
    if (name == "original") {
        return PayoffScheme::original();
    }
    if (name == "fair") {
        return PayoffScheme::fair();
    }
    return std::nullopt;
}

Face upper_face(const Card& card, bool orientation) {
    return orientation ? card.face_b : card.face_a;
}

std::size_t minority_card_index(const Orientations& orientations) {
    const auto faces = upper_faces(orientations);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const std::size_t j = (i + 1) % 3;
        const std::size_t k = (i + 2) % 3;
        if (faces[i] != faces[j] && faces[j] == faces[k]) {
            return i;
        }
    }
    throw std::logic_error("minority_card_index: upper faces have no unique minority");
}

std::array<std::size_t, 2> non_minority_cards(const Orientations& orientations) {
    const std::size_t m = minority_card_index(orientations);
    std::array<std::size_t, 2> out{};
    std::size_t n = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i != m) {
            out[n++] = i;
        }
    }
    return out;
}

GameResult play_one(StrategyKind strategy, const ShuffleOutcome& shuffle) {
    if (shuffle.drawn_index > 2 || shuffle.observe_pick > 1) {
        throw std::invalid_argument("play_one: shuffle outcome out of range");
    }
    switch (strategy) {
    case StrategyKind::Naive:
        return by_card(shuffle.drawn_index);
    case StrategyKind::Observe:
        return by_card(non_minority_cards(shuffle.orientations)[shuffle.observe_pick]);
    case StrategyKind::OracleWithdraw:
        if (shuffle.drawn_index == minority_card_index(shuffle.orientations)) {
            return GameResult::Withdrawn;
        }
        return by_card(shuffle.drawn_index);
    }
    throw std::logic_error("play_one: unknown strategy");
}

GameResult play_one(StrategyKind strategy, SplitMix64& rng) {
    return play_one(strategy, ShuffleOutcome::sample(rng));
}

PayoffPair payoff_for(GameResult result, const PayoffScheme& scheme) {
    switch (result) {
    case GameResult::AliceWins:
        return scheme.on_alice_win;
    case GameResult::BobWins:
        return scheme.on_bob_win;
    case GameResult::Withdrawn:
        return {0, 0};
    }
    throw std::logic_error("payoff_for: unknown result");
}

ResultDistribution result_distribution(StrategyKind strategy) {
    // Count equally likely (orientation, choice) cells per result.
    std::int64_t counts[3] = {0, 0, 0};
    const std::size_t choices = strategy == StrategyKind::Observe ? 2 : 3;
    for (unsigned bits = 0; bits < 8; ++bits) {
        for (std::size_t c = 0; c < choices; ++c) {
            ShuffleOutcome s;
            s.orientations = orientations_from_bits(bits);
            (strategy == StrategyKind::Observe ? s.observe_pick : s.drawn_index) = c;
            ++counts[static_cast<std::size_t>(play_one(strategy, s))];
        }
    }
    const auto cells = static_cast<std::int64_t>(8 * choices);
    return {Rational(counts[0], cells), Rational(counts[1], cells), Rational(counts[2], cells)};
}

ExpectedPayoff analytic_payoff(StrategyKind strategy, const PayoffScheme& scheme) {
    const ResultDistribution d = result_distribution(strategy);
    return {
        d.alice_wins * scheme.on_alice_win.alice + d.bob_wins * scheme.on_bob_win.alice,
        d.alice_wins * scheme.on_alice_win.bob + d.bob_wins * scheme.on_bob_win.bob,
    };
}

std::string OutcomeRow::description(StrategyKind strategy) const {
    const auto faces = upper_faces(outcome.orientations);
    std::string out = "up=(";
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out.push_back(face_symbol(faces[i]));
    }
    out += ") ";
    if (strategy == StrategyKind::Observe) {
        out += "pick=" + std::to_string(chosen_card);
    } else {
        out += "draw=" + std::to_string(outcome.drawn_index);
    }
    return out;
}

std::vector<OutcomeRow> enumerate_outcomes(StrategyKind strategy, const PayoffScheme& scheme) {
    std::vector<OutcomeRow> rows;
    const Rational orientation_p(1, 8);
    const bool observe = strategy == StrategyKind::Observe;
    const Rational choice_p(1, observe ? 2 : 3);

    for (unsigned bits = 0; bits < 8; ++bits) {
        const Orientations o = orientations_from_bits(bits);
        const std::size_t choices = observe ? 2 : 3;
        for (std::size_t c = 0; c < choices; ++c) {
            OutcomeRow row;
            row.outcome.orientations = o;
            if (observe) {
                row.outcome.observe_pick = c;
                row.chosen_card = non_minority_cards(o)[c];
            } else {
                row.outcome.drawn_index = c;
                row.chosen_card = c;
            }
            row.result = play_one(strategy, row.outcome);
            row.probability = orientation_p * choice_p;
            row.payoff = payoff_for(row.result, scheme);
            rows.push_back(row);
        }
    }
    return rows;
}

ExpectedPayoff expectation(const std::vector<OutcomeRow>& rows) {
    ExpectedPayoff e;
    for (const auto& row : rows) {
        e.alice += row.probability * row.payoff.alice;
        e.bob += row.probability * row.payoff.bob;
    }
    return e;
}

MCEstimate mc_payoff(StrategyKind strategy, const PayoffScheme& scheme, std::uint64_t trials,
                     std::uint64_t seed, unsigned threads) {
    if (trials == 0) {
        throw std::invalid_argument("mc_payoff: trials must be >= 1");
    }
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    // Small runs are not worth the thread startup.
    constexpr std::uint64_t kMinTrialsPerThread = 1U << 14U;
    const auto workers = static_cast<unsigned>(
        std::clamp<std::uint64_t>(trials / kMinTrialsPerThread, 1, threads));

    std::vector<Accumulator> partial(workers);
    const std::uint64_t chunk = trials / workers;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = w * chunk;
            const std::uint64_t end = (w + 1 == workers) ? trials : begin + chunk;
            pool.emplace_back([&, w, begin, end] { partial[w] = run_trials(strategy, scheme, seed, begin, end); });
        }
    }

    Accumulator total;
    for (const auto& p : partial) {
        total += p;
    }

    MCEstimate est;
    est.trials = trials;
    est.seed = seed;
    est.mean_alice = static_cast<double>(total.sum_alice) / static_cast<double>(trials);
    est.mean_bob = static_cast<double>(total.sum_bob) / static_cast<double>(trials);
    est.stderr_alice = standard_error(total.sum_alice, total.sq_alice, trials);
    est.stderr_bob = standard_error(total.sum_bob, total.sq_bob, trials);
    return est;
}

} // namespace cardoracle::game
