#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "cardoracle/qstate.hpp"

using namespace cardoracle::qstate;

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void expect_amplitudes(const StateVector& s, const std::vector<Amplitude>& ref, double tol = 1e-12) {
    ASSERT_EQ(s.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
        EXPECT_NEAR(s[i].real(), ref[i].real(), tol) << "i=" << i << " (real)";
        EXPECT_NEAR(s[i].imag(), ref[i].imag(), tol) << "i=" << i << " (imag)";
    }
}

// Haar-ish random U(2): e^{i alpha} [[a, -conj(b) e^{i phi}], [b, conj(a) e^{i phi}]].
Gate1Q random_unitary(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double theta = std::acos(std::sqrt(unit(rng)));
    const Amplitude a = std::polar(std::cos(theta), angle(rng));
    const Amplitude b = std::polar(std::sin(theta), angle(rng));
    const Amplitude phase = std::polar(1.0, angle(rng));
    const Amplitude global = std::polar(1.0, angle(rng));
    return Gate1Q{{{{global * a, -global * std::conj(b) * phase}, {global * b, global * std::conj(a) * phase}}}};
}

StateVector random_state(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<Amplitude> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (auto& a : amps) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto& a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector::from_amplitudes(std::move(amps));
}

GateOp random_op(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
    if (n >= 2 && rng() % 3 == 0) {
        const std::size_t a = qubit(rng);
        std::size_t b = qubit(rng);
        while (b == a) {
            b = qubit(rng);
        }
        return CzOp{a, b};
    }
    return OneQubitOp{qubit(rng), random_unitary(rng)};
}

} // namespace

// ---------- basis_state ----------

TEST(BasisState, SingleQubitZero) {
    expect_amplitudes(basis_state(1, BasisIndex{0}), {1.0, 0.0});
}

TEST(BasisState, LeftmostQubitIsMostSignificant) {
    const StateVector s = basis_state(3, BasisIndex{5}); // |101>
    expect_amplitudes(s, {0, 0, 0, 0, 0, 1, 0, 0});
    // X on qubit 0 of |000> must land on |100> = 4.
    const StateVector x0 = apply_1q(basis_state(3, BasisIndex{0}), 0, make_gate_x());
    EXPECT_EQ(std::abs(x0[4]), 1.0);
}

TEST(BasisState, TwoQubitsAllOnes) {
    expect_amplitudes(basis_state(2, BasisIndex{3}), {0, 0, 0, 1});
}

TEST(BasisState, RejectsOutOfRange) {
    EXPECT_THROW(basis_state(0, BasisIndex{0}), std::invalid_argument);
    EXPECT_THROW(basis_state(13, BasisIndex{0}), std::invalid_argument);
    EXPECT_THROW(basis_state(2, BasisIndex{4}), std::invalid_argument);
    EXPECT_NO_THROW(basis_state(12, BasisIndex{4095}));
}

TEST(StateVectorTest, FromAmplitudesValidates) {
    EXPECT_THROW(StateVector::from_amplitudes({1.0}), std::invalid_argument);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, std::nan("")}), std::invalid_argument);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, Amplitude{0.0, INFINITY}}), std::invalid_argument);
}

// ---------- gates ----------

TEST(Gates, HadamardMatrix) {
    const Gate1Q h = make_gate_h();
    EXPECT_NEAR(h(0, 0).real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(h(0, 1).real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(h(1, 0).real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(h(1, 1).real(), -kInvSqrt2, 1e-15);
}

TEST(Gates, HadamardOnBasis) {
    const Gate1Q h = make_gate_h();
    expect_amplitudes(apply_1q(basis_state(1, BasisIndex{0}), 0, h), {kInvSqrt2, kInvSqrt2});
    expect_amplitudes(apply_1q(basis_state(1, BasisIndex{1}), 0, h), {kInvSqrt2, -kInvSqrt2});
}

TEST(Gates, HadamardInvolution) {
    const Gate1Q hh = multiply(make_gate_h(), make_gate_h());
    const Gate1Q id = make_gate_identity();
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            EXPECT_NEAR(std::abs(hh(r, c) - id(r, c)), 0.0, 1e-12);
        }
    }
}

TEST(Gates, CardPhaseGate) {
    const Gate1Q u0 = make_gate_u(false);
    const Gate1Q u1 = make_gate_u(true);
    EXPECT_EQ(u0.entries, make_gate_identity().entries);
    EXPECT_EQ(u1.entries, make_gate_z().entries);
    // Exact -1, not exp(i*pi).
    EXPECT_EQ(u1(1, 1), Amplitude(-1.0, 0.0));
}

TEST(Gates, AllConstructedGatesUnitary) {
    for (const Gate1Q& g : {make_gate_identity(), make_gate_h(), make_gate_z(), make_gate_x(), make_gate_u(false),
                            make_gate_u(true)}) {
        EXPECT_TRUE(is_unitary(g, 1e-12));
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        EXPECT_TRUE(is_unitary(random_unitary(rng), 1e-12));
    }
    EXPECT_FALSE(is_unitary(Gate1Q{{{{1.0, 1.0}, {0.0, 1.0}}}}));
}

// ---------- apply_1q ----------

TEST(Apply1Q, HadamardOnQubit0) {
    const StateVector s = apply_1q(basis_state(2, BasisIndex{0}), 0, make_gate_h());
    expect_amplitudes(s, {kInvSqrt2, 0, kInvSqrt2, 0}); // (|00> + |10>)/sqrt2
}

TEST(Apply1Q, IdentityLeavesStateUnchanged) {
    std::mt19937_64 rng(1);
    const StateVector s = random_state(3, rng);
    for (std::size_t q = 0; q < 3; ++q) {
        EXPECT_TRUE(states_equal(apply_1q(s, q, make_gate_identity()), s, 0.0));
    }
}

TEST(Apply1Q, RejectsBadQubit) {
    EXPECT_THROW(apply_1q(basis_state(2, BasisIndex{0}), 2, make_gate_h()), std::invalid_argument);
}

TEST(Apply1Q, MatchesKroneckerReferenceOnTwoQubitBasis) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Gate1Q g = random_unitary(rng);
        for (std::uint64_t idx = 0; idx < 4; ++idx) {
            for (std::size_t q = 0; q < 2; ++q) {
                const StateVector in = basis_state(2, BasisIndex{idx});
                EXPECT_TRUE(states_equal(apply_1q(in, q, g), kron_apply_reference(in, OneQubitOp{q, g}), 1e-12));
            }
        }
    }
}

// ---------- apply_cz ----------

TEST(ApplyCz, PhaseOnlyWhenBothBitsSet) {
    expect_amplitudes(apply_cz(basis_state(2, BasisIndex{3}), 0, 1), {0, 0, 0, -1});
    expect_amplitudes(apply_cz(basis_state(2, BasisIndex{2}), 0, 1), {0, 0, 1, 0});
    expect_amplitudes(apply_cz(basis_state(2, BasisIndex{1}), 0, 1), {0, 1, 0, 0});
}

TEST(ApplyCz, SymmetricAndInvolutive) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const StateVector s = random_state(4, rng);
        const std::size_t a = rng() % 4;
        const std::size_t b = (a + 1 + rng() % 3) % 4;
        EXPECT_TRUE(states_equal(apply_cz(s, a, b), apply_cz(s, b, a), 0.0));
        EXPECT_TRUE(states_equal(apply_cz(apply_cz(s, a, b), a, b), s, 0.0));
        EXPECT_EQ(apply_cz(s, a, b).norm_squared(), s.norm_squared());
    }
}

TEST(ApplyCz, RejectsBadArguments) {
    const StateVector s = basis_state(3, BasisIndex{0});
    EXPECT_THROW(apply_cz(s, 1, 1), std::invalid_argument);
    EXPECT_THROW(apply_cz(s, 0, 3), std::invalid_argument);
    EXPECT_THROW(apply_cz(s, 5, 0), std::invalid_argument);
}

// ---------- kron_apply_reference ----------

TEST(KronReference, IdentityPlacement) {
    std::mt19937_64 rng(5);
    const StateVector s = random_state(3, rng);
    EXPECT_TRUE(states_equal(kron_apply_reference(s, IdentityOp{}), s, 1e-15));
}

TEST(KronReference, HadamardOnQubit1) {
    const StateVector in = basis_state(2, BasisIndex{0});
    const StateVector ref = kron_apply_reference(in, OneQubitOp{1, make_gate_h()});
    expect_amplitudes(ref, {kInvSqrt2, kInvSqrt2, 0, 0}); // (|00> + |01>)/sqrt2
    EXPECT_TRUE(states_equal(ref, apply_1q(in, 1, make_gate_h()), 1e-12));
}

TEST(KronReference, RandomThreeQubitCircuit) {
    std::mt19937_64 rng(17);
    std::vector<GateOp> ops;
    for (int i = 0; i < 10; ++i) {
        ops.push_back(random_op(3, rng));
    }
    const StateVector in = random_state(3, rng);
    EXPECT_TRUE(states_equal(run_circuit(in, ops), kron_run_reference(in, ops), 1e-12));
}

TEST(KronReference, SizeGuard) {
    EXPECT_NO_THROW(kron_apply_reference(basis_state(6, BasisIndex{0}), OneQubitOp{5, make_gate_h()}));
    EXPECT_THROW(kron_apply_reference(basis_state(7, BasisIndex{0}), OneQubitOp{0, make_gate_h()}),
                 UnsupportedSizeError);
}

TEST(KronReference, FastPathEquivalenceProperty) {
    // n <= 4, every basis input, 100 random placements.
    std::mt19937_64 rng(2024);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int p = 0; p < 100; ++p) {
            const GateOp op = random_op(n, rng);
            for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
                const StateVector in = basis_state(n, BasisIndex{idx});
                const StateVector fast = apply_gate(in, op);
                const StateVector ref = kron_apply_reference(in, op);
                ASSERT_TRUE(states_equal(fast, ref, 1e-12)) << "n=" << n << " placement=" << p << " idx=" << idx;
            }
        }
    }
}

// ---------- norm / measurement ----------

TEST(Norm, PreservedOverLongRandomSequences) {
    std::mt19937_64 rng(99);
    for (int run = 0; run < 20; ++run) {
        const std::size_t n = 1 + rng() % 8;
        StateVector s = random_state(n, rng);
        for (int g = 0; g < 100; ++g) {
            s = apply_gate(s, random_op(n, rng));
        }
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
    }
}

TEST(Measure, BasisStatePointMass) {
    const auto dist = measure_all_distribution(basis_state(3, BasisIndex{5}));
    ASSERT_EQ(dist.size(), 1U);
    EXPECT_EQ(dist.begin()->first, BasisIndex{5});
    EXPECT_DOUBLE_EQ(dist.begin()->second, 1.0);
}

TEST(Measure, EqualSuperposition) {
    const auto dist = measure_all_distribution(apply_1q(basis_state(1, BasisIndex{0}), 0, make_gate_h()));
    ASSERT_EQ(dist.size(), 2U);
    EXPECT_NEAR(dist.at(BasisIndex{0}), 0.5, 1e-12);
    EXPECT_NEAR(dist.at(BasisIndex{1}), 0.5, 1e-12);
}

TEST(Measure, ProbabilitiesSumToOne) {
    std::mt19937_64 rng(4);
    const auto dist = measure_all_distribution(random_state(5, rng));
    double total = 0.0;
    for (const auto& [idx, p] : dist) {
        total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(Measure, RejectsUnnormalized) {
    EXPECT_THROW(measure_all_distribution(StateVector::from_amplitudes({1.0, 1.0})), InvalidStateError);
}

// ---------- comparison ----------

TEST(StatesEqual, Basic) {
    std::mt19937_64 rng(8);
    const StateVector s = random_state(3, rng);
    EXPECT_TRUE(states_equal(s, s, 1e-12));
    EXPECT_NEAR(fidelity(s, s), 1.0, 1e-12);
}

TEST(StatesEqual, OrthogonalStates) {
    const StateVector zero = basis_state(1, BasisIndex{0});
    const StateVector one = basis_state(1, BasisIndex{1});
    EXPECT_FALSE(states_equal(zero, one, 1e-12));
    EXPECT_EQ(fidelity(zero, one), 0.0);
}

TEST(StatesEqual, PhaseSensitive) {
    const StateVector zero = basis_state(1, BasisIndex{0});
    const StateVector minus_zero = StateVector::from_amplitudes({-1.0, 0.0});
    EXPECT_FALSE(states_equal(zero, minus_zero, 1e-12));
    EXPECT_NEAR(fidelity(zero, minus_zero), 1.0, 1e-15);
}

TEST(StatesEqual, DimensionMismatch) {
    EXPECT_THROW(states_equal(basis_state(1, BasisIndex{0}), basis_state(2, BasisIndex{0}), 1e-12),
                 std::invalid_argument);
    EXPECT_THROW(fidelity(basis_state(1, BasisIndex{0}), basis_state(2, BasisIndex{0})), std::invalid_argument);
}
