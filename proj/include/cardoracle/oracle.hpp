#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cardoracle/qstate.hpp"

namespace cardoracle::oracle {

/// Upper faces of the three cards: false (0) = circle up, true (1) = dot up.
struct CardRecord {
    std::array<bool, 3> r{};

    /// Basis index of |r0 r1 r2>, r0 most significant.
    [[nodiscard]] constexpr std::size_t index() const {
        return (std::size_t{r[0]} << 2) | (std::size_t{r[1]} << 1) | std::size_t{r[2]};
    }

    static constexpr CardRecord from_index(std::size_t idx) {
        return CardRecord{{(idx & 4U) != 0, (idx & 2U) != 0, (idx & 1U) != 0}};
    }

    /// "r0r1r2", e.g. "101".
    [[nodiscard]] std::string to_string() const;

    friend constexpr bool operator==(const CardRecord&, const CardRecord&) = default;
};

/// All eight records in index order.
std::array<CardRecord, 8> all_card_records();

/// Per wire k: |0> -> H -> U_k(r_k) -> H, with r_k fixed when the circuit is built.
std::vector<qstate::GateOp> fig1_circuit(const CardRecord& rec);

/// Per card k: H(query k), CZ(query k, data k), H(query k). Query qubits are
/// 0-2 and data qubits 3-5; the circuit itself does not depend on r.
std::vector<qstate::GateOp> fig2_circuit();

/// 3-qubit output of the classically parameterized oracle.
qstate::StateVector run_fig1_oracle(const CardRecord& rec);

/// Input |000> (x) |r0 r1 r2>.
qstate::StateVector fig2_input(const CardRecord& rec);

/// 6-qubit output of the equivalent circuit with the card bits as data qubits.
qstate::StateVector run_fig2_equivalent(const CardRecord& rec);

/// States along (H x I) V_k (H x I) |0>|r_k>.
struct SingleCardTrace {
    qstate::StateVector input;
    qstate::StateVector after_first_h;
    qstate::StateVector after_phase;
    qstate::StateVector output;
};

SingleCardTrace single_card_identity(bool r_k);

struct TrivialityCase {
    CardRecord record;
    std::size_t fig1_index = 0;  // most probable outcome of the 3-qubit oracle
    std::size_t fig2_index = 0;  // most probable outcome of the 6-qubit circuit
    double max_off_target = 0.0; // largest |amplitude| away from the target, both circuits
    qstate::Amplitude fig1_overlap;  // <r|fig1 output>
    qstate::Amplitude fig2_overlap;  // <r,r|fig2 output>
    bool reference_agrees = false;   // fast path matches the Kronecker reference
    bool pass = false;
};

struct TrivialityReport {
    std::vector<TrivialityCase> cases;
    bool pass = false;
};

inline constexpr double kIdentityTolerance = 1e-12;

/// Runs both circuits for every card record and checks each output against
/// the classical readout |r> (and |r>|r>) with phase +1.
TrivialityReport verify_triviality();

} // namespace cardoracle::oracle
