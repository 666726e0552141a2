#include "cardoracle/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace cardoracle::oracle {

namespace {

using qstate::Amplitude;
using qstate::BasisIndex;
using qstate::GateOp;
using qstate::StateVector;

constexpr std::size_t kCards = 3;

std::size_t argmax_probability(const StateVector& s) {
    const auto amps = s.amplitudes();
    const auto it = std::max_element(amps.begin(), amps.end(), [](const Amplitude& a, const Amplitude& b) {
        return std::norm(a) < std::norm(b);
    });
    return static_cast<std::size_t>(it - amps.begin());
}

double max_off_target(const StateVector& s, std::size_t target) {
    double worst = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != target) {
            worst = std::max(worst, std::abs(s[i]));
        }
    }
    return worst;
}

bool overlap_is_plus_one(const Amplitude& overlap) {
    return std::abs(overlap.real() - 1.0) <= kIdentityTolerance &&
           std::abs(overlap.imag()) <= kIdentityTolerance;
}

} // namespace

std::string CardRecord::to_string() const {
    std::string out;
    for (bool bit : r) {
        out.push_back(bit ? '1' : '0');
    }
    return out;
}

std::array<CardRecord, 8> all_card_records() {
    std::array<CardRecord, 8> out{};
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = CardRecord::from_index(i);
    }
    return out;
}

std::vector<GateOp> fig1_circuit(const CardRecord& rec) {
    const auto h = qstate::make_gate_h();
    std::vector<GateOp> ops;
    for (std::size_t k = 0; k < kCards; ++k) {
        ops.emplace_back(qstate::OneQubitOp{k, h});
        ops.emplace_back(qstate::OneQubitOp{k, qstate::make_gate_u(rec.r[k])});
        ops.emplace_back(qstate::OneQubitOp{k, h});
    }
    return ops;
}

std::vector<GateOp> fig2_circuit() {
    const auto h = qstate::make_gate_h();
    std::vector<GateOp> ops;
    for (std::size_t k = 0; k < kCards; ++k) {
        ops.emplace_back(qstate::OneQubitOp{k, h});
        ops.emplace_back(qstate::CzOp{k, kCards + k});
        ops.emplace_back(qstate::OneQubitOp{k, h});
    }
    return ops;
}

StateVector run_fig1_oracle(const CardRecord& rec) {
    const auto ops = fig1_circuit(rec);
    return qstate::run_circuit(qstate::basis_state(kCards, BasisIndex{0}), ops);
}

StateVector fig2_input(const CardRecord& rec) {
    return qstate::basis_state(2 * kCards, BasisIndex{rec.index()});
}

StateVector run_fig2_equivalent(const CardRecord& rec) {
    const auto ops = fig2_circuit();
    return qstate::run_circuit(fig2_input(rec), ops);
}

SingleCardTrace single_card_identity(bool r_k) {
    // Qubit 0 is the query x, qubit 1 carries r_k.
    const auto h = qstate::make_gate_h();
    StateVector input = qstate::basis_state(2, BasisIndex{r_k ? 1U : 0U});
    StateVector after_first_h = qstate::apply_1q(input, 0, h);
    StateVector after_phase = qstate::apply_cz(after_first_h, 0, 1);
    StateVector output = qstate::apply_1q(after_phase, 0, h);
    return SingleCardTrace{std::move(input), std::move(after_first_h), std::move(after_phase),
                           std::move(output)};
}

TrivialityReport verify_triviality() {
    TrivialityReport report;
    report.pass = true;
    const auto fig2_ops = fig2_circuit();

    for (const CardRecord& rec : all_card_records()) {
        const std::size_t target1 = rec.index();
        const std::size_t target2 = (target1 << kCards) | target1;

        const StateVector out1 = run_fig1_oracle(rec);
        const StateVector out2 = run_fig2_equivalent(rec);
        const StateVector expect1 = qstate::basis_state(kCards, BasisIndex{target1});
        const StateVector expect2 = qstate::basis_state(2 * kCards, BasisIndex{target2});

        const auto fig1_ops = fig1_circuit(rec);
        const StateVector ref1 =
            qstate::kron_run_reference(qstate::basis_state(kCards, BasisIndex{0}), fig1_ops);
        const StateVector ref2 = qstate::kron_run_reference(fig2_input(rec), fig2_ops);

        TrivialityCase c;
        c.record = rec;
        c.fig1_index = argmax_probability(out1);
        c.fig2_index = argmax_probability(out2);
        c.max_off_target = std::max(max_off_target(out1, target1), max_off_target(out2, target2));
        c.fig1_overlap = qstate::inner_product(expect1, out1);
        c.fig2_overlap = qstate::inner_product(expect2, out2);
        c.reference_agrees = qstate::states_equal(out1, ref1, kIdentityTolerance) &&
                             qstate::states_equal(out2, ref2, kIdentityTolerance);
        c.pass = c.fig1_index == target1 && c.fig2_index == target2 &&
                 qstate::states_equal(out1, expect1, kIdentityTolerance) &&
                 qstate::states_equal(out2, expect2, kIdentityTolerance) &&
                 overlap_is_plus_one(c.fig1_overlap) && overlap_is_plus_one(c.fig2_overlap) &&
                 c.reference_agrees;

        report.pass = report.pass && c.pass;
        report.cases.push_back(c);
    }
    return report;
}

} // namespace cardoracle::oracle
