#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <vector>

#include "cardoracle/game.hpp"
#include "cardoracle/oracle.hpp"
#include "cardoracle/qstate.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using cardoracle::Rational;
namespace qs = cardoracle::qstate;
namespace orc = cardoracle::oracle;
namespace gm = cardoracle::game;

std::vector<qs::Amplitude> amplitudes_of(const qs::StateVector& s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

std::map<std::uint64_t, double> distribution_of(const qs::StateVector& s, double cutoff) {
    std::map<std::uint64_t, double> out;
    for (const auto& [idx, p] : qs::measure_all_distribution(s, cutoff)) {
        out.emplace(idx.value, p);
    }
    return out;
}

orc::CardRecord record_from(const std::array<int, 3>& bits) {
    orc::CardRecord rec;
    for (std::size_t k = 0; k < 3; ++k) {
        if (bits[k] != 0 && bits[k] != 1) {
            throw std::invalid_argument("card bits must be 0 or 1");
        }
        rec.r[k] = bits[k] == 1;
    }
    return rec;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Statevector checks of the card-game oracle and exact payoff analysis";

    py::register_exception<qs::UnsupportedSizeError>(m, "UnsupportedSizeError", PyExc_ValueError);
    py::register_exception<qs::InvalidStateError>(m, "InvalidStateError", PyExc_ValueError);

    py::class_<qs::StateVector>(m, "StateVector")
        .def_static("from_amplitudes", &qs::StateVector::from_amplitudes, "amplitudes"_a)
        .def_property_readonly("num_qubits", &qs::StateVector::num_qubits)
        .def_property_readonly("amplitudes", &amplitudes_of)
        .def("norm_squared", &qs::StateVector::norm_squared)
        .def("__len__", &qs::StateVector::size);

    py::class_<qs::Gate1Q>(m, "Gate1Q")
        .def_property_readonly("entries", [](const qs::Gate1Q& g) { return g.entries; })
        .def("is_unitary", [](const qs::Gate1Q& g, double tol) { return qs::is_unitary(g, tol); },
             "tol"_a = 1e-12);

    m.def("make_gate_h", &qs::make_gate_h);
    m.def("make_gate_u", &qs::make_gate_u, "r_k"_a);
    m.def("basis_state", [](std::size_t n, std::uint64_t idx) { return qs::basis_state(n, qs::BasisIndex{idx}); },
          "num_qubits"_a, "index"_a);
    m.def("apply_1q", &qs::apply_1q, "state"_a, "qubit"_a, "gate"_a);
    m.def("apply_cz", &qs::apply_cz, "state"_a, "a"_a, "b"_a);
    m.def("measure_all_distribution", &distribution_of, "state"_a, "cutoff"_a = 0.0);
    m.def("states_equal", &qs::states_equal, "a"_a, "b"_a, "tol"_a);
    m.def("fidelity", &qs::fidelity, "a"_a, "b"_a);
    m.def("inner_product", &qs::inner_product, "a"_a, "b"_a);

    m.def("run_fig1_oracle", [](const std::array<int, 3>& r) { return orc::run_fig1_oracle(record_from(r)); },
          "r"_a);
    m.def("run_fig2_equivalent",
          [](const std::array<int, 3>& r) { return orc::run_fig2_equivalent(record_from(r)); }, "r"_a);
    m.def(
        "single_card_identity",
        [](int r_k) {
            if (r_k != 0 && r_k != 1) {
                throw std::invalid_argument("r_k must be 0 or 1");
            }
            const auto t = orc::single_card_identity(r_k == 1);
            return py::dict("input"_a = t.input, "after_first_h"_a = t.after_first_h,
                            "after_phase"_a = t.after_phase, "output"_a = t.output);
        },
        "r_k"_a);
    m.def("verify_triviality", [] {
        const auto report = orc::verify_triviality();
        py::list cases;
        for (const auto& c : report.cases) {
            cases.append(py::dict("r"_a = std::array<int, 3>{c.record.r[0], c.record.r[1], c.record.r[2]},
                                  "fig1_index"_a = c.fig1_index, "fig2_index"_a = c.fig2_index,
                                  "max_off_target"_a = c.max_off_target, "fig1_overlap"_a = c.fig1_overlap,
                                  "fig2_overlap"_a = c.fig2_overlap, "pass"_a = c.pass));
        }
        return py::dict("pass"_a = report.pass, "cases"_a = cases);
    });

    py::class_<Rational>(m, "Rational")
        .def(py::init<std::int64_t, std::int64_t>(), "num"_a, "den"_a = 1)
        .def_property_readonly("num", &Rational::num)
        .def_property_readonly("den", &Rational::den)
        .def("__float__", &Rational::to_double)
        .def("__str__", &Rational::to_string)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.to_string() + ")"; })
        .def(py::self == py::self)
        .def(py::self + py::self);

    py::enum_<gm::StrategyKind>(m, "Strategy")
        .value("NAIVE", gm::StrategyKind::Naive)
        .value("OBSERVE", gm::StrategyKind::Observe)
        .value("ORACLE_WITHDRAW", gm::StrategyKind::OracleWithdraw);

    py::enum_<gm::GameResult>(m, "GameResult")
        .value("ALICE_WINS", gm::GameResult::AliceWins)
        .value("BOB_WINS", gm::GameResult::BobWins)
        .value("WITHDRAWN", gm::GameResult::Withdrawn);

    auto scheme_of = [](const std::string& name) {
        if (auto s = gm::parse_scheme(name)) {
            return *s;
        }
        throw std::invalid_argument("unknown scheme '" + name + "' (expected 'original' or 'fair')");
    };

    m.def("minority_card_index", [](const std::array<bool, 3>& o) { return gm::minority_card_index(o); },
          "orientations"_a);
    m.def(
        "analytic_payoff",
        [scheme_of](gm::StrategyKind s, const std::string& scheme) {
            const auto e = gm::analytic_payoff(s, scheme_of(scheme));
            return py::make_tuple(e.alice, e.bob);
        },
        "strategy"_a, "scheme"_a);
    m.def(
        "enumerate_outcomes",
        [scheme_of](gm::StrategyKind s, const std::string& scheme) {
            py::list rows;
            for (const auto& row : gm::enumerate_outcomes(s, scheme_of(scheme))) {
                rows.append(py::dict("outcome"_a = row.description(s), "chosen_card"_a = row.chosen_card,
                                     "result"_a = row.result, "probability"_a = row.probability,
                                     "payoff"_a = py::make_tuple(row.payoff.alice, row.payoff.bob)));
            }
            return rows;
        },
        "strategy"_a, "scheme"_a);
    m.def(
        "mc_payoff",
        [scheme_of](gm::StrategyKind s, const std::string& scheme, std::uint64_t trials, std::uint64_t seed) {
            gm::MCEstimate est;
            {
                py::gil_scoped_release release;
                est = gm::mc_payoff(s, scheme_of(scheme), trials, seed);
            }
            return py::dict("trials"_a = est.trials, "seed"_a = est.seed, "mean_alice"_a = est.mean_alice,
                            "mean_bob"_a = est.mean_bob, "stderr_alice"_a = est.stderr_alice,
                            "stderr_bob"_a = est.stderr_bob);
        },
        "strategy"_a, "scheme"_a, "trials"_a, "seed"_a = 0);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
