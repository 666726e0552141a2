#include "cardoracle/qstate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace cardoracle::qstate {

namespace {

constexpr double kNormTolerance = 1e-9;

void check_qubit(const StateVector& state, std::size_t q, const char* what) {
    if (q >= state.num_qubits()) {
        throw std::invalid_argument(std::string(what) + ": qubit " + std::to_string(q) +
                                    " out of range for " + std::to_string(state.num_qubits()) +
                                    "-qubit state");
    }
}

void check_same_dims(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("state dimension mismatch: " + std::to_string(a.num_qubits()) +
                                    " vs " + std::to_string(b.num_qubits()) + " qubits");
    }
}

// Bit position of qubit q within a basis index (qubit 0 is the MSB).
constexpr std::size_t bit_of(std::size_t num_qubits, std::size_t q) {
    return num_qubits - 1 - q;
}

// Dense square matrix used only by the reference path.
class DenseMatrix {
  public:
    explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static DenseMatrix from_gate(const Gate1Q& g) {
        DenseMatrix m(2);
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                m(r, c) = g(r, c);
            }
        }
        return m;
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    Amplitude& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Amplitude& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    [[nodiscard]] DenseMatrix kron(const DenseMatrix& rhs) const {
        DenseMatrix out(dim_ * rhs.dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                for (std::size_t k = 0; k < rhs.dim_; ++k) {
                    for (std::size_t l = 0; l < rhs.dim_; ++l) {
                        out(i * rhs.dim_ + k, j * rhs.dim_ + l) = (*this)(i, j) * rhs(k, l);
                    }
                }
            }
        }
        return out;
    }

    DenseMatrix& operator+=(const DenseMatrix& rhs) {
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] += rhs.data_[i];
        }
        return *this;
    }

    [[nodiscard]] std::vector<Amplitude> apply(std::span<const Amplitude> v) const {
        std::vector<Amplitude> out(dim_);
        for (std::size_t r = 0; r < dim_; ++r) {
            Amplitude acc{0.0, 0.0};
            for (std::size_t c = 0; c < dim_; ++c) {
                acc += (*this)(r, c) * v[c];
            }
            out[r] = acc;
        }
        return out;
    }

  private:
    std::size_t dim_;
    std::vector<Amplitude> data_;
};

// O_0 x O_1 x ... x O_{n-1}, qubit 0 leftmost.
DenseMatrix kron_chain(const std::vector<Gate1Q>& per_wire) {
    DenseMatrix acc = DenseMatrix::from_gate(per_wire.front());
    for (std::size_t q = 1; q < per_wire.size(); ++q) {
        acc = acc.kron(DenseMatrix::from_gate(per_wire[q]));
    }
    return acc;
}

DenseMatrix expand(std::size_t num_qubits, const GateOp& op) {
    const Gate1Q id = make_gate_identity();
    std::vector<Gate1Q> wires(num_qubits, id);

    if (const auto* one = std::get_if<OneQubitOp>(&op)) {
        wires[one->qubit] = one->gate;
        return kron_chain(wires);
    }
    if (const auto* cz = std::get_if<CzOp>(&op)) {
        // |0><0|_a x I + |1><1|_a x Z_b
        Gate1Q p0;
        p0.entries[0][0] = 1.0;
        Gate1Q p1;
        p1.entries[1][1] = 1.0;

        wires[cz->a] = p0;
        DenseMatrix m = kron_chain(wires);
        wires[cz->a] = p1;
        wires[cz->b] = make_gate_z();
        m += kron_chain(wires);
        return m;
    }
    return kron_chain(wires);
}

void check_op(const StateVector& state, const GateOp& op) {
    if (const auto* one = std::get_if<OneQubitOp>(&op)) {
        check_qubit(state, one->qubit, "apply_1q");
    } else if (const auto* cz = std::get_if<CzOp>(&op)) {
        check_qubit(state, cz->a, "apply_cz");
        check_qubit(state, cz->b, "apply_cz");
        if (cz->a == cz->b) {
            throw std::invalid_argument("apply_cz: control and target must differ");
        }
    }
}

} // namespace

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const std::size_t len = amplitudes.size();
    if (len < 2 || !std::has_single_bit(len)) {
        throw std::invalid_argument("amplitude count " + std::to_string(len) +
                                    " is not a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(len));
    if (n > kMaxQubits) {
        throw std::invalid_argument("state of " + std::to_string(n) + " qubits exceeds the " +
                                    std::to_string(kMaxQubits) + "-qubit limit");
    }
    for (const auto& a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("amplitude is not finite");
        }
    }
    return StateVector(n, std::move(amplitudes));
}

const Amplitude& StateVector::at(BasisIndex idx) const {
    if (idx.value >= amps_.size()) {
        throw std::invalid_argument("basis index " + std::to_string(idx.value) + " out of range");
    }
    return amps_[idx.value];
}

double StateVector::norm_squared() const noexcept {
    double acc = 0.0;
    for (const auto& a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

Gate1Q multiply(const Gate1Q& a, const Gate1Q& b) {
    Gate1Q out;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out.entries[r][c] = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
        }
    }
    return out;
}

Gate1Q adjoint(const Gate1Q& g) {
    Gate1Q out;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out.entries[r][c] = std::conj(g(c, r));
        }
    }
    return out;
}

bool is_unitary(const Gate1Q& g, double tol) {
    const Gate1Q prod = multiply(adjoint(g), g);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            const Amplitude expected = (r == c) ? 1.0 : 0.0;
            if (std::abs(prod(r, c) - expected) > tol) {
                return false;
            }
        }
    }
    return true;
}

Gate1Q make_gate_identity() {
    return Gate1Q{{{{1.0, 0.0}, {0.0, 1.0}}}};
}

Gate1Q make_gate_h() {
    const double s = 1.0 / std::sqrt(2.0);
    return Gate1Q{{{{s, s}, {s, -s}}}};
}

Gate1Q make_gate_z() {
    return Gate1Q{{{{1.0, 0.0}, {0.0, -1.0}}}};
}

Gate1Q make_gate_x() {
    return Gate1Q{{{{0.0, 1.0}, {1.0, 0.0}}}};
}

Gate1Q make_gate_u(bool r_k) {
    const double phase = r_k ? -1.0 : 1.0;
    return Gate1Q{{{{1.0, 0.0}, {0.0, phase}}}};
}

StateVector basis_state(std::size_t num_qubits, BasisIndex idx) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count " + std::to_string(num_qubits) +
                                    " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (idx.value >= dim) {
        throw std::invalid_argument("basis index " + std::to_string(idx.value) +
                                    " out of range for " + std::to_string(num_qubits) + " qubits");
    }
    std::vector<Amplitude> amps(dim);
    amps[idx.value] = 1.0;
    return StateVector::from_amplitudes(std::move(amps));
}

StateVector apply_1q(const StateVector& state, std::size_t q, const Gate1Q& g) {
    check_qubit(state, q, "apply_1q");
    const std::size_t stride = std::size_t{1} << bit_of(state.num_qubits(), q);
    std::vector<Amplitude> out(state.amplitudes().begin(), state.amplitudes().end());

    // Visit each pair (i0, i1 = i0 | stride) once, with the qubit bit clear in i0.
    for (std::size_t block = 0; block < out.size(); block += 2 * stride) {
        for (std::size_t i0 = block; i0 < block + stride; ++i0) {
            const std::size_t i1 = i0 + stride;
            const Amplitude v0 = out[i0];
            const Amplitude v1 = out[i1];
            out[i0] = g(0, 0) * v0 + g(0, 1) * v1;
            out[i1] = g(1, 0) * v0 + g(1, 1) * v1;
        }
    }
    return StateVector::from_amplitudes(std::move(out));
}

StateVector apply_cz(const StateVector& state, std::size_t a, std::size_t b) {
    check_op(state, CzOp{a, b});
    const std::size_t mask = (std::size_t{1} << bit_of(state.num_qubits(), a)) |
                             (std::size_t{1} << bit_of(state.num_qubits(), b));
    std::vector<Amplitude> out(state.amplitudes().begin(), state.amplitudes().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if ((i & mask) == mask) {
            out[i] = -out[i];
        }
    }
    return StateVector::from_amplitudes(std::move(out));
}

StateVector apply_gate(const StateVector& state, const GateOp& op) {
    if (const auto* one = std::get_if<OneQubitOp>(&op)) {
        return apply_1q(state, one->qubit, one->gate);
    }
    if (const auto* cz = std::get_if<CzOp>(&op)) {
        return apply_cz(state, cz->a, cz->b);
    }
    return state;
}

StateVector run_circuit(const StateVector& state, std::span<const GateOp> ops) {
    StateVector cur = state;
    for (const auto& op : ops) {
        cur = apply_gate(cur, op);
    }
    return cur;
}

StateVector kron_apply_reference(const StateVector& state, const GateOp& op) {
    if (state.num_qubits() > kMaxReferenceQubits) {
        throw UnsupportedSizeError("kron_apply_reference: " + std::to_string(state.num_qubits()) +
                                   " qubits exceeds the " + std::to_string(kMaxReferenceQubits) +
                                   "-qubit reference limit");
    }
    check_op(state, op);
    const DenseMatrix m = expand(state.num_qubits(), op);
    return StateVector::from_amplitudes(m.apply(state.amplitudes()));
}

StateVector kron_run_reference(const StateVector& state, std::span<const GateOp> ops) {
    StateVector cur = state;
    for (const auto& op : ops) {
        cur = kron_apply_reference(cur, op);
    }
    return cur;
}

std::map<BasisIndex, double> measure_all_distribution(const StateVector& state, double cutoff) {
    const double norm = state.norm_squared();
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw InvalidStateError("measure_all_distribution: squared norm " + std::to_string(norm) +
                                " is not within 1e-9 of 1");
    }
    std::map<BasisIndex, double> dist;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p > cutoff) {
            dist.emplace(BasisIndex{i}, p);
        }
    }
    return dist;
}

bool states_equal(const StateVector& a, const StateVector& b, double tol) {
    check_same_dims(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > tol) {
            return false;
        }
    }
    return true;
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
    check_same_dims(a, b);
    Amplitude acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner_product(a, b));
}

} // namespace cardoracle::qstate
