#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace cardoracle::qstate {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 12;
inline constexpr std::size_t kMaxReferenceQubits = 6;

/// Raised when an operation is asked to work on a register larger than it supports.
class UnsupportedSizeError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Raised when a state violates a precondition such as normalization.
class InvalidStateError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Index of a computational basis state.
///
/// Qubit 0 is the leftmost ket symbol and the most significant bit:
/// |b0 b1 ... b(n-1)> has index sum_k b_k * 2^(n-1-k).
struct BasisIndex {
    std::uint64_t value = 0;

    friend constexpr auto operator<=>(BasisIndex, BasisIndex) = default;
};

/// Complex amplitude vector over the 2^n basis states of an n-qubit register.
///
/// Values are immutable through the public API; gate applications return new
/// states.
class StateVector {
  public:
    /// Wraps raw amplitudes. The length must be a power of two in [2, 2^12]
    /// and every component finite. No normalization check is made here.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
    [[nodiscard]] const Amplitude& at(BasisIndex idx) const;

    [[nodiscard]] double norm_squared() const noexcept;

  private:
    StateVector(std::size_t num_qubits, std::vector<Amplitude> amps)
        : num_qubits_(num_qubits), amps_(std::move(amps)) {}

    std::size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

/// 2x2 complex matrix, row-major: entries[row][col].
struct Gate1Q {
    std::array<std::array<Amplitude, 2>, 2> entries{};

    [[nodiscard]] const Amplitude& operator()(std::size_t row, std::size_t col) const {
        return entries[row][col];
    }
};

/// Matrix product a*b.
Gate1Q multiply(const Gate1Q& a, const Gate1Q& b);
Gate1Q adjoint(const Gate1Q& g);

/// Checks G^dagger G = I entrywise within `tol`.
bool is_unitary(const Gate1Q& g, double tol = 1e-12);

Gate1Q make_gate_identity();
Gate1Q make_gate_h();
Gate1Q make_gate_z();
Gate1Q make_gate_x();

/// Card phase gate diag(1, (-1)^r_k): identity for r_k = 0, Pauli-Z for r_k = 1.
/// The phase is built from the exact sign, not from exp(i*pi*r_k).
Gate1Q make_gate_u(bool r_k);

/// |idx> on n qubits.
StateVector basis_state(std::size_t num_qubits, BasisIndex idx);

/// Applies `g` to qubit `q` (I x ... x g x ... x I).
StateVector apply_1q(const StateVector& state, std::size_t q, const Gate1Q& g);

/// Controlled-Z between qubits a and b: negates every amplitude with both bits set.
StateVector apply_cz(const StateVector& state, std::size_t a, std::size_t b);

struct OneQubitOp {
    std::size_t qubit = 0;
    Gate1Q gate;
};

struct CzOp {
    std::size_t a = 0;
    std::size_t b = 1;
};

/// An empty placement is the identity.
struct IdentityOp {};

using GateOp = std::variant<IdentityOp, OneQubitOp, CzOp>;

/// Fast bit-stride path for one placement.
StateVector apply_gate(const StateVector& state, const GateOp& op);
StateVector run_circuit(const StateVector& state, std::span<const GateOp> ops);

/// Brute-force oracle: expands the placement into the full 2^n x 2^n matrix
/// by Kronecker products and multiplies. Limited to 6 qubits.
StateVector kron_apply_reference(const StateVector& state, const GateOp& op);
StateVector kron_run_reference(const StateVector& state, std::span<const GateOp> ops);

/// |amplitude|^2 per basis index. Entries with probability <= `cutoff` are
/// omitted; with the default cutoff only exact zeros are dropped.
/// Throws InvalidStateError if the squared norm is off by more than 1e-9.
std::map<BasisIndex, double> measure_all_distribution(const StateVector& state,
                                                      double cutoff = 0.0);

/// Phase-sensitive: max per-amplitude |a_i - b_i| <= tol.
bool states_equal(const StateVector& a, const StateVector& b, double tol);

/// <a|b>
Amplitude inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2, insensitive to global phase.
double fidelity(const StateVector& a, const StateVector& b);

} // namespace cardoracle::qstate
