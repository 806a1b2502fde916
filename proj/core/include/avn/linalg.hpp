#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>

#include "avn/errors.hpp"

namespace avn {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Tolerance policy: exact algebraic identities get 1e-12, spectral checks
// (positivity, eigenvector residuals) and imaginary residues get 1e-10.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kImagResidueTol = 1e-10;
inline constexpr double kEigenResidualTol = 1e-10;

// Four-qubit convention used across the project: slot 0 = pi1, 1 = k1,
// 2 = pi2, 3 = k2; basis index = 8*pi1 + 4*k1 + 2*pi2 + k2 with
// H,a1,b1 -> 0 and V,a2,b2 -> 1.
inline constexpr int kNumSlots = 4;
inline constexpr int kHyperDim = 16;

inline int slot_bit(int index, int slot) { return (index >> (kNumSlots - 1 - slot)) & 1; }

struct Ket {
    Vector amps;

    int dim() const { return static_cast<int>(amps.size()); }
    double norm() const { return amps.norm(); }
    bool is_normalized(double tol = kAlgebraTol) const;

    static Ket basis(int dim, int index);
};

struct Operator {
    Matrix mat;

    int dim() const { return static_cast<int>(mat.rows()); }
    bool is_hermitian(double tol = kAlgebraTol) const;
    bool is_unitary(double tol = kAlgebraTol) const;

    static Operator identity(int dim);
};

struct DensityMatrix {
    Matrix mat;

    int dim() const { return static_cast<int>(mat.rows()); }
    double purity() const;  // Tr(rho^2)

    // Hermitian within 1e-12, unit trace within 1e-12, eigenvalues >= -1e-10.
    void validate() const;

    static DensityMatrix from_pure(const Ket& psi);
    static DensityMatrix maximally_mixed(int dim);
};

const Operator& pauli_z();
const Operator& pauli_x();

// Kronecker products, row-major pairing: out(i*db+k, j*db+l) = a(i,j)*b(k,l).
Operator kron(const Operator& a, const Operator& b);
Ket kron_ket(const Ket& a, const Ket& b);

// I x ... x op x ... x I with the 2-dim op at the given slot of the
// four-qubit space.
Operator embed(const Operator& op, int slot);

// <psi|obs|psi> resp. Tr(rho*obs); obs must be Hermitian, the imaginary
// residue is checked against kImagResidueTol and discarded.
double expectation(const Operator& obs, const Ket& psi);
double expectation(const Operator& obs, const DensityMatrix& rho);

// Plain matrix-vector product, not renormalized.
Ket apply(const Operator& op, const Ket& psi);

// Reorders the four qubit slots of a 16-dim object: output slot s carries
// what the input held at slot source_slot[s].
Ket permute_qubits(const Ket& psi, const std::array<int, 4>& source_slot);
Operator permute_qubits(const Operator& op, const std::array<int, 4>& source_slot);
DensityMatrix permute_qubits(const DensityMatrix& rho, const std::array<int, 4>& source_slot);

}  // namespace avn
