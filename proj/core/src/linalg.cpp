#include "avn/linalg.hpp"

#include <cmath>
#include <sstream>

namespace avn {

namespace {

[[noreturn]] void dim_mismatch(const char* what, int a, int b) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw ContractViolation(msg.str());
}

int permuted_index(int index, const std::array<int, 4>& source_slot) {
    int out = 0;
    for (int s = 0; s < kNumSlots; ++s) {
        out |= slot_bit(index, source_slot[s]) << (kNumSlots - 1 - s);
    }
    return out;
}

void check_permutation(const std::array<int, 4>& source_slot) {
    int seen = 0;
    for (int s : source_slot) {
        if (s < 0 || s >= kNumSlots) throw ContractViolation("permute_qubits: slot out of range");
        seen |= 1 << s;
    }
    if (seen != 0xF) throw ContractViolation("permute_qubits: source slots must be a permutation of 0..3");
}

}  // namespace

bool Ket::is_normalized(double tol) const { return std::abs(amps.squaredNorm() - 1.0) <= tol; }

Ket Ket::basis(int dim, int index) {
    if (dim <= 0 || index < 0 || index >= dim) throw ContractViolation("Ket::basis: index out of range");
    Vector a = Vector::Zero(dim);
    a(index) = 1.0;
    return {std::move(a)};
}

bool Operator::is_hermitian(double tol) const {
    return (mat - mat.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_unitary(double tol) const {
    Matrix gram = mat.adjoint() * mat;
    return (gram - Matrix::Identity(dim(), dim())).cwiseAbs().maxCoeff() <= tol;
}

Operator Operator::identity(int dim) { return {Matrix::Identity(dim, dim)}; }

double DensityMatrix::purity() const { return (mat * mat).trace().real(); }

void DensityMatrix::validate() const {
    if (mat.rows() != mat.cols()) throw ContractViolation("DensityMatrix: matrix must be square");
    if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > kAlgebraTol)
        throw ContractViolation("DensityMatrix: not Hermitian within 1e-12");
    if (std::abs(mat.trace() - Complex(1.0)) > kAlgebraTol)
        throw ContractViolation("DensityMatrix: trace differs from 1 beyond 1e-12");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(mat, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kPsdTol)
        throw ContractViolation("DensityMatrix: negative eigenvalue beyond 1e-10");
}

DensityMatrix DensityMatrix::from_pure(const Ket& psi) {
    return {psi.amps * psi.amps.adjoint()};
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    return {Matrix::Identity(dim, dim) / static_cast<double>(dim)};
}

const Operator& pauli_z() {
    static const Operator z{(Matrix(2, 2) << 1, 0, 0, -1).finished()};
    return z;
}

const Operator& pauli_x() {
    static const Operator x{(Matrix(2, 2) << 0, 1, 1, 0).finished()};
    return x;
}

Operator kron(const Operator& a, const Operator& b) {
    const int da = a.dim();
    const int db = b.dim();
    Matrix out(da * db, da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            out.block(i * db, j * db, db, db) = a.mat(i, j) * b.mat;
    return {std::move(out)};
}

Ket kron_ket(const Ket& a, const Ket& b) {
    const int da = a.dim();
    const int db = b.dim();
    Vector out(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j)
            out(i * db + j) = a.amps(i) * b.amps(j);
    return {std::move(out)};
}

Operator embed(const Operator& op, int slot) {
    if (op.dim() != 2) throw ContractViolation("embed: operator must be 2-dimensional");
    if (slot < 0 || slot >= kNumSlots) throw ContractViolation("embed: slot out of range 0..3");
    Operator out = Operator::identity(1);
    for (int s = 0; s < kNumSlots; ++s) {
        out = kron(out, s == slot ? op : Operator::identity(2));
    }
    return out;
}

namespace {

double checked_real(Complex value, const char* what) {
    if (std::abs(value.imag()) >= kImagResidueTol) {
        std::ostringstream msg;
        msg << what << ": imaginary residue " << value.imag() << " exceeds 1e-10";
        throw NumericalIntegrityError(msg.str());
    }
    return value.real();
}

}  // namespace

double expectation(const Operator& obs, const Ket& psi) {
    if (obs.dim() != psi.dim()) dim_mismatch("expectation", obs.dim(), psi.dim());
    if (!obs.is_hermitian()) throw ContractViolation("expectation: observable is not Hermitian");
    const Complex value = psi.amps.dot(obs.mat * psi.amps);
    return checked_real(value, "expectation");
}

double expectation(const Operator& obs, const DensityMatrix& rho) {
    if (obs.dim() != rho.dim()) dim_mismatch("expectation", obs.dim(), rho.dim());
    if (!obs.is_hermitian()) throw ContractViolation("expectation: observable is not Hermitian");
    const Complex value = (rho.mat * obs.mat).trace();
    return checked_real(value, "expectation");
}

Ket apply(const Operator& op, const Ket& psi) {
    if (op.dim() != psi.dim()) dim_mismatch("apply", op.dim(), psi.dim());
    return {op.mat * psi.amps};
}

Ket permute_qubits(const Ket& psi, const std::array<int, 4>& source_slot) {
    if (psi.dim() != kHyperDim) throw ContractViolation("permute_qubits: ket must be 16-dimensional");
    check_permutation(source_slot);
    Vector out(kHyperDim);
    for (int i = 0; i < kHyperDim; ++i) out(permuted_index(i, source_slot)) = psi.amps(i);
    return {std::move(out)};
}

Operator permute_qubits(const Operator& op, const std::array<int, 4>& source_slot) {
    if (op.dim() != kHyperDim) throw ContractViolation("permute_qubits: operator must be 16-dimensional");
    check_permutation(source_slot);
    Matrix out(kHyperDim, kHyperDim);
    for (int i = 0; i < kHyperDim; ++i) {
        const int pi = permuted_index(i, source_slot);
        for (int j = 0; j < kHyperDim; ++j) out(pi, permuted_index(j, source_slot)) = op.mat(i, j);
    }
    return {std::move(out)};
}

DensityMatrix permute_qubits(const DensityMatrix& rho, const std::array<int, 4>& source_slot) {
    Operator as_op = permute_qubits(Operator{rho.mat}, source_slot);
    return {std::move(as_op.mat)};
}

}  // namespace avn
