#include "avn/states.hpp"

#include <cmath>
#include <utility>

namespace avn {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// kron_ket(bell_pi, bell_k) orders slots as (pi1,pi2,k1,k2); the project
// convention interleaves the two photons instead.
constexpr std::array<int, 4> kPairToGlobal = {0, 2, 1, 3};

void check_visibility(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ContractViolation(std::string("NoiseModel: ") + name + " must lie in [0,1]");
    }
}

DensityMatrix werner_pair(const Ket& bell, double v) {
    Matrix m = v * (bell.amps * bell.amps.adjoint()) + (1.0 - v) / 4.0 * Matrix::Identity(4, 4);
    return {std::move(m)};
}

}  // namespace

NoiseModel NoiseModel::uniform(double v) {
    NoiseModel m;
    m.kind = NoiseKind::UniformVisibility;
    m.v = v;
    m.validate();
    return m;
}

NoiseModel NoiseModel::werner(double v_pi, double v_k) {
    NoiseModel m;
    m.kind = NoiseKind::WernerPerDof;
    m.v_pi = v_pi;
    m.v_k = v_k;
    m.validate();
    return m;
}

void NoiseModel::validate() const {
    if (kind == NoiseKind::UniformVisibility) {
        check_visibility(v, "v");
    } else {
        check_visibility(v_pi, "v_pi");
        check_visibility(v_k, "v_k");
    }
}

Ket bell_pi(PiFlavor flavor, double theta) {
    Vector a = Vector::Zero(4);
    const Complex phase = std::polar(1.0, theta);
    if (flavor == PiFlavor::Phi) {
        a(0) = kInvSqrt2;          // |H H>
        a(3) = phase * kInvSqrt2;  // |V V>
    } else {
        a(1) = kInvSqrt2;          // |H V>
        a(2) = phase * kInvSqrt2;  // |V H>
    }
    return {std::move(a)};
}

Ket bell_k(double phi) {
    Vector a = Vector::Zero(4);
    a(1) = kInvSqrt2;                           // |a1 b2>
    a(2) = std::polar(1.0, phi) * kInvSqrt2;    // |a2 b1>
    return {std::move(a)};
}

HyperState hyper_state(PiFlavor pi_flavor, double theta, double phi) {
    Ket pair_ordered = kron_ket(bell_pi(pi_flavor, theta), bell_k(phi));
    return {pi_flavor, {theta, phi}, permute_qubits(pair_ordered, kPairToGlobal)};
}

DensityMatrix apply_noise(const HyperState& state, const NoiseModel& model) {
    model.validate();
    if (!state.ket.is_normalized(1e-9)) {
        throw ContractViolation("apply_noise: state must be a normalized pure ket");
    }

    DensityMatrix rho{Matrix()};
    if (model.kind == NoiseKind::UniformVisibility) {
        rho.mat = model.v * (state.ket.amps * state.ket.amps.adjoint()) +
                  (1.0 - model.v) / kHyperDim * Matrix::Identity(kHyperDim, kHyperDim);
    } else {
        DensityMatrix pi_part = werner_pair(bell_pi(state.pi_flavor, state.phases.theta), model.v_pi);
        DensityMatrix k_part = werner_pair(bell_k(state.phases.phi), model.v_k);
        Operator pair_ordered = kron(Operator{pi_part.mat}, Operator{k_part.mat});
        rho.mat = permute_qubits(Operator{std::move(pair_ordered.mat)}, kPairToGlobal).mat;
    }
    rho.validate();
    return rho;
}

}  // namespace avn
