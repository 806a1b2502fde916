#pragma once

#include "avn/linalg.hpp"

namespace avn {

// Bell flavor of the polarization pair; the momentum pair is always the
// Psi-type superposition of the two correlated mode pairs.
enum class PiFlavor { Phi, Psi };

struct PhaseSetting {
    double theta = 0.0;  // polarization relative phase, radians
    double phi = 0.0;    // momentum relative phase, radians
};

enum class NoiseKind { UniformVisibility, WernerPerDof };

struct NoiseModel {
    NoiseKind kind = NoiseKind::UniformVisibility;
    double v = 1.0;               // uniform kind
    double v_pi = 1.0, v_k = 1.0; // per-DOF kind

    static NoiseModel uniform(double v);
    static NoiseModel werner(double v_pi, double v_k);
    void validate() const;  // all visibilities in [0,1]
};

// Pure hyperentangled state in the global (pi1,k1,pi2,k2) slot order,
// together with the settings that produced it.
struct HyperState {
    PiFlavor pi_flavor = PiFlavor::Psi;
    PhaseSetting phases;
    Ket ket;
};

// (|H1 H2> + e^{i theta}|V1 V2>)/sqrt2 resp. (|H1 V2> + e^{i theta}|V1 H2>)/sqrt2
// in the (pi1 x pi2) space.
Ket bell_pi(PiFlavor flavor, double theta);

// (|a1 b2> + e^{i phi}|a2 b1>)/sqrt2 in the (k1 x k2) space under the
// a1,b1 -> 0 / a2,b2 -> 1 encoding, i.e. (0, 1, e^{i phi}, 0)/sqrt2.
Ket bell_k(double phi);

HyperState hyper_state(PiFlavor pi_flavor, double theta, double phi);

// uniform_visibility: rho = v |Xi><Xi| + (1-v) I/16
// werner_per_dof:     rho = reorder[(v_pi |B_pi><B_pi| + (1-v_pi) I/4)
//                                 x (v_k  |b_k><b_k|  + (1-v_k)  I/4)]
DensityMatrix apply_noise(const HyperState& state, const NoiseModel& model);

}  // namespace avn
