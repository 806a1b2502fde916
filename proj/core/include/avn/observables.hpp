#pragma once

#include <array>
#include <vector>

#include "avn/linalg.hpp"

namespace avn {

enum class Party { Alice = 1, Bob = 2 };
enum class Dof { Polarization, Momentum };
enum class Axis { Z, X };

// One of the eight elementary +-1 observables: z_i, x_i on polarization,
// z_i', x_i' on momentum.
struct LocalObservable {
    Party party;
    Dof dof;
    Axis axis;

    int slot() const;  // position in the (pi1,k1,pi2,k2) order
};

// One correlation term of the nine-term operator O, in its printed order.
// factors are listed in written order; within one party a polarization and
// a momentum factor may target the same photon (composite observables), and
// for the ninth term two anticommuting factors share a slot, so the order
// matters there.
struct TermSpec {
    int id = 0;                            // 1..9
    std::vector<LocalObservable> factors;  // written order
    int sign_in_o = 0;                     // +-1, the coefficient of the term in O
    const char* label = "";
};

// The nine terms of
//   O = -z1.z2 - z1'.z2' - x1.x2 - x1'.x2'
//       + z1z1'.z2.z2' + x1x1'.x2.x2' + z1.x1'.z2x2' + x1.z1'.x2z2'
//       - z1z1'.x1x1'.z2x2'.x2z2'
const std::array<TermSpec, 9>& cabello_terms();

Operator local_operator(const LocalObservable& obs);

// Ordered product of the embedded factors; 16x16 and Hermitian for all nine.
Operator term_operator(const TermSpec& spec);
Operator term_operator(int term_id);

struct CabelloOperator {
    Operator matrix;  // sum of sign * term over the nine terms
    std::array<TermSpec, 9> terms;
};

CabelloOperator cabello_operator();

struct EigenvalueCheck {
    int term_id = 0;
    double eigenvalue = 0.0;  // <psi|T|psi>; the eigenvalue when is_eigenvector
    double residual = 0.0;    // || T psi - eigenvalue * psi ||
    bool is_eigenvector = false;
};

// Applies each term operator to the state and reads off the eigenvalue;
// non-eigenvectors are flagged per term, not treated as failures.
std::array<EigenvalueCheck, 9> verify_eigenvalues(const Ket& state);

}  // namespace avn
