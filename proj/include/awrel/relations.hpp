#ifndef AWREL_RELATIONS_HPP
#define AWREL_RELATIONS_HPP

#include <utility>
#include <vector>

#include "awrel/scalar.hpp"

namespace awrel {

// Coefficient 8-tuple AW(beta, gamma, gamma*, rho, rho*, omega, eta, eta*)
// of a pair of Askey-Wilson relations
//   A^2 A* - beta A A* A + A* A^2 - gamma (A A* + A* A) - rho A*
//       = gamma* A^2 + omega A + eta I,
//   A*^2 A - beta A* A A* + A A*^2 - gamma* (A* A + A A*) - rho* A
//       = gamma A*^2 + omega A* + eta* I.
struct AwCoefficients {
    Scalar beta;
    Scalar gamma;
    Scalar gamma_star;
    Scalar rho;
    Scalar rho_star;
    Scalar omega;
    Scalar eta;
    Scalar eta_star;

    friend bool operator==(const AwCoefficients&, const AwCoefficients&) = default;
};

// (A, A*) -> (t A + c, t* A* + c*) with t, t* nonzero. A translation has
// t = t* = 1, a scaling has c = c* = 0.
struct AffineMap {
    Scalar t{1};
    Scalar t_star{1};
    Scalar c{0};
    Scalar c_star{0};

    static AffineMap identity() { return {}; }
    static AffineMap translation(Scalar c, Scalar c_star);
    static AffineMap scaling(Scalar t, Scalar t_star);

    bool is_identity() const;
    AffineMap inverse() const;

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// after(second, first): the map A -> t2 (t1 A + c1) + c2.
AffineMap after(const AffineMap& second, const AffineMap& first);

enum class AwType {
    QRacah,
    QHahn,
    DualQHahn,
    QKrawtchouk,
    DualQKrawtchouk,
    QuantumOrAffineQKrawtchouk,
    Racah,
    Hahn,
    DualHahn,
    Krawtchouk,
    BannaiIto,
};

const char* aw_type_name(AwType type);

struct NormalizationResult {
    AwCoefficients coefficients;  // input transformed by `translation`
    AffineMap translation;        // t = t* = 1
    int case_id = 0;              // 1..7
    bool unique = false;          // true exactly for cases 1..5
};

struct Classification {
    AwType type;
    bool leonard_consistent;
    NormalizationResult normalization;
};

// Coefficients of AW relations satisfied by (t A + c, t* A* + c*) given those
// satisfied by (A, A*). beta is invariant.
AwCoefficients transform(const AwCoefficients& k, const AffineMap& m);

// Case analysis for normalizing by an affine translation:
//   1. beta != 2:                           gamma = gamma* = 0
//   2. beta = 2, gamma != 0, gamma* != 0:   rho = rho* = 0
//   3. beta = 2, gamma = 0, gamma* != 0:    rho* = omega = 0
//   4. beta = 2, gamma* = 0, gamma != 0:    rho = omega = 0
//   5. beta = 2, gamma = gamma* = 0, omega^2 != rho rho*:  eta = eta* = 0
//   6. as 5 but singular and solvable:      eta = eta* = 0, not unique
//   7. as 5 but singular and unsolvable:    at most one of eta, eta* zeroed
NormalizationResult normalize_translation(const AwCoefficients& k);

// Decision procedure on the translation-normalized coefficients, with the
// extra Leonard-pair inequalities reported in leonard_consistent.
Classification classify(const AwCoefficients& k);

// Q_0, Q_1, ..., Q_n from Q_{m+2} = beta Q_m - Q_{m-2} with
// Q_{-1} = Q_1 = sqrt_beta_plus_2, Q_0 = 2, Q_2 = beta.
std::vector<Scalar> aw_q_sequence(const Scalar& beta, const Scalar& sqrt_beta_plus_2,
                                  int n);

// Target values for the first nonzero coefficient of the two sequences
// (gamma, rho, eta, eta*) and (gamma*, rho*, eta*, eta) after the normalizing
// translation, as fixed by scaling:
//   gamma-slot: 2                      (beta = 2)
//   rho-slot:   4 - beta^2             (beta != +-2), else 1
//   eta-slot:   sqrt(beta+2) (beta-2)            if eta eta* != 0 or omega = 0
//               sqrt(beta+2) (beta-2) Q_{d+1}    if eta eta* = 0 and omega != 0
std::pair<Scalar, Scalar> pinned_scaling_targets(AwType type, const Scalar& beta,
                                                 const Scalar& sqrt_beta_plus_2, int d,
                                                 bool omega_zero,
                                                 bool eta_pair_nonzero);

}  // namespace awrel

#endif
