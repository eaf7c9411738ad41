#ifndef AWREL_PARAMETER_ARRAY_HPP
#define AWREL_PARAMETER_ARRAY_HPP

#include <string>
#include <utility>
#include <vector>

#include "awrel/matrix.hpp"
#include "awrel/relations.hpp"
#include "awrel/scalar.hpp"

namespace awrel {

// The permutations producing the relatives of a parameter array.
enum class RelationOp {
    Down,       // theta fixed; theta*, varphi, phi reversed with varphi/phi swapped
    DDown,      // theta reversed; theta* fixed; varphi/phi swapped in order
    DownDDown,  // composition of the two
};

const char* relation_op_name(RelationOp op);

// (theta_0..theta_d; theta*_0..theta*_d; varphi_1..varphi_d; phi_1..phi_d).
class ParameterArray {
public:
    ParameterArray(std::vector<Scalar> theta, std::vector<Scalar> theta_star,
                   std::vector<Scalar> varphi, std::vector<Scalar> phi);

    int diameter() const { return static_cast<int>(theta_.size()) - 1; }

    const Scalar& theta(int i) const { return theta_.at(i); }
    const Scalar& theta_star(int i) const { return theta_star_.at(i); }
    // 1-based, matching the subscripts varphi_1..varphi_d and phi_1..phi_d.
    const Scalar& varphi(int i) const { return varphi_.at(i - 1); }
    const Scalar& phi(int i) const { return phi_.at(i - 1); }

    const std::vector<Scalar>& thetas() const { return theta_; }
    const std::vector<Scalar>& theta_stars() const { return theta_star_; }
    const std::vector<Scalar>& varphis() const { return varphi_; }
    const std::vector<Scalar>& phis() const { return phi_; }

    friend bool operator==(const ParameterArray&, const ParameterArray&) = default;

private:
    std::vector<Scalar> theta_;
    std::vector<Scalar> theta_star_;
    std::vector<Scalar> varphi_;
    std::vector<Scalar> phi_;
};

struct Violation {
    std::string condition;  // "PA1".."PA5"
    std::vector<int> indices;
    std::string detail;
};

// Violations are data: an empty report means the sequence is a parameter array.
std::vector<Violation> validate(const ParameterArray& pa);
bool is_valid(const ParameterArray& pa);

// Lower bidiagonal (diagonal theta, subdiagonal 1) paired with upper
// bidiagonal (diagonal theta*, superdiagonal varphi).
std::pair<Matrix, Matrix> split1(const ParameterArray& pa);
// Same with theta reversed and superdiagonal phi.
std::pair<Matrix, Matrix> split2(const ParameterArray& pa);

// Diagonal entries a_i and a*_i of the tridiagonal forms; the _alt variants
// are the equivalent expressions through phi. Summands with zero numerator
// (the boundary convention varphi_0 = varphi_{d+1} = phi_0 = phi_{d+1} = 0)
// contribute zero without forming their denominator.
Scalar a_diag(const ParameterArray& pa, int i);
Scalar a_star_diag(const ParameterArray& pa, int i);
Scalar a_diag_alt(const ParameterArray& pa, int i);
Scalar a_star_diag_alt(const ParameterArray& pa, int i);

// The eight coefficients from the closed formulas, evaluated at the canonical
// indices and swept over the full validity ranges; requires d >= 3.
AwCoefficients aw_coefficients(const ParameterArray& pa);

ParameterArray relation(const ParameterArray& pa, RelationOp op);

// theta -> t theta + c, theta* -> t* theta* + c*, varphi -> t t* varphi,
// phi -> t t* phi.
ParameterArray affine_apply(const ParameterArray& pa, const AffineMap& m);

}  // namespace awrel

#endif
