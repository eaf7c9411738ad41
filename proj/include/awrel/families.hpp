#ifndef AWREL_FAMILIES_HPP
#define AWREL_FAMILIES_HPP

#include <optional>
#include <vector>

#include "awrel/parameter_array.hpp"
#include "awrel/relations.hpp"

namespace awrel {

// Generator labels. Quantum and affine q-Krawtchouk stay distinct here even
// though classification merges them.
enum class Family {
    QRacah,
    QHahn,
    DualQHahn,
    QKrawtchouk,
    DualQKrawtchouk,
    QuantumQKrawtchouk,
    AffineQKrawtchouk,
    Racah,
    Hahn,
    DualHahn,
    Krawtchouk,
    BannaiIto,
};

// The three closed normalized forms: L5 and L6 are the two q-normalizations,
// L7 covers the remaining families.
enum class Normalization { L5, L6, L7 };

const char* family_name(Family f);
const char* normalization_name(Normalization n);
bool is_q_family(Family f);
AwType classification_tag(Family f);

struct FamilyParams {
    std::optional<Scalar> q;
    std::optional<Scalar> s;
    std::optional<Scalar> s_star;
    std::optional<Scalar> r;
    std::optional<Scalar> u;
    std::optional<Scalar> u_star;
    std::optional<Scalar> v;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

struct FamilySpec {
    Family family;
    Normalization normalization;
    int d;
    FamilyParams params;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Substitutes the spec into its normalized form and validates the result;
// degenerate parameters surface as DegenerateParameters naming the failed
// conditions.
ParameterArray generate(const FamilySpec& spec);

// The closed-form AW tuple for the spec's family and normalization.
AwCoefficients expected_aw(const FamilySpec& spec);

// Parameter conversion realizing a relation operator on generated arrays:
// relation(generate(spec), op) = generate(relative_spec(spec, op)). Covers
// L6 q-families, Racah, Hahn (down), dual Hahn (ddown) and Bannai-Ito with
// odd d; NotCovered otherwise.
FamilySpec relative_spec(const FamilySpec& spec, RelationOp op);

// Reparametrizations that leave the generated array invariant.
std::vector<FamilySpec> invariant_reparams(const FamilySpec& spec);

struct ScalingConversion {
    AffineMap scaling;  // c = c* = 0
    FamilySpec converted;
    std::optional<RelationOp> op;
};

// Root-of-unity scalings that preserve the pinned nonzero coefficients, with
// the parameter conversion realizing them:
//   affine_apply(generate(spec), scaling) = relation(generate(converted), op)
// (plain generate(converted) when op is absent). The sqrt(-1) rows need the
// Gaussian field; the zeta_3 row is never representable here.
std::vector<ScalingConversion> scaling_conversions(const FamilySpec& spec, Field field);

struct L5Bridge {
    FamilySpec l5_spec;
    AffineMap scaling;  // generate(l6) = affine_apply(generate(l5_spec), scaling)
};

// The substitutions and scaling connecting the two q-normalizations.
L5Bridge l6_to_l5_bridge(const FamilySpec& spec);

}  // namespace awrel

#endif
