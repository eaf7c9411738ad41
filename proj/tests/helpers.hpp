#ifndef AWREL_TEST_HELPERS_HPP
#define AWREL_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "awrel/families.hpp"
#include "awrel/parameter_array.hpp"

namespace awrel::testing {

inline Scalar rat(long num, long den = 1) { return Scalar(num, den); }

inline FamilySpec q_spec(Family family, Normalization normalization, int d,
                         long q_num = 2, long q_den = 1) {
    FamilySpec spec;
    spec.family = family;
    spec.normalization = normalization;
    spec.d = d;
    spec.params.q = rat(q_num, q_den);
    spec.params.s = rat(3);
    spec.params.s_star = rat(5);
    spec.params.r = rat(7);
    return spec;
}

inline FamilySpec l7_spec(Family family, int d) {
    FamilySpec spec;
    spec.family = family;
    spec.normalization = Normalization::L7;
    spec.d = d;
    switch (family) {
        case Family::Racah:
            spec.params.u = rat(1);
            spec.params.u_star = rat(2);
            spec.params.v = rat(3);
            break;
        case Family::Hahn:
            spec.params.u_star = rat(2);
            spec.params.v = rat(9);
            break;
        case Family::DualHahn:
            spec.params.u = rat(1);
            spec.params.v = rat(9);
            break;
        case Family::Krawtchouk:
            spec.params.v = rat(3);
            break;
        case Family::BannaiIto:
            spec.params.u = rat(1, 3);
            spec.params.u_star = rat(1, 5);
            spec.params.v = rat(1, 7);
            break;
        default:
            throw Error(ErrorCode::InvalidArgument, "not an L7 family");
    }
    return spec;
}

// The fixed-parameter instances used throughout: each q-family in both
// normalizations and each L7 family, at d in {3, 4, 5}.
inline std::vector<FamilySpec> standard_instances() {
    std::vector<FamilySpec> out;
    for (Family family :
         {Family::QRacah, Family::QHahn, Family::DualQHahn, Family::QKrawtchouk,
          Family::DualQKrawtchouk, Family::QuantumQKrawtchouk,
          Family::AffineQKrawtchouk})
        for (Normalization normalization : {Normalization::L5, Normalization::L6})
            for (int d : {3, 4, 5}) out.push_back(q_spec(family, normalization, d));
    for (Family family : {Family::Racah, Family::Hahn, Family::DualHahn,
                          Family::Krawtchouk, Family::BannaiIto})
        for (int d : {3, 4, 5}) out.push_back(l7_spec(family, d));
    return out;
}

inline Scalar random_rational(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    for (;;) {
        Scalar x = rat(num(rng), den(rng));
        if (!nonzero || !x.is_zero()) return x;
    }
}

inline AffineMap random_map(std::mt19937_64& rng) {
    return {random_rational(rng, true), random_rational(rng, true),
            random_rational(rng), random_rational(rng)};
}

}  // namespace awrel::testing

#endif
