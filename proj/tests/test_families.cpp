#include <doctest.h>

#include "awrel/families.hpp"
#include "awrel/matrix.hpp"
#include "helpers.hpp"

using namespace awrel;
using namespace awrel::testing;

TEST_CASE("generate substitutes the closed forms") {
    SUBCASE("dual q-Krawtchouk L5 frozen array") {
        FamilySpec spec = q_spec(Family::DualQKrawtchouk, Normalization::L5, 3);
        ParameterArray pa = generate(spec);
        CHECK(pa.thetas() ==
              std::vector<Scalar>{rat(7), rat(25, 2), rat(97, 4), rat(385, 8)});
        CHECK(pa.theta_stars() ==
              std::vector<Scalar>{rat(1), rat(1, 2), rat(1, 4), rat(1, 8)});
        CHECK(pa.varphis() ==
              std::vector<Scalar>{rat(-7, 16), rat(-9, 32), rat(-7, 64)});
        CHECK(pa.phis() == std::vector<Scalar>{rat(-21), rat(-27, 2), rat(-21, 4)});
    }

    SUBCASE("Krawtchouk L7 frozen array") {
        FamilySpec spec = l7_spec(Family::Krawtchouk, 3);
        spec.params.v = rat(2);
        ParameterArray pa = generate(spec);
        CHECK(pa.thetas() ==
              std::vector<Scalar>{rat(-3, 2), rat(-1, 2), rat(1, 2), rat(3, 2)});
        CHECK(pa.varphis() == std::vector<Scalar>{rat(-6), rat(-8), rat(-6)});
        CHECK(pa.phis() == std::vector<Scalar>{rat(-3), rat(-4), rat(-3)});
    }

    SUBCASE("every standard instance is a valid parameter array") {
        for (const FamilySpec& spec : standard_instances()) {
            CAPTURE(family_name(spec.family));
            CAPTURE(normalization_name(spec.normalization));
            CAPTURE(spec.d);
            CHECK(is_valid(generate(spec)));
        }
    }
}

TEST_CASE("degenerate parameters are rejected with the reason") {
    SUBCASE("Krawtchouk v in {0, 1} kills varphi or phi") {
        for (long v : {0L, 1L}) {
            FamilySpec spec = l7_spec(Family::Krawtchouk, 3);
            spec.params.v = rat(v);
            CHECK_THROWS_AS(generate(spec), Error);
            try {
                generate(spec);
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::DegenerateParameters);
                CHECK(std::string(e.what()).find("PA2") != std::string::npos);
            }
        }
    }

    SUBCASE("q = -1 is a small root of unity") {
        for (Normalization n : {Normalization::L5, Normalization::L6}) {
            FamilySpec spec = q_spec(Family::QRacah, n, 3);
            spec.params.q = rat(-1);
            CHECK_THROWS_AS(generate(spec), Error);
        }
    }

    SUBCASE("zero q-parameters are rejected up front") {
        FamilySpec spec = q_spec(Family::QRacah, Normalization::L6, 3);
        spec.params.s = rat(0);
        CHECK_THROWS_AS(generate(spec), Error);
        try {
            generate(spec);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DegenerateParameters);
        }
    }

    SUBCASE("missing parameters and wrong normalizations are structural errors") {
        FamilySpec spec = l7_spec(Family::Racah, 3);
        spec.params.v.reset();
        CHECK_THROWS_AS(generate(spec), Error);
        FamilySpec wrong = l7_spec(Family::Racah, 3);
        wrong.normalization = Normalization::L5;
        CHECK_THROWS_AS(generate(wrong), Error);
    }
}

TEST_CASE("expected_aw matches the lemmas at concrete values") {
    SUBCASE("Krawtchouk: AW(2,0,0,1,1,2v-1,0,0)") {
        AwCoefficients k = expected_aw(l7_spec(Family::Krawtchouk, 4));
        CHECK(k == AwCoefficients{rat(2), rat(0), rat(0), rat(1), rat(1), rat(5),
                                  rat(0), rat(0)});
    }

    SUBCASE("quantum q-Krawtchouk L5 at q=2, r=3, d=3") {
        FamilySpec spec = q_spec(Family::QuantumQKrawtchouk, Normalization::L5, 3);
        spec.params.r = rat(3);
        AwCoefficients k = expected_aw(spec);
        CHECK(k.beta == rat(5, 2));
        CHECK(k.rho == rat(0));
        CHECK(k.rho_star == rat(0));
        CHECK(k.omega == rat(-67, 16));   // -K*(q^4 + r(q^4+1)), K* = 1/16
        CHECK(k.eta == rat(9));           // (q+1)(q-1)^2 r
        CHECK(k.eta_star == rat(9, 16));  // (q+1) K* r
        // the oracle confirms the closed form
        auto [a, astar] = split1(generate(spec));
        CHECK(solve_aw_coefficients(a, astar) == k);
    }

    SUBCASE("q-Krawtchouk L6 follows AW(Q2,0,0,0,-Q2*^2,-Q1*^2 S*,0,Q1 Q1*^2 Q_{d+1})") {
        FamilySpec spec = q_spec(Family::QKrawtchouk, Normalization::L6, 4);
        AwCoefficients k = expected_aw(spec);
        Scalar q = rat(2);
        Scalar q2s = q * q - inv(q * q);
        Scalar q1s2 = pow(q - inv(q), 2);
        Scalar sstar = rat(5) + rat(1, 5);
        CHECK(k.beta == q * q + inv(q * q));
        CHECK(k.rho_star == -q2s * q2s);
        CHECK(k.omega == -q1s2 * sstar);
        CHECK(k.eta == rat(0));
        CHECK(k.eta_star == (q + inv(q)) * q1s2 * (pow(q, 5) + pow(q, -5)));
    }
}

TEST_CASE("three-way equality: formulas, closed forms, oracle") {
    for (const FamilySpec& spec : standard_instances()) {
        CAPTURE(family_name(spec.family));
        CAPTURE(normalization_name(spec.normalization));
        CAPTURE(spec.d);
        ParameterArray pa = generate(spec);
        AwCoefficients from_formulas = aw_coefficients(pa);
        AwCoefficients closed_form = expected_aw(spec);
        CHECK(from_formulas == closed_form);
        auto [a, astar] = split1(pa);
        CHECK(solve_aw_coefficients(a, astar) == closed_form);
    }
}

TEST_CASE("relative conversions realize the relation operators") {
    SUBCASE("covered rows") {
        std::vector<std::pair<FamilySpec, std::vector<RelationOp>>> cases;
        const std::vector<RelationOp> all = {RelationOp::Down, RelationOp::DDown,
                                             RelationOp::DownDDown};
        for (Family family :
             {Family::QRacah, Family::QHahn, Family::DualQHahn, Family::QKrawtchouk,
              Family::DualQKrawtchouk, Family::QuantumQKrawtchouk,
              Family::AffineQKrawtchouk})
            for (int d : {3, 4, 5})
                cases.push_back({q_spec(family, Normalization::L6, d), all});
        for (int d : {3, 4, 5}) {
            cases.push_back({l7_spec(Family::Racah, d), all});
            cases.push_back({l7_spec(Family::Hahn, d), {RelationOp::Down}});
            cases.push_back({l7_spec(Family::DualHahn, d), {RelationOp::DDown}});
        }
        for (int d : {3, 5, 7}) cases.push_back({l7_spec(Family::BannaiIto, d), all});

        for (const auto& [spec, ops] : cases)
            for (RelationOp op : ops) {
                CAPTURE(family_name(spec.family));
                CAPTURE(spec.d);
                CAPTURE(relation_op_name(op));
                FamilySpec converted = relative_spec(spec, op);
                CHECK(relation(generate(spec), op) == generate(converted));
            }
    }

    SUBCASE("frozen conversions") {
        FamilySpec qracah = q_spec(Family::QRacah, Normalization::L6, 3);
        CHECK(*relative_spec(qracah, RelationOp::DDown).params.s == rat(1, 3));
        FamilySpec quantum = q_spec(Family::QuantumQKrawtchouk, Normalization::L6, 3);
        CHECK(relative_spec(quantum, RelationOp::DDown).family ==
              Family::AffineQKrawtchouk);
        FamilySpec racah = l7_spec(Family::Racah, 3);
        CHECK(*relative_spec(racah, RelationOp::DDown).params.u == rat(-5));
    }

    SUBCASE("uncovered rows") {
        CHECK_THROWS_AS(relative_spec(l7_spec(Family::Hahn, 3), RelationOp::DDown),
                        Error);
        CHECK_THROWS_AS(relative_spec(l7_spec(Family::DualHahn, 3), RelationOp::Down),
                        Error);
        CHECK_THROWS_AS(relative_spec(l7_spec(Family::Krawtchouk, 3), RelationOp::Down),
                        Error);
        CHECK_THROWS_AS(
            relative_spec(l7_spec(Family::BannaiIto, 4), RelationOp::Down), Error);
        CHECK_THROWS_AS(
            relative_spec(q_spec(Family::QRacah, Normalization::L5, 3),
                          RelationOp::Down),
            Error);
        try {
            relative_spec(l7_spec(Family::Hahn, 3), RelationOp::DDown);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotCovered);
        }
    }
}

TEST_CASE("invariant reparametrizations return the identical array") {
    SUBCASE("q-Racah has three") {
        for (int d : {3, 4, 5}) {
            FamilySpec spec = q_spec(Family::QRacah, Normalization::L6, d);
            std::vector<FamilySpec> variants = invariant_reparams(spec);
            CHECK(variants.size() == 3);
            ParameterArray pa = generate(spec);
            for (const FamilySpec& variant : variants) {
                CAPTURE(d);
                CHECK(generate(variant) == pa);
            }
            CHECK(*variants[0].params.r == rat(1, 7));
        }
    }

    SUBCASE("q-Krawtchouk flips q only for even d") {
        FamilySpec even = q_spec(Family::QKrawtchouk, Normalization::L6, 4);
        std::vector<FamilySpec> variants = invariant_reparams(even);
        REQUIRE(variants.size() == 1);
        CHECK(*variants[0].params.q == rat(-2));
        CHECK(generate(variants[0]) == generate(even));
        CHECK(invariant_reparams(q_spec(Family::QKrawtchouk, Normalization::L6, 3))
                  .empty());
        CHECK(generate(invariant_reparams(
                           q_spec(Family::DualQKrawtchouk, Normalization::L6, 4))[0]) ==
              generate(q_spec(Family::DualQKrawtchouk, Normalization::L6, 4)));
    }

    SUBCASE("Racah and odd Bannai-Ito") {
        FamilySpec racah = l7_spec(Family::Racah, 4);
        std::vector<FamilySpec> variants = invariant_reparams(racah);
        REQUIRE(variants.size() == 1);
        CHECK(*variants[0].params.v == rat(-8));
        CHECK(generate(variants[0]) == generate(racah));

        FamilySpec bi = l7_spec(Family::BannaiIto, 5);
        std::vector<FamilySpec> bi_variants = invariant_reparams(bi);
        REQUIRE(bi_variants.size() == 1);
        CHECK(*bi_variants[0].params.v == rat(-1, 7));
        CHECK(generate(bi_variants[0]) == generate(bi));
        CHECK(invariant_reparams(l7_spec(Family::BannaiIto, 4)).empty());
    }

    SUBCASE("families outside the table") {
        CHECK_THROWS_AS(invariant_reparams(l7_spec(Family::Hahn, 3)), Error);
        CHECK_THROWS_AS(invariant_reparams(l7_spec(Family::Krawtchouk, 3)), Error);
    }
}

namespace {

void check_scaling_rows(const FamilySpec& spec, Field field, size_t expected_rows) {
    std::vector<ScalingConversion> rows = scaling_conversions(spec, field);
    CHECK(rows.size() == expected_rows);
    ParameterArray pa = generate(spec);
    for (const ScalingConversion& row : rows) {
        CAPTURE(family_name(spec.family));
        CAPTURE(spec.d);
        ParameterArray scaled = affine_apply(pa, row.scaling);
        ParameterArray converted = generate(row.converted);
        if (row.op)
            CHECK(scaled == relation(converted, *row.op));
        else
            CHECK(scaled == converted);
    }
}

}  // namespace

TEST_CASE("scaling conversions") {
    for (int d : {3, 4, 5}) {
        check_scaling_rows(q_spec(Family::QRacah, Normalization::L6, d),
                           Field::Rational, 2);
        check_scaling_rows(q_spec(Family::QHahn, Normalization::L6, d),
                           Field::Gaussian, 1);
        check_scaling_rows(q_spec(Family::DualQHahn, Normalization::L6, d),
                           Field::Gaussian, 1);
        check_scaling_rows(q_spec(Family::QKrawtchouk, Normalization::L6, d),
                           Field::Rational, 1);
        check_scaling_rows(q_spec(Family::DualQKrawtchouk, Normalization::L6, d),
                           Field::Rational, 1);
        check_scaling_rows(l7_spec(Family::Hahn, d), Field::Rational, 1);
        check_scaling_rows(l7_spec(Family::DualHahn, d), Field::Rational, 1);
        check_scaling_rows(l7_spec(Family::Krawtchouk, d), Field::Rational, 2);
    }
    for (int d : {4, 6})
        check_scaling_rows(l7_spec(Family::BannaiIto, d), Field::Rational, 2);

    SUBCASE("Racah row lists no scalings") {
        CHECK(scaling_conversions(l7_spec(Family::Racah, 3), Field::Rational).empty());
    }

    SUBCASE("field restrictions") {
        CHECK_THROWS_AS(scaling_conversions(q_spec(Family::QHahn, Normalization::L6, 3),
                                            Field::Rational),
                        Error);
        try {
            scaling_conversions(
                q_spec(Family::QuantumQKrawtchouk, Normalization::L6, 3),
                Field::Gaussian);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::FieldTooSmall);
        }
    }

    SUBCASE("odd Bannai-Ito has no row") {
        CHECK_THROWS_AS(scaling_conversions(l7_spec(Family::BannaiIto, 5),
                                            Field::Rational),
                        Error);
    }
}

TEST_CASE("gaussian scalings carry through formulas and oracle") {
    // scale the L6 q-Hahn array by (i, -1): entries leave the rationals
    FamilySpec spec = q_spec(Family::QHahn, Normalization::L6, 3);
    ParameterArray pa = generate(spec);
    AwCoefficients k = aw_coefficients(pa);
    AffineMap m = AffineMap::scaling(Scalar::imaginary_unit(), rat(-1));
    ParameterArray scaled = affine_apply(pa, m);
    AwCoefficients expected = transform(k, m);
    CHECK(aw_coefficients(scaled) == expected);
    auto [a, astar] = split1(scaled);
    CHECK(solve_aw_coefficients(a, astar) == expected);
    CHECK(expected.beta == k.beta);
    // the scaled rho picks up t^2 = -1
    CHECK(expected.rho == -k.rho);
    CHECK(!scaled.theta(0).is_real());
}

TEST_CASE("the L6 to L5 bridge cross-validates the two normalizations") {
    for (Family family :
         {Family::QRacah, Family::QHahn, Family::DualQHahn, Family::QKrawtchouk,
          Family::DualQKrawtchouk, Family::QuantumQKrawtchouk,
          Family::AffineQKrawtchouk})
        for (int d : {3, 4}) {
            FamilySpec l6 = q_spec(family, Normalization::L6, d);
            L5Bridge bridge = l6_to_l5_bridge(l6);
            CAPTURE(family_name(family));
            CAPTURE(d);
            CHECK(bridge.l5_spec.normalization == Normalization::L5);
            CHECK(*bridge.l5_spec.params.q == rat(4));
            CHECK(generate(l6) ==
                  affine_apply(generate(bridge.l5_spec), bridge.scaling));
        }
}

TEST_CASE("odd Bannai-Ito ordering and its reversal under t = -1") {
    for (int d : {3, 5, 7}) {
        ParameterArray pa = generate(l7_spec(Family::BannaiIto, d));
        ParameterArray flipped =
            affine_apply(pa, AffineMap::scaling(rat(-1), rat(1)));
        for (int i = 0; i + 2 <= d; i += 2) {
            CHECK(Scalar::less(pa.theta(i), pa.theta(i + 2)));
            CHECK(Scalar::less(pa.theta_star(i), pa.theta_star(i + 2)));
            CHECK(Scalar::less(flipped.theta(i + 2), flipped.theta(i)));
        }
    }
}

TEST_CASE("first nonzero coefficients hit the pinned scaling targets") {
    for (const FamilySpec& spec : standard_instances()) {
        if (spec.normalization == Normalization::L5) continue;  // L5 is not pinned
        AwCoefficients k = expected_aw(spec);
        AwType type = classification_tag(spec.family);
        Scalar root;
        if (is_q_family(spec.family)) {
            Scalar q = *spec.params.q;
            root = q + inv(q);
        } else {
            root = k.beta == rat(2) ? rat(2) : rat(0);
        }
        auto [first, second] = pinned_scaling_targets(
            type, k.beta, root, spec.d, k.omega.is_zero(),
            !(k.eta * k.eta_star).is_zero());
        auto first_nonzero = [](std::initializer_list<Scalar> seq) {
            for (const Scalar& x : seq)
                if (!x.is_zero()) return x;
            return Scalar(0);
        };
        CAPTURE(family_name(spec.family));
        CAPTURE(spec.d);
        CHECK(first_nonzero({k.gamma, k.rho, k.eta, k.eta_star}) == first);
        CHECK(first_nonzero({k.gamma_star, k.rho_star, k.eta_star, k.eta}) == second);
    }
}
