#include "awrel.h"

#include <cstring>
#include <new>
#include <string>

#include "awrel/json_io.hpp"

using namespace awrel;

struct awrel_array {
    ParameterArray value;
};
struct awrel_matrix {
    Matrix value;
};
struct awrel_coeffs {
    AwCoefficients value;
};
struct awrel_map {
    AffineMap value;
};
struct awrel_spec {
    FamilySpec value;
};

namespace {

thread_local std::string g_last_error;

awrel_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZero: return AWREL_E_DIVISION_BY_ZERO;
        case ErrorCode::ParseError: return AWREL_E_PARSE;
        case ErrorCode::DimensionMismatch: return AWREL_E_DIMENSION_MISMATCH;
        case ErrorCode::IndexOutOfRange: return AWREL_E_INDEX_OUT_OF_RANGE;
        case ErrorCode::DiameterTooSmall: return AWREL_E_DIAMETER_TOO_SMALL;
        case ErrorCode::InconsistentFormulas: return AWREL_E_INCONSISTENT_FORMULAS;
        case ErrorCode::ZeroScale: return AWREL_E_ZERO_SCALE;
        case ErrorCode::Underdetermined: return AWREL_E_UNDERDETERMINED;
        case ErrorCode::Inconsistent: return AWREL_E_INCONSISTENT;
        case ErrorCode::DegenerateParameters: return AWREL_E_DEGENERATE_PARAMETERS;
        case ErrorCode::NotCovered: return AWREL_E_NOT_COVERED;
        case ErrorCode::FieldTooSmall: return AWREL_E_FIELD_TOO_SMALL;
        case ErrorCode::InvalidSquareRoot: return AWREL_E_INVALID_SQUARE_ROOT;
        case ErrorCode::SingularMatrix: return AWREL_E_SINGULAR_MATRIX;
        case ErrorCode::InvalidArgument: return AWREL_E_INVALID_ARGUMENT;
    }
    return AWREL_E_INVALID_ARGUMENT;
}

template <typename Fn>
awrel_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return AWREL_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return AWREL_E_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return AWREL_E_INVALID_ARGUMENT;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Field field_of(int field) {
    if (field == AWREL_FIELD_RATIONAL) return Field::Rational;
    if (field == AWREL_FIELD_GAUSSIAN) return Field::Gaussian;
    throw Error(ErrorCode::InvalidArgument, "unknown field selector");
}

template <typename T>
void require(const T* p, const char* what) {
    if (p == nullptr)
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

RelationOp op_of(int op) {
    switch (op) {
        case AWREL_OP_DOWN: return RelationOp::Down;
        case AWREL_OP_DDOWN: return RelationOp::DDown;
        case AWREL_OP_DOWN_DDOWN: return RelationOp::DownDDown;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown relation operator");
}

}  // namespace

extern "C" {

const char* awrel_last_error_message(void) { return g_last_error.c_str(); }

const char* awrel_status_name(awrel_status status) {
    switch (status) {
        case AWREL_OK: return "ok";
        case AWREL_E_DIVISION_BY_ZERO: return "division_by_zero";
        case AWREL_E_PARSE: return "parse_error";
        case AWREL_E_DIMENSION_MISMATCH: return "dimension_mismatch";
        case AWREL_E_INDEX_OUT_OF_RANGE: return "index_out_of_range";
        case AWREL_E_DIAMETER_TOO_SMALL: return "diameter_too_small";
        case AWREL_E_INCONSISTENT_FORMULAS: return "inconsistent_formulas";
        case AWREL_E_ZERO_SCALE: return "zero_scale";
        case AWREL_E_UNDERDETERMINED: return "underdetermined";
        case AWREL_E_INCONSISTENT: return "inconsistent";
        case AWREL_E_DEGENERATE_PARAMETERS: return "degenerate_parameters";
        case AWREL_E_NOT_COVERED: return "not_covered";
        case AWREL_E_FIELD_TOO_SMALL: return "field_too_small";
        case AWREL_E_INVALID_SQUARE_ROOT: return "invalid_square_root";
        case AWREL_E_SINGULAR_MATRIX: return "singular_matrix";
        case AWREL_E_INVALID_ARGUMENT: return "invalid_argument";
    }
    return "unknown";
}

void awrel_string_free(char* s) { delete[] s; }
void awrel_array_free(awrel_array* a) { delete a; }
void awrel_matrix_free(awrel_matrix* m) { delete m; }
void awrel_coeffs_free(awrel_coeffs* k) { delete k; }
void awrel_map_free(awrel_map* m) { delete m; }
void awrel_spec_free(awrel_spec* s) { delete s; }

awrel_status awrel_array_from_json(const char* text, int field, awrel_array** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new awrel_array{array_from_json(json::parse(text), field_of(field))};
    });
}

awrel_status awrel_array_to_json(const awrel_array* a, int pretty, char** out) {
    return guarded([&] {
        require(a, "array");
        require(out, "out");
        *out = copy_string(dump_json(array_to_json(a->value), pretty != 0));
    });
}

awrel_status awrel_matrix_from_json(const char* text, int field, awrel_matrix** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new awrel_matrix{matrix_from_json(json::parse(text), field_of(field))};
    });
}

awrel_status awrel_matrix_to_json(const awrel_matrix* m, int pretty, char** out) {
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        *out = copy_string(dump_json(matrix_to_json(m->value), pretty != 0));
    });
}

awrel_status awrel_coeffs_from_json(const char* text, int field, awrel_coeffs** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new awrel_coeffs{
            coefficients_from_json(json::parse(text), field_of(field))};
    });
}

awrel_status awrel_coeffs_to_json(const awrel_coeffs* k, int pretty, char** out) {
    return guarded([&] {
        require(k, "coeffs");
        require(out, "out");
        *out = copy_string(dump_json(coefficients_to_json(k->value), pretty != 0));
    });
}

awrel_status awrel_map_from_json(const char* text, int field, awrel_map** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new awrel_map{map_from_json(json::parse(text), field_of(field))};
    });
}

awrel_status awrel_map_to_json(const awrel_map* m, int pretty, char** out) {
    return guarded([&] {
        require(m, "map");
        require(out, "out");
        *out = copy_string(dump_json(map_to_json(m->value), pretty != 0));
    });
}

awrel_status awrel_spec_from_json(const char* text, int field, awrel_spec** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new awrel_spec{spec_from_json(json::parse(text), field_of(field))};
    });
}

awrel_status awrel_spec_to_json(const awrel_spec* s, int pretty, char** out) {
    return guarded([&] {
        require(s, "spec");
        require(out, "out");
        *out = copy_string(dump_json(spec_to_json(s->value), pretty != 0));
    });
}

awrel_status awrel_spec_generate(const awrel_spec* s, awrel_array** out) {
    return guarded([&] {
        require(s, "spec");
        require(out, "out");
        *out = new awrel_array{generate(s->value)};
    });
}

awrel_status awrel_spec_expected_aw(const awrel_spec* s, awrel_coeffs** out) {
    return guarded([&] {
        require(s, "spec");
        require(out, "out");
        *out = new awrel_coeffs{expected_aw(s->value)};
    });
}

awrel_status awrel_array_diameter(const awrel_array* a, int* out) {
    return guarded([&] {
        require(a, "array");
        require(out, "out");
        *out = a->value.diameter();
    });
}

awrel_status awrel_array_validate(const awrel_array* a, int pretty, char** report,
                                  int* valid) {
    return guarded([&] {
        require(a, "array");
        std::vector<Violation> violations = validate(a->value);
        if (valid != nullptr) *valid = violations.empty() ? 1 : 0;
        if (report != nullptr)
            *report =
                copy_string(dump_json(violations_to_json(violations), pretty != 0));
    });
}

awrel_status awrel_array_aw(const awrel_array* a, awrel_coeffs** out) {
    return guarded([&] {
        require(a, "array");
        require(out, "out");
        *out = new awrel_coeffs{aw_coefficients(a->value)};
    });
}

awrel_status awrel_array_relation(const awrel_array* a, int op, awrel_array** out) {
    return guarded([&] {
        require(a, "array");
        require(out, "out");
        *out = new awrel_array{relation(a->value, op_of(op))};
    });
}

awrel_status awrel_array_affine_apply(const awrel_array* a, const awrel_map* m,
                                      awrel_array** out) {
    return guarded([&] {
        require(a, "array");
        require(m, "map");
        require(out, "out");
        *out = new awrel_array{affine_apply(a->value, m->value)};
    });
}

awrel_status awrel_array_split(const awrel_array* a, int which, awrel_matrix** first,
                               awrel_matrix** second) {
    return guarded([&] {
        require(a, "array");
        require(first, "first");
        require(second, "second");
        if (which != 1 && which != 2)
            throw Error(ErrorCode::InvalidArgument, "split selector must be 1 or 2");
        auto [lhs, rhs] = which == 1 ? split1(a->value) : split2(a->value);
        *first = new awrel_matrix{std::move(lhs)};
        *second = new awrel_matrix{std::move(rhs)};
    });
}

awrel_status awrel_array_equal(const awrel_array* a, const awrel_array* b, int* out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = a->value == b->value ? 1 : 0;
    });
}

awrel_status awrel_solve_aw(const awrel_matrix* a, const awrel_matrix* astar,
                            const char* pinned_beta, awrel_coeffs** out) {
    return guarded([&] {
        require(a, "a");
        require(astar, "astar");
        require(out, "out");
        std::optional<Scalar> pin;
        if (pinned_beta != nullptr) pin = Scalar::parse_rational(pinned_beta);
        *out = new awrel_coeffs{solve_aw_coefficients(a->value, astar->value, pin)};
    });
}

awrel_status awrel_aw_residuals(const awrel_matrix* a, const awrel_matrix* astar,
                                const awrel_coeffs* k, awrel_matrix** r1,
                                awrel_matrix** r2) {
    return guarded([&] {
        require(a, "a");
        require(astar, "astar");
        require(k, "coeffs");
        require(r1, "r1");
        require(r2, "r2");
        auto [first, second] = aw_residuals(a->value, astar->value, k->value);
        *r1 = new awrel_matrix{std::move(first)};
        *r2 = new awrel_matrix{std::move(second)};
    });
}

awrel_status awrel_matrix_is_zero(const awrel_matrix* m, int* out) {
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        *out = m->value.is_zero() ? 1 : 0;
    });
}

awrel_status awrel_matrix_first_nonzero(const awrel_matrix* m, int* row, int* col) {
    return guarded([&] {
        require(m, "matrix");
        require(row, "row");
        require(col, "col");
        auto position = m->value.first_nonzero();
        *row = position ? position->first : -1;
        *col = position ? position->second : -1;
    });
}

awrel_status awrel_matrix_is_irreducible_tridiagonal(const awrel_matrix* m, int* out) {
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        *out = is_irreducible_tridiagonal(m->value) ? 1 : 0;
    });
}

awrel_status awrel_coeffs_transform(const awrel_coeffs* k, const awrel_map* m,
                                    awrel_coeffs** out) {
    return guarded([&] {
        require(k, "coeffs");
        require(m, "map");
        require(out, "out");
        *out = new awrel_coeffs{transform(k->value, m->value)};
    });
}

awrel_status awrel_coeffs_normalize(const awrel_coeffs* k, awrel_coeffs** normalized,
                                    awrel_map** translation, int* case_id,
                                    int* unique) {
    return guarded([&] {
        require(k, "coeffs");
        NormalizationResult result = normalize_translation(k->value);
        if (normalized != nullptr)
            *normalized = new awrel_coeffs{std::move(result.coefficients)};
        if (translation != nullptr)
            *translation = new awrel_map{std::move(result.translation)};
        if (case_id != nullptr) *case_id = result.case_id;
        if (unique != nullptr) *unique = result.unique ? 1 : 0;
    });
}

awrel_status awrel_coeffs_classify(const awrel_coeffs* k, char** type_tag,
                                   int* leonard_consistent,
                                   awrel_coeffs** normalized, awrel_map** translation,
                                   int* case_id, int* unique) {
    return guarded([&] {
        require(k, "coeffs");
        Classification c = classify(k->value);
        if (type_tag != nullptr) *type_tag = copy_string(aw_type_name(c.type));
        if (leonard_consistent != nullptr)
            *leonard_consistent = c.leonard_consistent ? 1 : 0;
        if (normalized != nullptr)
            *normalized = new awrel_coeffs{std::move(c.normalization.coefficients)};
        if (translation != nullptr)
            *translation = new awrel_map{std::move(c.normalization.translation)};
        if (case_id != nullptr) *case_id = c.normalization.case_id;
        if (unique != nullptr) *unique = c.normalization.unique ? 1 : 0;
    });
}

awrel_status awrel_coeffs_equal(const awrel_coeffs* a, const awrel_coeffs* b,
                                int* out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = a->value == b->value ? 1 : 0;
    });
}

awrel_status awrel_map_inverse(const awrel_map* m, awrel_map** out) {
    return guarded([&] {
        require(m, "map");
        require(out, "out");
        *out = new awrel_map{m->value.inverse()};
    });
}

}  // extern "C"
