// Command-line front end for the awrel shared library. All mathematical work
// happens behind the C API in awrel.h; this file only shuttles JSON.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "awrel.h"

namespace {

using nlohmann::json;

struct Options {
    std::string in_path;   // empty: stdin
    std::string out_path;  // empty: stdout
    int field = AWREL_FIELD_RATIONAL;
    bool pretty = false;
};

// Exit codes: 0 success, 1 mathematical failure, 2 input error.
constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

int exit_code_for(awrel_status status) {
    switch (status) {
        case AWREL_E_UNDERDETERMINED:
        case AWREL_E_INCONSISTENT:
            return kExitMathFailure;
        default:
            return kExitInputError;
    }
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open " << opt.out_path << "\n";
            std::exit(kExitInputError);
        }
        out << text;
    }
}

void emit_json(const Options& opt, const json& j) {
    emit(opt, j.dump(opt.pretty ? 2 : -1) + "\n");
}

[[noreturn]] void fail(const Options& opt, awrel_status status,
                       const std::string& detail = "") {
    json err{{"code", awrel_status_name(status)},
             {"message", awrel_last_error_message()},
             {"detail", detail.empty() ? json() : json(detail)}};
    emit_json(opt, err);
    std::exit(exit_code_for(status));
}

[[noreturn]] void fail_parse(const Options& opt, const std::string& message) {
    json err{{"code", "parse_error"}, {"message", message}, {"detail", json()}};
    emit_json(opt, err);
    std::exit(kExitInputError);
}

std::string read_input(const Options& opt) {
    std::ostringstream buffer;
    if (opt.in_path.empty()) {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(opt.in_path, std::ios::binary);
        if (!in) {
            std::cerr << "cannot open " << opt.in_path << "\n";
            std::exit(kExitInputError);
        }
        buffer << in.rdbuf();
    }
    return buffer.str();
}

json parse_input(const Options& opt) {
    json j = json::parse(read_input(opt), nullptr, false);
    if (j.is_discarded()) fail_parse(opt, "input is not valid JSON");
    return j;
}

// Handle wrappers so error paths cannot leak.
struct StringDeleter {
    void operator()(char* s) const { awrel_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

#define AWREL_HANDLE(name)                                        \
    struct name##Deleter {                                        \
        void operator()(awrel_##name* p) const {                  \
            awrel_##name##_free(p);                               \
        }                                                         \
    };                                                            \
    using name##Ptr = std::unique_ptr<awrel_##name, name##Deleter>
AWREL_HANDLE(array);
AWREL_HANDLE(matrix);
AWREL_HANDLE(coeffs);
AWREL_HANDLE(map);
AWREL_HANDLE(spec);
#undef AWREL_HANDLE

void check(const Options& opt, awrel_status status) {
    if (status != AWREL_OK) fail(opt, status);
}

arrayPtr parse_array(const Options& opt, const json& j) {
    awrel_array* raw = nullptr;
    check(opt, awrel_array_from_json(j.dump().c_str(), opt.field, &raw));
    return arrayPtr(raw);
}

matrixPtr parse_matrix(const Options& opt, const json& j) {
    awrel_matrix* raw = nullptr;
    check(opt, awrel_matrix_from_json(j.dump().c_str(), opt.field, &raw));
    return matrixPtr(raw);
}

coeffsPtr parse_coeffs(const Options& opt, const json& j) {
    awrel_coeffs* raw = nullptr;
    check(opt, awrel_coeffs_from_json(j.dump().c_str(), opt.field, &raw));
    return coeffsPtr(raw);
}

mapPtr parse_map(const Options& opt, const json& j) {
    awrel_map* raw = nullptr;
    check(opt, awrel_map_from_json(j.dump().c_str(), opt.field, &raw));
    return mapPtr(raw);
}

specPtr parse_spec(const Options& opt, const json& j) {
    awrel_spec* raw = nullptr;
    check(opt, awrel_spec_from_json(j.dump().c_str(), opt.field, &raw));
    return specPtr(raw);
}

json member(const Options& opt, const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        fail_parse(opt, std::string("missing key \"") + key + "\"");
    return j.at(key);
}

json array_json(const Options& opt, const awrel_array* a) {
    char* raw = nullptr;
    check(opt, awrel_array_to_json(a, 0, &raw));
    CString text(raw);
    return json::parse(text.get());
}

json matrix_json(const Options& opt, const awrel_matrix* m) {
    char* raw = nullptr;
    check(opt, awrel_matrix_to_json(m, 0, &raw));
    CString text(raw);
    return json::parse(text.get());
}

json coeffs_json(const Options& opt, const awrel_coeffs* k) {
    char* raw = nullptr;
    check(opt, awrel_coeffs_to_json(k, 0, &raw));
    CString text(raw);
    return json::parse(text.get());
}

json map_json(const Options& opt, const awrel_map* m) {
    char* raw = nullptr;
    check(opt, awrel_map_to_json(m, 0, &raw));
    CString text(raw);
    return json::parse(text.get());
}

int cmd_generate(const Options& opt) {
    specPtr spec = parse_spec(opt, parse_input(opt));
    awrel_array* array_raw = nullptr;
    check(opt, awrel_spec_generate(spec.get(), &array_raw));
    arrayPtr array(array_raw);
    awrel_coeffs* expected_raw = nullptr;
    check(opt, awrel_spec_expected_aw(spec.get(), &expected_raw));
    coeffsPtr expected(expected_raw);
    emit_json(opt, json{{"parameter_array", array_json(opt, array.get())},
                        {"expected_aw", coeffs_json(opt, expected.get())}});
    return kExitOk;
}

int cmd_check(const Options& opt) {
    arrayPtr array = parse_array(opt, parse_input(opt));
    char* report_raw = nullptr;
    int valid = 0;
    check(opt, awrel_array_validate(array.get(), 0, &report_raw, &valid));
    CString report(report_raw);
    emit(opt, opt.pretty ? json::parse(report.get()).dump(2) + "\n"
                         : std::string(report.get()));
    return valid ? kExitOk : kExitMathFailure;
}

int cmd_aw(const Options& opt) {
    arrayPtr array = parse_array(opt, parse_input(opt));
    awrel_coeffs* raw = nullptr;
    check(opt, awrel_array_aw(array.get(), &raw));
    coeffsPtr coeffs(raw);
    emit_json(opt, coeffs_json(opt, coeffs.get()));
    return kExitOk;
}

int cmd_solve(const Options& opt) {
    json input = parse_input(opt);
    matrixPtr a = parse_matrix(opt, member(opt, input, "a"));
    matrixPtr astar = parse_matrix(opt, member(opt, input, "astar"));
    std::string pinned;
    bool has_pin = input.contains("pinned_beta") && !input["pinned_beta"].is_null();
    if (has_pin) {
        if (!input["pinned_beta"].is_string())
            fail_parse(opt, "pinned_beta must be a scalar string");
        pinned = input["pinned_beta"].get<std::string>();
    }
    awrel_coeffs* raw = nullptr;
    check(opt, awrel_solve_aw(a.get(), astar.get(), has_pin ? pinned.c_str() : nullptr,
                              &raw));
    coeffsPtr coeffs(raw);
    emit_json(opt, coeffs_json(opt, coeffs.get()));
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    json input = parse_input(opt);
    matrixPtr a = parse_matrix(opt, member(opt, input, "a"));
    matrixPtr astar = parse_matrix(opt, member(opt, input, "astar"));
    coeffsPtr coeffs = parse_coeffs(opt, member(opt, input, "aw"));
    awrel_matrix* r1_raw = nullptr;
    awrel_matrix* r2_raw = nullptr;
    check(opt, awrel_aw_residuals(a.get(), astar.get(), coeffs.get(), &r1_raw, &r2_raw));
    matrixPtr r1(r1_raw), r2(r2_raw);

    json first_nonzero;
    for (int which = 1; which <= 2; ++which) {
        int row = -1, col = -1;
        check(opt, awrel_matrix_first_nonzero(which == 1 ? r1.get() : r2.get(), &row,
                                              &col));
        if (row >= 0) {
            first_nonzero = json{{"relation", which}, {"row", row}, {"col", col}};
            break;
        }
    }
    bool ok = first_nonzero.is_null();
    emit_json(opt, json{{"ok", ok},
                        {"first_nonzero", first_nonzero},
                        {"residual1", matrix_json(opt, r1.get())},
                        {"residual2", matrix_json(opt, r2.get())}});
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_transform(const Options& opt) {
    json input = parse_input(opt);
    coeffsPtr coeffs = parse_coeffs(opt, member(opt, input, "aw"));
    mapPtr map = parse_map(opt, member(opt, input, "map"));
    awrel_coeffs* raw = nullptr;
    check(opt, awrel_coeffs_transform(coeffs.get(), map.get(), &raw));
    coeffsPtr out(raw);
    emit_json(opt, coeffs_json(opt, out.get()));
    return kExitOk;
}

json normalization_json(const Options& opt, const awrel_coeffs* normalized,
                        const awrel_map* translation, int case_id, int unique) {
    return json{{"coefficients", coeffs_json(opt, normalized)},
                {"translation", map_json(opt, translation)},
                {"case", case_id},
                {"unique", unique != 0}};
}

int cmd_normalize(const Options& opt) {
    coeffsPtr coeffs = parse_coeffs(opt, parse_input(opt));
    awrel_coeffs* normalized_raw = nullptr;
    awrel_map* translation_raw = nullptr;
    int case_id = 0, unique = 0;
    check(opt, awrel_coeffs_normalize(coeffs.get(), &normalized_raw, &translation_raw,
                                      &case_id, &unique));
    coeffsPtr normalized(normalized_raw);
    mapPtr translation(translation_raw);
    emit_json(opt, normalization_json(opt, normalized.get(), translation.get(),
                                      case_id, unique));
    return kExitOk;
}

int cmd_classify(const Options& opt) {
    coeffsPtr coeffs = parse_coeffs(opt, parse_input(opt));
    char* tag_raw = nullptr;
    int leonard = 0, case_id = 0, unique = 0;
    awrel_coeffs* normalized_raw = nullptr;
    awrel_map* translation_raw = nullptr;
    check(opt, awrel_coeffs_classify(coeffs.get(), &tag_raw, &leonard, &normalized_raw,
                                     &translation_raw, &case_id, &unique));
    CString tag(tag_raw);
    coeffsPtr normalized(normalized_raw);
    mapPtr translation(translation_raw);
    emit_json(opt,
              json{{"type", tag.get()},
                   {"leonard_consistent", leonard != 0},
                   {"normalization", normalization_json(opt, normalized.get(),
                                                        translation.get(), case_id,
                                                        unique)}});
    return kExitOk;
}

int cmd_relatives(const Options& opt) {
    arrayPtr array = parse_array(opt, parse_input(opt));
    json out = json::object();
    const std::pair<const char*, int> ops[] = {{"down", AWREL_OP_DOWN},
                                               {"ddown", AWREL_OP_DDOWN},
                                               {"down_ddown", AWREL_OP_DOWN_DDOWN}};
    for (auto [name, op] : ops) {
        awrel_array* raw = nullptr;
        check(opt, awrel_array_relation(array.get(), op, &raw));
        arrayPtr relative(raw);
        out[name] = array_json(opt, relative.get());
    }
    emit_json(opt, out);
    return kExitOk;
}

int cmd_split(const Options& opt) {
    arrayPtr array = parse_array(opt, parse_input(opt));
    json out = json::object();
    for (int which = 1; which <= 2; ++which) {
        awrel_matrix* a_raw = nullptr;
        awrel_matrix* astar_raw = nullptr;
        check(opt, awrel_array_split(array.get(), which, &a_raw, &astar_raw));
        matrixPtr a(a_raw), astar(astar_raw);
        out[which == 1 ? "split1" : "split2"] =
            json{{"a", matrix_json(opt, a.get())},
                 {"astar", matrix_json(opt, astar.get())}};
    }
    emit_json(opt, out);
    return kExitOk;
}

// Read array -> coefficients -> normalize -> classify, then re-derive the
// original tuple by transforming the normalized one with the inverse
// translation.
int cmd_roundtrip(const Options& opt) {
    arrayPtr array = parse_array(opt, parse_input(opt));
    awrel_coeffs* aw_raw = nullptr;
    check(opt, awrel_array_aw(array.get(), &aw_raw));
    coeffsPtr aw(aw_raw);

    char* tag_raw = nullptr;
    int leonard = 0, case_id = 0, unique = 0;
    awrel_coeffs* normalized_raw = nullptr;
    awrel_map* translation_raw = nullptr;
    check(opt, awrel_coeffs_classify(aw.get(), &tag_raw, &leonard, &normalized_raw,
                                     &translation_raw, &case_id, &unique));
    CString tag(tag_raw);
    coeffsPtr normalized(normalized_raw);
    mapPtr translation(translation_raw);

    awrel_map* inverse_raw = nullptr;
    check(opt, awrel_map_inverse(translation.get(), &inverse_raw));
    mapPtr inverse(inverse_raw);
    awrel_coeffs* rederived_raw = nullptr;
    check(opt, awrel_coeffs_transform(normalized.get(), inverse.get(), &rederived_raw));
    coeffsPtr rederived(rederived_raw);
    int match = 0;
    check(opt, awrel_coeffs_equal(aw.get(), rederived.get(), &match));

    emit_json(opt,
              json{{"type", tag.get()},
                   {"leonard_consistent", leonard != 0},
                   {"translation", map_json(opt, translation.get())},
                   {"case", case_id},
                   {"unique", unique != 0},
                   {"normalized_aw", coeffs_json(opt, normalized.get())},
                   {"aw", coeffs_json(opt, aw.get())},
                   {"rederived_aw", coeffs_json(opt, rederived.get())},
                   {"match", match != 0}});
    return match ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Askey-Wilson relations for Leonard pairs"};
    app.require_subcommand(1);
    app.fallthrough(true);

    Options opt;
    std::string field_name = "rational";
    app.add_option("--in", opt.in_path, "Read input from a file instead of stdin");
    app.add_option("--out", opt.out_path, "Write output to a file instead of stdout");
    app.add_option("--field", field_name, "Working field: rational or gaussian")
        ->check(CLI::IsMember({"rational", "gaussian"}));
    app.add_flag("--pretty", opt.pretty, "Indent JSON output");

    struct Command {
        const char* name;
        const char* help;
        int (*run)(const Options&);
    };
    const Command commands[] = {
        {"generate", "Family spec -> parameter array and its closed-form AW tuple",
         cmd_generate},
        {"check", "Validate the parameter array conditions", cmd_check},
        {"aw", "Parameter array -> AW coefficients via the closed formulas", cmd_aw},
        {"solve", "Matrix pair -> AW coefficients via exact linear solve", cmd_solve},
        {"verify", "Check a matrix pair against an AW tuple; reports residuals",
         cmd_verify},
        {"transform", "Apply an affine map to an AW tuple", cmd_transform},
        {"normalize", "Normalizing affine translation of an AW tuple", cmd_normalize},
        {"classify", "Askey-Wilson type of an AW tuple", cmd_classify},
        {"relatives", "The three relatives of a parameter array", cmd_relatives},
        {"split", "Both split matrix pairs of a parameter array", cmd_split},
        {"roundtrip", "array -> aw -> normalize -> classify -> inverse transform",
         cmd_roundtrip},
    };
    for (const Command& command : commands)
        app.add_subcommand(command.name, command.help);

    CLI11_PARSE(app, argc, argv);
    opt.field = field_name == "gaussian" ? AWREL_FIELD_GAUSSIAN : AWREL_FIELD_RATIONAL;

    for (const Command& command : commands)
        if (app.get_subcommand(command.name)->parsed()) return command.run(opt);
    return kExitInputError;
}
