#include "awrel/json_io.hpp"

namespace awrel {

namespace {

const json& member(const json& j, const char* key) {
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "expected a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        throw Error(ErrorCode::ParseError, std::string("missing key \"") + key + "\"");
    return *it;
}

int int_member(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_number_integer())
        throw Error(ErrorCode::ParseError, std::string("key \"") + key +
                                               "\" must be an integer");
    return v.get<int>();
}

std::string string_member(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_string())
        throw Error(ErrorCode::ParseError,
                    std::string("key \"") + key + "\" must be a string");
    return v.get<std::string>();
}

std::vector<Scalar> scalar_list(const json& j, Field field) {
    if (!j.is_array())
        throw Error(ErrorCode::ParseError, "expected an array of scalars");
    std::vector<Scalar> out;
    for (const json& item : j) out.push_back(scalar_from_json(item, field));
    return out;
}

json scalar_list_to_json(const std::vector<Scalar>& values) {
    json out = json::array();
    for (const Scalar& x : values) out.push_back(scalar_to_json(x));
    return out;
}

}  // namespace

json scalar_to_json(const Scalar& x) {
    if (x.is_real()) return x.re().get_str();
    return json{{"re", x.re().get_str()}, {"im", x.im().get_str()}};
}

Scalar scalar_from_json(const json& j, Field field) {
    if (j.is_string()) return Scalar::parse_rational(j.get<std::string>());
    if (j.is_object()) {
        Scalar re = Scalar::parse_rational(string_member(j, "re"));
        Scalar im = Scalar::parse_rational(string_member(j, "im"));
        if (field != Field::Gaussian && !im.is_zero())
            throw Error(ErrorCode::FieldTooSmall,
                        "nonreal scalar requires the Gaussian field");
        return Scalar::gaussian(re.re(), im.re());
    }
    throw Error(ErrorCode::ParseError,
                "scalar must be a \"p/q\" string or a {re, im} object");
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.order(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.order(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"order", m.order()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j, Field field) {
    int order = int_member(j, "order");
    if (order < 1) throw Error(ErrorCode::ParseError, "matrix order must be >= 1");
    const json& entries = member(j, "entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != order)
        throw Error(ErrorCode::ParseError, "entries must hold `order` rows");
    Matrix m(order);
    for (int r = 0; r < order; ++r) {
        const json& row = entries[r];
        if (!row.is_array() || static_cast<int>(row.size()) != order)
            throw Error(ErrorCode::ParseError,
                        "row " + std::to_string(r) + " must hold `order` entries");
        for (int c = 0; c < order; ++c) m.at(r, c) = scalar_from_json(row[c], field);
    }
    return m;
}

json array_to_json(const ParameterArray& pa) {
    return json{{"d", pa.diameter()},
                {"theta", scalar_list_to_json(pa.thetas())},
                {"theta_star", scalar_list_to_json(pa.theta_stars())},
                {"varphi", scalar_list_to_json(pa.varphis())},
                {"phi", scalar_list_to_json(pa.phis())}};
}

ParameterArray array_from_json(const json& j, Field field) {
    int d = int_member(j, "d");
    std::vector<Scalar> theta = scalar_list(member(j, "theta"), field);
    std::vector<Scalar> theta_star = scalar_list(member(j, "theta_star"), field);
    std::vector<Scalar> varphi = scalar_list(member(j, "varphi"), field);
    std::vector<Scalar> phi = scalar_list(member(j, "phi"), field);
    if (static_cast<int>(theta.size()) != d + 1 ||
        static_cast<int>(theta_star.size()) != d + 1 ||
        static_cast<int>(varphi.size()) != d || static_cast<int>(phi.size()) != d)
        throw Error(ErrorCode::ParseError,
                    "lengths must be d+1 (theta, theta_star) and d (varphi, phi)");
    return ParameterArray(std::move(theta), std::move(theta_star), std::move(varphi),
                          std::move(phi));
}

json coefficients_to_json(const AwCoefficients& k) {
    return json{{"beta", scalar_to_json(k.beta)},
                {"gamma", scalar_to_json(k.gamma)},
                {"gamma_star", scalar_to_json(k.gamma_star)},
                {"rho", scalar_to_json(k.rho)},
                {"rho_star", scalar_to_json(k.rho_star)},
                {"omega", scalar_to_json(k.omega)},
                {"eta", scalar_to_json(k.eta)},
                {"eta_star", scalar_to_json(k.eta_star)}};
}

AwCoefficients coefficients_from_json(const json& j, Field field) {
    return {scalar_from_json(member(j, "beta"), field),
            scalar_from_json(member(j, "gamma"), field),
            scalar_from_json(member(j, "gamma_star"), field),
            scalar_from_json(member(j, "rho"), field),
            scalar_from_json(member(j, "rho_star"), field),
            scalar_from_json(member(j, "omega"), field),
            scalar_from_json(member(j, "eta"), field),
            scalar_from_json(member(j, "eta_star"), field)};
}

json map_to_json(const AffineMap& m) {
    return json{{"t", scalar_to_json(m.t)},
                {"t_star", scalar_to_json(m.t_star)},
                {"c", scalar_to_json(m.c)},
                {"c_star", scalar_to_json(m.c_star)}};
}

AffineMap map_from_json(const json& j, Field field) {
    AffineMap m{scalar_from_json(member(j, "t"), field),
                scalar_from_json(member(j, "t_star"), field),
                scalar_from_json(member(j, "c"), field),
                scalar_from_json(member(j, "c_star"), field)};
    if (m.t.is_zero() || m.t_star.is_zero())
        throw Error(ErrorCode::ZeroScale, "affine map requires t != 0 and t* != 0");
    return m;
}

namespace {

Family family_from_name(const std::string& name) {
    for (Family f : {Family::QRacah, Family::QHahn, Family::DualQHahn,
                     Family::QKrawtchouk, Family::DualQKrawtchouk,
                     Family::QuantumQKrawtchouk, Family::AffineQKrawtchouk,
                     Family::Racah, Family::Hahn, Family::DualHahn,
                     Family::Krawtchouk, Family::BannaiIto})
        if (name == family_name(f)) return f;
    throw Error(ErrorCode::ParseError, "unknown family \"" + name + "\"");
}

Normalization normalization_from_name(const std::string& name) {
    for (Normalization n : {Normalization::L5, Normalization::L6, Normalization::L7})
        if (name == normalization_name(n)) return n;
    throw Error(ErrorCode::ParseError, "unknown normalization \"" + name + "\"");
}

}  // namespace

json spec_to_json(const FamilySpec& spec) {
    json params = json::object();
    auto put = [&](const char* key, const std::optional<Scalar>& p) {
        if (p) params[key] = scalar_to_json(*p);
    };
    put("q", spec.params.q);
    put("s", spec.params.s);
    put("s_star", spec.params.s_star);
    put("r", spec.params.r);
    put("u", spec.params.u);
    put("u_star", spec.params.u_star);
    put("v", spec.params.v);
    return json{{"family", family_name(spec.family)},
                {"normalization", normalization_name(spec.normalization)},
                {"d", spec.d},
                {"params", std::move(params)}};
}

FamilySpec spec_from_json(const json& j, Field field) {
    FamilySpec spec;
    spec.family = family_from_name(string_member(j, "family"));
    spec.normalization = normalization_from_name(string_member(j, "normalization"));
    spec.d = int_member(j, "d");
    const json& params = member(j, "params");
    if (!params.is_object())
        throw Error(ErrorCode::ParseError, "params must be an object");
    auto get = [&](const char* key) -> std::optional<Scalar> {
        auto it = params.find(key);
        if (it == params.end()) return std::nullopt;
        return scalar_from_json(*it, field);
    };
    spec.params.q = get("q");
    spec.params.s = get("s");
    spec.params.s_star = get("s_star");
    spec.params.r = get("r");
    spec.params.u = get("u");
    spec.params.u_star = get("u_star");
    spec.params.v = get("v");
    return spec;
}

json violations_to_json(const std::vector<Violation>& violations) {
    json list = json::array();
    for (const Violation& v : violations)
        list.push_back(json{{"condition", v.condition},
                            {"indices", v.indices},
                            {"detail", v.detail}});
    return json{{"valid", violations.empty()}, {"violations", std::move(list)}};
}

json normalization_to_json(const NormalizationResult& result) {
    return json{{"coefficients", coefficients_to_json(result.coefficients)},
                {"translation", map_to_json(result.translation)},
                {"case", result.case_id},
                {"unique", result.unique}};
}

json classification_to_json(const Classification& c) {
    return json{{"type", aw_type_name(c.type)},
                {"leonard_consistent", c.leonard_consistent},
                {"normalization", normalization_to_json(c.normalization)}};
}

std::string dump_json(const json& j, bool pretty) {
    return j.dump(pretty ? 2 : -1) + "\n";
}

Field field_from_name(const std::string& name) {
    if (name == "rational") return Field::Rational;
    if (name == "gaussian") return Field::Gaussian;
    throw Error(ErrorCode::ParseError, "unknown field \"" + name + "\"");
}

}  // namespace awrel
