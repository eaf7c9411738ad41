#include "awrel/relations.hpp"

namespace awrel {

namespace {

void require_scales(const AffineMap& m) {
    if (m.t.is_zero() || m.t_star.is_zero())
        throw Error(ErrorCode::ZeroScale, "affine map requires t != 0 and t* != 0");
}

}  // namespace

AffineMap AffineMap::translation(Scalar c, Scalar c_star) {
    return {Scalar(1), Scalar(1), std::move(c), std::move(c_star)};
}

AffineMap AffineMap::scaling(Scalar t, Scalar t_star) {
    AffineMap m{std::move(t), std::move(t_star), Scalar(0), Scalar(0)};
    require_scales(m);
    return m;
}

bool AffineMap::is_identity() const {
    return t.is_one() && t_star.is_one() && c.is_zero() && c_star.is_zero();
}

AffineMap AffineMap::inverse() const {
    require_scales(*this);
    return {inv(t), inv(t_star), -c / t, -c_star / t_star};
}

AffineMap after(const AffineMap& second, const AffineMap& first) {
    require_scales(second);
    require_scales(first);
    return {second.t * first.t, second.t_star * first.t_star,
            second.t * first.c + second.c,
            second.t_star * first.c_star + second.c_star};
}

const char* aw_type_name(AwType type) {
    switch (type) {
        case AwType::QRacah: return "q-racah";
        case AwType::QHahn: return "q-hahn";
        case AwType::DualQHahn: return "dual-q-hahn";
        case AwType::QKrawtchouk: return "q-krawtchouk";
        case AwType::DualQKrawtchouk: return "dual-q-krawtchouk";
        case AwType::QuantumOrAffineQKrawtchouk: return "quantum-or-affine-q-krawtchouk";
        case AwType::Racah: return "racah";
        case AwType::Hahn: return "hahn";
        case AwType::DualHahn: return "dual-hahn";
        case AwType::Krawtchouk: return "krawtchouk";
        case AwType::BannaiIto: return "bannai-ito";
    }
    return "unknown";
}

AwCoefficients transform(const AwCoefficients& k, const AffineMap& m) {
    require_scales(m);
    const Scalar& t = m.t;
    const Scalar& u = m.t_star;
    const Scalar& c = m.c;
    const Scalar& e = m.c_star;
    const Scalar two(2);
    const Scalar bm2 = k.beta - two;  // beta - 2

    AwCoefficients r;
    r.beta = k.beta;
    r.gamma = k.gamma * t - bm2 * c;
    r.gamma_star = k.gamma_star * u - bm2 * e;
    r.rho = k.rho * t * t - two * k.gamma * c * t + bm2 * c * c;
    r.rho_star = k.rho_star * u * u - two * k.gamma_star * e * u + bm2 * e * e;
    r.omega = k.omega * t * u - two * k.gamma * e * t - two * k.gamma_star * c * u +
              two * bm2 * c * e;
    // The cross terms carry gamma in eta and gamma* in eta* (expanding the
    // translated relations confirms this against the linear-solve oracle).
    r.eta = k.eta * t * t * u - k.rho * e * t * t - k.omega * c * t * u +
            k.gamma_star * c * c * u + two * k.gamma * c * e * t - bm2 * c * c * e;
    r.eta_star = k.eta_star * t * u * u - k.rho_star * c * u * u - k.omega * e * t * u +
                 k.gamma * e * e * t + two * k.gamma_star * c * e * u - bm2 * c * e * e;
    return r;
}

namespace {

// Translation choices for the singular eta/eta* system
//   omega c + rho  c* = eta
//   rho*  c + omega c* = eta*
// with omega^2 = rho rho*: solvable iff every 2x2 minor of the augmented
// matrix vanishes.
bool singular_system_consistent(const AwCoefficients& k) {
    bool m_zero = k.omega.is_zero() && k.rho.is_zero() && k.rho_star.is_zero();
    if (m_zero) return k.eta.is_zero() && k.eta_star.is_zero();
    return (k.omega * k.eta_star - k.rho_star * k.eta).is_zero() &&
           (k.rho * k.eta_star - k.omega * k.eta).is_zero();
}

// Case 6: prefer c = 0; break the remaining freedom with c* = 0.
std::pair<Scalar, Scalar> case6_translation(const AwCoefficients& k) {
    if (!k.rho.is_zero()) return {Scalar(0), k.eta / k.rho};
    // rho = 0 forces omega = 0 here; row 1 reads 0 = eta.
    if (!k.rho_star.is_zero() && !k.eta_star.is_zero())
        return {k.eta_star / k.rho_star, Scalar(0)};
    return {Scalar(0), Scalar(0)};
}

// Case 7: zero eta by the minimal translation with c* = 0 when possible,
// otherwise zero eta* the same way.
std::pair<Scalar, Scalar> case7_translation(const AwCoefficients& k) {
    if (!k.omega.is_zero()) return {k.eta / k.omega, Scalar(0)};
    if (!k.rho.is_zero()) return {Scalar(0), k.eta / k.rho};
    if (!k.rho_star.is_zero()) return {k.eta_star / k.rho_star, Scalar(0)};
    return {Scalar(0), Scalar(0)};
}

}  // namespace

NormalizationResult normalize_translation(const AwCoefficients& k) {
    const Scalar two(2);
    Scalar c(0), c_star(0);
    int case_id;

    if (k.beta != two) {
        case_id = 1;
        c = k.gamma / (k.beta - two);
        c_star = k.gamma_star / (k.beta - two);
    } else if (!k.gamma.is_zero() && !k.gamma_star.is_zero()) {
        case_id = 2;
        c = k.rho / (two * k.gamma);
        c_star = k.rho_star / (two * k.gamma_star);
    } else if (k.gamma.is_zero() && !k.gamma_star.is_zero()) {
        case_id = 3;
        c_star = k.rho_star / (two * k.gamma_star);
        c = k.omega / (two * k.gamma_star);
    } else if (!k.gamma.is_zero() && k.gamma_star.is_zero()) {
        case_id = 4;
        c = k.rho / (two * k.gamma);
        c_star = k.omega / (two * k.gamma);
    } else {
        Scalar det = k.omega * k.omega - k.rho * k.rho_star;
        if (!det.is_zero()) {
            case_id = 5;
            c = (k.omega * k.eta - k.rho * k.eta_star) / det;
            c_star = (k.omega * k.eta_star - k.rho_star * k.eta) / det;
        } else if (singular_system_consistent(k)) {
            case_id = 6;
            std::tie(c, c_star) = case6_translation(k);
        } else {
            case_id = 7;
            std::tie(c, c_star) = case7_translation(k);
        }
    }

    NormalizationResult result;
    result.translation = AffineMap::translation(c, c_star);
    result.coefficients = transform(k, result.translation);
    result.case_id = case_id;
    result.unique = case_id <= 5;
    return result;
}

Classification classify(const AwCoefficients& k) {
    const Scalar two(2);
    Classification out{AwType::Krawtchouk, false, normalize_translation(k)};
    const AwCoefficients& h = out.normalization.coefficients;

    if (k.beta != two && k.beta != -two) {
        bool r = !h.rho.is_zero();
        bool rs = !h.rho_star.is_zero();
        if (r && rs) {
            out.type = AwType::QRacah;
            out.leonard_consistent = true;
        } else if (!r && rs) {
            if (!h.eta.is_zero()) {
                out.type = AwType::QHahn;
                out.leonard_consistent = true;
            } else {
                out.type = AwType::QKrawtchouk;
                out.leonard_consistent = !h.eta_star.is_zero();
            }
        } else if (r && !rs) {
            if (!h.eta_star.is_zero()) {
                out.type = AwType::DualQHahn;
                out.leonard_consistent = true;
            } else {
                out.type = AwType::DualQKrawtchouk;
                out.leonard_consistent = !h.eta.is_zero();
            }
        } else {
            out.type = AwType::QuantumOrAffineQKrawtchouk;
            out.leonard_consistent = !h.eta.is_zero() && !h.eta_star.is_zero();
        }
    } else if (k.beta == two) {
        bool g = !k.gamma.is_zero();
        bool gs = !k.gamma_star.is_zero();
        if (g && gs) {
            out.type = AwType::Racah;
            out.leonard_consistent = true;
        } else if (!g && gs) {
            out.type = AwType::Hahn;
            out.leonard_consistent = !h.rho.is_zero();
        } else if (g && !gs) {
            out.type = AwType::DualHahn;
            out.leonard_consistent = !h.rho_star.is_zero();
        } else {
            out.type = AwType::Krawtchouk;
            out.leonard_consistent = h.eta.is_zero() && h.eta_star.is_zero() &&
                                     !h.rho.is_zero() && !h.rho_star.is_zero();
        }
    } else {
        out.type = AwType::BannaiIto;
        out.leonard_consistent = !h.rho.is_zero() && !h.rho_star.is_zero();
    }
    return out;
}

std::vector<Scalar> aw_q_sequence(const Scalar& beta, const Scalar& sqrt_beta_plus_2,
                                  int n) {
    if (sqrt_beta_plus_2 * sqrt_beta_plus_2 != beta + Scalar(2))
        throw Error(ErrorCode::InvalidSquareRoot,
                    "sqrt_beta_plus_2 squared must equal beta + 2");
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "sequence length must be >= 0");
    std::vector<Scalar> q;
    q.reserve(static_cast<size_t>(n) + 1);
    q.push_back(Scalar(2));                                 // Q_0
    if (n >= 1) q.push_back(sqrt_beta_plus_2);              // Q_1
    if (n >= 2) q.push_back(beta);                          // Q_2
    if (n >= 3) q.push_back((beta - Scalar(1)) * sqrt_beta_plus_2);  // Q_3, via Q_-1 = Q_1
    for (int m = 4; m <= n; ++m) q.push_back(beta * q[m - 2] - q[m - 4]);
    return q;
}

std::pair<Scalar, Scalar> pinned_scaling_targets(AwType type, const Scalar& beta,
                                                 const Scalar& sqrt_beta_plus_2, int d,
                                                 bool omega_zero,
                                                 bool eta_pair_nonzero) {
    if (sqrt_beta_plus_2 * sqrt_beta_plus_2 != beta + Scalar(2))
        throw Error(ErrorCode::InvalidSquareRoot,
                    "sqrt_beta_plus_2 squared must equal beta + 2");
    const Scalar two(2);

    enum Slot { Gamma, Rho, Eta };
    Slot first, second;
    switch (type) {
        case AwType::QRacah: first = Rho, second = Rho; break;
        case AwType::QHahn: first = Eta, second = Rho; break;
        case AwType::DualQHahn: first = Rho, second = Eta; break;
        case AwType::QKrawtchouk: first = Eta, second = Rho; break;
        case AwType::DualQKrawtchouk: first = Rho, second = Eta; break;
        case AwType::QuantumOrAffineQKrawtchouk: first = Eta, second = Eta; break;
        case AwType::Racah: first = Gamma, second = Gamma; break;
        case AwType::Hahn: first = Rho, second = Gamma; break;
        case AwType::DualHahn: first = Gamma, second = Rho; break;
        case AwType::Krawtchouk: first = Rho, second = Rho; break;
        case AwType::BannaiIto: first = Rho, second = Rho; break;
        default:
            throw Error(ErrorCode::InvalidArgument, "unknown type");
    }

    auto value = [&](Slot slot) -> Scalar {
        switch (slot) {
            case Gamma:
                if (beta != two)
                    throw Error(ErrorCode::InvalidArgument,
                                "gamma is pinned only when beta = 2");
                return two;
            case Rho:
                if (beta != two && beta != -two) return Scalar(4) - beta * beta;
                return Scalar(1);
            case Eta: {
                Scalar base = sqrt_beta_plus_2 * (beta - two);
                if (eta_pair_nonzero || omega_zero) return base;
                if (d < 0)
                    throw Error(ErrorCode::InvalidArgument, "diameter must be >= 0");
                return base * aw_q_sequence(beta, sqrt_beta_plus_2, d + 1).back();
            }
        }
        throw Error(ErrorCode::InvalidArgument, "unknown slot");
    };

    return {value(first), value(second)};
}

}  // namespace awrel
