#include "awrel/families.hpp"

#include <functional>
#include <sstream>

namespace awrel {

const char* family_name(Family f) {
    switch (f) {
        case Family::QRacah: return "q-racah";
        case Family::QHahn: return "q-hahn";
        case Family::DualQHahn: return "dual-q-hahn";
        case Family::QKrawtchouk: return "q-krawtchouk";
        case Family::DualQKrawtchouk: return "dual-q-krawtchouk";
        case Family::QuantumQKrawtchouk: return "quantum-q-krawtchouk";
        case Family::AffineQKrawtchouk: return "affine-q-krawtchouk";
        case Family::Racah: return "racah";
        case Family::Hahn: return "hahn";
        case Family::DualHahn: return "dual-hahn";
        case Family::Krawtchouk: return "krawtchouk";
        case Family::BannaiIto: return "bannai-ito";
    }
    return "unknown";
}

const char* normalization_name(Normalization n) {
    switch (n) {
        case Normalization::L5: return "L5";
        case Normalization::L6: return "L6";
        case Normalization::L7: return "L7";
    }
    return "unknown";
}

bool is_q_family(Family f) {
    switch (f) {
        case Family::QRacah:
        case Family::QHahn:
        case Family::DualQHahn:
        case Family::QKrawtchouk:
        case Family::DualQKrawtchouk:
        case Family::QuantumQKrawtchouk:
        case Family::AffineQKrawtchouk:
            return true;
        default:
            return false;
    }
}

AwType classification_tag(Family f) {
    switch (f) {
        case Family::QRacah: return AwType::QRacah;
        case Family::QHahn: return AwType::QHahn;
        case Family::DualQHahn: return AwType::DualQHahn;
        case Family::QKrawtchouk: return AwType::QKrawtchouk;
        case Family::DualQKrawtchouk: return AwType::DualQKrawtchouk;
        case Family::QuantumQKrawtchouk:
        case Family::AffineQKrawtchouk:
            return AwType::QuantumOrAffineQKrawtchouk;
        case Family::Racah: return AwType::Racah;
        case Family::Hahn: return AwType::Hahn;
        case Family::DualHahn: return AwType::DualHahn;
        case Family::Krawtchouk: return AwType::Krawtchouk;
        case Family::BannaiIto: return AwType::BannaiIto;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown family");
}

namespace {

void check_shape(const FamilySpec& spec) {
    if (spec.d < 0)
        throw Error(ErrorCode::InvalidArgument, "diameter must be >= 0");
    bool q = is_q_family(spec.family);
    bool l7 = spec.normalization == Normalization::L7;
    if (q == l7)
        throw Error(ErrorCode::InvalidArgument,
                    std::string(family_name(spec.family)) + " has no " +
                        normalization_name(spec.normalization) + " form");
}

const Scalar& need(const std::optional<Scalar>& p, const char* name) {
    if (!p)
        throw Error(ErrorCode::InvalidArgument,
                    std::string("missing parameter '") + name + "'");
    return *p;
}

const Scalar& need_nonzero(const std::optional<Scalar>& p, const char* name) {
    const Scalar& x = need(p, name);
    if (x.is_zero())
        throw Error(ErrorCode::DegenerateParameters,
                    std::string("parameter '") + name + "' must be nonzero");
    return x;
}

using Fn = std::function<Scalar(int)>;

struct Form {
    Fn theta;
    Fn theta_star;
    Fn varphi;
    Fn phi;
};

Form l5_form(const FamilySpec& spec) {
    int d = spec.d;
    Scalar q = need_nonzero(spec.params.q, "q");
    auto qp = [q](long e) { return pow(q, e); };
    // Shared factors (1 - q^i)(1 - q^{i-d-1}).
    auto base = [=](int i) {
        return (Scalar(1) - qp(i)) * (Scalar(1) - qp(i - d - 1));
    };

    switch (spec.family) {
        case Family::QRacah: {
            Scalar s = need_nonzero(spec.params.s, "s");
            Scalar ss = need_nonzero(spec.params.s_star, "s_star");
            Scalar r = need_nonzero(spec.params.r, "r");
            return {
                [=](int i) { return qp(-i) + s * qp(i + 1); },
                [=](int i) { return qp(-i) + ss * qp(i + 1); },
                [=](int i) {
                    return qp(1 - 2 * i) * base(i) * (Scalar(1) - r * qp(i)) *
                           (r - s * ss * qp(d + 1 + i)) / r;
                },
                [=](int i) {
                    return qp(1 - 2 * i) * base(i) * (r - ss * qp(i)) *
                           (s * qp(d + 1) - r * qp(i)) / r;
                },
            };
        }
        case Family::QHahn: {
            Scalar ss = need_nonzero(spec.params.s_star, "s_star");
            Scalar r = need_nonzero(spec.params.r, "r");
            return {
                [=](int i) { return qp(-i); },
                [=](int i) { return qp(-i) + ss * qp(i + 1); },
                [=](int i) { return qp(1 - 2 * i) * base(i) * (Scalar(1) - r * qp(i)); },
                [=](int i) { return -qp(1 - i) * base(i) * (r - ss * qp(i)); },
            };
        }
        case Family::DualQHahn: {
            Scalar s = need_nonzero(spec.params.s, "s");
            Scalar r = need_nonzero(spec.params.r, "r");
            return {
                [=](int i) { return qp(-i) + s * qp(i + 1); },
                [=](int i) { return qp(-i); },
                [=](int i) { return qp(1 - 2 * i) * base(i) * (Scalar(1) - r * qp(i)); },
                [=](int i) {
                    return qp(d + 2 - 2 * i) * base(i) * (s - r * qp(i - d - 1));
                },
            };
        }
        case Family::QKrawtchouk: {
            Scalar ss = need_nonzero(spec.params.s_star, "s_star");
            return {
                [=](int i) { return qp(-i); },
                [=](int i) { return qp(-i) + ss * qp(i + 1); },
                [=](int i) { return qp(1 - 2 * i) * base(i); },
                [=](int i) { return ss * q * base(i); },
            };
        }
        case Family::DualQKrawtchouk: {
            Scalar s = need_nonzero(spec.params.s, "s");
            return {
                [=](int i) { return qp(-i) + s * qp(i + 1); },
                [=](int i) { return qp(-i); },
                [=](int i) { return qp(1 - 2 * i) * base(i); },
                [=](int i) { return s * qp(d + 2 - 2 * i) * base(i); },
            };
        }
        case Family::QuantumQKrawtchouk: {
            Scalar r = need_nonzero(spec.params.r, "r");
            return {
                [=](int i) { return qp(i + 1); },
                [=](int i) { return qp(-i); },
                [=](int i) { return -r * qp(1 - i) * base(i); },
                [=](int i) {
                    return qp(d + 2 - 2 * i) * base(i) * (Scalar(1) - r * qp(i - d - 1));
                },
            };
        }
        case Family::AffineQKrawtchouk: {
            Scalar r = need_nonzero(spec.params.r, "r");
            return {
                [=](int i) { return qp(-i); },
                [=](int i) { return qp(-i); },
                [=](int i) { return qp(1 - 2 * i) * base(i) * (Scalar(1) - r * qp(i)); },
                [=](int i) { return -r * qp(1 - i) * base(i); },
            };
        }
        default:
            throw Error(ErrorCode::InvalidArgument, "not an L5 family");
    }
}

Form l6_form(const FamilySpec& spec) {
    int d = spec.d;
    Scalar q = need_nonzero(spec.params.q, "q");
    auto qp = [q](long e) { return pow(q, e); };
    // Shared factors (1 - q^{2i})(1 - q^{2i-2d-2}).
    auto base = [=](int i) {
        return (Scalar(1) - qp(2 * i)) * (Scalar(1) - qp(2 * i - 2 * d - 2));
    };

    switch (spec.family) {
        case Family::QRacah: {
            Scalar s = need_nonzero(spec.params.s, "s");
            Scalar ss = need_nonzero(spec.params.s_star, "s_star");
            Scalar r = need_nonzero(spec.params.r, "r");
            return {
                [=](int i) { return s * qp(d - 2 * i) + qp(2 * i - d) / s; },
                [=](int i) { return ss * qp(d - 2 * i) + qp(2 * i - d) / ss; },
                [=](int i) {
                    return qp(2 * d + 2 - 4 * i) / (s * ss * r) * base(i) *
                           (s * ss - r * qp(2 * i - d - 1)) *
                           (s * ss * r - qp(2 * i - d - 1));
                },
                [=](int i) {
                    return qp(2 * d + 2 - 4 * i) / (s * ss * r) * base(i) *
                           (ss * r - s * qp(2 * i - d - 1)) *
                           (ss - s * r * qp(2 * i - d - 1));
                },
            };
        }
        case Family::QHahn: {
            Scalar ss = need_nonzero(spec.params.s_star, "s_star");
            Scalar r = need_nonzero(spec.params.r, "r");
            return {
                [=](int i) { return r * qp(d - 2 * i); },
                [=](int i) { return ss * qp(d - 2 * i) + qp(2 * i - d) / ss; },
                [=](int i) {
                    return qp(2 * d + 2 - 4 * i) / r * base(i) *
                           (ss * r * r - qp(2 * i - d - 1));
                },
                [=](int i) {
                    return -qp(d + 1 - 2 * i) / (r * ss) * base(i) *
                           (ss - r * r * qp(2 * i - d - 1));
                },
            };
        }
        case Family::DualQHahn: {
            Scalar s = need_nonzero(spec.params.s, "s");
            Scalar r = need_nonzero(spec.params.r, "r");
            return {
                [=](int i) { return s * qp(d - 2 * i) + qp(2 * i - d) / s; },
                [=](int i) { return r * qp(d - 2 * i); },
                [=](int i) {
                    return qp(2 * d + 2 - 4 * i) / r * base(i) *
                           (s * r * r - qp(2 * i - d - 1));
                },
                [=](int i) {
                    return qp(2 * d + 2 - 4 * i) / (r * s) * base(i) *
                           (r * r - s * qp(2 * i - d - 1));
                },
            };
        }
        case Family::QKrawtchouk: {
            Scalar ss = need_nonzero(spec.params.s_star, "s_star");
            return {
                [=](int i) { return qp(d - 2 * i); },
                [=](int i) { return ss * qp(d - 2 * i) + qp(2 * i - d) / ss; },
                [=](int i) { return ss * qp(2 * d + 2 - 4 * i) * base(i); },
                [=](int i) { return base(i) / ss; },
            };
        }
        case Family::DualQKrawtchouk: {
            Scalar s = need_nonzero(spec.params.s, "s");
            return {
                [=](int i) { return s * qp(d - 2 * i) + qp(2 * i - d) / s; },
                [=](int i) { return qp(d - 2 * i); },
                [=](int i) { return s * qp(2 * d + 2 - 4 * i) * base(i); },
                [=](int i) { return qp(2 * d + 2 - 4 * i) / s * base(i); },
            };
        }
        case Family::QuantumQKrawtchouk: {
            Scalar r = need_nonzero(spec.params.r, "r");
            return {
                [=](int i) { return r * qp(2 * i - d); },
                [=](int i) { return r * qp(d - 2 * i); },
                [=](int i) { return -qp(d + 1 - 2 * i) / r * base(i); },
                [=](int i) {
                    return qp(2 * d + 2 - 4 * i) / r * base(i) *
                           (r * r * r - qp(2 * i - d - 1));
                },
            };
        }
        case Family::AffineQKrawtchouk: {
            Scalar r = need_nonzero(spec.params.r, "r");
            return {
                [=](int i) { return r * qp(d - 2 * i); },
                [=](int i) { return r * qp(d - 2 * i); },
                [=](int i) {
                    return qp(2 * d + 2 - 4 * i) / r * base(i) *
                           (r * r * r - qp(2 * i - d - 1));
                },
                [=](int i) { return -qp(d + 1 - 2 * i) / r * base(i); },
            };
        }
        default:
            throw Error(ErrorCode::InvalidArgument, "not an L6 family");
    }
}

Form l7_form(const FamilySpec& spec) {
    int d = spec.d;
    Scalar half_d = Scalar(d, 2);
    auto n = [](int k) { return Scalar(k); };

    switch (spec.family) {
        case Family::Racah: {
            Scalar u = need(spec.params.u, "u");
            Scalar us = need(spec.params.u_star, "u_star");
            Scalar v = need(spec.params.v, "v");
            return {
                [=](int i) { return (n(i) + u) * (n(i) + u + Scalar(1)); },
                [=](int i) { return (n(i) + us) * (n(i) + us + Scalar(1)); },
                [=](int i) {
                    return n(i) * n(i - d - 1) * (n(i) + u + us - v) *
                           (n(i) + u + us + n(d + 1) + v);
                },
                [=](int i) {
                    return n(i) * n(i - d - 1) * (n(i) - u + us + v) *
                           (n(i) - u + us - n(d + 1) - v);
                },
            };
        }
        case Family::Hahn: {
            Scalar us = need(spec.params.u_star, "u_star");
            Scalar v = need(spec.params.v, "v");
            return {
                [=](int i) { return n(i) + v - half_d; },
                [=](int i) { return (n(i) + us) * (n(i) + us + Scalar(1)); },
                [=](int i) { return n(i) * n(i - d - 1) * (n(i) + us + Scalar(2) * v); },
                [=](int i) { return -n(i) * n(i - d - 1) * (n(i) + us - Scalar(2) * v); },
            };
        }
        case Family::DualHahn: {
            Scalar u = need(spec.params.u, "u");
            Scalar v = need(spec.params.v, "v");
            return {
                [=](int i) { return (n(i) + u) * (n(i) + u + Scalar(1)); },
                [=](int i) { return n(i) + v - half_d; },
                [=](int i) { return n(i) * n(i - d - 1) * (n(i) + u + Scalar(2) * v); },
                [=](int i) {
                    return n(i) * n(i - d - 1) * (n(i) - u + Scalar(2) * v - n(d + 1));
                },
            };
        }
        case Family::Krawtchouk: {
            Scalar v = need(spec.params.v, "v");
            return {
                [=](int i) { return n(i) - half_d; },
                [=](int i) { return n(i) - half_d; },
                [=](int i) { return v * n(i) * n(i - d - 1); },
                [=](int i) { return (v - Scalar(1)) * n(i) * n(i - d - 1); },
            };
        }
        case Family::BannaiIto: {
            Scalar u = need(spec.params.u, "u");
            Scalar us = need(spec.params.u_star, "u_star");
            Scalar v = need(spec.params.v, "v");
            Scalar half_d1 = Scalar(d + 1, 2);
            auto sign = [](int i) { return i % 2 == 0 ? Scalar(1) : Scalar(-1); };
            bool d_even = d % 2 == 0;
            return {
                [=](int i) { return sign(i) * (n(i) + u - half_d); },
                [=](int i) { return sign(i) * (n(i) + us - half_d); },
                [=](int i) -> Scalar {
                    if (d_even) {
                        if (i % 2 == 0) return -n(i) * (n(i) + u + us + v - half_d1);
                        return -n(i - d - 1) * (n(i) + u + us - v - half_d1);
                    }
                    if (i % 2 == 0) return -n(i) * n(i - d - 1);
                    Scalar w = n(i) + u + us - half_d1;
                    return v * v - w * w;
                },
                [=](int i) -> Scalar {
                    if (d_even) {
                        if (i % 2 == 0) return n(i) * (n(i) - u + us - v - half_d1);
                        return n(i - d - 1) * (n(i) - u + us + v - half_d1);
                    }
                    if (i % 2 == 0) return -n(i) * n(i - d - 1);
                    Scalar w = n(i) - u + us - half_d1;
                    return v * v - w * w;
                },
            };
        }
        default:
            throw Error(ErrorCode::InvalidArgument, "not an L7 family");
    }
}

Form form_for(const FamilySpec& spec) {
    check_shape(spec);
    switch (spec.normalization) {
        case Normalization::L5: return l5_form(spec);
        case Normalization::L6: return l6_form(spec);
        case Normalization::L7: return l7_form(spec);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown normalization");
}

}  // namespace

ParameterArray generate(const FamilySpec& spec) {
    Form form = form_for(spec);
    std::vector<Scalar> theta, theta_star, varphi, phi;
    for (int i = 0; i <= spec.d; ++i) {
        theta.push_back(form.theta(i));
        theta_star.push_back(form.theta_star(i));
    }
    for (int i = 1; i <= spec.d; ++i) {
        varphi.push_back(form.varphi(i));
        phi.push_back(form.phi(i));
    }
    ParameterArray pa(std::move(theta), std::move(theta_star), std::move(varphi),
                      std::move(phi));
    std::vector<Violation> report = validate(pa);
    if (!report.empty()) {
        std::ostringstream os;
        os << "parameters are degenerate for " << family_name(spec.family) << " "
           << normalization_name(spec.normalization) << ":";
        for (const Violation& violation : report) {
            os << " " << violation.condition << "(" << violation.detail << ")";
        }
        throw Error(ErrorCode::DegenerateParameters, os.str());
    }
    return pa;
}

AwCoefficients expected_aw(const FamilySpec& spec) {
    check_shape(spec);
    int d = spec.d;
    const Scalar zero(0), one(1), two(2);

    if (spec.normalization == Normalization::L5) {
        Scalar q = need_nonzero(spec.params.q, "q");
        auto qp = [&](long e) { return pow(q, e); };
        Scalar beta = q + inv(q);
        Scalar bigq = qp(d + 1) + one;               // Q
        Scalar k = -pow(q * q - one, 2) / q;         // K
        Scalar ks = pow(q - one, 2) / qp(d + 1);     // K*
        Scalar q1 = q + one;

        switch (spec.family) {
            case Family::QRacah: {
                Scalar s = need_nonzero(spec.params.s, "s");
                Scalar ss = need_nonzero(spec.params.s_star, "s_star");
                Scalar r = need_nonzero(spec.params.r, "r");
                Scalar S = s * qp(d + 1) + one;
                Scalar Ss = ss * qp(d + 1) + one;
                Scalar R = r + s * ss * qp(d + 1) / r;
                return {beta, zero, zero, s * k, ss * k, -ks * (S * Ss + R * bigq),
                        q1 * ks * (S * R + s * Ss * bigq),
                        q1 * ks * (Ss * R + ss * S * bigq)};
            }
            case Family::QHahn: {
                Scalar ss = need_nonzero(spec.params.s_star, "s_star");
                Scalar r = need_nonzero(spec.params.r, "r");
                Scalar Ss = ss * qp(d + 1) + one;
                return {beta, zero, zero, zero, ss * k, -ks * (Ss + r * bigq),
                        q1 * ks * r, q1 * ks * (Ss * r + ss * bigq)};
            }
            case Family::DualQHahn: {
                Scalar s = need_nonzero(spec.params.s, "s");
                Scalar r = need_nonzero(spec.params.r, "r");
                Scalar S = s * qp(d + 1) + one;
                return {beta, zero, zero, s * k, zero, -ks * (S + r * bigq),
                        q1 * ks * (S * r + s * bigq), q1 * ks * r};
            }
            case Family::QKrawtchouk: {
                Scalar ss = need_nonzero(spec.params.s_star, "s_star");
                Scalar Ss = ss * qp(d + 1) + one;
                return {beta, zero, zero, zero, ss * k, -ks * Ss, zero,
                        q1 * ks * ss * bigq};
            }
            case Family::DualQKrawtchouk: {
                Scalar s = need_nonzero(spec.params.s, "s");
                Scalar S = s * qp(d + 1) + one;
                return {beta, zero, zero, s * k, zero, -ks * S, q1 * ks * s * bigq,
                        zero};
            }
            case Family::QuantumQKrawtchouk: {
                Scalar r = need_nonzero(spec.params.r, "r");
                return {beta, zero, zero, zero, zero, -ks * (qp(d + 1) + r * bigq),
                        q1 * pow(q - one, 2) * r, q1 * ks * r};
            }
            case Family::AffineQKrawtchouk: {
                Scalar r = need_nonzero(spec.params.r, "r");
                return {beta, zero, zero, zero, zero, -ks * (one + r * bigq),
                        q1 * ks * r, q1 * ks * r};
            }
            default:
                throw Error(ErrorCode::InvalidArgument, "not an L5 family");
        }
    }

    if (spec.normalization == Normalization::L6) {
        Scalar q = need_nonzero(spec.params.q, "q");
        auto qp = [&](long e) { return pow(q, e); };
        auto Q = [&](long j) { return qp(j) + qp(-j); };
        auto Qs = [&](long j) { return qp(j) - qp(-j); };
        Scalar beta = Q(2);
        Scalar q2s2 = pow(Qs(2), 2);            // Q_2*^2
        Scalar q1s2 = pow(Qs(1), 2);            // Q_1*^2
        Scalar q1q1s2 = Q(1) * q1s2;            // Q_1 Q_1*^2
        Scalar qd1 = Q(d + 1);                  // Q_{d+1}

        switch (spec.family) {
            case Family::QRacah: {
                Scalar s = need_nonzero(spec.params.s, "s");
                Scalar ss = need_nonzero(spec.params.s_star, "s_star");
                Scalar r = need_nonzero(spec.params.r, "r");
                Scalar S = s + inv(s);
                Scalar Ss = ss + inv(ss);
                Scalar R = r + inv(r);
                return {beta, zero, zero, -q2s2, -q2s2,
                        -q1s2 * (S * Ss + qd1 * R), q1q1s2 * (S * R + qd1 * Ss),
                        q1q1s2 * (Ss * R + qd1 * S)};
            }
            case Family::QHahn: {
                Scalar ss = need_nonzero(spec.params.s_star, "s_star");
                Scalar r = need_nonzero(spec.params.r, "r");
                Scalar Ss = ss + inv(ss);
                return {beta, zero, zero, zero, -q2s2,
                        -q1s2 * (Ss * r + qd1 / r), q1q1s2,
                        q1q1s2 * (Ss / r + qd1 * r)};
            }
            case Family::DualQHahn: {
                Scalar s = need_nonzero(spec.params.s, "s");
                Scalar r = need_nonzero(spec.params.r, "r");
                Scalar S = s + inv(s);
                return {beta, zero, zero, -q2s2, zero,
                        -q1s2 * (S * r + qd1 / r), q1q1s2 * (S / r + qd1 * r),
                        q1q1s2};
            }
            case Family::QKrawtchouk: {
                Scalar ss = need_nonzero(spec.params.s_star, "s_star");
                Scalar Ss = ss + inv(ss);
                return {beta, zero, zero, zero, -q2s2, -q1s2 * Ss, zero,
                        q1q1s2 * qd1};
            }
            case Family::DualQKrawtchouk: {
                Scalar s = need_nonzero(spec.params.s, "s");
                Scalar S = s + inv(s);
                return {beta, zero, zero, -q2s2, zero, -q1s2 * S, q1q1s2 * qd1,
                        zero};
            }
            case Family::QuantumQKrawtchouk:
            case Family::AffineQKrawtchouk: {
                Scalar r = need_nonzero(spec.params.r, "r");
                return {beta, zero, zero, zero, zero,
                        -q1s2 * (r * r + qd1 / r), q1q1s2, q1q1s2};
            }
            default:
                throw Error(ErrorCode::InvalidArgument, "not an L6 family");
        }
    }

    // L7
    Scalar dv(d);
    switch (spec.family) {
        case Family::Racah: {
            Scalar u = need(spec.params.u, "u");
            Scalar us = need(spec.params.u_star, "u_star");
            Scalar v = need(spec.params.v, "v");
            Scalar d1(d + 1);
            Scalar omega = -two * u * u - two * us * us - two * v * v -
                           two * d1 * (u + us + v) - two * dv * dv - Scalar(4) * dv;
            Scalar eta = two * u * (u + d1) * (v - us) * (v + us + d1);
            Scalar eta_star = two * us * (us + d1) * (v - u) * (v + u + d1);
            return {two, two, two, zero, zero, omega, eta, eta_star};
        }
        case Family::Hahn: {
            Scalar us = need(spec.params.u_star, "u_star");
            Scalar v = need(spec.params.v, "v");
            Scalar eta = -(us + one) * (us + dv) - two * v * v - dv * dv / two;
            Scalar eta_star = -Scalar(4) * us * (us + dv + one) * v;
            return {two, zero, two, one, zero, zero, eta, eta_star};
        }
        case Family::DualHahn: {
            Scalar u = need(spec.params.u, "u");
            Scalar v = need(spec.params.v, "v");
            Scalar eta = -Scalar(4) * u * (u + dv + one) * v;
            Scalar eta_star = -(u + one) * (u + dv) - two * v * v - dv * dv / two;
            return {two, two, zero, zero, one, zero, eta, eta_star};
        }
        case Family::Krawtchouk: {
            Scalar v = need(spec.params.v, "v");
            return {two, zero, zero, one, one, two * v - one, zero, zero};
        }
        case Family::BannaiIto: {
            Scalar u = need(spec.params.u, "u");
            Scalar us = need(spec.params.u_star, "u_star");
            Scalar v = need(spec.params.v, "v");
            Scalar d1(d + 1);
            if (d % 2 == 0) {
                Scalar omega = Scalar(4) * u * us - two * d1 * v;
                Scalar eta = two * u * v - d1 * us;
                Scalar eta_star = two * us * v - d1 * u;
                return {-two, zero, zero, one, one, omega, eta, eta_star};
            }
            Scalar omega = -two * u * u - two * us * us + two * v * v + d1 * d1 / two;
            Scalar eta = -u * u + us * us - v * v + d1 * d1 / Scalar(4);
            Scalar eta_star = u * u - us * us - v * v + d1 * d1 / Scalar(4);
            return {-two, zero, zero, one, one, omega, eta, eta_star};
        }
        default:
            throw Error(ErrorCode::InvalidArgument, "not an L7 family");
    }
}

namespace {

Error not_covered(const FamilySpec& spec, const char* table) {
    return Error(ErrorCode::NotCovered,
                 std::string(family_name(spec.family)) + " " +
                     normalization_name(spec.normalization) + " (d = " +
                     std::to_string(spec.d) + ") has no " + table + " entry");
}

void require_table_form(const FamilySpec& spec, const char* table) {
    check_shape(spec);
    if (spec.normalization == Normalization::L5) throw not_covered(spec, table);
}

}  // namespace

FamilySpec relative_spec(const FamilySpec& spec, RelationOp op) {
    require_table_form(spec, "relative-conversion");
    if (op == RelationOp::DownDDown)
        return relative_spec(relative_spec(spec, RelationOp::DDown), RelationOp::Down);

    FamilySpec out = spec;
    auto invert = [](std::optional<Scalar>& p) { p = inv(*p); };
    auto negate_shift = [&](std::optional<Scalar>& p) {
        p = -*p - Scalar(spec.d + 1);
    };
    bool ddown = op == RelationOp::DDown;

    switch (spec.family) {
        case Family::QRacah:
            invert(ddown ? out.params.s : out.params.s_star);
            return out;
        case Family::QHahn:
            invert(out.params.s_star);
            if (ddown) invert(out.params.q);
            return out;
        case Family::DualQHahn:
            invert(out.params.s);
            if (!ddown) invert(out.params.q);
            return out;
        case Family::QKrawtchouk:
            invert(out.params.s_star);
            if (ddown) invert(out.params.q);
            return out;
        case Family::DualQKrawtchouk:
            invert(out.params.s);
            if (!ddown) invert(out.params.q);
            return out;
        case Family::QuantumQKrawtchouk:
        case Family::AffineQKrawtchouk:
            out.family = spec.family == Family::QuantumQKrawtchouk
                             ? Family::AffineQKrawtchouk
                             : Family::QuantumQKrawtchouk;
            if (!ddown) invert(out.params.q);
            return out;
        case Family::Racah:
            negate_shift(ddown ? out.params.u : out.params.u_star);
            return out;
        case Family::Hahn:
            if (ddown) throw not_covered(spec, "relative-conversion");
            negate_shift(out.params.u_star);
            return out;
        case Family::DualHahn:
            if (!ddown) throw not_covered(spec, "relative-conversion");
            negate_shift(out.params.u);
            return out;
        case Family::BannaiIto: {
            if (spec.d % 2 == 0) throw not_covered(spec, "relative-conversion");
            auto& p = ddown ? out.params.u : out.params.u_star;
            p = -*p;
            return out;
        }
        default:
            throw not_covered(spec, "relative-conversion");
    }
}

std::vector<FamilySpec> invariant_reparams(const FamilySpec& spec) {
    require_table_form(spec, "invariant-reparametrization");
    std::vector<FamilySpec> out;
    switch (spec.family) {
        case Family::QRacah: {
            FamilySpec a = spec;
            a.params.r = inv(*a.params.r);
            out.push_back(a);

            FamilySpec b = spec;  // q -> 1/q, s -> 1/s, s* -> 1/s*
            b.params.q = inv(*b.params.q);
            b.params.s = inv(*b.params.s);
            b.params.s_star = inv(*b.params.s_star);
            out.push_back(b);

            FamilySpec c = spec;  // q -> -q, s -> (-1)^d s, s* -> (-1)^d s*,
                                  // r -> (-1)^{d+1} r
            Scalar sd = spec.d % 2 == 0 ? Scalar(1) : Scalar(-1);
            c.params.q = -*c.params.q;
            c.params.s = sd * *c.params.s;
            c.params.s_star = sd * *c.params.s_star;
            c.params.r = -sd * *c.params.r;
            out.push_back(c);
            return out;
        }
        case Family::QHahn:
        case Family::DualQHahn:
        case Family::QuantumQKrawtchouk:
        case Family::AffineQKrawtchouk:
            return out;
        case Family::QKrawtchouk:
        case Family::DualQKrawtchouk:
            if (spec.d % 2 == 0) {
                FamilySpec a = spec;
                a.params.q = -*a.params.q;
                out.push_back(a);
            }
            return out;
        case Family::Racah: {
            FamilySpec a = spec;
            a.params.v = -*a.params.v - Scalar(spec.d + 1);
            out.push_back(a);
            return out;
        }
        case Family::BannaiIto:
            if (spec.d % 2 == 1) {
                FamilySpec a = spec;
                a.params.v = -*a.params.v;
                out.push_back(a);
            }
            return out;
        default:
            throw not_covered(spec, "invariant-reparametrization");
    }
}

std::vector<ScalingConversion> scaling_conversions(const FamilySpec& spec, Field field) {
    require_table_form(spec, "scaling-conversion");
    const Scalar one(1), minus_one(-1);
    auto scaling = [](Scalar t, Scalar t_star) {
        return AffineMap::scaling(std::move(t), std::move(t_star));
    };
    auto imaginary = [&]() {
        if (field != Field::Gaussian)
            throw Error(ErrorCode::FieldTooSmall,
                        "this scaling needs sqrt(-1); use the Gaussian field");
        return Scalar::imaginary_unit();
    };

    std::vector<ScalingConversion> out;
    switch (spec.family) {
        case Family::QRacah: {
            FamilySpec a = spec;
            a.params.s = -*a.params.s;
            a.params.r = -*a.params.r;
            out.push_back({scaling(minus_one, one), a, std::nullopt});

            FamilySpec b = spec;
            b.params.s_star = -*b.params.s_star;
            b.params.r = -*b.params.r;
            out.push_back({scaling(one, minus_one), b, std::nullopt});
            return out;
        }
        case Family::QHahn: {
            Scalar i = imaginary();
            FamilySpec a = spec;
            a.params.s_star = -*a.params.s_star;
            a.params.r = i * *a.params.r;
            out.push_back({scaling(i, minus_one), a, std::nullopt});
            return out;
        }
        case Family::DualQHahn: {
            Scalar i = imaginary();
            FamilySpec a = spec;
            a.params.s = -*a.params.s;
            a.params.r = i * *a.params.r;
            out.push_back({scaling(minus_one, i), a, std::nullopt});
            return out;
        }
        case Family::QKrawtchouk: {
            FamilySpec a = spec;
            a.params.s_star = -*a.params.s_star;
            out.push_back({scaling(one, minus_one), a, std::nullopt});
            return out;
        }
        case Family::DualQKrawtchouk: {
            FamilySpec a = spec;
            a.params.s = -*a.params.s;
            out.push_back({scaling(minus_one, one), a, std::nullopt});
            return out;
        }
        case Family::QuantumQKrawtchouk:
        case Family::AffineQKrawtchouk:
            // The only such scaling is by a primitive cube root of unity,
            // which lies outside Q(i).
            throw Error(ErrorCode::FieldTooSmall,
                        "the quantum/affine q-Krawtchouk scaling needs a cube "
                        "root of unity, unavailable over Q(i)");
        case Family::Racah:
            return out;
        case Family::Hahn: {
            FamilySpec a = spec;
            a.params.v = -*a.params.v;
            out.push_back({scaling(minus_one, one), a, RelationOp::DDown});
            return out;
        }
        case Family::DualHahn: {
            FamilySpec a = spec;
            a.params.v = -*a.params.v;
            out.push_back({scaling(one, minus_one), a, RelationOp::Down});
            return out;
        }
        case Family::Krawtchouk: {
            // The table's relation operators additionally flip v to 1 - v
            // (omega = 2v - 1 changes sign under these scalings).
            FamilySpec a = spec;
            a.params.v = Scalar(1) - *a.params.v;
            out.push_back({scaling(minus_one, one), a, RelationOp::DDown});
            FamilySpec b = a;
            out.push_back({scaling(one, minus_one), b, RelationOp::Down});
            return out;
        }
        case Family::BannaiIto: {
            if (spec.d % 2 == 1) throw not_covered(spec, "scaling-conversion");
            FamilySpec a = spec;
            a.params.u = -*a.params.u;
            a.params.v = -*a.params.v;
            out.push_back({scaling(minus_one, one), a, RelationOp::DDown});
            FamilySpec b = spec;
            b.params.u_star = -*b.params.u_star;
            b.params.v = -*b.params.v;
            out.push_back({scaling(one, minus_one), b, RelationOp::Down});
            return out;
        }
        default:
            throw not_covered(spec, "scaling-conversion");
    }
}

L5Bridge l6_to_l5_bridge(const FamilySpec& spec) {
    check_shape(spec);
    if (spec.normalization != Normalization::L6)
        throw Error(ErrorCode::InvalidArgument, "bridge starts from an L6 spec");
    int d = spec.d;
    Scalar q = need_nonzero(spec.params.q, "q");
    auto qp = [&](long e) { return pow(q, e); };

    FamilySpec l5 = spec;
    l5.normalization = Normalization::L5;
    l5.params.q = q * q;
    if (spec.params.s) l5.params.s = inv(*spec.params.s * *spec.params.s * qp(2 * d + 2));
    if (spec.params.s_star)
        l5.params.s_star = inv(*spec.params.s_star * *spec.params.s_star * qp(2 * d + 2));

    Scalar t, t_star;
    switch (spec.family) {
        case Family::QRacah: {
            Scalar s = need_nonzero(spec.params.s, "s");
            Scalar ss = need_nonzero(spec.params.s_star, "s_star");
            Scalar r = need_nonzero(spec.params.r, "r");
            l5.params.r = r / (s * ss * qp(d + 1));
            t = s * qp(d);
            t_star = ss * qp(d);
            break;
        }
        case Family::QHahn: {
            Scalar ss = need_nonzero(spec.params.s_star, "s_star");
            Scalar r = need_nonzero(spec.params.r, "r");
            l5.params.r = inv(ss * r * r * qp(d + 1));
            t = r * qp(d);
            t_star = ss * qp(d);
            break;
        }
        case Family::DualQHahn: {
            Scalar s = need_nonzero(spec.params.s, "s");
            Scalar r = need_nonzero(spec.params.r, "r");
            l5.params.r = inv(s * r * r * qp(d + 1));
            t = s * qp(d);
            t_star = r * qp(d);
            break;
        }
        case Family::QKrawtchouk: {
            Scalar ss = need_nonzero(spec.params.s_star, "s_star");
            t = qp(d);
            t_star = ss * qp(d);
            break;
        }
        case Family::DualQKrawtchouk: {
            Scalar s = need_nonzero(spec.params.s, "s");
            t = s * qp(d);
            t_star = qp(d);
            break;
        }
        case Family::QuantumQKrawtchouk: {
            Scalar r = need_nonzero(spec.params.r, "r");
            l5.params.r = qp(d + 1) / (r * r * r);
            t = r * qp(-d - 2);
            t_star = r * qp(d);
            break;
        }
        case Family::AffineQKrawtchouk: {
            Scalar r = need_nonzero(spec.params.r, "r");
            l5.params.r = inv(r * r * r * qp(d + 1));
            t = r * qp(d);
            t_star = r * qp(d);
            break;
        }
        default:
            throw Error(ErrorCode::InvalidArgument, "not an L6 family");
    }
    return {l5, AffineMap::scaling(t, t_star)};
}

}  // namespace awrel
