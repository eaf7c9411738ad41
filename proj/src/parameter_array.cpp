#include "awrel/parameter_array.hpp"

#include <algorithm>

namespace awrel {

const char* relation_op_name(RelationOp op) {
    switch (op) {
        case RelationOp::Down: return "down";
        case RelationOp::DDown: return "ddown";
        case RelationOp::DownDDown: return "down-ddown";
    }
    return "unknown";
}

ParameterArray::ParameterArray(std::vector<Scalar> theta, std::vector<Scalar> theta_star,
                               std::vector<Scalar> varphi, std::vector<Scalar> phi)
    : theta_(std::move(theta)),
      theta_star_(std::move(theta_star)),
      varphi_(std::move(varphi)),
      phi_(std::move(phi)) {
    if (theta_.empty())
        throw Error(ErrorCode::InvalidArgument, "theta must have d+1 >= 1 entries");
    size_t n = theta_.size();
    if (theta_star_.size() != n || varphi_.size() != n - 1 || phi_.size() != n - 1)
        throw Error(ErrorCode::InvalidArgument,
                    "expected d+1 theta and theta* entries and d varphi and phi entries");
}

namespace {

void check_distinct(const std::vector<Scalar>& values, const std::string& name,
                    std::vector<Violation>& out) {
    int n = static_cast<int>(values.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (values[i] == values[j])
                out.push_back({"PA1", {i, j}, name + "_" + std::to_string(i) + " = " +
                                                  name + "_" + std::to_string(j)});
}

}  // namespace

std::vector<Violation> validate(const ParameterArray& pa) {
    std::vector<Violation> out;
    int d = pa.diameter();

    check_distinct(pa.thetas(), "theta", out);
    check_distinct(pa.theta_stars(), "theta*", out);

    for (int i = 1; i <= d; ++i) {
        if (pa.varphi(i).is_zero())
            out.push_back({"PA2", {i}, "varphi_" + std::to_string(i) + " = 0"});
        if (pa.phi(i).is_zero())
            out.push_back({"PA2", {i}, "phi_" + std::to_string(i) + " = 0"});
    }

    // PA3/PA4 need theta_0 != theta_d, PA5 needs consecutive thetas distinct;
    // both hold once PA1 does, so skip them when the needed denominator fails.
    if (d >= 1 && pa.theta(0) != pa.theta(d)) {
        Scalar span = pa.theta(0) - pa.theta(d);
        Scalar sum(0);
        for (int i = 1; i <= d; ++i) {
            sum += (pa.theta(i - 1) - pa.theta(d - i + 1)) / span;
            Scalar pa3 = pa.phi(1) * sum +
                         (pa.theta_star(i) - pa.theta_star(0)) * (pa.theta(i - 1) - pa.theta(d));
            if (pa.varphi(i) != pa3)
                out.push_back({"PA3", {i}, "varphi_" + std::to_string(i) +
                                               " fails the sum identity"});
            Scalar pa4 = pa.varphi(1) * sum +
                         (pa.theta_star(i) - pa.theta_star(0)) * (pa.theta(d - i + 1) - pa.theta(0));
            if (pa.phi(i) != pa4)
                out.push_back({"PA4", {i}, "phi_" + std::to_string(i) +
                                               " fails the sum identity"});
        }
    }

    bool consecutive_ok = true;
    for (int i = 1; i <= d; ++i)
        if (pa.theta(i - 1) == pa.theta(i) || pa.theta_star(i - 1) == pa.theta_star(i))
            consecutive_ok = false;
    if (consecutive_ok && d >= 3) {
        Scalar common;
        bool have_common = false;
        for (int i = 2; i <= d - 1; ++i) {
            Scalar ratio =
                (pa.theta(i - 2) - pa.theta(i + 1)) / (pa.theta(i - 1) - pa.theta(i));
            Scalar ratio_star = (pa.theta_star(i - 2) - pa.theta_star(i + 1)) /
                                (pa.theta_star(i - 1) - pa.theta_star(i));
            if (ratio != ratio_star)
                out.push_back({"PA5", {i}, "theta and theta* ratios differ at i = " +
                                               std::to_string(i)});
            if (!have_common) {
                common = ratio;
                have_common = true;
            } else if (ratio != common) {
                out.push_back({"PA5", {i}, "ratio depends on i at i = " +
                                               std::to_string(i)});
            }
        }
    }
    return out;
}

bool is_valid(const ParameterArray& pa) { return validate(pa).empty(); }

std::pair<Matrix, Matrix> split1(const ParameterArray& pa) {
    int d = pa.diameter();
    Matrix a(d + 1), astar(d + 1);
    for (int i = 0; i <= d; ++i) {
        a.at(i, i) = pa.theta(i);
        astar.at(i, i) = pa.theta_star(i);
    }
    for (int i = 1; i <= d; ++i) {
        a.at(i, i - 1) = Scalar(1);
        astar.at(i - 1, i) = pa.varphi(i);
    }
    return {a, astar};
}

std::pair<Matrix, Matrix> split2(const ParameterArray& pa) {
    int d = pa.diameter();
    Matrix a(d + 1), astar(d + 1);
    for (int i = 0; i <= d; ++i) {
        a.at(i, i) = pa.theta(d - i);
        astar.at(i, i) = pa.theta_star(i);
    }
    for (int i = 1; i <= d; ++i) {
        a.at(i, i - 1) = Scalar(1);
        astar.at(i - 1, i) = pa.phi(i);
    }
    return {a, astar};
}

namespace {

void check_index(const ParameterArray& pa, int i) {
    if (i < 0 || i > pa.diameter())
        throw Error(ErrorCode::IndexOutOfRange,
                    "index " + std::to_string(i) + " outside 0.." +
                        std::to_string(pa.diameter()));
}

// num / den() with the zero-numerator short circuit of the boundary
// convention: den() is never evaluated when num vanishes.
template <typename Den>
Scalar guarded_fraction(const Scalar& num, Den den) {
    if (num.is_zero()) return Scalar(0);
    return num / den();
}

// varphi extended by varphi_0 = varphi_{d+1} = 0; same for phi.
Scalar varphi_ext(const ParameterArray& pa, int i) {
    if (i < 1 || i > pa.diameter()) return Scalar(0);
    return pa.varphi(i);
}

Scalar phi_ext(const ParameterArray& pa, int i) {
    if (i < 1 || i > pa.diameter()) return Scalar(0);
    return pa.phi(i);
}

}  // namespace

Scalar a_diag(const ParameterArray& pa, int i) {
    check_index(pa, i);
    return pa.theta(i) +
           guarded_fraction(varphi_ext(pa, i),
                            [&] { return pa.theta_star(i) - pa.theta_star(i - 1); }) +
           guarded_fraction(varphi_ext(pa, i + 1),
                            [&] { return pa.theta_star(i) - pa.theta_star(i + 1); });
}

Scalar a_diag_alt(const ParameterArray& pa, int i) {
    check_index(pa, i);
    return pa.theta(pa.diameter() - i) +
           guarded_fraction(phi_ext(pa, i),
                            [&] { return pa.theta_star(i) - pa.theta_star(i - 1); }) +
           guarded_fraction(phi_ext(pa, i + 1),
                            [&] { return pa.theta_star(i) - pa.theta_star(i + 1); });
}

Scalar a_star_diag(const ParameterArray& pa, int i) {
    check_index(pa, i);
    return pa.theta_star(i) +
           guarded_fraction(varphi_ext(pa, i),
                            [&] { return pa.theta(i) - pa.theta(i - 1); }) +
           guarded_fraction(varphi_ext(pa, i + 1),
                            [&] { return pa.theta(i) - pa.theta(i + 1); });
}

Scalar a_star_diag_alt(const ParameterArray& pa, int i) {
    check_index(pa, i);
    int d = pa.diameter();
    return pa.theta_star(d - i) +
           guarded_fraction(phi_ext(pa, d - i + 1),
                            [&] { return pa.theta(i) - pa.theta(i - 1); }) +
           guarded_fraction(phi_ext(pa, d - i),
                            [&] { return pa.theta(i) - pa.theta(i + 1); });
}

namespace {

void check_constant(const Scalar& reference, const Scalar& value, const char* what,
                    int i) {
    if (reference != value)
        throw Error(ErrorCode::InconsistentFormulas,
                    std::string(what) + " varies with i (differs at i = " +
                        std::to_string(i) + "); the array is not a parameter array");
}

}  // namespace

AwCoefficients aw_coefficients(const ParameterArray& pa) {
    int d = pa.diameter();
    if (d < 3)
        throw Error(ErrorCode::DiameterTooSmall,
                    "coefficients are unique only for d >= 3; got d = " +
                        std::to_string(d));

    auto th = [&](int i) { return pa.theta(i); };
    auto ts = [&](int i) { return pa.theta_star(i); };

    // beta + 1 = (theta_{i-2} - theta_{i+1}) / (theta_{i-1} - theta_i), both
    // ladders, 2 <= i <= d-1.
    auto beta_at = [&](int i) { return (th(i - 2) - th(i + 1)) / (th(i - 1) - th(i)) - Scalar(1); };
    auto beta_star_at = [&](int i) {
        return (ts(i - 2) - ts(i + 1)) / (ts(i - 1) - ts(i)) - Scalar(1);
    };
    Scalar beta = beta_at(2);
    for (int i = 2; i <= d - 1; ++i) {
        check_constant(beta, beta_at(i), "beta", i);
        check_constant(beta, beta_star_at(i), "beta", i);
    }

    auto gamma_at = [&](int i) { return th(i - 1) - beta * th(i) + th(i + 1); };
    auto gamma_star_at = [&](int i) { return ts(i - 1) - beta * ts(i) + ts(i + 1); };
    Scalar gamma = gamma_at(1);
    Scalar gamma_star = gamma_star_at(1);
    for (int i = 1; i <= d - 1; ++i) {
        check_constant(gamma, gamma_at(i), "gamma", i);
        check_constant(gamma_star, gamma_star_at(i), "gamma*", i);
    }

    auto rho_at = [&](int i) {
        return th(i) * th(i) - beta * th(i) * th(i - 1) + th(i - 1) * th(i - 1) -
               gamma * (th(i) + th(i - 1));
    };
    auto rho_star_at = [&](int i) {
        return ts(i) * ts(i) - beta * ts(i) * ts(i - 1) + ts(i - 1) * ts(i - 1) -
               gamma_star * (ts(i) + ts(i - 1));
    };
    Scalar rho = rho_at(1);
    Scalar rho_star = rho_star_at(1);
    for (int i = 1; i <= d; ++i) {
        check_constant(rho, rho_at(i), "rho", i);
        check_constant(rho_star, rho_star_at(i), "rho*", i);
    }

    std::vector<Scalar> a(d + 1), as(d + 1);
    for (int i = 0; i <= d; ++i) {
        a[i] = a_diag(pa, i);
        as[i] = a_star_diag(pa, i);
    }

    auto omega_at = [&](int i) {
        return a[i] * (ts(i) - ts(i + 1)) + a[i - 1] * (ts(i - 1) - ts(i - 2)) -
               gamma * (ts(i) + ts(i - 1));
    };
    auto omega_star_at = [&](int i) {
        return as[i] * (th(i) - th(i + 1)) + as[i - 1] * (th(i - 1) - th(i - 2)) -
               gamma_star * (th(i) + th(i - 1));
    };
    Scalar omega = omega_at(2);
    for (int i = 2; i <= d - 1; ++i) {
        check_constant(omega, omega_at(i), "omega", i);
        check_constant(omega, omega_star_at(i), "omega", i);
    }

    auto eta_at = [&](int i) {
        return as[i] * (th(i) - th(i - 1)) * (th(i) - th(i + 1)) -
               gamma_star * th(i) * th(i) - omega * th(i);
    };
    auto eta_star_at = [&](int i) {
        return a[i] * (ts(i) - ts(i - 1)) * (ts(i) - ts(i + 1)) -
               gamma * ts(i) * ts(i) - omega * ts(i);
    };
    Scalar eta = eta_at(1);
    Scalar eta_star = eta_star_at(1);
    for (int i = 1; i <= d - 1; ++i) {
        check_constant(eta, eta_at(i), "eta", i);
        check_constant(eta_star, eta_star_at(i), "eta*", i);
    }

    return {beta, gamma, gamma_star, rho, rho_star, omega, eta, eta_star};
}

ParameterArray relation(const ParameterArray& pa, RelationOp op) {
    std::vector<Scalar> theta = pa.thetas();
    std::vector<Scalar> theta_star = pa.theta_stars();
    std::vector<Scalar> varphi = pa.varphis();
    std::vector<Scalar> phi = pa.phis();

    switch (op) {
        case RelationOp::Down:
            std::reverse(theta_star.begin(), theta_star.end());
            std::reverse(varphi.begin(), varphi.end());
            std::reverse(phi.begin(), phi.end());
            std::swap(varphi, phi);
            break;
        case RelationOp::DDown:
            std::reverse(theta.begin(), theta.end());
            std::swap(varphi, phi);
            break;
        case RelationOp::DownDDown:
            std::reverse(theta.begin(), theta.end());
            std::reverse(theta_star.begin(), theta_star.end());
            std::reverse(varphi.begin(), varphi.end());
            std::reverse(phi.begin(), phi.end());
            break;
    }
    return ParameterArray(std::move(theta), std::move(theta_star), std::move(varphi),
                          std::move(phi));
}

ParameterArray affine_apply(const ParameterArray& pa, const AffineMap& m) {
    if (m.t.is_zero() || m.t_star.is_zero())
        throw Error(ErrorCode::ZeroScale, "affine map requires t != 0 and t* != 0");
    std::vector<Scalar> theta, theta_star, varphi, phi;
    Scalar tt = m.t * m.t_star;
    for (const Scalar& x : pa.thetas()) theta.push_back(m.t * x + m.c);
    for (const Scalar& x : pa.theta_stars()) theta_star.push_back(m.t_star * x + m.c_star);
    for (const Scalar& x : pa.varphis()) varphi.push_back(tt * x);
    for (const Scalar& x : pa.phis()) phi.push_back(tt * x);
    return ParameterArray(std::move(theta), std::move(theta_star), std::move(varphi),
                          std::move(phi));
}

}  // namespace awrel
