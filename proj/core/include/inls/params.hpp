#ifndef INLS_PARAMS_HPP
#define INLS_PARAMS_HPP

#include <stdexcept>
#include <string>

namespace inls {

/// Sign of the nonlinearity in i u_t + Lap u = kappa |x|^{-b} |u|^alpha u.
/// Focusing corresponds to kappa = -1, defocusing to kappa = +1.
enum class Sign { focusing, defocusing };

inline const char* sign_name(Sign s) {
    return s == Sign::focusing ? "focusing" : "defocusing";
}

/// The tuple (N, b, alpha, sign) fixing one instance of the equation.
struct PhysParams {
    int N = 2;             ///< spatial dimension, >= 2
    double b = 0.5;        ///< inhomogeneity exponent, 0 < b < min(2, N)
    double alpha = 2.0;    ///< nonlinearity power, > 0
    Sign sign = Sign::focusing;

    double kappa() const { return sign == Sign::defocusing ? 1.0 : -1.0; }

    /// Throws std::invalid_argument if the invariants are violated.
    void validate() const {
        if (N < 2) throw std::invalid_argument("PhysParams: N must be >= 2, got " + std::to_string(N));
        // min(2, N) = 2 once N >= 2
        if (!(b > 0.0 && b < 2.0))
            throw std::invalid_argument("PhysParams: b must lie in (0, min(2,N)), got " + std::to_string(b));
        if (!(alpha > 0.0))
            throw std::invalid_argument("PhysParams: alpha must be positive, got " + std::to_string(alpha));
    }
};

}  // namespace inls

#endif
