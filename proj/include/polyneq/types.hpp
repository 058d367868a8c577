#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace polyneq {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) noexcept
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Raised when a caller breaks an operation's precondition (bad length,
/// non-finite input, invalid parameter range).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an inequality's side conditions are not met by its parameters.
class HypothesisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Radius k of the closed disk |z| <= k that holds all zeros.
class DiskRadius {
public:
    explicit DiskRadius(double k) : k_(k)
    {
        if (!(k > 0.0) || !std::isfinite(k))
            throw ContractError("disk radius must be positive and finite, got " + std::to_string(k));
    }

    double value() const noexcept { return k_; }

private:
    double k_;
};

// Defaults shared across the library.
inline constexpr double kResidualTol = 1e-10;
inline constexpr double kPredicateTol = 1e-9;
inline constexpr double kFloorFrac = 1e-6;

} // namespace polyneq
