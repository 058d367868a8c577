#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "polyneq/types.hpp"

namespace polyneq {

/// Dense complex polynomial a_0 + a_1 z + ... + a_n z^n (index j holds a_j).
///
/// The stored length fixes the degree slot n. A polynomial whose top slot is
/// exactly zero is "degenerate": operator outputs may be degenerate (the
/// derivative of a constant, polar derivatives with cancelling leading terms),
/// user-facing inputs must not be. See require_proper().
class Polynomial {
public:
    /// The constant zero polynomial (degenerate).
    Polynomial();
    explicit Polynomial(std::vector<Complex> coeffs);
    Polynomial(std::initializer_list<Complex> coeffs);

    static Polynomial constant(Complex c);
    static Polynomial monomial(Complex c, int n);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// Highest index with a nonzero coefficient; -1 for the zero polynomial.
    int effective_degree() const noexcept;
    bool degenerate() const noexcept { return coeffs_.back() == Complex{}; }
    bool is_zero() const noexcept { return effective_degree() < 0; }

    Complex leading() const noexcept { return coeffs_.back(); }
    Complex operator[](std::size_t j) const { return coeffs_[j]; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    Complex operator()(Complex z) const noexcept;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(Complex s, const Polynomial& p);
    friend bool operator==(const Polynomial& p, const Polynomial& q) = default;

private:
    std::vector<Complex> coeffs_;
};

/// Throws ContractError unless p has a nonzero leading coefficient.
void require_proper(const Polynomial& p, const char* what);

/// Horner evaluation.
Complex eval(const Polynomial& p, Complex z) noexcept;

/// Coefficient j of the result is (j+1) a_{j+1}. A constant input yields the
/// (degenerate) constant zero polynomial.
Polynomial derivative(const Polynomial& p);

/// G(z) = P(kz): coefficient j becomes a_j k^j.
Polynomial scale_domain(const Polynomial& p, double k);

/// Pads or trims trailing slots; trimming only drops exact zeros.
Polynomial with_degree_slot(const Polynomial& p, int n);

} // namespace polyneq
