#pragma once

// Exact scalar ring: Laurent polynomials over Q in q^(1/2), K and two
// auxiliary central variables, plus q-combinatorics and truncated hbar-jets.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qtoda {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant of the engine is violated.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Raised when a limit or expansion is ill-posed at the requested order.
class LimitError : public Error {
public:
    using Error::Error;
};

using Rational = mpq_class;

std::string to_string(const Rational& r);

/// Exponents of one scalar monomial q^(q2/2) K^k g^g t^t.
///
/// g is the relativistic coupling and t is a spare variable used for the
/// Macdonald parameter q^(2k) (which becomes e^(2 hbar P) in the Toda limit).
/// Both stay zero in the Toda engine itself.
struct ScalarMonomial {
    int q2 = 0;
    int k = 0;
    int g = 0;
    int t = 0;

    auto operator<=>(const ScalarMonomial&) const = default;
    bool operator==(const ScalarMonomial&) const = default;

    ScalarMonomial operator*(const ScalarMonomial& o) const
    {
        return {q2 + o.q2, k + o.k, g + o.g, t + o.t};
    }
    ScalarMonomial inverse() const { return {-q2, -k, -g, -t}; }
    bool is_one() const { return q2 == 0 && k == 0 && g == 0 && t == 0; }
};

/// Exact Laurent polynomial in q^(1/2), K, g, t with rational coefficients.
///
/// The term map never stores zero coefficients, so equal values have equal
/// term maps.
class LaurentQK {
public:
    using Terms = std::map<ScalarMonomial, Rational>;

    LaurentQK() = default;
    LaurentQK(long c);  // NOLINT(google-explicit-constructor)
    LaurentQK(const Rational& c);  // NOLINT(google-explicit-constructor)

    static LaurentQK monomial(const Rational& c, ScalarMonomial m);
    /// q^(half/2)
    static LaurentQK q_half(int half);
    static LaurentQK q(int e) { return q_half(2 * e); }
    static LaurentQK K(int e);
    static LaurentQK g(int e);
    static LaurentQK t(int e);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Single term (a unit of the Laurent ring).
    bool is_monomial() const { return terms_.size() == 1; }
    /// Constant term (coefficient of the unit monomial).
    Rational constant_term() const;
    bool is_constant() const;

    LaurentQK operator-() const;
    LaurentQK& operator+=(const LaurentQK& o);
    LaurentQK& operator-=(const LaurentQK& o);
    LaurentQK& operator*=(const LaurentQK& o);
    friend LaurentQK operator+(LaurentQK a, const LaurentQK& b) { return a += b; }
    friend LaurentQK operator-(LaurentQK a, const LaurentQK& b) { return a -= b; }
    friend LaurentQK operator*(const LaurentQK& a, const LaurentQK& b);
    bool operator==(const LaurentQK& o) const = default;

    /// Raise to an integer power; negative powers require a monomial.
    LaurentQK pow(int n) const;
    std::optional<LaurentQK> inverse() const;
    /// Exact quotient in the Laurent ring, or nullopt if the division leaves
    /// a remainder.
    std::optional<LaurentQK> divide_exact(const LaurentQK& d) const;

    /// Multiply every term by the monomial m.
    LaurentQK shifted(ScalarMonomial m) const;
    /// Apply a ring map defined on monomials.
    template <class F>
    LaurentQK map_monomials(F&& f) const
    {
        LaurentQK out;
        for (const auto& [m, c] : terms_) out += LaurentQK(c) * f(m);
        return out;
    }
    /// q -> q^-1 (K, g, t untouched).
    LaurentQK invert_q() const;
    /// Substitute K by a rational value (K^-n requires a nonzero value).
    LaurentQK substitute_K(const Rational& value) const;

    /// Range of exponents of one variable over all terms.
    std::pair<int, int> t_degree_range() const;

    /// Sorted sum of terms "c*q^(a/2)*K^b" (g and t when present).
    std::string to_string() const;

private:
    void add_term(const ScalarMonomial& m, const Rational& c);
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentQK& s);

// q-combinatorics -------------------------------------------------------

/// [a]_{q^d} = (q^{da} - q^{-da}) / (q^d - q^{-d}) as an exact Laurent polynomial.
LaurentQK q_integer(int a, int d = 1);
/// Gaussian binomial [n k]_{q^d}; zero when k is out of range.
LaurentQK q_binomial(int n, int k, int d = 1);
/// sum_{k=0}^{1-a} (-1)^k [1-a k]_{q^d} q^{sign k b}
LaurentQK serre_scalar_sum(int a_ij, int b_ij, int sign, int d = 1);
/// (q - q^-1)^2
LaurentQK q_gap_squared();

// hbar-jets -------------------------------------------------------------

/// Truncated power series in hbar, sum_{n=low}^{order} c_n hbar^n, with
/// coefficients in the q-free part of the scalar ring.
///
/// `low` may be negative after a division; a nonzero hbar^-1 coefficient is
/// reported through has_pole().
class HbarJet {
public:
    HbarJet() = default;
    HbarJet(int order, int low, std::vector<LaurentQK> coeffs);
    static HbarJet constant(const LaurentQK& c, int order);

    int order() const { return order_; }
    int low() const { return low_; }
    /// Coefficient of hbar^n; zero outside the stored window.
    LaurentQK coeff(int n) const;
    /// Lowest order with a nonzero coefficient, or nullopt for the zero jet.
    std::optional<int> valuation() const;
    bool has_pole() const;
    LaurentQK pole_coefficient() const { return coeff(-1); }

    HbarJet operator+(const HbarJet& o) const;
    HbarJet operator-(const HbarJet& o) const;
    HbarJet operator*(const HbarJet& o) const;
    HbarJet scaled(const LaurentQK& c) const;
    /// Same series, truncated to a lower order.
    HbarJet truncated(int order) const;
    /// Equality of coefficients up to the smaller of the two orders.
    bool agrees_with(const HbarJet& o) const;

private:
    int order_ = 0;
    int low_ = 0;
    std::vector<LaurentQK> c_;
};

/// Substitute q = e^hbar and expand to order m; K, g, t stay symbolic.
HbarJet jet_expand(const LaurentQK& s, int m);
/// Truncated quotient a / b. Throws LimitError when the leading order of b
/// exceeds that of a by more than one, or when fewer than `min_order` orders
/// of the quotient are determined.
HbarJet jet_divide(const HbarJet& a, const HbarJet& b,
                   std::optional<int> min_order = std::nullopt);

}  // namespace qtoda
