#pragma once

// Functions on the formal torus: finite sums of c * e^(lambda . z) with
// LaurentQK coefficients, their fractions, and the shift substitution
// z -> z + hbar * mu.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtoda/scalars.hpp"

namespace qtoda {

using ExpVector = std::vector<int>;
using ShiftVector = std::vector<int>;

/// Standard dot product on Z^N.
int pairing(const ExpVector& lambda, const ShiftVector& mu);
int entry_sum(const std::vector<int>& v);
/// Representative of mu modulo Z(1,...,1) whose last entry is zero.
ShiftVector com_quotient_canonicalize(ShiftVector mu);
/// Unit vector e_i (1-based index) of length N.
std::vector<int> unit_vector(int N, int i);
/// e_i - e_j (1-based indices).
ExpVector root_vector(int N, int i, int j);
std::string vector_to_string(const std::vector<int>& v);

/// Graded lexicographic order: total degree first, then lexicographic.
bool grlex_less(const ExpVector& a, const ExpVector& b);

class TorusPoly {
public:
    using Terms = std::map<ExpVector, LaurentQK>;

    TorusPoly() = default;
    explicit TorusPoly(int N) : n_(N) {}
    static TorusPoly constant(int N, const LaurentQK& c);
    static TorusPoly monomial(const ExpVector& e, const LaurentQK& c = LaurentQK(1));

    int dim() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Coefficient of e^0.
    LaurentQK constant_term() const;
    /// True if every exponent has entry sum zero.
    bool is_sum_zero() const;

    void add_term(const ExpVector& e, const LaurentQK& c);

    TorusPoly operator-() const;
    TorusPoly& operator+=(const TorusPoly& o);
    TorusPoly& operator-=(const TorusPoly& o);
    friend TorusPoly operator+(TorusPoly a, const TorusPoly& b) { return a += b; }
    friend TorusPoly operator-(TorusPoly a, const TorusPoly& b) { return a -= b; }
    friend TorusPoly operator*(const TorusPoly& a, const TorusPoly& b);
    TorusPoly scaled(const LaurentQK& c) const;
    bool operator==(const TorusPoly& o) const { return terms_ == o.terms_; }

    TorusPoly pow(int n) const;
    /// Exact quotient, or nullopt if d does not divide this polynomial.
    std::optional<TorusPoly> divide_exact(const TorusPoly& d) const;

    /// e^(lambda.z) -> q^(lambda.mu) e^(lambda.z)
    TorusPoly shift_substitute(const ShiftVector& mu) const;
    /// Multiply every exponent by a common monomial e^(delta.z).
    TorusPoly times_monomial(const ExpVector& delta, const LaurentQK& c = LaurentQK(1)) const;
    /// Apply f to every scalar coefficient.
    TorusPoly map_scalars(const std::function<LaurentQK(const LaurentQK&)>& f) const;
    /// e^(lambda.z) -> f(lambda) * e^(lambda.z)
    TorusPoly rescale(const std::function<LaurentQK(const ExpVector&)>& f) const;
    /// e^(lambda.z) -> e^(g(lambda).z)
    TorusPoly map_exponents(const std::function<ExpVector(const ExpVector&)>& g) const;
    /// e^(lambda) -> e^(-lambda) together with q -> q^-1.
    TorusPoly flip_chart() const;

    /// Leading term under grlex.
    std::pair<ExpVector, LaurentQK> leading_term() const;
    /// Componentwise minimum of all exponents.
    ExpVector min_exponent() const;

    std::string to_string() const;

private:
    int n_ = 0;
    Terms terms_;
};

/// Fraction of torus polynomials kept in a normalized form: monomial
/// denominators are cleared, exact quotients are taken, and otherwise the
/// denominator's smallest exponents are zero and its grlex leading
/// coefficient is 1 whenever that coefficient is a unit.
class TorusRat {
public:
    TorusRat() = default;
    explicit TorusRat(int N) : num_(N), den_(TorusPoly::constant(N, 1)) {}
    TorusRat(TorusPoly num);  // NOLINT(google-explicit-constructor)
    TorusRat(TorusPoly num, TorusPoly den);

    int dim() const { return num_.dim(); }
    const TorusPoly& num() const { return num_; }
    const TorusPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant() && den_.constant_term() == 1; }

    TorusRat operator-() const;
    friend TorusRat operator+(const TorusRat& a, const TorusRat& b);
    friend TorusRat operator-(const TorusRat& a, const TorusRat& b);
    friend TorusRat operator*(const TorusRat& a, const TorusRat& b);
    friend TorusRat operator/(const TorusRat& a, const TorusRat& b);
    TorusRat& operator+=(const TorusRat& o) { return *this = *this + o; }
    TorusRat& operator-=(const TorusRat& o) { return *this = *this - o; }
    TorusRat& operator*=(const TorusRat& o) { return *this = *this * o; }
    TorusRat scaled(const LaurentQK& c) const;
    /// Equality of rational functions (cross-multiplication).
    bool operator==(const TorusRat& o) const;

    TorusRat shift_substitute(const ShiftVector& mu) const;
    TorusRat map_scalars(const std::function<LaurentQK(const LaurentQK&)>& f) const;
    TorusRat flip_chart() const;

    std::string to_string() const;

private:
    void normalize();
    TorusPoly num_;
    TorusPoly den_;
};

TorusRat shift_substitute(const TorusRat& f, const ShiftVector& mu);

}  // namespace qtoda
