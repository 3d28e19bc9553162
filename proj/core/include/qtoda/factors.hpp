#pragma once

// Formal non-rational factors (such as sqrt(1 + g^2 e^x) or a solution psi of
// a first-order difference equation) carried symbolically through gauge
// conjugation of difference operators.

#include <map>
#include <string>
#include <vector>

#include "qtoda/diffop.hpp"

namespace qtoda {

/// A symbol evaluated at x = ell.z + offset*hbar.
struct FactorAtom {
    std::string symbol;
    ExpVector ell;
    int offset = 0;

    auto operator<=>(const FactorAtom&) const = default;
    bool operator==(const FactorAtom&) const = default;
    /// Argument after z -> z + hbar*mu.
    FactorAtom shifted(const ShiftVector& mu) const;
    std::string to_string() const;
};

/// Product of atoms with integer exponents.
using FactorMonomial = std::map<FactorAtom, int>;

FactorMonomial multiply(const FactorMonomial& a, const FactorMonomial& b);
FactorMonomial invert(const FactorMonomial& a);
std::string to_string(const FactorMonomial& m);

/// symbol(x)^power = sum_d coeffs[d] * e^(d x); used to turn even powers of
/// a square-root symbol back into rational functions.
struct PowerRule {
    std::string symbol;
    int power = 2;
    std::map<int, LaurentQK> coeffs;
};

/// symbol(x + step*hbar) = symbol(x) * prod_s s(x)^{multiplier[s]}
struct FactorRule {
    std::string symbol;
    int step = 1;
    std::map<std::string, int> multiplier;
};

/// Ordered product of rule symbols at given arguments.
struct FormalFactorProduct {
    std::vector<std::pair<FactorRule, FactorAtom>> factors;
};

/// Difference operator whose coefficients are rational functions times
/// formal factor monomials, all written to the left of the shift.
class SymbolicDiffOp {
public:
    using Coefficient = std::map<FactorMonomial, TorusRat>;
    using Terms = std::map<ShiftVector, Coefficient>;

    explicit SymbolicDiffOp(int N) : n_(N) {}
    static SymbolicDiffOp from(const DiffOp& a);

    int dim() const { return n_; }
    const Terms& terms() const { return terms_; }

    /// Add left * f * T_mu * right, moving the right factors through T_mu.
    void add_term(const ShiftVector& mu, const TorusRat& f, const FactorMonomial& left = {},
                  const FactorMonomial& right = {});

    std::string to_string() const;

private:
    int n_;
    Terms terms_;
};

/// Pi^{-1} A Pi for direction +1 and Pi A Pi^{-1} for direction -1. Every
/// shift must move every factor argument by a multiple of its rule step.
SymbolicDiffOp conjugate_by_factor_product(const SymbolicDiffOp& a, const FormalFactorProduct& pi,
                                           int direction);

/// Replace factor monomials by rational functions using the power rules.
/// Throws with a diagnostic if some symbol cannot be eliminated.
DiffOp resolve_factors(const SymbolicDiffOp& a, const std::vector<PowerRule>& rules,
                       Mode mode = Mode::gl);

}  // namespace qtoda
