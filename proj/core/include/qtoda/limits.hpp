#pragma once

// Classical operators and degenerations: hbar -> 0 limits of difference
// operators, the Calogero-Moser P -> infinity limits, the Macdonald limit and
// the relativistic Toda gauge equivalence.

#include <optional>
#include <string>
#include <vector>

#include "qtoda/diffop.hpp"
#include "qtoda/factors.hpp"

namespace qtoda {

// differential operators ---------------------------------------------------

/// sum_d c_d(z) d^d with coefficients to the left.
class DifferentialOp {
public:
    using Terms = std::map<std::vector<int>, TorusPoly>;

    DifferentialOp() = default;
    explicit DifferentialOp(int N) : n_(N) {}

    int dim() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    TorusPoly coefficient(const std::vector<int>& deriv) const;

    void add_term(const std::vector<int>& deriv, const TorusPoly& c);
    DifferentialOp& operator+=(const DifferentialOp& o);
    DifferentialOp& operator-=(const DifferentialOp& o);
    friend DifferentialOp operator+(DifferentialOp a, const DifferentialOp& b) { return a += b; }
    friend DifferentialOp operator-(DifferentialOp a, const DifferentialOp& b) { return a -= b; }
    DifferentialOp scaled(const LaurentQK& c) const;
    bool operator==(const DifferentialOp& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    /// Replace d_N by -(d_1 + ... + d_{N-1}).
    DifferentialOp sl_reduce() const;
    /// Action on e^(lambda.z), as the coefficient polynomial of the result.
    TorusPoly apply_to_exponential(const ExpVector& lambda) const;

    std::string to_string() const;

private:
    int n_ = 0;
    Terms terms_;
};

/// -1/2 sum_j d_j^2 + sum_{i<N} e^{z_i - z_{i+1}}
DifferentialOp classical_toda(int N);
/// classical_toda(N) + K e^{z_N - z_1}
DifferentialOp affine_classical_toda(int N);

// quasiclassical limit -----------------------------------------------------

/// T_mu = sum_{n <= m} hbar^n (mu.d)^n / n!, one operator per order.
std::vector<DifferentialOp> shift_operator_jet(const ShiftVector& mu, int m);

struct QuasiclassicalExpansion {
    DifferentialOp leading;        // hbar^-2 part
    DifferentialOp pole;           // hbar^-1 part before sl reduction
    DifferentialOp pole_reduced;   // ... and after
    DifferentialOp limit;          // hbar^0 part, sl-reduced
};

/// Expansion of (A - dimV)/(q - q^-1)^2 at q = e^hbar with A written through
/// order m (m >= 2).
QuasiclassicalExpansion quasiclassical_expansion(const DiffOp& a, int dim_v, int m);
/// The hbar^0 part; throws LimitError if lower orders survive.
DifferentialOp quasiclassical_limit(const DiffOp& a, int dim_v, int m);

/// L = C (M + G) with C, G scalars, found by matching the e^{alpha_1}
/// coefficient.
struct ClassicalFit {
    bool ok = false;
    LaurentQK scale;   // C
    LaurentQK shift;   // G
    DifferentialOp residual;
};
ClassicalFit fit_classical_integral(const DifferentialOp& limit, const DifferentialOp& classical);

// Macdonald operators ----------------------------------------------------

/// sum_i prod_{j != i} (t e^{w_i} - e^{w_j})/(e^{w_i} - e^{w_j}) T_{2 e_i}, with
/// t = q^{2k} kept in the t slot of the scalar ring.
DiffOp macdonald_operator(int N);

/// Ratio of polynomials in u with torus-polynomial coefficients; u is stored
/// as the t variable.
struct RationalInU {
    TorusPoly num;
    TorusPoly den;

    static RationalInU from(const TorusRat& f);
    /// Highest u-degree of numerator and denominator.
    std::pair<int, int> degrees() const;
    /// Limit u -> infinity; throws LimitError if it diverges.
    TorusRat limit_at_infinity() const;
};

/// Coefficients after conjugating by e^{-P sum (i-1) w_i} and substituting
/// w_i = z_i + 2 hbar i P, k = P (so t = u = e^{2 hbar P}).
std::map<ShiftVector, RationalInU> macdonald_in_u(int N);
DiffOp macdonald_toda_limit(int N);
/// T_{2e_N} + sum_{i<N} (1 - e^{z_i - z_{i+1}}) T_{2e_i}
DiffOp macdonald_limit_closed_form(int N);
/// e^{lambda.z} -> s^{w.lambda} e^{lambda.z}; negative powers of s need s to be a unit.
DiffOp rescale_torus(const DiffOp& a, const std::vector<int>& w, const LaurentQK& s);

// Calogero-Moser limits ----------------------------------------------------

/// (1/4 e^{2P} - 1/2 e^P) sinh^{-2}(a.x + lambda P + kappa ln K) with a = -alpha/2.
struct SinhTerm {
    int i = 0, j = 0;   // alpha = e_i - e_j
    int n = 0;          // lattice-sum index (0 in the trigonometric case)
    ExpVector alpha;
    Rational lambda;
    Rational kappa;
};

struct SinhLimit {
    SinhTerm term;
    Rational net_degree;      // e^P-degree of the leading contribution
    Rational subleading_degree;
    bool survives = false;
    TorusPoly contribution;   // nonzero only for survivors
};

struct CMLimit {
    DifferentialOp op;
    std::vector<SinhLimit> terms;  // every enumerated term
    int window_lo = 0, window_hi = 0;
    bool certificate_ok = false;   // every non-survivor has negative degree
};

std::vector<SinhTerm> cm_terms(int N, bool elliptic, int n_lo = -3, int n_hi = 3);
SinhLimit sinh_term_limit(const SinhTerm& t, int N);
CMLimit cm_limit(int N, bool elliptic);

// relativistic Toda -------------------------------------------------------

/// Whether the doubled shift cT_i moves z_i by +2 hbar or by -2 hbar.
enum class ShiftConvention { plus, minus };
std::string to_string(ShiftConvention c);
ShiftVector doubled_shift(int N, int i, ShiftConvention c);

/// sum cT_i - (q-q^-1)^2 sum [K^{delta_iN}] e^{z_i - z_{i+1}} cT_i (cyclic when affine).
DiffOp reduced_toda(int N, bool affine, ShiftConvention c = ShiftConvention::plus);
/// sum_i f(z_{i-1} - z_i) cT_i f(z_i - z_{i+1}) with f^2 = 1 + g^2 e^x; the
/// boundary factors are 1 in the non-periodic case.
SymbolicDiffOp relativistic_toda_hamiltonian(int N, bool periodic, ShiftConvention c);
/// prod_i psi(z_i - z_{i+1}), psi(x + 2 hbar) = psi(x) f(x)^-1.
FormalFactorProduct relativistic_gauge_product(int N, bool periodic);
std::vector<PowerRule> relativistic_power_rules();
/// sum_i (1 + g^2 q^shift e^{z_i - z_{i+1}}) cT_i
DiffOp gauged_relativistic_toda(int N, bool periodic, ShiftConvention c, int q_shift = 0);

struct RelativisticCheck {
    ShiftConvention convention = ShiftConvention::plus;
    bool periodic = false;
    bool resolved = false;
    std::string diagnostic;
    std::optional<int> q_shift;       // the uniform c, if the result has the expected form
    bool matches_gauged = false;      // equals the gauged form after g -> g q^{-c/2}
    bool matches_reduced = false;     // ... and then the reduced Toda operator
    bool literal_periodic_matches = false;  // g^2 = -(q-q^-1)^2 K^{2/N}
    DiffOp conjugated;
};

RelativisticCheck relativistic_gauge_check(int N, bool periodic, ShiftConvention c);

}  // namespace qtoda
