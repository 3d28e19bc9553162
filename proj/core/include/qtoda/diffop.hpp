#pragma once

// Difference operators sum_mu f_mu(z) T_mu with T_mu : z -> z + hbar*mu and
// coefficients written to the left, so (f T_mu)(g T_nu) = f sigma_mu(g) T_{mu+nu}.

#include <map>
#include <string>
#include <vector>

#include "qtoda/torus.hpp"

namespace qtoda {

enum class Mode {
    gl,          ///< functions of z_1..z_N
    sl_quotient  ///< functions invariant under simultaneous shift; keys taken mod (1,...,1)
};

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

class DiffOp {
public:
    using Terms = std::map<ShiftVector, TorusRat>;

    DiffOp() = default;
    explicit DiffOp(int N, Mode mode = Mode::gl) : n_(N), mode_(mode) {}
    static DiffOp identity(int N, Mode mode = Mode::gl);
    static DiffOp shift(const ShiftVector& mu, Mode mode = Mode::gl,
                        const TorusRat& coeff = TorusRat());
    static DiffOp multiplication(const TorusRat& f, Mode mode = Mode::gl);

    int dim() const { return n_; }
    Mode mode() const { return mode_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    /// Coefficient of T_mu (after key canonicalization); zero if absent.
    TorusRat coefficient(const ShiftVector& mu) const;

    /// Add f * T_mu; in quotient mode mu is canonicalized and f must be a
    /// degree-zero function.
    void add_term(const ShiftVector& mu, const TorusRat& f);

    DiffOp operator-() const;
    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    DiffOp scaled(const LaurentQK& c) const;
    bool operator==(const DiffOp& o) const;
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

    /// Apply a map to every coefficient (keys unchanged).
    DiffOp map_coefficients(const std::function<TorusRat(const TorusRat&)>& f) const;
    DiffOp map_scalars(const std::function<LaurentQK(const LaurentQK&)>& f) const;
    /// Same operator read in gl mode (quotient mode keys kept as stored).
    DiffOp as_mode(Mode m) const;

    std::string to_string() const;

private:
    ShiftVector canonical_key(ShiftVector mu) const;
    int n_ = 0;
    Mode mode_ = Mode::gl;
    Terms terms_;
};

/// Worker count for term-parallel products, read from TODA_THREADS (default 1).
int thread_count();

DiffOp compose(const DiffOp& a, const DiffOp& b);
inline DiffOp operator*(const DiffOp& a, const DiffOp& b) { return compose(a, b); }
DiffOp commutator(const DiffOp& a, const DiffOp& b);

/// Conjugation G A G^-1 by G = e^(lambda.z): the T_mu coefficient is
/// multiplied by q^(-lambda.mu). Throws if some lambda.mu is not in Z/2.
DiffOp gauge_monomial(const DiffOp& a, const std::vector<Rational>& lambda);
/// Rational vector rho = ((N+1-2j)/2)_j.
std::vector<Rational> rho_vector(int N);

/// Pass to the center-of-mass quotient; every coefficient must have
/// degree zero.
DiffOp quotient_reduce(const DiffOp& a);

/// The algebra map fixing T_i and sending e^(z_i - z_{i+1}) to
/// e^(z_i - z_{i+1}) T_i T_{i+1}^-1. Finite mode uses simple roots
/// 1..N-1; cyclic mode adds e^(z_N - z_1) and normalizes root coordinates
/// so that the smallest one is zero.
DiffOp root_shift_automorphism(const DiffOp& a, bool cyclic);

}  // namespace qtoda
