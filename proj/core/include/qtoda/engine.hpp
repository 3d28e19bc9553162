#pragma once

// Whittaker reduction of the truncated central elements: expand the trace
// over a fundamental representation into words in the generators, reduce
// each word to a difference operator, and assemble the Toda operators.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtoda/diffop.hpp"
#include "qtoda/qrep.hpp"

namespace qtoda {

/// One surviving trace path: coeff * f_{F...} q^{h_pre} e_{E...} q^{h_post}.
///
/// coeff already contains (q - q^-1)^{#letters}, the q^{2(rho, post)} factor
/// of the trace and the critical-level factor of affine words.
struct NCWord {
    LaurentQK coeff;
    ExpVector pre_weight;
    std::vector<int> f_indices;
    std::vector<int> e_indices;
    ExpVector post_weight;
    int z_degree = 0;

    bool operator==(const NCWord&) const = default;
};

struct EngineConfig {
    int N = 2;
    bool affine = false;
    Orientation orientation;
    /// Character values; defaults beta_i = -1 (i >= 1) and beta_0 = -K.
    std::map<int, LaurentQK> beta;
    /// Substitute a rational value for K after reduction.
    std::optional<Rational> k_value;
    /// Skip the final conjugation by e^{(rho, h)}.
    bool raw = false;

    static EngineConfig standard(int N, bool affine);
    DynkinData dynkin() const { return dynkin_type_A(N, affine); }
    LaurentQK beta_of(int node) const;
};

/// Trace expansion of f-factors, inner Cartan factor, e-factors, outer Cartan
/// factor and q^{2 rho}; affine mode keeps only words of z-degree zero.
std::vector<NCWord> expand_central_words(const RepData& rep, const EngineConfig& cfg);
/// Expansion without the z-degree filter (all closed paths).
std::vector<NCWord> expand_all_words(const RepData& rep, const EngineConfig& cfg);

/// Reduce the words to one difference operator (gl mode, before the rho
/// conjugation).
DiffOp whittaker_reduce(const std::vector<NCWord>& words, const EngineConfig& cfg);

/// Full pipeline; result in sl-quotient mode.
DiffOp build_toda_operator(int N, int k, bool affine);
DiffOp build_toda_operator(int k, const EngineConfig& cfg);

struct CommutatorCheck {
    int k1 = 0;
    int k2 = 0;
    DiffOp residual;
    bool ok() const { return residual.is_zero(); }
};

std::vector<CommutatorCheck> verify_commuting_family(int N, bool affine);
std::vector<CommutatorCheck> verify_commuting_family(const std::vector<DiffOp>& family);

/// Closed form sum_j T_j^2 - (q-q^-1)^2 sum_i [K^{delta_iN}] e^{z_i - z_{i+1}} T_i T_{i+1}
/// (cyclic sum over i = 1..N when affine, i = 1..N-1 otherwise).
DiffOp toda_closed_form(int N, bool affine);

}  // namespace qtoda
