#pragma once

// Type A quantum-group data: Dynkin diagrams and orientations, the quantum
// polynomial algebra P_w, and the exterior-power representations of U_q(sl_N)
// with their affine evaluation extension.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtoda/torus.hpp"

namespace qtoda {

struct DynkinData {
    int N = 0;
    bool affine = false;
    std::vector<int> nodes;  // 1..N-1, or 0..N-1 when affine

    int cartan(int i, int j) const;
    int symmetrizer(int) const { return 1; }
    int b(int i, int j) const { return symmetrizer(i) * cartan(i, j); }
    /// e_i - e_{i+1}, with alpha_0 = e_N - e_1.
    ExpVector simple_root(int i) const;
};

DynkinData dynkin_type_A(int N, bool affine);

struct Orientation {
    std::vector<std::pair<int, int>> edges;  // (from, to)
    std::vector<int> order;                  // total order extending the edges

    /// +1 if the edge i->j exists, -1 if j->i, 0 if i and j are not joined.
    int sign(int i, int j) const;
    /// Position of a node in the total order.
    int position(int node) const;
};

bool is_acyclic(const std::vector<int>& nodes, const std::vector<std::pair<int, int>>& edges);

/// Standard orientation: 1->2->...->N-1; affine adds the source 0->1, 0->N-1.
Orientation build_orientation(int N, bool affine);
/// Orientation with explicit edges and total order; checks that the edges
/// cover the diagram, are acyclic and that the order extends them.
Orientation make_orientation(const DynkinData& d, std::vector<std::pair<int, int>> edges,
                             std::vector<int> order);
/// All total orders of the nodes that extend the orientation's edges.
std::vector<std::vector<int>> linear_extensions(const DynkinData& d, const Orientation& o);

enum class Side { left, right };

struct NormalOrdered {
    LaurentQK scalar;
    std::vector<int> word;
};

/// Sort a word of P_w (side left) or of P_w^op (side right) into ascending
/// node order, collecting q^(+-b_ij) per adjacent transposition.
NormalOrdered qp_normal_order(const std::vector<int>& word, const DynkinData& d, const Orientation& o,
                              Side side = Side::left);
/// Insertion sort instead of bubble sort; used to cross-check consistency.
NormalOrdered qp_normal_order_insertion(const std::vector<int>& word, const DynkinData& d,
                                        const Orientation& o, Side side = Side::left);

struct SerreCheck {
    int i = 0;
    int j = 0;
    Side side = Side::left;
    LaurentQK residual;
};

/// Image of every quantum Serre relation in P_w (and P_w^op).
std::vector<SerreCheck> verify_serre_homomorphism(const DynkinData& d, const Orientation& o);

struct RepAction {
    int from = 0;
    int to = 0;
    LaurentQK coeff;
    int zdeg = 0;
};

struct RepData {
    int N = 0;
    int k = 0;
    bool affine = false;
    std::vector<std::vector<int>> basis;     // sorted k-subsets of 1..N
    std::vector<ExpVector> weight;           // indicator vectors
    std::map<int, std::vector<RepAction>> e;  // node -> action
    std::map<int, std::vector<RepAction>> f;
    std::vector<LaurentQK> q2rho;             // q^(2(rho, wt))

    int dim() const { return static_cast<int>(basis.size()); }
    int index_of(const std::vector<int>& subset) const;
    std::string dump() const;
};

RepData fundamental_rep(int N, int k, bool affine);

struct RepCheck {
    std::string relation;
    bool ok = true;
};

/// Weight grading, e_i^2 = f_i^2 = 0 and [e_i, f_j] = 0 for i != j.
std::vector<RepCheck> check_rep_relations(const RepData& rep);

/// The two-term truncation 1 + (q - q^-1) x (.) pi(y) of a simple-root
/// factor: `transposed` selects the f (x) pi(e) version.
struct RFactor {
    int node = 0;
    bool transposed = false;
    LaurentQK coeff;                 // q - q^-1
    std::vector<RepAction> action;  // pi(f_i), or pi(e_i) when transposed
};

RFactor rmatrix_simple_factor(const RepData& rep, int node, bool transposed = false);

}  // namespace qtoda
