#include "qtoda/qrep.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace qtoda {

// Dynkin data ------------------------------------------------------------

int DynkinData::cartan(int i, int j) const
{
    if (i == j) return 2;
    if (affine) {
        if (N == 2) return -2;
        int d = ((i - j) % N + N) % N;
        return (d == 1 || d == N - 1) ? -1 : 0;
    }
    return std::abs(i - j) == 1 ? -1 : 0;
}

ExpVector DynkinData::simple_root(int i) const
{
    if (i == 0) return root_vector(N, N, 1);
    return root_vector(N, i, i + 1);
}

DynkinData dynkin_type_A(int N, bool affine)
{
    if (N < 2) throw Error("type A data needs N >= 2");
    DynkinData d;
    d.N = N;
    d.affine = affine;
    for (int i = affine ? 0 : 1; i <= N - 1; ++i) d.nodes.push_back(i);
    return d;
}

// orientations -------------------------------------------------------------

int Orientation::sign(int i, int j) const
{
    for (const auto& [a, b] : edges) {
        if (a == i && b == j) return 1;
        if (a == j && b == i) return -1;
    }
    return 0;
}

int Orientation::position(int node) const
{
    auto it = std::find(order.begin(), order.end(), node);
    if (it == order.end()) throw Error("orientation: unknown node " + std::to_string(node));
    return static_cast<int>(it - order.begin());
}

bool is_acyclic(const std::vector<int>& nodes, const std::vector<std::pair<int, int>>& edges)
{
    // Kahn's algorithm.
    std::map<int, int> indeg;
    for (int n : nodes) indeg[n] = 0;
    for (const auto& [a, b] : edges) ++indeg[b];
    std::vector<int> ready;
    for (const auto& [n, d] : indeg)
        if (d == 0) ready.push_back(n);
    size_t seen = 0;
    while (!ready.empty()) {
        int n = ready.back();
        ready.pop_back();
        ++seen;
        for (const auto& [a, b] : edges)
            if (a == n && --indeg[b] == 0) ready.push_back(b);
    }
    return seen == indeg.size();
}

Orientation make_orientation(const DynkinData& d, std::vector<std::pair<int, int>> edges,
                             std::vector<int> order)
{
    std::set<std::pair<int, int>> joined;
    for (const auto& [a, b] : edges) {
        if (d.cartan(a, b) == 0 || a == b) throw Error("orientation: edge between non-adjacent nodes");
        if (!joined.insert({std::min(a, b), std::max(a, b)}).second)
            throw Error("orientation: edge oriented twice");
    }
    for (size_t x = 0; x < d.nodes.size(); ++x)
        for (size_t y = x + 1; y < d.nodes.size(); ++y)
            if (d.cartan(d.nodes[x], d.nodes[y]) != 0 && !joined.count({d.nodes[x], d.nodes[y]}))
                throw Error("orientation: unoriented edge");
    if (!is_acyclic(d.nodes, edges)) throw Error("orientation: directed cycle");
    Orientation o{std::move(edges), std::move(order)};
    auto sorted = o.order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != d.nodes) throw Error("orientation: order is not a permutation of the nodes");
    for (const auto& [a, b] : o.edges)
        if (o.position(a) > o.position(b)) throw Error("orientation: order does not extend the edges");
    return o;
}

Orientation build_orientation(int N, bool affine)
{
    DynkinData d = dynkin_type_A(N, affine);
    std::vector<std::pair<int, int>> edges;
    if (affine) {
        edges.emplace_back(0, 1);
        if (N - 1 != 1) edges.emplace_back(0, N - 1);
    }
    for (int i = 1; i + 1 <= N - 1; ++i) edges.emplace_back(i, i + 1);
    return make_orientation(d, edges, d.nodes);
}

std::vector<std::vector<int>> linear_extensions(const DynkinData& d, const Orientation& o)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::set<int> used;
    std::function<void()> rec = [&] {
        if (current.size() == d.nodes.size()) {
            out.push_back(current);
            return;
        }
        for (int n : d.nodes) {
            if (used.count(n)) continue;
            bool ok = true;
            for (const auto& [a, b] : o.edges)
                if (b == n && !used.count(a)) ok = false;
            if (!ok) continue;
            used.insert(n);
            current.push_back(n);
            rec();
            current.pop_back();
            used.erase(n);
        }
    };
    rec();
    return out;
}

// P_w ----------------------------------------------------------------------

namespace {

// Scalar s with x_a x_b = s x_b x_a in P_w (or P_w^op).
int swap_exponent(int a, int b, const DynkinData& d, const Orientation& o, Side side)
{
    int s = o.sign(a, b) * d.b(a, b);
    return side == Side::left ? s : -s;
}

}  // namespace

NormalOrdered qp_normal_order(const std::vector<int>& word, const DynkinData& d, const Orientation& o,
                              Side side)
{
    std::vector<int> w = word;
    int qexp = 0;
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (o.position(w[i]) > o.position(w[i + 1])) {
                qexp += swap_exponent(w[i], w[i + 1], d, o, side);
                std::swap(w[i], w[i + 1]);
                swapped = true;
            }
    }
    return {LaurentQK::q(qexp), std::move(w)};
}

NormalOrdered qp_normal_order_insertion(const std::vector<int>& word, const DynkinData& d,
                                        const Orientation& o, Side side)
{
    std::vector<int> w = word;
    int qexp = 0;
    for (size_t i = 1; i < w.size(); ++i)
        for (size_t j = i; j > 0 && o.position(w[j - 1]) > o.position(w[j]); --j) {
            qexp += swap_exponent(w[j - 1], w[j], d, o, side);
            std::swap(w[j - 1], w[j]);
        }
    return {LaurentQK::q(qexp), std::move(w)};
}

std::vector<SerreCheck> verify_serre_homomorphism(const DynkinData& d, const Orientation& o)
{
    std::vector<SerreCheck> out;
    for (Side side : {Side::left, Side::right})
        for (int i : d.nodes)
            for (int j : d.nodes) {
                if (i == j) continue;
                const int n = 1 - d.cartan(i, j);
                LaurentQK residual;
                std::vector<int> target;
                for (int k = 0; k <= n; ++k) {
                    std::vector<int> w(n - k, i);
                    w.push_back(j);
                    w.insert(w.end(), k, i);
                    auto no = qp_normal_order(w, d, o, side);
                    if (target.empty()) target = no.word;
                    if (no.word != target) throw InvariantError("Serre check: sorted words differ");
                    LaurentQK term = q_binomial(n, k, d.symmetrizer(i)) * no.scalar;
                    if (k % 2) residual -= term; else residual += term;
                }
                out.push_back({i, j, side, residual});
            }
    return out;
}

// representations ---------------------------------------------------------

int RepData::index_of(const std::vector<int>& subset) const
{
    auto it = std::lower_bound(basis.begin(), basis.end(), subset);
    if (it == basis.end() || *it != subset) return -1;
    return static_cast<int>(it - basis.begin());
}

std::string RepData::dump() const
{
    std::ostringstream os;
    os << "N=" << N << " k=" << k << (affine ? " affine" : "") << " dim=" << dim() << '\n';
    auto subset = [&](int idx) {
        std::ostringstream s;
        s << '{';
        for (size_t i = 0; i < basis[idx].size(); ++i) s << (i ? "," : "") << basis[idx][i];
        s << '}';
        return s.str();
    };
    for (int b = 0; b < dim(); ++b)
        os << "  " << subset(b) << " wt=" << vector_to_string(weight[b]) << " q2rho=" << q2rho[b] << '\n';
    for (const auto* table : {&e, &f})
        for (const auto& [node, acts] : *table)
            for (const auto& a : acts)
                os << "  " << (table == &e ? 'e' : 'f') << node << ": " << subset(a.from) << " -> "
                   << subset(a.to) << " coeff=" << a.coeff << " zdeg=" << a.zdeg << '\n';
    return os.str();
}

RepData fundamental_rep(int N, int k, bool affine)
{
    if (N < 2) throw Error("fundamental_rep: N must be at least 2");
    if (k < 1 || k > N - 1) throw Error("fundamental_rep: k must lie in 1..N-1");
    RepData rep;
    rep.N = N;
    rep.k = k;
    rep.affine = affine;
    std::vector<bool> mask(N, false);
    std::fill(mask.begin(), mask.begin() + k, true);
    do {
        std::vector<int> s;
        for (int j = 0; j < N; ++j)
            if (mask[j]) s.push_back(j + 1);
        rep.basis.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    std::sort(rep.basis.begin(), rep.basis.end());

    for (const auto& s : rep.basis) {
        ExpVector w(N, 0);
        int twice = 0;
        for (int j : s) {
            w[j - 1] = 1;
            twice += N + 1 - 2 * j;
        }
        rep.weight.push_back(w);
        rep.q2rho.push_back(LaurentQK::q(twice));
    }

    // e moves the element `up` of S to `down`: for e_i (i >= 1) that is
    // i+1 -> i; for e_0 it is 1 -> N.
    auto add_pair = [&](int node, int up, int down, int zdeg) {
        for (int b = 0; b < rep.dim(); ++b) {
            const auto& s = rep.basis[b];
            bool has_up = std::binary_search(s.begin(), s.end(), up);
            bool has_down = std::binary_search(s.begin(), s.end(), down);
            if (!has_up || has_down) continue;
            std::vector<int> t = s;
            *std::find(t.begin(), t.end(), up) = down;
            std::sort(t.begin(), t.end());
            int c = rep.index_of(t);
            rep.e[node].push_back({b, c, LaurentQK(1), zdeg});
            rep.f[node].push_back({c, b, LaurentQK(1), -zdeg});
        }
        rep.e.try_emplace(node);
        rep.f.try_emplace(node);
    };
    for (int i = 1; i <= N - 1; ++i) add_pair(i, i + 1, i, 0);
    if (affine) add_pair(0, 1, N, 1);
    return rep;
}

namespace {

using Sparse = std::map<std::pair<int, int>, LaurentQK>;  // (row=to, col=from)

Sparse to_matrix(const std::vector<RepAction>& acts)
{
    Sparse m;
    for (const auto& a : acts) m[{a.to, a.from}] += a.coeff;
    return m;
}

Sparse product(const Sparse& a, const Sparse& b)
{
    Sparse out;
    for (const auto& [ab, x] : a)
        for (const auto& [bb, y] : b)
            if (ab.second == bb.first) {
                auto& slot = out[{ab.first, bb.second}];
                slot += x * y;
            }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

bool same(Sparse a, Sparse b)
{
    return a == b;
}

}  // namespace

std::vector<RepCheck> check_rep_relations(const RepData& rep)
{
    DynkinData d = dynkin_type_A(rep.N, rep.affine);
    std::vector<RepCheck> out;
    for (int i : d.nodes) {
        ExpVector alpha = d.simple_root(i);
        bool graded = true;
        for (const auto& a : rep.e.at(i))
            for (int j = 0; j < rep.N; ++j)
                if (rep.weight[a.to][j] - rep.weight[a.from][j] != alpha[j]) graded = false;
        for (const auto& a : rep.f.at(i))
            for (int j = 0; j < rep.N; ++j)
                if (rep.weight[a.to][j] - rep.weight[a.from][j] != -alpha[j]) graded = false;
        out.push_back({"weight grading of e" + std::to_string(i) + ", f" + std::to_string(i), graded});
        Sparse E = to_matrix(rep.e.at(i)), F = to_matrix(rep.f.at(i));
        out.push_back({"e" + std::to_string(i) + "^2 = 0", product(E, E).empty()});
        out.push_back({"f" + std::to_string(i) + "^2 = 0", product(F, F).empty()});
        for (int j : d.nodes) {
            if (i == j) continue;
            Sparse Fj = to_matrix(rep.f.at(j));
            out.push_back({"[e" + std::to_string(i) + ", f" + std::to_string(j) + "] = 0",
                           same(product(E, Fj), product(Fj, E))});
        }
    }
    return out;
}

RFactor rmatrix_simple_factor(const RepData& rep, int node, bool transposed)
{
    auto it = (transposed ? rep.e : rep.f).find(node);
    if (it == (transposed ? rep.e : rep.f).end())
        throw Error("rmatrix_simple_factor: unknown node " + std::to_string(node));
    Sparse m = to_matrix(it->second);
    if (!product(m, m).empty())
        throw Error("rmatrix_simple_factor: representation is not minuscule for node " + std::to_string(node));
    return {node, transposed, LaurentQK::q(1) - LaurentQK::q(-1), it->second};
}

}  // namespace qtoda
