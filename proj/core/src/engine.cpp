#include "qtoda/engine.hpp"

#include <algorithm>
#include <thread>

namespace qtoda {

EngineConfig EngineConfig::standard(int N, bool affine)
{
    EngineConfig cfg;
    cfg.N = N;
    cfg.affine = affine;
    cfg.orientation = build_orientation(N, affine);
    return cfg;
}

LaurentQK EngineConfig::beta_of(int node) const
{
    if (auto it = beta.find(node); it != beta.end()) return it->second;
    if (node == 0) return -LaurentQK::K(1);
    return LaurentQK(-1);
}

namespace {

struct PathState {
    int vec;
    LaurentQK coeff;
    std::vector<int> f_rev;  // letters collected right to left
    std::vector<int> e_rev;
    int zdeg;
};

// Walk the factors right to left from start vector s.
void expand_from(const RepData& rep, const EngineConfig& cfg, int s, std::vector<NCWord>& out)
{
    const auto& order = cfg.orientation.order;
    const LaurentQK gap = LaurentQK::q(1) - LaurentQK::q(-1);

    std::vector<PathState> states{{s, rep.q2rho[s], {}, {}, 0}};
    // e-factors 1 + c e_i (x) pi(f_i), applied in reverse product order.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto& acts = rep.f.at(*it);
        std::vector<PathState> next;
        for (const auto& st : states) {
            next.push_back(st);
            for (const auto& a : acts)
                if (a.from == st.vec) {
                    PathState n = st;
                    n.vec = a.to;
                    n.coeff *= gap * a.coeff;
                    n.e_rev.push_back(*it);
                    n.zdeg += a.zdeg;
                    next.push_back(std::move(n));
                }
        }
        states = std::move(next);
    }
    std::vector<int> inner(states.size());
    for (size_t i = 0; i < states.size(); ++i) inner[i] = states[i].vec;
    // f-factors 1 + c f_i (x) pi(e_i); remember the vector at the inner Cartan factor.
    struct Tagged {
        PathState st;
        int inner;
    };
    std::vector<Tagged> tagged;
    for (size_t i = 0; i < states.size(); ++i) tagged.push_back({states[i], inner[i]});
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto& acts = rep.e.at(*it);
        std::vector<Tagged> next;
        for (const auto& t : tagged) {
            next.push_back(t);
            for (const auto& a : acts)
                if (a.from == t.st.vec) {
                    Tagged n = t;
                    n.st.vec = a.to;
                    n.st.coeff *= gap * a.coeff;
                    n.st.f_rev.push_back(*it);
                    n.st.zdeg += a.zdeg;
                    next.push_back(std::move(n));
                }
        }
        tagged = std::move(next);
    }
    for (auto& t : tagged) {
        if (t.st.vec != s) continue;
        NCWord w;
        w.coeff = t.st.coeff;
        w.pre_weight = rep.weight[t.inner];
        w.post_weight = rep.weight[s];
        w.f_indices.assign(t.st.f_rev.rbegin(), t.st.f_rev.rend());
        w.e_indices.assign(t.st.e_rev.rbegin(), t.st.e_rev.rend());
        w.z_degree = t.st.zdeg;
        // Critical level: the c (x) d part of the Cartan factor contributes
        // q^{h^v} for every e_0 letter.
        int zeros = static_cast<int>(std::count(w.e_indices.begin(), w.e_indices.end(), 0));
        if (zeros) w.coeff *= LaurentQK::q(rep.N * zeros);
        out.push_back(std::move(w));
    }
}

std::vector<NCWord> expand(const RepData& rep, const EngineConfig& cfg)
{
    if (rep.N != cfg.N || rep.affine != cfg.affine) throw Error("expand_central_words: representation/config mismatch");
    for (int node : cfg.orientation.order) {
        rmatrix_simple_factor(rep, node, false);
        rmatrix_simple_factor(rep, node, true);
    }
    const int dim = rep.dim();
    const int workers = std::min(thread_count(), dim);
    std::vector<std::vector<NCWord>> per_start(dim);
    if (workers <= 1) {
        for (int s = 0; s < dim; ++s) expand_from(rep, cfg, s, per_start[s]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int s = w; s < dim; s += workers) expand_from(rep, cfg, s, per_start[s]);
            });
        for (auto& t : pool) t.join();
    }
    std::vector<NCWord> out;
    for (auto& v : per_start)
        for (auto& w : v) out.push_back(std::move(w));
    return out;
}

}  // namespace

std::vector<NCWord> expand_all_words(const RepData& rep, const EngineConfig& cfg)
{
    return expand(rep, cfg);
}

std::vector<NCWord> expand_central_words(const RepData& rep, const EngineConfig& cfg)
{
    auto all = expand(rep, cfg);
    std::vector<NCWord> out;
    for (auto& w : all)
        if (!cfg.affine || w.z_degree == 0) out.push_back(std::move(w));
    return out;
}

DiffOp whittaker_reduce(const std::vector<NCWord>& words, const EngineConfig& cfg)
{
    const int N = cfg.N;
    const DynkinData d = cfg.dynkin();
    DiffOp out(N, Mode::gl);
    for (const auto& w : words) {
        ExpVector alpha_e(N, 0), alpha_f(N, 0);
        for (int i : w.e_indices) {
            auto a = d.simple_root(i);
            for (int j = 0; j < N; ++j) alpha_e[j] += a[j];
        }
        for (int i : w.f_indices) {
            auto a = d.simple_root(i);
            for (int j = 0; j < N; ++j) alpha_f[j] += a[j];
        }
        if (alpha_e != alpha_f) throw InvariantError("whittaker_reduce: word is not of weight zero");

        auto left = qp_normal_order(w.e_indices, d, cfg.orientation, Side::left);
        std::vector<int> f_rev(w.f_indices.rbegin(), w.f_indices.rend());
        auto right = qp_normal_order(f_rev, d, cfg.orientation, Side::right);
        if (left.word != right.word)
            throw InvariantError("whittaker_reduce: left and right monomials do not match");

        LaurentQK scalar = w.coeff * LaurentQK::q(-pairing(w.post_weight, alpha_e)) * left.scalar * right.scalar;
        for (int i : left.word) scalar *= cfg.beta_of(i);

        ShiftVector mu(N);
        for (int j = 0; j < N; ++j) mu[j] = w.pre_weight[j] + w.post_weight[j];
        ExpVector exponent(N);
        for (int j = 0; j < N; ++j) exponent[j] = -alpha_f[j];
        // Emit in the chart z -> -z, q -> q^-1, where the shifts act as
        // z -> z + hbar*mu on the coordinates of the closed forms.
        TorusPoly coeff = TorusPoly::monomial(exponent, scalar).flip_chart();
        out.add_term(mu, TorusRat(coeff));
    }
    return out;
}

DiffOp build_toda_operator(int k, const EngineConfig& cfg)
{
    RepData rep = fundamental_rep(cfg.N, k, cfg.affine);
    DiffOp op = whittaker_reduce(expand_central_words(rep, cfg), cfg);
    if (!cfg.raw) {
        auto rho = rho_vector(cfg.N);
        for (auto& x : rho) x = -x;
        op = gauge_monomial(op, rho);
    }
    if (cfg.k_value) {
        Rational v = *cfg.k_value;
        op = op.map_scalars([&](const LaurentQK& s) { return s.substitute_K(v); });
    }
    return quotient_reduce(op);
}

DiffOp build_toda_operator(int N, int k, bool affine)
{
    return build_toda_operator(k, EngineConfig::standard(N, affine));
}

std::vector<CommutatorCheck> verify_commuting_family(const std::vector<DiffOp>& family)
{
    std::vector<CommutatorCheck> out;
    for (size_t a = 0; a < family.size(); ++a)
        for (size_t b = a + 1; b < family.size(); ++b)
            out.push_back({static_cast<int>(a + 1), static_cast<int>(b + 1), commutator(family[a], family[b])});
    return out;
}

std::vector<CommutatorCheck> verify_commuting_family(int N, bool affine)
{
    std::vector<DiffOp> family;
    for (int k = 1; k <= N - 1; ++k) family.push_back(build_toda_operator(N, k, affine));
    return verify_commuting_family(family);
}

DiffOp toda_closed_form(int N, bool affine)
{
    DiffOp op(N, Mode::sl_quotient);
    for (int j = 1; j <= N; ++j) {
        ShiftVector mu(N, 0);
        mu[j - 1] = 2;
        op.add_term(mu, TorusRat(TorusPoly::constant(N, 1)));
    }
    const LaurentQK gap2 = q_gap_squared();
    for (int i = 1; i <= (affine ? N : N - 1); ++i) {
        int next = i % N + 1;
        ShiftVector mu(N, 0);
        mu[i - 1] += 1;
        mu[next - 1] += 1;
        LaurentQK c = -gap2 * (i == N ? LaurentQK::K(1) : LaurentQK(1));
        op.add_term(mu, TorusRat(TorusPoly::monomial(root_vector(N, i, next), c)));
    }
    return op;
}

}  // namespace qtoda
