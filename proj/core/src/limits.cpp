#include "qtoda/limits.hpp"

#include <algorithm>
#include <sstream>

namespace qtoda {

// DifferentialOp ------------------------------------------------------------

TorusPoly DifferentialOp::coefficient(const std::vector<int>& deriv) const
{
    auto it = terms_.find(deriv);
    return it == terms_.end() ? TorusPoly(n_) : it->second;
}

void DifferentialOp::add_term(const std::vector<int>& deriv, const TorusPoly& c)
{
    if (n_ == 0) n_ = static_cast<int>(deriv.size());
    if (static_cast<int>(deriv.size()) != n_) throw Error("DifferentialOp: dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(deriv, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DifferentialOp& DifferentialOp::operator+=(const DifferentialOp& o)
{
    if (n_ == 0) n_ = o.n_;
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

DifferentialOp& DifferentialOp::operator-=(const DifferentialOp& o)
{
    if (n_ == 0) n_ = o.n_;
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

DifferentialOp DifferentialOp::scaled(const LaurentQK& c) const
{
    DifferentialOp out(n_);
    for (const auto& [d, x] : terms_) out.add_term(d, x.scaled(c));
    return out;
}

DifferentialOp DifferentialOp::sl_reduce() const
{
    if (n_ < 2) return *this;
    DifferentialOp out(n_);
    for (const auto& [d, c] : terms_) {
        std::vector<int> base = d;
        const int p = base[n_ - 1];
        base[n_ - 1] = 0;
        // (-(d_1 + ... + d_{N-1}))^p applied on the right of d^base.
        std::map<std::vector<int>, LaurentQK> acc{{base, LaurentQK(1)}};
        for (int s = 0; s < p; ++s) {
            std::map<std::vector<int>, LaurentQK> next;
            for (const auto& [e, x] : acc)
                for (int j = 0; j < n_ - 1; ++j) {
                    auto f = e;
                    ++f[j];
                    next[f] -= x;
                }
            acc = std::move(next);
        }
        for (const auto& [e, x] : acc) out.add_term(e, c.scaled(x));
    }
    return out;
}

TorusPoly DifferentialOp::apply_to_exponential(const ExpVector& lambda) const
{
    TorusPoly out(n_);
    for (const auto& [d, c] : terms_) {
        Rational factor = 1;
        for (int j = 0; j < n_; ++j)
            for (int r = 0; r < d[j]; ++r) factor *= lambda[j];
        out += c.times_monomial(lambda, LaurentQK(factor));
    }
    return out;
}

std::string DifferentialOp::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '[' << c.to_string() << ']';
        for (int j = 0; j < n_; ++j)
            if (d[j]) os << "*d" << (j + 1) << (d[j] > 1 ? "^" + std::to_string(d[j]) : "");
    }
    return os.str();
}

namespace {

std::vector<int> zero_deriv(int N)
{
    return std::vector<int>(N, 0);
}

DifferentialOp kinetic_term(int N)
{
    DifferentialOp op(N);
    for (int j = 1; j <= N; ++j) {
        auto d = zero_deriv(N);
        d[j - 1] = 2;
        op.add_term(d, TorusPoly::constant(N, Rational(-1, 2)));
    }
    return op;
}

// Left multiplication by a function.
DifferentialOp times_left(const TorusPoly& f, const DifferentialOp& d)
{
    DifferentialOp out(d.dim());
    for (const auto& [e, c] : d.terms()) out.add_term(e, f * c);
    return out;
}

// Product of differential operators with constant coefficients.
DifferentialOp constant_product(const DifferentialOp& a, const DifferentialOp& b)
{
    DifferentialOp out(a.dim());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) {
            if (!cb.is_constant()) throw Error("constant_product: non-constant coefficient");
            auto d = da;
            for (size_t j = 0; j < d.size(); ++j) d[j] += db[j];
            out.add_term(d, ca * cb);
        }
    return out;
}

}  // namespace

DifferentialOp classical_toda(int N)
{
    if (N < 2) throw Error("classical_toda: N must be at least 2");
    DifferentialOp op = kinetic_term(N);
    for (int i = 1; i < N; ++i) op.add_term(zero_deriv(N), TorusPoly::monomial(root_vector(N, i, i + 1)));
    return op;
}

DifferentialOp affine_classical_toda(int N)
{
    DifferentialOp op = classical_toda(N);
    op.add_term(zero_deriv(N), TorusPoly::monomial(root_vector(N, N, 1), LaurentQK::K(1)));
    return op;
}

// quasiclassical limit ------------------------------------------------------

std::vector<DifferentialOp> shift_operator_jet(const ShiftVector& mu, int m)
{
    const int N = static_cast<int>(mu.size());
    DifferentialOp first(N);
    for (int j = 0; j < N; ++j) {
        auto d = zero_deriv(N);
        d[j] = 1;
        first.add_term(d, TorusPoly::constant(N, mu[j]));
    }
    std::vector<DifferentialOp> out;
    DifferentialOp power(N);
    power.add_term(zero_deriv(N), TorusPoly::constant(N, 1));
    for (int n = 0; n <= m; ++n) {
        if (n > 0) power = constant_product(power, first).scaled(LaurentQK(Rational(1, n)));
        out.push_back(power);
    }
    return out;
}

QuasiclassicalExpansion quasiclassical_expansion(const DiffOp& a, int dim_v, int m)
{
    if (m < 2) throw LimitError("quasiclassical expansion needs order m >= 2");
    if (a.mode() != Mode::sl_quotient) throw Error("quasiclassical expansion expects an sl-quotient operator");
    const int N = a.dim();
    std::vector<DifferentialOp> jet(m + 1, DifferentialOp(N));
    for (const auto& [mu, f] : a.terms()) {
        if (!f.is_polynomial()) throw LimitError("quasiclassical expansion: non-polynomial coefficient");
        auto shift_jet = shift_operator_jet(mu, m);
        for (const auto& [lambda, c] : f.num().terms()) {
            HbarJet cj = jet_expand(c, m);
            for (int i = 0; i <= m; ++i) {
                LaurentQK ci = cj.coeff(i);
                if (ci.is_zero()) continue;
                TorusPoly coeff = TorusPoly::monomial(lambda, ci);
                for (int b = 0; i + b <= m; ++b) jet[i + b] += times_left(coeff, shift_jet[b]);
            }
        }
    }
    jet[0].add_term(zero_deriv(N), TorusPoly::constant(N, -dim_v));

    // (q - q^-1)^2 = hbar^2 B(hbar)
    HbarJet gap = jet_expand(q_gap_squared(), m + 2);
    std::vector<LaurentQK> b(m + 1);
    for (int n = 0; n <= m; ++n) b[n] = gap.coeff(n + 2);
    HbarJet binv = jet_divide(HbarJet::constant(1, m), HbarJet(m, 0, b), m);

    auto order = [&](int r) {  // coefficient of hbar^r in hbar^-2 * jet * binv
        DifferentialOp out(N);
        for (int j = 0; j <= r + 2 && j <= m; ++j) out += jet[j].scaled(binv.coeff(r + 2 - j));
        return out;
    };
    QuasiclassicalExpansion e;
    e.leading = order(-2);
    e.pole = order(-1);
    e.pole_reduced = e.pole.sl_reduce();
    e.limit = order(0).sl_reduce();
    return e;
}

DifferentialOp quasiclassical_limit(const DiffOp& a, int dim_v, int m)
{
    auto e = quasiclassical_expansion(a, dim_v, m);
    if (!e.leading.is_zero())
        throw LimitError("quasiclassical limit: hbar^-2 part " + e.leading.to_string() + " does not vanish");
    if (!e.pole_reduced.is_zero())
        throw LimitError("quasiclassical limit: hbar^-1 part " + e.pole_reduced.to_string() +
                         " survives sl reduction");
    return e.limit;
}

ClassicalFit fit_classical_integral(const DifferentialOp& limit, const DifferentialOp& classical)
{
    const int N = limit.dim();
    ClassicalFit fit;
    auto probe = root_vector(N, 1, 2);
    const TorusPoly lpoly = limit.coefficient(zero_deriv(N));
    const TorusPoly mpoly = classical.coefficient(zero_deriv(N));
    const auto& lc = lpoly.terms();
    const auto& mc = mpoly.terms();
    auto li = lc.find(probe);
    auto mi = mc.find(probe);
    if (li == lc.end() || mi == mc.end()) return fit;
    auto scale = li->second.divide_exact(mi->second);
    if (!scale || scale->is_zero()) return fit;
    fit.scale = *scale;
    fit.residual = limit - classical.scaled(*scale);
    LaurentQK constant;
    DifferentialOp rest = fit.residual;
    if (!rest.is_zero()) {
        constant = rest.coefficient(zero_deriv(N)).constant_term();
        rest.add_term(zero_deriv(N), TorusPoly::constant(N, -constant));
    }
    if (!rest.is_zero()) return fit;
    auto g = constant.divide_exact(*scale);
    if (!g) return fit;
    fit.shift = *g;
    fit.ok = true;
    return fit;
}

// Macdonald -----------------------------------------------------------------

DiffOp macdonald_operator(int N)
{
    if (N < 2) throw Error("macdonald_operator: N must be at least 2");
    DiffOp op(N, Mode::gl);
    for (int i = 1; i <= N; ++i) {
        TorusPoly num = TorusPoly::constant(N, 1), den = TorusPoly::constant(N, 1);
        for (int j = 1; j <= N; ++j) {
            if (j == i) continue;
            TorusPoly ei = TorusPoly::monomial(unit_vector(N, i)), ej = TorusPoly::monomial(unit_vector(N, j));
            num = num * (ei.scaled(LaurentQK::t(1)) - ej);
            den = den * (ei - ej);
        }
        ShiftVector mu(N, 0);
        mu[i - 1] = 2;
        op.add_term(mu, TorusRat(num, den));
    }
    return op;
}

RationalInU RationalInU::from(const TorusRat& f)
{
    return {f.num(), f.den()};
}

namespace {

int u_degree(const TorusPoly& p)
{
    int d = std::numeric_limits<int>::min();
    for (const auto& [e, c] : p.terms()) d = std::max(d, c.t_degree_range().second);
    return d;
}

TorusPoly u_leading(const TorusPoly& p, int deg)
{
    return p.map_scalars([deg](const LaurentQK& c) {
        LaurentQK out;
        for (const auto& [m, x] : c.terms())
            if (m.t == deg) out += LaurentQK::monomial(x, {m.q2, m.k, m.g, 0});
        return out;
    });
}

}  // namespace

std::pair<int, int> RationalInU::degrees() const
{
    return {u_degree(num), u_degree(den)};
}

TorusRat RationalInU::limit_at_infinity() const
{
    const int N = std::max(num.dim(), den.dim());
    if (num.is_zero()) return TorusRat(N);
    auto [dn, dd] = degrees();
    if (dn > dd)
        throw LimitError("u -> infinity diverges: numerator degree " + std::to_string(dn) +
                         " exceeds denominator degree " + std::to_string(dd));
    if (dn < dd) return TorusRat(N);
    return TorusRat(u_leading(num, dn), u_leading(den, dd));
}

std::map<ShiftVector, RationalInU> macdonald_in_u(int N)
{
    std::map<ShiftVector, RationalInU> out;
    auto substitute = [N](const TorusPoly& p) {
        return p.rescale([N](const ExpVector& lambda) {
            int d = 0;
            for (int j = 0; j < N; ++j) d += (j + 1) * lambda[j];
            return LaurentQK::t(d);
        });
    };
    const DiffOp mac = macdonald_operator(N);
    for (const auto& [mu, f] : mac.terms()) {
        int i = static_cast<int>(std::find(mu.begin(), mu.end(), 2) - mu.begin()) + 1;
        RationalInU r{substitute(f.num()).scaled(LaurentQK::t(-(i - 1))), substitute(f.den())};
        out.emplace(mu, std::move(r));
    }
    return out;
}

DiffOp macdonald_toda_limit(int N)
{
    DiffOp op(N, Mode::gl);
    for (const auto& [mu, r] : macdonald_in_u(N)) op.add_term(mu, r.limit_at_infinity());
    return op;
}

DiffOp macdonald_limit_closed_form(int N)
{
    DiffOp op(N, Mode::gl);
    for (int i = 1; i <= N; ++i) {
        ShiftVector mu(N, 0);
        mu[i - 1] = 2;
        TorusPoly c = TorusPoly::constant(N, 1);
        if (i < N) c -= TorusPoly::monomial(root_vector(N, i, i + 1));
        op.add_term(mu, TorusRat(c));
    }
    return op;
}

DiffOp rescale_torus(const DiffOp& a, const std::vector<int>& w, const LaurentQK& s)
{
    auto scale = [&](const TorusPoly& p) {
        return p.rescale([&](const ExpVector& lambda) { return s.pow(pairing(lambda, w)); });
    };
    return a.map_coefficients([&](const TorusRat& f) {
        if (f.is_polynomial()) return TorusRat(scale(f.num()));
        return TorusRat(scale(f.num()), scale(f.den()));
    });
}

// Calogero-Moser ------------------------------------------------------------

std::vector<SinhTerm> cm_terms(int N, bool elliptic, int n_lo, int n_hi)
{
    std::vector<SinhTerm> out;
    if (!elliptic) n_lo = n_hi = 0;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            for (int n = n_lo; n <= n_hi; ++n) {
                SinhTerm t;
                t.i = i;
                t.j = j;
                t.n = n;
                t.alpha = root_vector(N, i, j);
                t.lambda = Rational(j - i + n * N);  // (alpha, rho) + n h^v
                t.kappa = Rational(-n, 2);
                t.kappa.canonicalize();
                out.push_back(t);
            }
    return out;
}

SinhLimit sinh_term_limit(const SinhTerm& t, int N)
{
    if (t.lambda == 0) throw LimitError("sinh term for root (" + std::to_string(t.i) + "," + std::to_string(t.j) +
                                        ") has an argument that does not escape");
    SinhLimit r;
    r.term = t;
    Rational rate = abs(t.lambda);
    // prefactor degrees 2 and 1; sinh^-2 ~ 4 e^{-2|v|} (1 + 2 e^{-2|v|} + ...)
    r.net_degree = 2 - 2 * rate;
    r.subleading_degree = std::max(Rational(2 - 4 * rate), Rational(1 - 2 * rate));
    if (r.net_degree > 0) throw LimitError("sinh term diverges as P -> infinity");
    r.survives = r.net_degree == 0;
    r.contribution = TorusPoly(N);
    if (r.survives) {
        const int sign = t.lambda > 0 ? 1 : -1;
        Rational kexp = -2 * sign * t.kappa;
        kexp.canonicalize();
        if (kexp.get_den() != 1) throw LimitError("surviving term keeps a fractional power of K");
        ExpVector e = t.alpha;
        for (int& x : e) x *= sign;
        // 1/4 * 4 = 1
        r.contribution = TorusPoly::monomial(e, LaurentQK::K(static_cast<int>(kexp.get_num().get_si())));
    }
    return r;
}

CMLimit cm_limit(int N, bool elliptic)
{
    if (N < 2) throw Error("cm_limit: N must be at least 2");
    CMLimit out;
    out.window_lo = elliptic ? -3 : 0;
    out.window_hi = elliptic ? 3 : 0;
    out.op = kinetic_term(N);
    out.certificate_ok = true;
    for (const auto& t : cm_terms(N, elliptic, out.window_lo, out.window_hi)) {
        auto r = sinh_term_limit(t, N);
        if (r.survives) {
            out.op.add_term(zero_deriv(N), r.contribution);
            if (r.subleading_degree >= 0) out.certificate_ok = false;
        } else if (r.net_degree >= 0) {
            out.certificate_ok = false;
        }
        out.terms.push_back(std::move(r));
    }
    return out;
}

// relativistic Toda -----------------------------------------------------------

std::string to_string(ShiftConvention c)
{
    return c == ShiftConvention::plus ? "plus" : "minus";
}

ShiftVector doubled_shift(int N, int i, ShiftConvention c)
{
    ShiftVector mu(N, 0);
    mu[i - 1] = c == ShiftConvention::plus ? 2 : -2;
    return mu;
}

DiffOp reduced_toda(int N, bool affine, ShiftConvention c)
{
    DiffOp op(N, Mode::sl_quotient);
    const LaurentQK gap2 = q_gap_squared();
    for (int i = 1; i <= N; ++i) {
        TorusPoly coeff = TorusPoly::constant(N, 1);
        if (i < N || affine)
            coeff -= TorusPoly::monomial(root_vector(N, i, i % N + 1), gap2 * (i == N ? LaurentQK::K(1) : LaurentQK(1)));
        op.add_term(doubled_shift(N, i, c), TorusRat(coeff));
    }
    return op;
}

namespace {

int next_index(int N, int i)
{
    return i % N + 1;
}

int prev_index(int N, int i)
{
    return i == 1 ? N : i - 1;
}

}  // namespace

SymbolicDiffOp relativistic_toda_hamiltonian(int N, bool periodic, ShiftConvention c)
{
    SymbolicDiffOp op(N);
    for (int i = 1; i <= N; ++i) {
        FactorMonomial left, right;
        if (i > 1 || periodic) left[{"f", root_vector(N, prev_index(N, i), i), 0}] = 1;
        if (i < N || periodic) right[{"f", root_vector(N, i, next_index(N, i)), 0}] = 1;
        op.add_term(doubled_shift(N, i, c), TorusRat(TorusPoly::constant(N, 1)), left, right);
    }
    return op;
}

FormalFactorProduct relativistic_gauge_product(int N, bool periodic)
{
    FactorRule rule{"psi", 2, {{"f", -1}}};
    FormalFactorProduct pi;
    for (int i = 1; i <= (periodic ? N : N - 1); ++i)
        pi.factors.push_back({rule, FactorAtom{"psi", root_vector(N, i, next_index(N, i)), 0}});
    return pi;
}

std::vector<PowerRule> relativistic_power_rules()
{
    return {PowerRule{"f", 2, {{0, LaurentQK(1)}, {1, LaurentQK::g(2)}}}};
}

DiffOp gauged_relativistic_toda(int N, bool periodic, ShiftConvention c, int q_shift)
{
    DiffOp op(N, Mode::sl_quotient);
    for (int i = 1; i <= N; ++i) {
        TorusPoly coeff = TorusPoly::constant(N, 1);
        if (i < N || periodic)
            coeff += TorusPoly::monomial(root_vector(N, i, next_index(N, i)), LaurentQK::g(2) * LaurentQK::q(q_shift));
        op.add_term(doubled_shift(N, i, c), TorusRat(coeff));
    }
    return op;
}

namespace {

// g^{2b} -> value^b
DiffOp substitute_g_squared(const DiffOp& a, const LaurentQK& value)
{
    return a.map_scalars([&](const LaurentQK& s) {
        return s.map_monomials([&](const ScalarMonomial& m) {
            if (m.g % 2) throw Error("odd power of g");
            return LaurentQK::monomial(1, {m.q2, m.k, 0, m.t}) * value.pow(m.g / 2);
        });
    });
}

// K -> K^N, reading the K slot as K^{1/N}.
DiffOp k_to_root_variable(const DiffOp& a, int N)
{
    return a.map_scalars([&](const LaurentQK& s) {
        return s.map_monomials([&](const ScalarMonomial& m) {
            return LaurentQK::monomial(1, {m.q2, N * m.k, m.g, m.t});
        });
    });
}

}  // namespace

RelativisticCheck relativistic_gauge_check(int N, bool periodic, ShiftConvention c)
{
    RelativisticCheck r;
    r.convention = c;
    r.periodic = periodic;
    auto conj = conjugate_by_factor_product(relativistic_toda_hamiltonian(N, periodic, c),
                                            relativistic_gauge_product(N, periodic), +1);
    try {
        r.conjugated = resolve_factors(conj, relativistic_power_rules(), Mode::sl_quotient);
        r.resolved = true;
    } catch (const Error& e) {
        r.diagnostic = e.what();
        return r;
    }

    // Read off c from the first coefficient 1 + g^2 q^c e^{z_1 - z_2}.
    TorusRat first = r.conjugated.coefficient(doubled_shift(N, 1, c));
    if (!first.is_polynomial()) {
        r.diagnostic = "coefficient of the first shift is not a polynomial";
        return r;
    }
    TorusPoly rest = first.num() - TorusPoly::constant(N, 1);
    auto it = rest.terms().find(root_vector(N, 1, 2));
    if (rest.terms().size() != 1 || it == rest.terms().end() || !it->second.is_monomial()) {
        r.diagnostic = "coefficient of the first shift is " + first.to_string();
        return r;
    }
    const auto& [mono, coeff] = *it->second.terms().begin();
    if (coeff != 1 || mono.g != 2 || mono.k != 0 || mono.t != 0 || mono.q2 % 2) {
        r.diagnostic = "unexpected coupling " + it->second.to_string();
        return r;
    }
    const int shift = mono.q2 / 2;
    if (!(r.conjugated == gauged_relativistic_toda(N, periodic, c, shift))) {
        r.diagnostic = "coefficients are not uniform in i";
        return r;
    }
    r.q_shift = shift;

    // g -> g q^{-c/2}
    DiffOp rescaled = r.conjugated.map_scalars([&](const LaurentQK& s) {
        return s.map_monomials([&](const ScalarMonomial& m) {
            if ((shift * m.g) % 2) throw Error("g rescaling needs an even product");
            return LaurentQK::monomial(1, {m.q2 - shift * m.g, m.k, m.g, m.t});
        });
    });
    r.matches_gauged = rescaled == gauged_relativistic_toda(N, periodic, c, 0);

    const LaurentQK minus_gap2 = -q_gap_squared();
    if (!periodic) {
        r.matches_reduced = substitute_g_squared(rescaled, minus_gap2) == reduced_toda(N, false, c);
    } else {
        // K slot holds kappa = K^{1/N}; z_i = z'_i + (i/N) ln K.
        std::vector<int> w(N);
        for (int i = 0; i < N; ++i) w[i] = i + 1;
        DiffOp target = k_to_root_variable(reduced_toda(N, true, c), N);
        auto shifted = [&](const LaurentQK& g2) {
            return rescale_torus(substitute_g_squared(rescaled, g2), w, LaurentQK::K(1));
        };
        r.matches_reduced = shifted(minus_gap2 * LaurentQK::K(1)) == target;
        r.literal_periodic_matches = shifted(minus_gap2 * LaurentQK::K(2)) == target;
    }
    return r;
}

}  // namespace qtoda
