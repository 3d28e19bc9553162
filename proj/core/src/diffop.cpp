#include "qtoda/diffop.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace qtoda {

std::string to_string(Mode m)
{
    return m == Mode::gl ? "gl" : "sl-quotient";
}

Mode mode_from_string(const std::string& s)
{
    if (s == "gl") return Mode::gl;
    if (s == "sl-quotient") return Mode::sl_quotient;
    throw Error("unknown operator mode '" + s + "'");
}

namespace {

bool degree_zero(const TorusPoly& p, int& degree, bool& seen)
{
    for (const auto& [e, c] : p.terms()) {
        int s = entry_sum(e);
        if (!seen) {
            degree = s;
            seen = true;
        } else if (s != degree) {
            return false;
        }
    }
    return true;
}

bool is_degree_zero(const TorusRat& f)
{
    int dn = 0, dd = 0;
    bool sn = false, sd = false;
    if (!degree_zero(f.num(), dn, sn) || !degree_zero(f.den(), dd, sd)) return false;
    return !sn || dn == dd;
}

}  // namespace

DiffOp DiffOp::identity(int N, Mode mode)
{
    DiffOp d(N, mode);
    d.add_term(ShiftVector(N, 0), TorusRat(TorusPoly::constant(N, 1)));
    return d;
}

DiffOp DiffOp::shift(const ShiftVector& mu, Mode mode, const TorusRat& coeff)
{
    const int N = static_cast<int>(mu.size());
    DiffOp d(N, mode);
    d.add_term(mu, coeff.dim() ? coeff : TorusRat(TorusPoly::constant(N, 1)));
    return d;
}

DiffOp DiffOp::multiplication(const TorusRat& f, Mode mode)
{
    DiffOp d(f.dim(), mode);
    d.add_term(ShiftVector(f.dim(), 0), f);
    return d;
}

ShiftVector DiffOp::canonical_key(ShiftVector mu) const
{
    if (static_cast<int>(mu.size()) != n_) throw Error("DiffOp: shift dimension mismatch");
    return mode_ == Mode::sl_quotient ? com_quotient_canonicalize(std::move(mu)) : mu;
}

TorusRat DiffOp::coefficient(const ShiftVector& mu) const
{
    auto it = terms_.find(canonical_key(mu));
    return it == terms_.end() ? TorusRat(n_) : it->second;
}

void DiffOp::add_term(const ShiftVector& mu, const TorusRat& f)
{
    if (f.is_zero()) return;
    if (mode_ == Mode::sl_quotient && !is_degree_zero(f))
        throw Error("DiffOp: coefficient " + f.to_string() +
                    " is not invariant under simultaneous shift");
    auto key = canonical_key(mu);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), f);
        return;
    }
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
}

DiffOp DiffOp::operator-() const
{
    DiffOp out = *this;
    for (auto& [mu, f] : out.terms_) f = -f;
    return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& o)
{
    if (n_ == 0) {
        n_ = o.n_;
        mode_ = o.mode_;
    }
    if (o.n_ != n_ || o.mode_ != mode_) throw Error("DiffOp: incompatible operands");
    for (const auto& [mu, f] : o.terms_) add_term(mu, f);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o)
{
    return *this += -o;
}

DiffOp DiffOp::scaled(const LaurentQK& c) const
{
    DiffOp out(n_, mode_);
    for (const auto& [mu, f] : terms_) out.add_term(mu, f.scaled(c));
    return out;
}

bool DiffOp::operator==(const DiffOp& o) const
{
    if (n_ != o.n_ || mode_ != o.mode_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [mu, f] : terms_) {
        if (mu != it->first || !(f == it->second)) return false;
        ++it;
    }
    return true;
}

DiffOp DiffOp::map_coefficients(const std::function<TorusRat(const TorusRat&)>& fn) const
{
    DiffOp out(n_, mode_);
    for (const auto& [mu, f] : terms_) out.add_term(mu, fn(f));
    return out;
}

DiffOp DiffOp::map_scalars(const std::function<LaurentQK(const LaurentQK&)>& fn) const
{
    return map_coefficients([&](const TorusRat& f) { return f.map_scalars(fn); });
}

DiffOp DiffOp::as_mode(Mode m) const
{
    DiffOp out(n_, m);
    for (const auto& [mu, f] : terms_) out.add_term(mu, f);
    return out;
}

std::string DiffOp::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, f] : terms_) {
        if (!first) os << "\n + ";
        first = false;
        os << '[' << f.to_string() << "] T" << vector_to_string(mu);
    }
    return os.str();
}

// products --------------------------------------------------------------

int thread_count()
{
    const char* env = std::getenv("TODA_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return std::clamp(n, 1, 64);
}

namespace {

void accumulate_products(const std::vector<const DiffOp::Terms::value_type*>& left,
                         size_t begin, size_t end, const DiffOp& b, DiffOp& out)
{
    ShiftVector key(b.dim());
    for (size_t i = begin; i < end; ++i) {
        const auto& [mu, f] = *left[i];
        for (const auto& [nu, g] : b.terms()) {
            for (int j = 0; j < b.dim(); ++j) key[j] = mu[j] + nu[j];
            out.add_term(key, f * g.shift_substitute(mu));
        }
    }
}

}  // namespace

DiffOp compose(const DiffOp& a, const DiffOp& b)
{
    if (a.dim() != b.dim() || a.mode() != b.mode()) throw Error("compose: incompatible operands");
    std::vector<const DiffOp::Terms::value_type*> left;
    left.reserve(a.size());
    for (const auto& t : a.terms()) left.push_back(&t);

    const int workers = std::min<int>(thread_count(), static_cast<int>(left.size()));
    if (workers <= 1) {
        DiffOp out(a.dim(), a.mode());
        accumulate_products(left, 0, left.size(), b, out);
        return out;
    }
    // Each worker owns a contiguous block of left terms; partial sums are
    // merged in block order so the result does not depend on scheduling.
    std::vector<DiffOp> partial(workers, DiffOp(a.dim(), a.mode()));
    std::vector<std::thread> pool;
    const size_t chunk = (left.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        size_t lo = w * chunk, hi = std::min(left.size(), lo + chunk);
        pool.emplace_back([&, lo, hi, w] { accumulate_products(left, lo, hi, b, partial[w]); });
    }
    for (auto& t : pool) t.join();
    DiffOp out(a.dim(), a.mode());
    for (auto& p : partial) out += p;
    return out;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b)
{
    return compose(a, b) - compose(b, a);
}

// gauges and automorphisms ----------------------------------------------

std::vector<Rational> rho_vector(int N)
{
    std::vector<Rational> rho(N);
    for (int j = 1; j <= N; ++j) {
        rho[j - 1] = Rational(N + 1 - 2 * j, 2);
        rho[j - 1].canonicalize();
    }
    return rho;
}

DiffOp gauge_monomial(const DiffOp& a, const std::vector<Rational>& lambda)
{
    if (static_cast<int>(lambda.size()) != a.dim()) throw Error("gauge_monomial: dimension mismatch");
    DiffOp out(a.dim(), a.mode());
    for (const auto& [mu, f] : a.terms()) {
        Rational p = 0;
        for (int j = 0; j < a.dim(); ++j) p += lambda[j] * mu[j];
        Rational twice = 2 * p;
        twice.canonicalize();
        if (twice.get_den() != 1)
            throw Error("gauge_monomial: pairing with " + vector_to_string(mu) + " is not half-integral");
        out.add_term(mu, f.scaled(LaurentQK::q_half(-static_cast<int>(twice.get_num().get_si()))));
    }
    return out;
}

DiffOp quotient_reduce(const DiffOp& a)
{
    DiffOp out(a.dim(), Mode::sl_quotient);
    for (const auto& [mu, f] : a.terms()) out.add_term(mu, f);
    return out;
}

namespace {

// Root coordinates m with lambda = sum_i m_i alpha_i.
std::vector<int> root_coordinates(const ExpVector& lambda, bool cyclic)
{
    const int N = static_cast<int>(lambda.size());
    if (entry_sum(lambda) != 0)
        throw Error("root_shift_automorphism: exponent " + vector_to_string(lambda) + " is not in the root lattice");
    std::vector<int> m(cyclic ? N : N - 1);
    int partial = 0;
    for (int i = 0; i < N - 1; ++i) {
        partial += lambda[i];
        m[i] = partial;
    }
    if (cyclic) {
        m[N - 1] = 0;
        int mn = *std::min_element(m.begin(), m.end());
        for (int& x : m) x -= mn;
    }
    return m;
}

}  // namespace

DiffOp root_shift_automorphism(const DiffOp& a, bool cyclic)
{
    const int N = a.dim();
    DiffOp out(N, a.mode());
    for (const auto& [mu, f] : a.terms()) {
        if (!f.is_polynomial())
            throw Error("root_shift_automorphism: coefficient " + f.to_string() + " is not a Laurent polynomial");
        for (const auto& [lambda, c] : f.num().terms()) {
            auto m = root_coordinates(lambda, cyclic);
            // (X_1 U_1)^{m_1} ... collapses to q^{(l,l)/2 - sum m} e^l T_l
            int norm = pairing(lambda, lambda);
            int qexp = norm / 2;
            for (int x : m) qexp -= x;
            ShiftVector key(N);
            for (int j = 0; j < N; ++j) key[j] = lambda[j] + mu[j];
            out.add_term(key, TorusRat(TorusPoly::monomial(lambda, c * LaurentQK::q(qexp))));
        }
    }
    return out;
}

}  // namespace qtoda
