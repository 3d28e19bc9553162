#include "qtoda/scalars.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <ostream>
#include <sstream>

namespace qtoda {

std::string to_string(const Rational& r)
{
    return r.get_str();
}

// LaurentQK -------------------------------------------------------------

LaurentQK::LaurentQK(long c)
{
    if (c != 0) terms_.emplace(ScalarMonomial{}, Rational(c));
}

LaurentQK::LaurentQK(const Rational& c)
{
    if (c != 0) {
        Rational v = c;
        v.canonicalize();
        terms_.emplace(ScalarMonomial{}, v);
    }
}

LaurentQK LaurentQK::monomial(const Rational& c, ScalarMonomial m)
{
    LaurentQK out;
    out.add_term(m, c);
    return out;
}

LaurentQK LaurentQK::q_half(int half)
{
    return monomial(1, {half, 0, 0, 0});
}

LaurentQK LaurentQK::K(int e)
{
    return monomial(1, {0, e, 0, 0});
}

LaurentQK LaurentQK::g(int e)
{
    return monomial(1, {0, 0, e, 0});
}

LaurentQK LaurentQK::t(int e)
{
    return monomial(1, {0, 0, 0, e});
}

void LaurentQK::add_term(const ScalarMonomial& m, const Rational& c)
{
    if (c == 0) return;
    // callers may hand in an unreduced p/q; keep stored values canonical
    Rational v = c;
    v.canonicalize();
    auto [it, inserted] = terms_.try_emplace(m, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

bool LaurentQK::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

Rational LaurentQK::constant_term() const
{
    auto it = terms_.find(ScalarMonomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentQK::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

LaurentQK LaurentQK::operator-() const
{
    LaurentQK out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

LaurentQK& LaurentQK::operator+=(const LaurentQK& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentQK& LaurentQK::operator-=(const LaurentQK& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentQK operator*(const LaurentQK& a, const LaurentQK& b)
{
    LaurentQK out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

LaurentQK& LaurentQK::operator*=(const LaurentQK& o)
{
    *this = *this * o;
    return *this;
}

LaurentQK LaurentQK::pow(int n) const
{
    if (n < 0) {
        auto inv = inverse();
        if (!inv) throw Error("negative power of a non-monomial scalar");
        return inv->pow(-n);
    }
    LaurentQK result(1);
    LaurentQK base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

std::optional<LaurentQK> LaurentQK::inverse() const
{
    if (!is_monomial()) return std::nullopt;
    const auto& [m, c] = *terms_.begin();
    return monomial(1 / c, m.inverse());
}

namespace {

std::array<int, 4> exps(const ScalarMonomial& m)
{
    return {m.q2, m.k, m.g, m.t};
}

}  // namespace

std::optional<LaurentQK> LaurentQK::divide_exact(const LaurentQK& d) const
{
    if (d.is_zero()) throw Error("division by zero scalar");
    if (is_zero()) return LaurentQK{};
    if (d.is_monomial()) return *this * *d.inverse();

    // Newton polytopes add under multiplication, so every quotient exponent
    // lies in a box determined by the coordinate ranges of both operands.
    std::array<int, 4> lo, hi;
    auto range = [](const Terms& t, int j) {
        int mn = std::numeric_limits<int>::max(), mx = std::numeric_limits<int>::min();
        for (const auto& [m, c] : t) {
            int e = exps(m)[j];
            mn = std::min(mn, e);
            mx = std::max(mx, e);
        }
        return std::pair{mn, mx};
    };
    for (int j = 0; j < 4; ++j) {
        auto [amin, amax] = range(terms_, j);
        auto [dmin, dmax] = range(d.terms_, j);
        lo[j] = amin - dmin;
        hi[j] = amax - dmax;
        if (lo[j] > hi[j]) return std::nullopt;
    }

    LaurentQK rem = *this;
    LaurentQK quot;
    const auto& [dm, dc] = *d.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.rbegin();
        ScalarMonomial m = rm * dm.inverse();
        auto e = exps(m);
        for (int j = 0; j < 4; ++j)
            if (e[j] < lo[j] || e[j] > hi[j]) return std::nullopt;
        LaurentQK step = monomial(rc / dc, m);
        quot += step;
        rem -= step * d;
    }
    return quot;
}

LaurentQK LaurentQK::shifted(ScalarMonomial m) const
{
    LaurentQK out;
    for (const auto& [mm, c] : terms_) out.terms_.emplace(mm * m, c);
    return out;
}

LaurentQK LaurentQK::invert_q() const
{
    LaurentQK out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(ScalarMonomial{-m.q2, m.k, m.g, m.t}, c);
    return out;
}

LaurentQK LaurentQK::substitute_K(const Rational& value) const
{
    LaurentQK out;
    for (const auto& [m, c] : terms_) {
        if (m.k == 0) {
            out.add_term(m, c);
            continue;
        }
        if (value == 0) {
            if (m.k < 0) throw Error("K -> 0 in a term with negative K power");
            continue;
        }
        Rational p = 1;
        Rational base = m.k > 0 ? value : Rational(1 / value);
        for (int i = 0; i < std::abs(m.k); ++i) p *= base;
        out.add_term({m.q2, 0, m.g, m.t}, c * p);
    }
    return out;
}

std::pair<int, int> LaurentQK::t_degree_range() const
{
    if (terms_.empty()) return {0, 0};
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    for (const auto& [m, c] : terms_) {
        lo = std::min(lo, m.t);
        hi = std::max(hi, m.t);
    }
    return {lo, hi};
}

namespace {

void append_power(std::ostringstream& os, const char* name, int e)
{
    if (e == 0) return;
    os << '*' << name;
    if (e != 1) os << '^' << (e < 0 ? "(" : "") << e << (e < 0 ? ")" : "");
}

}  // namespace

std::string LaurentQK::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = first ? c : abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        os << a.get_str();
        if (m.q2 != 0) {
            os << "*q";
            if (m.q2 % 2 != 0)
                os << "^(" << m.q2 << "/2)";
            else if (m.q2 != 2)
                os << '^' << (m.q2 < 0 ? "(" : "") << m.q2 / 2 << (m.q2 < 0 ? ")" : "");
        }
        append_power(os, "K", m.k);
        append_power(os, "g", m.g);
        append_power(os, "t", m.t);
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentQK& s)
{
    return os << s.to_string();
}

// q-combinatorics -------------------------------------------------------

LaurentQK q_integer(int a, int d)
{
    if (d <= 0) throw Error("q_integer: d must be positive");
    if (a < 0) return -q_integer(-a, d);
    LaurentQK out;
    for (int j = 0; j < a; ++j) out += LaurentQK::q(d * (a - 1 - 2 * j));
    return out;
}

LaurentQK q_binomial(int n, int k, int d)
{
    if (k < 0 || n < 0 || k > n) return {};
    // [n k] = q^{dk}[n-1 k] + q^{-d(n-k)}[n-1 k-1]
    std::vector<std::vector<LaurentQK>> row(n + 1);
    for (int m = 0; m <= n; ++m) {
        row[m].resize(m + 1);
        row[m][0] = 1;
        row[m][m] = 1;
        for (int j = 1; j < m; ++j)
            row[m][j] = LaurentQK::q(d * j) * row[m - 1][j] +
                        LaurentQK::q(-d * (m - j)) * row[m - 1][j - 1];
    }
    return row[n][k];
}

LaurentQK serre_scalar_sum(int a_ij, int b_ij, int sign, int d)
{
    const int n = 1 - a_ij;
    LaurentQK out;
    for (int k = 0; k <= n; ++k) {
        LaurentQK term = q_binomial(n, k, d) * LaurentQK::q(sign * k * b_ij);
        if (k % 2) out -= term; else out += term;
    }
    return out;
}

LaurentQK q_gap_squared()
{
    LaurentQK gap = LaurentQK::q(1) - LaurentQK::q(-1);
    return gap * gap;
}

// HbarJet ---------------------------------------------------------------

HbarJet::HbarJet(int order, int low, std::vector<LaurentQK> coeffs)
    : order_(order), low_(low), c_(std::move(coeffs))
{
    c_.resize(std::max(0, order_ - low_ + 1));
}

HbarJet HbarJet::constant(const LaurentQK& c, int order)
{
    std::vector<LaurentQK> v(order + 1);
    v[0] = c;
    return HbarJet(order, 0, std::move(v));
}

LaurentQK HbarJet::coeff(int n) const
{
    if (n < low_ || n > order_) return {};
    return c_[n - low_];
}

std::optional<int> HbarJet::valuation() const
{
    for (int n = low_; n <= order_; ++n)
        if (!c_[n - low_].is_zero()) return n;
    return std::nullopt;
}

bool HbarJet::has_pole() const
{
    auto v = valuation();
    return v && *v < 0;
}

HbarJet HbarJet::operator+(const HbarJet& o) const
{
    int order = std::min(order_, o.order_);
    int low = std::min(low_, o.low_);
    std::vector<LaurentQK> v(std::max(0, order - low + 1));
    for (int n = low; n <= order; ++n) v[n - low] = coeff(n) + o.coeff(n);
    return HbarJet(order, low, std::move(v));
}

HbarJet HbarJet::operator-(const HbarJet& o) const
{
    return *this + o.scaled(-1);
}

HbarJet HbarJet::operator*(const HbarJet& o) const
{
    int va = valuation().value_or(order_ + 1);
    int vb = o.valuation().value_or(o.order_ + 1);
    int order = std::min(order_ + vb, o.order_ + va);
    int low = low_ + o.low_;
    std::vector<LaurentQK> v(std::max(0, order - low + 1));
    for (int n = low; n <= order; ++n) {
        LaurentQK s;
        for (int i = low_; i <= order_; ++i) {
            int j = n - i;
            if (j < o.low_ || j > o.order_) continue;
            const auto& a = c_[i - low_];
            if (a.is_zero()) continue;
            s += a * o.c_[j - o.low_];
        }
        v[n - low] = std::move(s);
    }
    return HbarJet(order, low, std::move(v));
}

HbarJet HbarJet::scaled(const LaurentQK& c) const
{
    HbarJet out = *this;
    for (auto& x : out.c_) x *= c;
    return out;
}

HbarJet HbarJet::truncated(int order) const
{
    order = std::min(order, order_);
    std::vector<LaurentQK> v(std::max(0, order - low_ + 1));
    for (int n = low_; n <= order; ++n) v[n - low_] = c_[n - low_];
    return HbarJet(order, low_, std::move(v));
}

bool HbarJet::agrees_with(const HbarJet& o) const
{
    int order = std::min(order_, o.order_);
    for (int n = std::min(low_, o.low_); n <= order; ++n)
        if (coeff(n) != o.coeff(n)) return false;
    return true;
}

HbarJet jet_expand(const LaurentQK& s, int m)
{
    if (m < 0) throw Error("jet_expand: negative order");
    std::vector<LaurentQK> v(m + 1);
    for (const auto& [mono, c] : s.terms()) {
        LaurentQK rest = LaurentQK::monomial(c, {0, mono.k, mono.g, mono.t});
        // e^{(q2/2) hbar} = sum_n (q2/2)^n hbar^n / n!
        Rational rate(mono.q2, 2);
        rate.canonicalize();
        Rational term = 1;
        for (int n = 0; n <= m; ++n) {
            if (n > 0) term = term * rate / n;
            if (term != 0) v[n] += rest * LaurentQK(term);
        }
    }
    return HbarJet(m, 0, std::move(v));
}

HbarJet jet_divide(const HbarJet& a, const HbarJet& b, std::optional<int> min_order)
{
    auto vb = b.valuation();
    if (!vb) throw LimitError("jet_divide: divisor vanishes to the available order");
    const int sb = b.order() - *vb;  // precision of b / hbar^vb
    auto va_opt = a.valuation();
    const int va = va_opt.value_or(a.order() + 1);
    const int sa = a.order() - va;
    const int v = va - *vb;
    const int prec = std::min(sa, sb);
    const int order = v + prec;
    if (min_order && order < *min_order)
        throw LimitError("jet_divide: quotient determined only to order " + std::to_string(order));
    if (!va_opt) return HbarJet(order, std::min(0, order), {});
    if (v < -1) throw LimitError("jet_divide: quotient has a pole of order " + std::to_string(-v));

    const LaurentQK& b0 = b.coeff(*vb);
    std::vector<LaurentQK> q(std::max(0, prec + 1));
    for (int n = 0; n <= prec; ++n) {
        LaurentQK num = a.coeff(va + n);
        for (int j = 1; j <= n; ++j) num -= b.coeff(*vb + j) * q[n - j];
        auto qn = num.divide_exact(b0);
        if (!qn) throw LimitError("jet_divide: leading coefficient of divisor is not invertible");
        q[n] = std::move(*qn);
    }
    return HbarJet(order, v, std::move(q));
}

}  // namespace qtoda
