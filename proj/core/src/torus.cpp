#include "qtoda/torus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace qtoda {

int pairing(const ExpVector& lambda, const ShiftVector& mu)
{
    if (lambda.size() != mu.size()) throw Error("pairing: dimension mismatch");
    return std::inner_product(lambda.begin(), lambda.end(), mu.begin(), 0);
}

int entry_sum(const std::vector<int>& v)
{
    return std::accumulate(v.begin(), v.end(), 0);
}

ShiftVector com_quotient_canonicalize(ShiftVector mu)
{
    if (mu.empty()) return mu;
    const int last = mu.back();
    for (int& x : mu) x -= last;
    return mu;
}

std::vector<int> unit_vector(int N, int i)
{
    std::vector<int> v(N, 0);
    v.at(i - 1) = 1;
    return v;
}

ExpVector root_vector(int N, int i, int j)
{
    ExpVector v(N, 0);
    v.at(i - 1) += 1;
    v.at(j - 1) -= 1;
    return v;
}

std::string vector_to_string(const std::vector<int>& v)
{
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

bool grlex_less(const ExpVector& a, const ExpVector& b)
{
    int da = entry_sum(a), db = entry_sum(b);
    if (da != db) return da < db;
    return a < b;
}

// TorusPoly -------------------------------------------------------------

TorusPoly TorusPoly::constant(int N, const LaurentQK& c)
{
    TorusPoly p(N);
    p.add_term(ExpVector(N, 0), c);
    return p;
}

TorusPoly TorusPoly::monomial(const ExpVector& e, const LaurentQK& c)
{
    TorusPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

bool TorusPoly::is_constant() const
{
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

LaurentQK TorusPoly::constant_term() const
{
    auto it = terms_.find(ExpVector(n_, 0));
    return it == terms_.end() ? LaurentQK{} : it->second;
}

bool TorusPoly::is_sum_zero() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return entry_sum(t.first) == 0; });
}

void TorusPoly::add_term(const ExpVector& e, const LaurentQK& c)
{
    if (n_ == 0) n_ = static_cast<int>(e.size());
    if (static_cast<int>(e.size()) != n_) throw Error("TorusPoly: exponent dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TorusPoly TorusPoly::operator-() const
{
    TorusPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

TorusPoly& TorusPoly::operator+=(const TorusPoly& o)
{
    if (n_ == 0) n_ = o.n_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TorusPoly& TorusPoly::operator-=(const TorusPoly& o)
{
    if (n_ == 0) n_ = o.n_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TorusPoly operator*(const TorusPoly& a, const TorusPoly& b)
{
    TorusPoly out(a.n_ ? a.n_ : b.n_);
    ExpVector e(out.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int j = 0; j < out.n_; ++j) e[j] = ea[j] + eb[j];
            out.add_term(e, ca * cb);
        }
    return out;
}

TorusPoly TorusPoly::scaled(const LaurentQK& c) const
{
    if (c.is_zero()) return TorusPoly(n_);
    TorusPoly out = *this;
    for (auto& [e, x] : out.terms_) x *= c;
    return out;
}

TorusPoly TorusPoly::pow(int n) const
{
    if (n < 0) {
        if (!is_monomial()) throw Error("TorusPoly: negative power of a non-monomial");
        const auto& [e, c] = *terms_.begin();
        auto inv = c.inverse();
        if (!inv) throw Error("TorusPoly: monomial with non-unit coefficient");
        ExpVector ne(e);
        for (int& x : ne) x = -x;
        return monomial(ne, *inv).pow(-n);
    }
    TorusPoly result = constant(n_, 1);
    for (int i = 0; i < n; ++i) result = result * *this;
    return result;
}

std::optional<TorusPoly> TorusPoly::divide_exact(const TorusPoly& d) const
{
    if (d.is_zero()) throw Error("TorusPoly: division by zero");
    if (is_zero()) return TorusPoly(n_ ? n_ : d.n_);
    const int N = n_;
    if (d.is_monomial()) {
        const auto& [de, dc] = *d.terms_.begin();
        TorusPoly out(N);
        for (const auto& [e, c] : terms_) {
            auto qc = c.divide_exact(dc);
            if (!qc) return std::nullopt;
            ExpVector ne(N);
            for (int j = 0; j < N; ++j) ne[j] = e[j] - de[j];
            out.add_term(ne, *qc);
        }
        return out;
    }

    ExpVector amin = min_exponent(), dmin = d.min_exponent();
    ExpVector amax(N, std::numeric_limits<int>::min()), dmax(N, std::numeric_limits<int>::min());
    for (const auto& [e, c] : terms_)
        for (int j = 0; j < N; ++j) amax[j] = std::max(amax[j], e[j]);
    for (const auto& [e, c] : d.terms_)
        for (int j = 0; j < N; ++j) dmax[j] = std::max(dmax[j], e[j]);
    ExpVector lo(N), hi(N);
    for (int j = 0; j < N; ++j) {
        lo[j] = amin[j] - dmin[j];
        hi[j] = amax[j] - dmax[j];
        if (lo[j] > hi[j]) return std::nullopt;
    }

    TorusPoly rem = *this;
    TorusPoly quot(N);
    const auto& [dle, dlc] = *d.terms_.rbegin();
    ExpVector m(N);
    while (!rem.is_zero()) {
        const auto& [rle, rlc] = *rem.terms_.rbegin();
        for (int j = 0; j < N; ++j) {
            m[j] = rle[j] - dle[j];
            if (m[j] < lo[j] || m[j] > hi[j]) return std::nullopt;
        }
        auto c = rlc.divide_exact(dlc);
        if (!c) return std::nullopt;
        TorusPoly step = monomial(m, *c);
        quot += step;
        rem -= step * d;
    }
    return quot;
}

TorusPoly TorusPoly::shift_substitute(const ShiftVector& mu) const
{
    TorusPoly out(n_);
    for (const auto& [e, c] : terms_) {
        int p = pairing(e, mu);
        out.terms_.emplace(e, p == 0 ? c : c * LaurentQK::q(p));
    }
    return out;
}

TorusPoly TorusPoly::times_monomial(const ExpVector& delta, const LaurentQK& c) const
{
    TorusPoly out(n_);
    for (const auto& [e, x] : terms_) {
        ExpVector ne(e);
        for (int j = 0; j < n_; ++j) ne[j] += delta[j];
        out.add_term(ne, x * c);
    }
    return out;
}

TorusPoly TorusPoly::map_scalars(const std::function<LaurentQK(const LaurentQK&)>& f) const
{
    TorusPoly out(n_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
}

TorusPoly TorusPoly::rescale(const std::function<LaurentQK(const ExpVector&)>& f) const
{
    TorusPoly out(n_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * f(e));
    return out;
}

TorusPoly TorusPoly::map_exponents(const std::function<ExpVector(const ExpVector&)>& g) const
{
    TorusPoly out(n_);
    for (const auto& [e, c] : terms_) out.add_term(g(e), c);
    return out;
}

TorusPoly TorusPoly::flip_chart() const
{
    TorusPoly out(n_);
    for (const auto& [e, c] : terms_) {
        ExpVector ne(e);
        for (int& x : ne) x = -x;
        out.add_term(ne, c.invert_q());
    }
    return out;
}

std::pair<ExpVector, LaurentQK> TorusPoly::leading_term() const
{
    if (terms_.empty()) throw Error("TorusPoly: leading term of zero");
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (grlex_less(best->first, it->first)) best = it;
    return *best;
}

ExpVector TorusPoly::min_exponent() const
{
    ExpVector m(n_, std::numeric_limits<int>::max());
    if (terms_.empty()) return ExpVector(n_, 0);
    for (const auto& [e, c] : terms_)
        for (int j = 0; j < n_; ++j) m[j] = std::min(m[j], e[j]);
    return m;
}

std::string TorusPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool trivial = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (c.is_monomial() || trivial)
            os << c.to_string();
        else
            os << '(' << c.to_string() << ')';
        if (!trivial) {
            os << "*e^(";
            bool any = false;
            for (int j = 0; j < n_; ++j) {
                if (e[j] == 0) continue;
                if (e[j] > 0 && any) os << '+';
                if (e[j] == -1) os << '-';
                else if (e[j] != 1) os << e[j];
                os << 'z' << (j + 1);
                any = true;
            }
            os << ')';
        }
    }
    return os.str();
}

// TorusRat --------------------------------------------------------------

TorusRat::TorusRat(TorusPoly num) : num_(std::move(num)), den_(TorusPoly::constant(num_.dim(), 1)) {}

TorusRat::TorusRat(TorusPoly num, TorusPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw Error("TorusRat: zero denominator");
    normalize();
}

void TorusRat::normalize()
{
    const int N = std::max(num_.dim(), den_.dim());
    if (num_.is_zero()) {
        num_ = TorusPoly(N);
        den_ = TorusPoly::constant(N, 1);
        return;
    }
    if (is_polynomial()) return;
    if (auto q = num_.divide_exact(den_)) {
        num_ = std::move(*q);
        den_ = TorusPoly::constant(N, 1);
        return;
    }
    // Clear the monomial content of the denominator.
    ExpVector shift = den_.min_exponent();
    for (int& x : shift) x = -x;
    if (std::any_of(shift.begin(), shift.end(), [](int x) { return x != 0; })) {
        num_ = num_.times_monomial(shift);
        den_ = den_.times_monomial(shift);
    }
    auto [le, lc] = den_.leading_term();
    if (auto inv = lc.inverse(); inv && !lc.is_one()) {
        num_ = num_.scaled(*inv);
        den_ = den_.scaled(*inv);
    }
}

TorusRat TorusRat::operator-() const
{
    TorusRat out = *this;
    out.num_ = -out.num_;
    return out;
}

TorusRat operator+(const TorusRat& a, const TorusRat& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        TorusRat out;
        out.num_ = a.num_ + b.num_;
        out.den_ = a.den_;
        if (!out.is_polynomial()) out.normalize();
        else if (out.num_.is_zero()) out.normalize();
        return out;
    }
    return TorusRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

TorusRat operator-(const TorusRat& a, const TorusRat& b)
{
    return a + (-b);
}

TorusRat operator*(const TorusRat& a, const TorusRat& b)
{
    if (a.is_polynomial() && b.is_polynomial()) {
        TorusRat out;
        out.num_ = a.num_ * b.num_;
        out.den_ = a.den_;
        if (out.num_.is_zero()) out.normalize();
        return out;
    }
    return TorusRat(a.num_ * b.num_, a.den_ * b.den_);
}

TorusRat operator/(const TorusRat& a, const TorusRat& b)
{
    if (b.is_zero()) throw Error("TorusRat: division by zero");
    return TorusRat(a.num_ * b.den_, a.den_ * b.num_);
}

TorusRat TorusRat::scaled(const LaurentQK& c) const
{
    TorusRat out = *this;
    out.num_ = num_.scaled(c);
    if (out.num_.is_zero()) out.normalize();
    return out;
}

bool TorusRat::operator==(const TorusRat& o) const
{
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

TorusRat TorusRat::shift_substitute(const ShiftVector& mu) const
{
    if (is_polynomial()) return TorusRat(num_.shift_substitute(mu));
    return TorusRat(num_.shift_substitute(mu), den_.shift_substitute(mu));
}

TorusRat TorusRat::map_scalars(const std::function<LaurentQK(const LaurentQK&)>& f) const
{
    auto num = num_.map_scalars(f);
    auto den = den_.map_scalars(f);
    if (den.is_zero()) throw Error("TorusRat: scalar map sends the denominator to zero");
    return TorusRat(std::move(num), std::move(den));
}

TorusRat TorusRat::flip_chart() const
{
    return TorusRat(num_.flip_chart(), den_.flip_chart());
}

std::string TorusRat::to_string() const
{
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

TorusRat shift_substitute(const TorusRat& f, const ShiftVector& mu)
{
    return f.shift_substitute(mu);
}

}  // namespace qtoda
