#include "qtoda/factors.hpp"

#include <sstream>

namespace qtoda {

FactorAtom FactorAtom::shifted(const ShiftVector& mu) const
{
    return {symbol, ell, offset + pairing(ell, mu)};
}

std::string FactorAtom::to_string() const
{
    std::ostringstream os;
    os << symbol << '(' << vector_to_string(ell);
    if (offset) os << (offset > 0 ? "+" : "") << offset << "hbar";
    os << ')';
    return os.str();
}

FactorMonomial multiply(const FactorMonomial& a, const FactorMonomial& b)
{
    FactorMonomial out = a;
    for (const auto& [atom, e] : b) {
        int& slot = out[atom];
        slot += e;
        if (slot == 0) out.erase(atom);
    }
    return out;
}

FactorMonomial invert(const FactorMonomial& a)
{
    FactorMonomial out;
    for (const auto& [atom, e] : a) out.emplace(atom, -e);
    return out;
}

std::string to_string(const FactorMonomial& m)
{
    if (m.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [atom, e] : m) {
        if (!first) os << '*';
        first = false;
        os << atom.to_string();
        if (e != 1) os << "^(" << e << ')';
    }
    return os.str();
}

SymbolicDiffOp SymbolicDiffOp::from(const DiffOp& a)
{
    SymbolicDiffOp out(a.dim());
    for (const auto& [mu, f] : a.terms()) out.add_term(mu, f);
    return out;
}

void SymbolicDiffOp::add_term(const ShiftVector& mu, const TorusRat& f, const FactorMonomial& left,
                              const FactorMonomial& right)
{
    if (f.is_zero()) return;
    FactorMonomial moved;
    for (const auto& [atom, e] : right) moved.emplace(atom.shifted(mu), e);
    FactorMonomial m = multiply(left, moved);
    auto& coeff = terms_[mu];
    auto it = coeff.find(m);
    if (it == coeff.end()) {
        coeff.emplace(std::move(m), f);
    } else {
        it->second += f;
        if (it->second.is_zero()) coeff.erase(it);
    }
    if (coeff.empty()) terms_.erase(mu);
}

std::string SymbolicDiffOp::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, coeff] : terms_)
        for (const auto& [m, f] : coeff) {
            if (!first) os << "\n + ";
            first = false;
            os << '[' << f.to_string() << "] " << qtoda::to_string(m) << " T" << vector_to_string(mu);
        }
    return first ? "0" : os.str();
}

namespace {

// psi(x + n hbar) / psi(x) from psi(x + c hbar) = psi(x) u(x).
FactorMonomial shift_ratio(const FactorRule& rule, const FactorAtom& at, int n)
{
    if (n % rule.step != 0)
        throw Error("conjugate_by_factor_product: shift of " + std::to_string(n) +
                    " hbar in " + at.to_string() + " is not a multiple of the rule step " +
                    std::to_string(rule.step));
    const int j = n / rule.step;
    auto multiplier_at = [&](int offset, int sign) {
        FactorMonomial m;
        for (const auto& [sym, e] : rule.multiplier)
            m.emplace(FactorAtom{sym, at.ell, offset}, sign * e);
        return m;
    };
    FactorMonomial ratio;
    if (j > 0)
        for (int i = 0; i < j; ++i) ratio = multiply(ratio, multiplier_at(at.offset + i * rule.step, 1));
    else
        for (int i = 1; i <= -j; ++i) ratio = multiply(ratio, multiplier_at(at.offset - i * rule.step, -1));
    return ratio;
}

}  // namespace

SymbolicDiffOp conjugate_by_factor_product(const SymbolicDiffOp& a, const FormalFactorProduct& pi,
                                           int direction)
{
    if (direction != 1 && direction != -1) throw Error("conjugate_by_factor_product: direction must be +1 or -1");
    SymbolicDiffOp out(a.dim());
    for (const auto& [mu, coeff] : a.terms()) {
        FactorMonomial ratio;
        for (const auto& [rule, atom] : pi.factors) {
            if (rule.symbol != atom.symbol) throw Error("conjugate_by_factor_product: rule/atom symbol mismatch");
            ratio = multiply(ratio, shift_ratio(rule, atom, pairing(atom.ell, mu)));
        }
        if (direction < 0) ratio = invert(ratio);
        for (const auto& [m, f] : coeff) out.add_term(mu, f, multiply(m, ratio));
    }
    return out;
}

DiffOp resolve_factors(const SymbolicDiffOp& a, const std::vector<PowerRule>& rules, Mode mode)
{
    const int N = a.dim();
    DiffOp out(N, mode);
    std::string unresolved;
    for (const auto& [mu, coeff] : a.terms())
        for (const auto& [m, f] : coeff) {
            TorusRat value = f;
            for (const auto& [atom, e] : m) {
                const PowerRule* rule = nullptr;
                for (const auto& r : rules)
                    if (r.symbol == atom.symbol) rule = &r;
                if (!rule || e % rule->power != 0) {
                    unresolved += (unresolved.empty() ? "" : ", ") + atom.to_string() + "^(" +
                                  std::to_string(e) + ") at T" + vector_to_string(mu);
                    continue;
                }
                TorusPoly base(N);
                for (const auto& [d, c] : rule->coeffs) {
                    ExpVector ex(atom.ell);
                    for (int& x : ex) x *= d;
                    base.add_term(ex, c * LaurentQK::q(d * atom.offset));
                }
                int p = e / rule->power;
                TorusPoly powered = base.pow(std::abs(p));
                value = p > 0 ? value * TorusRat(powered)
                              : value * TorusRat(TorusPoly::constant(N, 1), powered);
            }
            out.add_term(mu, value);
        }
    if (!unresolved.empty()) throw Error("unresolved factor symbols: " + unresolved);
    return out;
}

}  // namespace qtoda
