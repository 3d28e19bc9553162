#pragma once

// Hand-rolled U_q(sl_2) in the integral generators E = (q - q^-1) e,
// F = (q - q^-1) f and K^{+-1}, with normal ordering F^a K^m E^b. Used as an
// independent check of the rank-two Toda operator.

#include <map>
#include <string>

#include "qtoda/diffop.hpp"

namespace sl2 {

using qtoda::LaurentQK;

/// Element of U_q(sl_2) as a sum of words in the letters F, K, k (= K^-1), E.
class Uq {
public:
    using Terms = std::map<std::string, LaurentQK>;

    static Uq letter(char c);
    static Uq scalar(const LaurentQK& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Uq operator+(const Uq& o) const;
    Uq operator-(const Uq& o) const;
    Uq operator*(const Uq& o) const;
    Uq scaled(const LaurentQK& c) const;

    /// Rewrite into F^a K^m E^b words (K^m as m letters K or -m letters k).
    Uq normal_ordered() const;

private:
    void add(const std::string& w, const LaurentQK& c);
    Terms terms_;
};

/// q K + q^-1 K^-1 + F E
Uq casimir();

/// Whittaker reduction with f acting on the left and e on the right (flip=true
/// reads the result with z -> -z), or with the roles swapped (flip=false).
/// beta is the product of the two character values.
qtoda::DiffOp whittaker_operator(const Uq& x, bool f_left, const LaurentQK& beta);

}  // namespace sl2
