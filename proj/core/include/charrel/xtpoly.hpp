#pragma once

#include <charrel/gf2.hpp>

#include <cstddef>
#include <vector>

// Polynomials over GF(2) in two variables x, t where x carries a fixed
// weight (its total degree) and t has degree 1. Everything is truncated to
// total degree <= cap; that keeps all series manipulations finite.
//
// Coefficients are stored row-per-x-power: rows[j] bit m <=> x^j t^m.

namespace charrel {

class XtPoly {
public:
    XtPoly(unsigned xweight, unsigned cap);

    static XtPoly one(unsigned xweight, unsigned cap);
    static XtPoly monomial(unsigned xweight, unsigned cap, unsigned xpow, unsigned tpow);

    unsigned xweight() const { return xw_; }
    unsigned cap() const { return cap_; }
    std::size_t xrows() const { return rows_.size(); }

    bool get(unsigned xpow, unsigned tpow) const;
    void flip(unsigned xpow, unsigned tpow);

    bool is_zero() const;
    void add_in(const XtPoly& o);
    XtPoly mul(const XtPoly& o) const;
    XtPoly pow(unsigned e) const;

    // Multiplicative inverse as a truncated series; the constant term must
    // be 1 or the series does not exist over GF(2)[[x,t]].
    XtPoly series_inv() const;

    // Degree-n slice on the ordered basis x^1 t^{n-w}, x^2 t^{n-2w}, ...,
    // x^D t^{n-Dw} with D = n / xweight. The pure t^n coordinate is dropped:
    // the relation spaces this engine manipulates never see it.
    BitVec slice(unsigned n) const;

    bool operator==(const XtPoly& o) const;

    const BitVec& row(unsigned xpow) const { return rows_[xpow]; }

private:
    void mask();  // clear bits past the total-degree cap

    unsigned xw_;
    unsigned cap_;
    std::vector<BitVec> rows_;
};

}  // namespace charrel
