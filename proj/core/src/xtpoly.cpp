#include "charrel/xtpoly.hpp"

#include <stdexcept>

namespace charrel {

XtPoly::XtPoly(unsigned xweight, unsigned cap) : xw_(xweight), cap_(cap) {
    if (xweight == 0) throw std::invalid_argument("XtPoly: xweight must be positive");
    rows_.assign(cap / xweight + 1, BitVec(cap + 1));
}

XtPoly XtPoly::one(unsigned xweight, unsigned cap) {
    XtPoly p(xweight, cap);
    p.rows_[0].set(0);
    return p;
}

XtPoly XtPoly::monomial(unsigned xweight, unsigned cap, unsigned xpow, unsigned tpow) {
    XtPoly p(xweight, cap);
    if (xpow * xweight + tpow <= cap) p.rows_[xpow].set(tpow);
    return p;
}

bool XtPoly::get(unsigned xpow, unsigned tpow) const {
    if (xpow >= rows_.size() || xpow * xw_ + tpow > cap_) return false;
    return rows_[xpow].get(tpow);
}

void XtPoly::flip(unsigned xpow, unsigned tpow) {
    if (xpow >= rows_.size() || xpow * xw_ + tpow > cap_)
        throw std::invalid_argument("XtPoly::flip: monomial past the degree cap");
    rows_[xpow].flip(tpow);
}

bool XtPoly::is_zero() const {
    for (const BitVec& r : rows_)
        if (r.any()) return false;
    return true;
}

void XtPoly::add_in(const XtPoly& o) {
    if (o.xw_ != xw_ || o.cap_ != cap_) throw std::invalid_argument("XtPoly::add_in: shape mismatch");
    for (std::size_t j = 0; j < rows_.size(); ++j) rows_[j].xor_in(o.rows_[j]);
}

void XtPoly::mask() {
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        const unsigned tmax = cap_ - unsigned(j) * xw_;  // j * xw_ <= cap_ by construction
        for (std::size_t m = tmax + 1; m <= cap_; ++m) rows_[j].set(m, false);
    }
}

XtPoly XtPoly::mul(const XtPoly& o) const {
    if (o.xw_ != xw_ || o.cap_ != cap_) throw std::invalid_argument("XtPoly::mul: shape mismatch");
    XtPoly out(xw_, cap_);
    for (std::size_t j1 = 0; j1 < rows_.size(); ++j1) {
        if (!rows_[j1].any()) continue;
        for (std::size_t j2 = 0; j1 + j2 < out.rows_.size(); ++j2) {
            if (!o.rows_[j2].any()) continue;
            BitVec& dst = out.rows_[j1 + j2];
            for (unsigned m = 0; m <= cap_; ++m)
                if (rows_[j1].get(m)) dst.xor_in_shifted(o.rows_[j2], m);
        }
    }
    out.mask();
    return out;
}

XtPoly XtPoly::pow(unsigned e) const {
    XtPoly acc = one(xw_, cap_);
    XtPoly base = *this;
    while (e) {
        if (e & 1) acc = acc.mul(base);
        e >>= 1;
        if (e) base = base.mul(base);
    }
    return acc;
}

XtPoly XtPoly::series_inv() const {
    if (!rows_[0].get(0)) throw std::invalid_argument("XtPoly::series_inv: constant term is 0");
    // Write the series as 1 + P with P of positive order; then the inverse
    // is sum P^i, folded here as S <- 1 + P * S until the cap is reached.
    XtPoly p = *this;
    p.rows_[0].flip(0);
    XtPoly s = one(xw_, cap_);
    for (unsigned i = 0; i < cap_; ++i) {
        s = p.mul(s);
        s.rows_[0].flip(0);
    }
    return s;
}

BitVec XtPoly::slice(unsigned n) const {
    if (n > cap_) throw std::invalid_argument("XtPoly::slice: degree past the cap");
    const unsigned D = n / xw_;
    BitVec out(D);
    for (unsigned h = 1; h <= D; ++h) out.set(h - 1, rows_[h].get(n - h * xw_));
    return out;
}

bool XtPoly::operator==(const XtPoly& o) const {
    return xw_ == o.xw_ && cap_ == o.cap_ && rows_ == o.rows_;
}

}  // namespace charrel
