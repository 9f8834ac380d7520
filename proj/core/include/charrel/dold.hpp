#pragma once

#include <charrel/gf2.hpp>
#include <charrel/wpoly.hpp>
#include <charrel/xtpoly.hpp>

#include <vector>

// The mod-2 relation space among characteristic numbers in the image of the
// corank-k substitution w_s -> x t^{s-k-1} (s > k; smaller generators die),
// with deg x = k+1 and deg t = 1. In total degree n the image is spanned by
// x^h t^{n-(k+1)h} for 1 <= h <= n/(k+1); each relation class [w^{-1} Sq p]_n
// lands there, and the quotient by their span is what every verdict in this
// library ultimately consumes.

namespace charrel {

// slice of the substituted inverse total class (the p = 1 relation)
BitVec unit_row(unsigned n, unsigned k);

// k = 1 closed-form relation family: x^{m+1} t^s (1+t)^{s+1} (x+t+1)^m,
// defined for s, m >= 0 with s + 2m + 2 <= n - 1
BitVec pair_family_row(unsigned n, unsigned s, unsigned m);

// substitution on symbolic polynomials (monomials with any part <= k vanish)
XtPoly rho(const WPoly& p, unsigned k, unsigned cap);

// closed form for the substituted total square of a single generator:
//   u >= k+1 : x t^{u-k-1} (1+t)^{u-k-1} ((1+t)^k + x)
//   u <= k   : x * tau_u(t)
XtPoly rho_sq_w(unsigned u, unsigned k, unsigned cap);

// the small-generator t-factor tau_u, as a t-row of the given length
BitVec tau_row(unsigned u, unsigned k, std::size_t len);

enum class QuotientEngine {
    Auto,         // pivot probing + annihilator closure on the closed forms
    ReferenceDp,  // degree-by-degree span DP over substituted squares
    Symbolic,     // full monomial enumeration in the w-world
};

struct QuotientOptions {
    QuotientEngine engine = QuotientEngine::Auto;
    bool include_unit = true;  // count p = 1 among the relations
};

struct QuotientResult {
    unsigned n = 0, k = 0;
    unsigned ambient_dim = 0;  // floor(n/(k+1))
    bool unit_included = true;
    unsigned rank_with_unit = 0, rank_without_unit = 0;
    // free x-powers h: the classes x^h t^{n-(k+1)h} spanning the quotient,
    // ascending, for the selected unit option
    std::vector<unsigned> complement;
    // reduced relation image for the selected unit option
    Gf2Matrix image{0};

    unsigned rank() const { return unit_included ? rank_with_unit : rank_without_unit; }
    unsigned quotient_dim() const { return ambient_dim - rank(); }
    unsigned quotient_dim_with_unit() const { return ambient_dim - rank_with_unit; }
    unsigned quotient_dim_without_unit() const { return ambient_dim - rank_without_unit; }
};

// Compute the degree-n relation image and quotient data for corank k >= 1.
// ReferenceDp and Symbolic are exactness baselines and accept n <= 64 only.
QuotientResult relation_image(unsigned n, unsigned k, const QuotientOptions& opts = {});

// Precomputed w-world state for the symbolic baseline: the truncated inverse
// total class bucketed by degree, with monomials below min_part struck out
// (exact once the substitution is applied; orderings of a multiset use only
// the multiset's letters).
class SymbolicContext {
public:
    SymbolicContext(unsigned deg_cap, unsigned min_part);

    unsigned deg_cap() const { return cap_; }
    unsigned min_part() const { return min_part_; }

    // the degree-n part of w^{-1} Sq p
    WPoly dold_element(const WMonomial& p, unsigned n) const;

    // its image under the substitution, as a slice row over h = 1..n/(k+1)
    BitVec slice_row(const WMonomial& p, unsigned n, unsigned k) const;

private:
    unsigned cap_, min_part_;
    std::vector<WPoly> inv_by_deg_;
};

}  // namespace charrel
