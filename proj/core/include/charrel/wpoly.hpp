#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

// Symbolic GF(2) polynomials in the graded variables w_1, w_2, ... with
// deg w_s = s. A monomial is its multiset of indices, kept non-increasing.
// This layer exists for exactness: it is the slow, obviously-correct world
// that the fast engines are tested against.

namespace charrel {

struct WMonomial {
    std::uint8_t len = 0;
    std::uint8_t deg = 0;
    std::array<std::uint8_t, 40> parts{};  // non-increasing; entries past len are 0

    static WMonomial one() { return {}; }
    static WMonomial var(unsigned s);

    // smallest index appearing, 0 for the empty monomial
    unsigned min_part() const { return len ? parts[len - 1] : 0; }

    friend auto operator<=>(const WMonomial&, const WMonomial&) = default;
};

// multiset union of the parts; throws when the result would not fit
WMonomial mul(const WMonomial& a, const WMonomial& b);

// XOR-normalized sum of monomials, sorted
class WPoly {
public:
    WPoly() = default;
    static WPoly one();
    static WPoly from(const WMonomial& m);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<WMonomial>& terms() const { return terms_; }

    void toggle(const WMonomial& m);
    void add_in(const WPoly& o);

    bool operator==(const WPoly& o) const { return terms_ == o.terms_; }

private:
    friend WPoly normalized(std::vector<WMonomial> raw);
    std::vector<WMonomial> terms_;
};

WPoly normalized(std::vector<WMonomial> raw);

// product keeping only monomials of degree <= deg_cap
WPoly mul(const WPoly& a, const WPoly& b, unsigned deg_cap);

// drop monomials having any part < min_part
WPoly filter_min_part(const WPoly& p, unsigned min_part);

// monomials of degree exactly d
WPoly homogeneous_part(const WPoly& p, unsigned d);

// Total Steenrod square of a single generator, by Wu's formula:
//   Sq w_u = sum_{d=0..u} sum_{j=0..d} C(u-d+j-1, j) w_{u+j} w_{d-j}
// (the analytic binomial; its j = 0 column is identically 1).
WPoly sq_w(unsigned u);

// Total square extended multiplicatively, truncated at deg_cap.
WPoly sq(const WMonomial& m, unsigned deg_cap);
WPoly sq(const WPoly& p, unsigned deg_cap);

// The inverse total class 1/(1 + w_{min_part} + w_{min_part+1} + ...) up to
// degree deg_cap. With min_part = 1 this is the full inverse; with a larger
// min_part it equals the full inverse with small-part monomials struck out,
// because an ordering of a multiset uses exactly the multiset's letters.
WPoly w_inverse(unsigned deg_cap, unsigned min_part = 1);

// Every non-increasing sequence of parts from [min_part, max_part] summing
// to n, in descending lexicographic order. n = 0 yields the empty sequence.
void for_each_partition(unsigned n, unsigned min_part, unsigned max_part,
                        const std::function<void(const std::vector<unsigned>&)>& cb);

}  // namespace charrel
