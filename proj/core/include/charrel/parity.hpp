#pragma once

#include <cstdint>

// Exact 2-adic and mod-2 binomial arithmetic, plus the K-theoretic profile
// functions (phi, kappa, r, s0) that drive the projective-space verdicts.
//
// All operations are pure; inputs are guarded at 2^24 to keep every
// computation in machine words with room to spare.

namespace charrel {

inline constexpr std::uint64_t kBinomInputCap = std::uint64_t(1) << 24;

// Parity of C(b, a). By convention the result is 0 when a < 0 or a > b.
// For 0 <= a <= b this is the classic bit test: odd iff the base-2 digits
// of a are dominated by those of b.
int binom_parity(std::uint64_t b, std::int64_t a);

// Exact 2-adic valuation of C(b, a) for 0 <= a <= b: the number of carries
// when a and b-a are added in base 2.
unsigned binom_val2(std::uint64_t b, std::uint64_t a);

// Parity of the analytic binomial u(u-1)...(u-v+1)/v! for any integer u.
// Negative upper index is handled by the reflection C(u,v) = +-C(v-u-1, v);
// the sign is irrelevant mod 2. For u >= 0 this equals binom_parity(u, v).
int binom_parity_int(std::int64_t u, std::uint64_t v);

// |{0 < s <= m : s mod 8 in {0, 1, 2, 4}}|
std::uint64_t phi_count(std::uint64_t m);

// Profile of the K-theoretic bounds attached to n (with m = 2^n - 1):
//   phi   = phi_count(m)
//   kappa = max{0 < s < 2^{n-1} : s - v2(s) < 2^{n-1} - n}, 0 if none
//   r_exp = greatest s >= 1 with v2(C(2^n, s)) + s - 1 < phi, 0 if none
//   s0    = 2^{n-1} - 2^{min{r >= 0 : r + 2^r > n}}
// For n >= 4 the identity kappa == r_exp is checked at construction time and
// a std::logic_error is thrown if it ever fails (it never should).
struct KTheoryProfile {
    unsigned n = 0;
    std::uint64_t phi = 0;
    std::uint64_t kappa = 0;
    std::uint64_t r_exp = 0;
    std::uint64_t s0 = 0;
};

// Supported range: 3 <= n <= 24 (the r_exp scan needs C(2^n, s) inputs,
// which the 2^24 guard must admit).
KTheoryProfile ktheory_profile(unsigned n);

}  // namespace charrel
