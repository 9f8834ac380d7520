#include <charrel/parity.hpp>

#include <bit>
#include <stdexcept>
#include <string>

namespace charrel {

namespace {

void check_cap(std::uint64_t v, const char* who) {
    if (v > kBinomInputCap)
        throw std::invalid_argument(std::string(who) + ": input " + std::to_string(v) +
                                    " exceeds supported range 2^24");
}

}  // namespace

int binom_parity(std::uint64_t b, std::int64_t a) {
    check_cap(b, "binom_parity");
    if (a < 0)
        return 0;
    const std::uint64_t ua = static_cast<std::uint64_t>(a);
    if (ua > b)
        return 0;
    return (ua & ~b) == 0 ? 1 : 0;
}

unsigned binom_val2(std::uint64_t b, std::uint64_t a) {
    check_cap(b, "binom_val2");
    if (a > b)
        throw std::invalid_argument("binom_val2: a > b");
    return static_cast<unsigned>(std::popcount(a) + std::popcount(b - a) - std::popcount(b));
}

int binom_parity_int(std::int64_t u, std::uint64_t v) {
    if (u >= 0)
        return binom_parity(static_cast<std::uint64_t>(u), static_cast<std::int64_t>(v));
    // C(u, v) = (-1)^v C(v - u - 1, v); mod 2 the sign drops out.
    const std::uint64_t reflected = v + static_cast<std::uint64_t>(-(u + 1));
    return binom_parity(reflected, static_cast<std::int64_t>(v));
}

std::uint64_t phi_count(std::uint64_t m) {
    // Each full block of 8 contributes the residues 1, 2, 4 and the block's
    // closing multiple of 8; the tail contributes whichever of 1, 2, 4 it covers.
    const std::uint64_t q = m / 8, r = m % 8;
    return 4 * q + (r >= 1) + (r >= 2) + (r >= 4);
}

KTheoryProfile ktheory_profile(unsigned n) {
    if (n < 3 || n > 24)
        throw std::invalid_argument("ktheory_profile: n outside supported range [3, 24]");

    KTheoryProfile p;
    p.n = n;
    const std::uint64_t m = (std::uint64_t(1) << n) - 1;
    p.phi = phi_count(m);

    const std::uint64_t half = std::uint64_t(1) << (n - 1);
    p.kappa = 0;
    for (std::uint64_t s = half - 1; s >= 1; --s) {
        if (s - std::countr_zero(s) < half - n) {
            p.kappa = s;
            break;
        }
    }

    p.r_exp = 0;
    // v2(C(m+1, s)) >= 0, so any s with s - 1 >= phi fails the defining
    // inequality outright; the scan can start at phi.
    for (std::uint64_t s = p.phi; s >= 1; --s) {
        if (binom_val2(m + 1, s) + s - 1 < p.phi) {
            p.r_exp = s;
            break;
        }
    }

    unsigned r = 0;
    while (r + (std::uint64_t(1) << r) <= n)
        ++r;
    p.s0 = half - (std::uint64_t(1) << r);

    if (n >= 4 && p.kappa != p.r_exp)
        throw std::logic_error("ktheory_profile: kappa/r disagreement at n = " + std::to_string(n));
    return p;
}

}  // namespace charrel
