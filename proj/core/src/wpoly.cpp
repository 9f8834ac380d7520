#include "charrel/wpoly.hpp"

#include "charrel/parity.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace charrel {

WMonomial WMonomial::var(unsigned s) {
    if (s == 0 || s > 255) throw std::invalid_argument("WMonomial::var: index out of range");
    WMonomial m;
    m.len = 1;
    m.deg = std::uint8_t(s);
    m.parts[0] = std::uint8_t(s);
    return m;
}

WMonomial mul(const WMonomial& a, const WMonomial& b) {
    if (unsigned(a.len) + b.len > a.parts.size() || unsigned(a.deg) + b.deg > 255)
        throw std::invalid_argument("WMonomial mul: product too large");
    WMonomial out;
    out.len = std::uint8_t(a.len + b.len);
    out.deg = std::uint8_t(a.deg + b.deg);
    std::merge(a.parts.begin(), a.parts.begin() + a.len, b.parts.begin(), b.parts.begin() + b.len,
               out.parts.begin(), std::greater<std::uint8_t>());
    return out;
}

WPoly WPoly::one() {
    WPoly p;
    p.terms_.push_back(WMonomial::one());
    return p;
}

WPoly WPoly::from(const WMonomial& m) {
    WPoly p;
    p.terms_.push_back(m);
    return p;
}

void WPoly::toggle(const WMonomial& m) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m);
    if (it != terms_.end() && *it == m)
        terms_.erase(it);
    else
        terms_.insert(it, m);
}

void WPoly::add_in(const WPoly& o) {
    std::vector<WMonomial> raw;
    raw.reserve(terms_.size() + o.terms_.size());
    raw.insert(raw.end(), terms_.begin(), terms_.end());
    raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
    *this = normalized(std::move(raw));
}

WPoly normalized(std::vector<WMonomial> raw) {
    std::sort(raw.begin(), raw.end());
    WPoly out;
    for (std::size_t i = 0; i < raw.size();) {
        std::size_t j = i;
        while (j < raw.size() && raw[j] == raw[i]) ++j;
        if ((j - i) & 1) out.terms_.push_back(raw[i]);
        i = j;
    }
    return out;
}

WPoly mul(const WPoly& a, const WPoly& b, unsigned deg_cap) {
    std::vector<WMonomial> raw;
    for (const WMonomial& ma : a.terms())
        for (const WMonomial& mb : b.terms())
            if (unsigned(ma.deg) + mb.deg <= deg_cap) raw.push_back(mul(ma, mb));
    return normalized(std::move(raw));
}

WPoly filter_min_part(const WPoly& p, unsigned min_part) {
    std::vector<WMonomial> raw;
    for (const WMonomial& m : p.terms())
        if (m.len == 0 || m.min_part() >= min_part) raw.push_back(m);
    return normalized(std::move(raw));
}

WPoly homogeneous_part(const WPoly& p, unsigned d) {
    std::vector<WMonomial> raw;
    for (const WMonomial& m : p.terms())
        if (m.deg == d) raw.push_back(m);
    return normalized(std::move(raw));
}

WPoly sq_w(unsigned u) {
    static std::map<unsigned, WPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto hit = cache.find(u);
    if (hit != cache.end()) return hit->second;

    if (u == 0) return WPoly::one();
    std::vector<WMonomial> raw;
    for (unsigned d = 0; d <= u; ++d)
        for (unsigned j = 0; j <= d; ++j) {
            if (!binom_parity_int(std::int64_t(u) - d + j - 1, j)) continue;
            WMonomial m = WMonomial::var(u + j);
            if (d > j) m = mul(m, WMonomial::var(d - j));
            raw.push_back(m);
        }
    WPoly out = normalized(std::move(raw));
    cache.emplace(u, out);
    return out;
}

namespace {

// mod 2 squaring is term-by-term: every part's multiplicity doubles
WPoly poly_square(const WPoly& p, unsigned deg_cap) {
    std::vector<WMonomial> raw;
    for (const WMonomial& m : p.terms()) {
        if (2u * m.deg > deg_cap) continue;
        raw.push_back(mul(m, m));
    }
    return normalized(std::move(raw));
}

WPoly poly_pow(const WPoly& base, unsigned e, unsigned deg_cap) {
    WPoly acc = WPoly::one();
    WPoly b = base;
    while (e) {
        if (e & 1) acc = mul(acc, b, deg_cap);
        e >>= 1;
        if (e) b = poly_square(b, deg_cap);
    }
    return acc;
}

}  // namespace

WPoly sq(const WMonomial& m, unsigned deg_cap) {
    // Cartan: the total square is a ring map, so take each distinct part's
    // square to its multiplicity and multiply.
    WPoly out = WPoly::one();
    for (unsigned i = 0; i < m.len;) {
        unsigned j = i;
        while (j < m.len && m.parts[j] == m.parts[i]) ++j;
        out = mul(out, poly_pow(sq_w(m.parts[i]), j - i, deg_cap), deg_cap);
        i = j;
    }
    return out;
}

WPoly sq(const WPoly& p, unsigned deg_cap) {
    std::vector<WMonomial> raw;
    for (const WMonomial& m : p.terms()) {
        const WPoly s = sq(m, deg_cap);
        raw.insert(raw.end(), s.terms().begin(), s.terms().end());
    }
    return normalized(std::move(raw));
}

WPoly w_inverse(unsigned deg_cap, unsigned min_part) {
    if (min_part == 0) throw std::invalid_argument("w_inverse: min_part must be >= 1");
    // inv_0 = 1 and, in each degree, inv_d = sum_j w_j inv_{d-j}: the terms
    // of (w_{min} + w_{min+1} + ...)^i accumulated degree by degree.
    std::vector<WPoly> by_deg(deg_cap + 1);
    by_deg[0] = WPoly::one();
    WPoly total = WPoly::one();
    for (unsigned d = 1; d <= deg_cap; ++d) {
        std::vector<WMonomial> raw;
        for (unsigned j = min_part; j <= d; ++j)
            for (const WMonomial& m : by_deg[d - j].terms()) raw.push_back(mul(WMonomial::var(j), m));
        by_deg[d] = normalized(std::move(raw));
        total.add_in(by_deg[d]);
    }
    return total;
}

void for_each_partition(unsigned n, unsigned min_part, unsigned max_part,
                        const std::function<void(const std::vector<unsigned>&)>& cb) {
    if (min_part == 0) throw std::invalid_argument("for_each_partition: min_part must be >= 1");
    std::vector<unsigned> parts;
    // descending fill: largest admissible first part, then recurse
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned cap) {
        if (left == 0) {
            cb(parts);
            return;
        }
        for (unsigned p = std::min(cap, left); p >= min_part; --p) {
            if (left - p != 0 && left - p < min_part) continue;
            parts.push_back(p);
            rec(left - p, p);
            parts.pop_back();
        }
    };
    rec(n, max_part);
}

}  // namespace charrel
