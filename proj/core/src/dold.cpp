#include "charrel/dold.hpp"

#include "charrel/parity.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace charrel {

namespace {

// v *= (1+t)^e, exploiting (1+t)^(2^j) = 1 + t^(2^j)
void mul_1pt(BitVec& v, unsigned e) {
    for (unsigned j = 0; e >> j; ++j)
        if ((e >> j) & 1) {
            BitVec tmp = v;
            v.xor_in_shifted(tmp, std::size_t(1) << j);
        }
}

}  // namespace

BitVec unit_row(unsigned n, unsigned k) {
    const unsigned D = n / (k + 1);
    BitVec row(D);
    for (unsigned h = 1; h <= D; ++h)
        if (binom_parity(n - std::uint64_t(k) * h - 1, std::int64_t(n) - std::int64_t(k + 1) * h))
            row.set(h - 1);
    return row;
}

BitVec pair_family_row(unsigned n, unsigned s, unsigned m) {
    if (s + 2 * m + 2 > n - 1 || n < 3)
        throw std::invalid_argument("pair_family_row: parameters out of range");
    const unsigned D = n / 2;
    BitVec row(D);
    for (unsigned i = 0; i <= m; ++i) {
        if (!binom_parity(m, std::int64_t(i))) continue;
        const unsigned h = m + 1 + i;
        const std::int64_t texp = std::int64_t(n) - 2 * std::int64_t(h);
        if (texp < 0) continue;
        if (binom_parity(s + 1 + m - i, texp - std::int64_t(s))) row.flip(h - 1);
    }
    return row;
}

BitVec tau_row(unsigned u, unsigned k, std::size_t len) {
    if (u == 0 || u > k) throw std::invalid_argument("tau_row: need 1 <= u <= k");
    BitVec row(len);
    for (unsigned d = k + 1 - u; d <= u; ++d) {
        if (!binom_parity(u - 1, std::int64_t(d))) continue;
        const unsigned e = u + d - k - 1;
        if (e < len) row.flip(e);
    }
    return row;
}

XtPoly rho(const WPoly& p, unsigned k, unsigned cap) {
    XtPoly out(k + 1, cap);
    for (const WMonomial& m : p.terms()) {
        if (m.len > 0 && m.min_part() <= k) continue;  // a small generator dies
        if (m.deg > cap) continue;
        out.flip(m.len, m.deg - unsigned(m.len) * (k + 1));
    }
    return out;
}

XtPoly rho_sq_w(unsigned u, unsigned k, unsigned cap) {
    if (u == 0) throw std::invalid_argument("rho_sq_w: u must be >= 1");
    XtPoly out(k + 1, cap);
    if (u <= k) {
        // x * tau_u(t)
        const BitVec tau = tau_row(u, k, cap + 1);
        for (unsigned e = 0; e < tau.size(); ++e)
            if (tau.get(e) && (k + 1) + e <= cap) out.flip(1, e);
        return out;
    }
    // x t^e (1+t)^e ((1+t)^k + x) with e = u - k - 1
    const unsigned e = u - k - 1;
    if (k + 1 + e > cap) return out;  // everything past the cap
    XtPoly acc = XtPoly::monomial(k + 1, cap, 1, e);
    XtPoly onet = XtPoly::one(k + 1, cap);
    onet.add_in(XtPoly::monomial(k + 1, cap, 0, 1));  // 1 + t
    acc = acc.mul(onet.pow(e));
    XtPoly c = onet.pow(k);
    c.add_in(XtPoly::monomial(k + 1, cap, 1, 0));
    return acc.mul(c);
}

// ---------------------------------------------------------------------------
// symbolic baseline

SymbolicContext::SymbolicContext(unsigned deg_cap, unsigned min_part)
    : cap_(deg_cap), min_part_(min_part) {
    if (min_part_ == 0) throw std::invalid_argument("SymbolicContext: min_part must be >= 1");
    if (cap_ > 64 || (min_part_ == 1 && cap_ > 32))
        throw std::invalid_argument("SymbolicContext: degree cap too large for the symbolic path");
    const WPoly inv = w_inverse(cap_, min_part_);
    inv_by_deg_.resize(cap_ + 1);
    for (const WMonomial& m : inv.terms()) inv_by_deg_[m.deg].toggle(m);
}

WPoly SymbolicContext::dold_element(const WMonomial& p, unsigned n) const {
    if (n > cap_) throw std::invalid_argument("SymbolicContext::dold_element: degree past the cap");
    WPoly s = filter_min_part(sq(p, n), min_part_);
    std::vector<WMonomial> raw;
    for (const WMonomial& a : s.terms())
        for (const WMonomial& b : inv_by_deg_[n - a.deg].terms()) raw.push_back(mul(a, b));
    return normalized(std::move(raw));
}

BitVec SymbolicContext::slice_row(const WMonomial& p, unsigned n, unsigned k) const {
    const WPoly dn = dold_element(p, n);
    BitVec row(n / (k + 1));
    for (const WMonomial& q : dn.terms()) {
        if (q.min_part() <= k) continue;
        row.flip(q.len - 1);
    }
    return row;
}

// ---------------------------------------------------------------------------
// engines

namespace {

WMonomial monomial_from_parts(const std::vector<unsigned>& parts) {
    WMonomial m;
    for (unsigned p : parts) m = mul(m, WMonomial::var(p));
    return m;
}

Gf2Matrix symbolic_without(unsigned n, unsigned k, unsigned D) {
    SymbolicContext ctx(n, k + 1);
    // A generator index u survives the substitution as a factor only when
    // its substituted total square is nonzero: always for u > k, and for
    // u <= k exactly when tau_u != 0. Monomials holding a dead index yield
    // the zero relation and are skipped outright.
    std::vector<bool> alive(n + 1, false);
    for (unsigned u = 1; u <= n; ++u) alive[u] = u > k || tau_row(u, k, n + 1).any();
    Gf2Matrix m(D);
    for (unsigned e = 1; e + 1 <= n; ++e)
        for_each_partition(e, 1, e, [&](const std::vector<unsigned>& parts) {
            for (unsigned p : parts)
                if (!alive[p]) return;
            m.insert(ctx.slice_row(monomial_from_parts(parts), n, k));
        });
    return m;
}

// flatten an XtPoly into one long coordinate row for span bookkeeping
BitVec flatten(const XtPoly& p) {
    const std::size_t stride = p.cap() + 1;
    BitVec out(p.xrows() * stride);
    for (std::size_t j = 0; j < p.xrows(); ++j) out.xor_in_shifted(p.row(unsigned(j)), j * stride);
    return out;
}

Gf2Matrix reference_without(unsigned n, unsigned k, unsigned D) {
    // span DP by generator degree: space_d = sum_u G_u * space_{d-u},
    // seeded by the empty product in degree 0
    std::vector<XtPoly> gs;
    gs.reserve(n);
    gs.push_back(XtPoly::one(k + 1, n));  // placeholder for u = 0, unused
    for (unsigned u = 1; u + 1 <= n; ++u) gs.push_back(rho(sq_w(u), k, n));

    const std::size_t flat_cols = (std::size_t(n) / (k + 1) + 1) * (std::size_t(n) + 1);
    std::vector<std::vector<XtPoly>> spaces(n);
    spaces[0].push_back(XtPoly::one(k + 1, n));
    std::vector<Gf2Matrix> dedupe(n, Gf2Matrix(flat_cols));
    for (unsigned d = 1; d + 1 <= n; ++d)
        for (unsigned u = 1; u <= d; ++u)
            for (const XtPoly& v : spaces[d - u]) {
                XtPoly cand = gs[u].mul(v);
                if (cand.is_zero()) continue;
                if (!dedupe[d].insert(flatten(cand))) spaces[d].push_back(std::move(cand));
            }

    XtPoly inv_rho = XtPoly::one(k + 1, n);
    inv_rho.add_in(XtPoly::monomial(k + 1, n, 0, 1));
    inv_rho.add_in(XtPoly::monomial(k + 1, n, 1, 0));
    inv_rho = inv_rho.series_inv();
    XtPoly onet = XtPoly::one(k + 1, n);
    onet.add_in(XtPoly::monomial(k + 1, n, 0, 1));
    inv_rho = inv_rho.mul(onet);

    Gf2Matrix m(D);
    for (unsigned d = 1; d + 1 <= n; ++d)
        for (const XtPoly& v : spaces[d]) m.insert(inv_rho.mul(v).slice(n));
    return m;
}

struct Family {
    BitVec tau;       // t-row of the small-part factor
    unsigned a;       // number of small parts
    unsigned budget;  // degree consumed by them
};

// Basis of the small-part factor spans, layer by layer, each element tagged
// with the least degree budget that realizes it. Layer 0 is the constant 1.
std::vector<Family> small_part_families(unsigned n, unsigned k) {
    std::vector<Family> out;
    BitVec one_row(n + 1);
    one_row.set(0);
    out.push_back({one_row, 0, 0});

    std::vector<std::pair<BitVec, unsigned>> taus;
    for (unsigned u = 1; u <= k && u + 1 <= n; ++u) {
        BitVec t = tau_row(u, k, n + 1);
        if (t.any()) taus.emplace_back(std::move(t), u);
    }

    std::vector<Family> prev = {out[0]};
    while (!prev.empty()) {
        std::vector<Family> cand;
        for (const auto& [trow, u] : taus)
            for (const Family& f : prev) {
                if (f.budget + u + 1 > n) continue;  // no room left for this factor
                BitVec row(n + 1);
                for (unsigned i = 0; i < trow.size(); ++i)
                    if (trow.get(i)) row.xor_in_shifted(f.tau, i);
                if (row.any()) cand.push_back({std::move(row), f.a + 1, f.budget + u});
            }
        std::stable_sort(cand.begin(), cand.end(),
                         [](const Family& x, const Family& y) { return x.budget < y.budget; });
        Gf2Matrix dedupe(n + 1);
        std::vector<Family> next;
        for (Family& c : cand)
            if (!dedupe.insert(c.tau)) next.push_back(std::move(c));
        out.insert(out.end(), next.begin(), next.end());
        prev = std::move(next);
    }
    return out;
}

struct AutoState {
    unsigned n, k, D;
    std::vector<BitVec> zrow, zrev;  // t^S (1+t)^S and its mirror about t^n
};

std::vector<BitVec> base_rows(const AutoState& st, const BitVec& tau, unsigned a) {
    std::vector<BitVec> rows(st.D + 1, BitVec(st.n + 1));
    if (a <= st.D) {
        rows[a] = tau;
        for (unsigned j = a + 1; j <= st.D; ++j) {
            rows[j] = rows[j - 1];
            rows[j].prefix_xor();  // one more factor of 1/(1+t)
        }
    }
    return rows;
}

void step_rows(const AutoState& st, std::vector<BitVec>& rows) {
    // multiply by (1+t)^k + x: descending so each row still sees its old neighbor
    for (unsigned j = st.D; j >= 1; --j) {
        mul_1pt(rows[j], st.k);
        rows[j].xor_in(rows[j - 1]);
    }
    mul_1pt(rows[0], st.k);
}

BitVec slice_of(const AutoState& st, const std::vector<BitVec>& rows, unsigned L, unsigned S) {
    BitVec out(st.D);
    for (unsigned h = L > 0 ? L : 1; h <= st.D; ++h)
        if (BitVec::and_parity_offset(rows[h - L], st.zrev[S], std::size_t(st.k + 1) * h))
            out.set(h - 1);
    return out;
}

Gf2Matrix auto_without(unsigned n, unsigned k, unsigned D) {
    Gf2Matrix m(D);
    if (D == 0) return m;

    AutoState st;
    st.n = n;
    st.k = k;
    st.D = D;
    st.zrow.reserve(n);
    st.zrev.reserve(n);
    for (unsigned S = 0; S < n; ++S) {
        BitVec z(n + 1);
        z.set(S);
        mul_1pt(z, S);
        st.zrev.push_back(z.reversed());
        st.zrow.push_back(std::move(z));
    }

    const std::vector<Family> families = small_part_families(n, k);

    // phase 1: for each column, probe the one-large-part-count family whose
    // lowest coordinate lands exactly there; a hit pins a pivot
    std::vector<int> hit(D + 1, -1);
    unsigned max_hit = 0;
    for (unsigned h = 1; h <= D; ++h) {
        const std::int64_t smax = std::int64_t(n) - 1 - std::int64_t(k + 1) * h;
        const unsigned Mh = n - (k + 1) * h;
        for (std::int64_t S = 0; S <= smax; ++S)
            if (binom_parity(std::uint64_t(S) + std::uint64_t(k) * h, std::int64_t(Mh) - S)) {
                hit[h] = int(S);
                max_hit = h;
                break;
            }
    }
    if (max_hit) {
        BitVec one_row(n + 1);
        one_row.set(0);
        std::vector<BitVec> rows = base_rows(st, one_row, 0);
        for (unsigned L = 1; L <= max_hit; ++L) {
            step_rows(st, rows);
            if (hit[L] >= 0) m.insert(slice_of(st, rows, L, unsigned(hit[L])));
        }
    }

    // phase 1b: mixed small/large families can pin columns phase 1 missed
    if (m.rank() < D && families.size() > 1) {
        for (unsigned h = 1; h <= D && m.rank() < D; ++h) {
            bool have = false;
            for (std::size_t c : m.free_columns())
                if (c == h - 1) have = true;
            if (!have) continue;  // already pivoted
            bool done = false;
            for (const Family& f : families) {
                if (done || f.a == 0 || f.a > h) continue;
                const unsigned L = h - f.a;
                if (f.budget + (k + 1) * L + 1 > n) continue;
                BitVec probe = f.tau;
                mul_1pt(probe, k * L);
                const unsigned smax = L > 0 ? n - 1 - f.budget - (k + 1) * L : 0;
                for (unsigned S = 0; S <= smax && !done; ++S)
                    if (BitVec::and_parity_offset(probe, st.zrev[S], std::size_t(k + 1) * h)) {
                        std::vector<BitVec> rows = base_rows(st, f.tau, f.a);
                        for (unsigned l = 0; l < L; ++l) step_rows(st, rows);
                        m.insert(slice_of(st, rows, L, S));
                        done = true;
                    }
            }
        }
    }

    // phase 2: close the span exactly — scan every generator against the
    // annihilators of what we have; a violation joins the span, and the
    // shrinking annihilator keeps all previously passed generators passed
    if (m.rank() < D) {
        std::vector<BitVec> phis = m.annihilator_basis();
        for (const Family& f : families) {
            if (phis.empty()) break;
            if (f.budget + 1 > n) continue;
            const unsigned lmax = (n - 1 - f.budget) / (k + 1);
            std::vector<BitVec> rows = base_rows(st, f.tau, f.a);
            for (unsigned L = 0; L <= lmax && !phis.empty(); ++L) {
                if (L > 0) step_rows(st, rows);
                if (f.a == 0 && L == 0) continue;  // that is the unit relation
                const unsigned smax = L > 0 ? n - 1 - f.budget - (k + 1) * L : 0;
                while (!phis.empty()) {
                    int hit_s = -1;
                    for (const BitVec& phi : phis) {
                        BitVec w(n + 1);
                        for (unsigned h = std::max(f.a + L, 1u); h <= D; ++h)
                            if (phi.get(h - 1))
                                w.xor_in_shifted_down(rows[h - L].reversed(),
                                                      std::size_t(k + 1) * h);
                        if (!w.any()) continue;
                        for (unsigned S = 0; S <= smax; ++S)
                            if (BitVec::and_parity(w, st.zrow[S])) {
                                hit_s = int(S);
                                break;
                            }
                        if (hit_s >= 0) break;
                    }
                    if (hit_s < 0) break;  // every annihilator kills every S here
                    if (m.insert(slice_of(st, rows, L, unsigned(hit_s))))
                        throw std::logic_error("relation_image: dependent violator");
                    phis = m.annihilator_basis();
                }
            }
        }
    }
    return m;
}

}  // namespace

QuotientResult relation_image(unsigned n, unsigned k, const QuotientOptions& opts) {
    if (k < 1) throw std::invalid_argument("relation_image: corank must be >= 1");
    if (n < 1 || n > 16384) throw std::invalid_argument("relation_image: n out of range");
    const unsigned D = n / (k + 1);

    Gf2Matrix without(D);
    switch (opts.engine) {
        case QuotientEngine::Auto:
            without = auto_without(n, k, D);
            break;
        case QuotientEngine::ReferenceDp:
            if (n > 64) throw std::invalid_argument("relation_image: reference engine needs n <= 64");
            without = reference_without(n, k, D);
            break;
        case QuotientEngine::Symbolic:
            if (n > 64) throw std::invalid_argument("relation_image: symbolic engine needs n <= 64");
            without = symbolic_without(n, k, D);
            break;
    }

    Gf2Matrix with = without;
    if (D > 0) with.insert(unit_row(n, k));

    QuotientResult res;
    res.n = n;
    res.k = k;
    res.ambient_dim = D;
    res.unit_included = opts.include_unit;
    res.rank_without_unit = unsigned(without.rank());
    res.rank_with_unit = unsigned(with.rank());
    res.image = opts.include_unit ? std::move(with) : std::move(without);
    for (std::size_t c : res.image.free_columns()) res.complement.push_back(unsigned(c) + 1);
    return res;
}

}  // namespace charrel
