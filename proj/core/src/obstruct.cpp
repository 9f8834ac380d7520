#include "charrel/obstruct.hpp"

#include "charrel/parity.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace charrel {

// ---------------------------------------------------------------------------
// rings
// ---------------------------------------------------------------------------

OneGenRing OneGenRing::rp(unsigned n) {
    if (n < 1 || n > 16384) throw std::invalid_argument("OneGenRing::rp: need 1 <= n <= 16384");
    OneGenRing r;
    r.n = n;
    r.coeff.assign(n + 1, 0);
    r.coeff[0] = 1;
    for (unsigned j = 1; j <= n; ++j) r.coeff[j] = std::uint8_t(binom_parity(n + 1, j));
    r.orientable = (n % 2) == 1;  // the top coefficient of (1+y)^{n+1} in degree 1 is n+1
    return r;
}

int OneGenRing::value(const std::vector<unsigned>& parts) const {
    unsigned total = 0;
    int prod = 1;
    for (unsigned p : parts) {
        if (p == 0) throw std::invalid_argument("OneGenRing::value: parts must be positive");
        total += p;
        if (total > n) return 0;
        if (!coeff_at(p)) prod = 0;
    }
    return prod;
}

namespace {

void validate_ring(const OneGenRing& ring, const char* who) {
    if (ring.n < 1 || ring.coeff.size() != std::size_t(ring.n) + 1) {
        std::ostringstream os;
        os << who << ": ring must carry coefficients 0..n with n >= 1";
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// names
// ---------------------------------------------------------------------------

unsigned map_class_delta(MapClass mc) {
    return mc == MapClass::Fold ? 0u : 1u;
}

const char* map_class_name(MapClass mc) {
    switch (mc) {
        case MapClass::Fold: return "fold";
        case MapClass::Cusp: return "cusp";
        case MapClass::Morin: return "morin";
        case MapClass::TameCorank1: return "tame-corank1";
        case MapClass::Corank1: return "corank1";
    }
    throw std::logic_error("map_class_name: unknown map class");
}

MapClass parse_map_class(const std::string& s) {
    if (s == "fold") return MapClass::Fold;
    if (s == "cusp") return MapClass::Cusp;
    if (s == "morin") return MapClass::Morin;
    if (s == "tame-corank1") return MapClass::TameCorank1;
    if (s == "corank1") return MapClass::Corank1;
    throw std::invalid_argument("unknown map class '" + s +
                                "' (expected fold, cusp, morin, tame-corank1 or corank1)");
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Obstructed: return "obstructed";
        case Status::NotObstructed: return "not-obstructed";
        case Status::Inconclusive: return "inconclusive";
    }
    throw std::logic_error("status_name: unknown status");
}

const char* codim1_class_name(Codim1Class c) {
    switch (c) {
        case Codim1Class::NullCobordant: return "null-cobordant";
        case Codim1Class::A1: return "A1";
        case Codim1Class::B1: return "B1";
        case Codim1Class::C2: return "C2";
    }
    throw std::logic_error("codim1_class_name: unknown class");
}

bool VerdictSet::any_obstructed() const {
    for (const Verdict& v : verdicts)
        if (v.obstructed()) return true;
    return false;
}

const Verdict* VerdictSet::first_for(MapClass mc) const {
    for (const Verdict& v : verdicts)
        if (v.map_class == mc) return &v;
    return nullptr;
}

// ---------------------------------------------------------------------------
// quotient report / codimension-1 classification
// ---------------------------------------------------------------------------

namespace {

QuotientReport make_report(const QuotientResult& r) {
    QuotientReport q;
    q.n = r.n;
    q.k = r.k;
    q.dim_im_rho = r.ambient_dim;
    q.dim_relations = r.rank();
    q.quotient_dim = r.quotient_dim();
    q.unit_included = r.unit_included;
    for (unsigned h : r.complement) q.complement.emplace_back(h, r.n - (r.k + 1) * h);
    return q;
}

}  // namespace

QuotientReport quotient_report(unsigned n, unsigned k, QuotientEngine engine, bool include_unit) {
    QuotientOptions opts;
    opts.engine = engine;
    opts.include_unit = include_unit;
    return make_report(relation_image(n, k, opts));
}

Codim1Report classify_codim1(unsigned n) {
    if (n < 2) throw std::invalid_argument("classify_codim1: need n >= 2");

    Codim1Class cls = Codim1Class::NullCobordant;
    if (std::has_single_bit(std::uint64_t(n)) && n >= 4) {
        cls = Codim1Class::A1;
    } else if (std::popcount(std::uint64_t(n) + 1) == 2) {
        // n = 2^a + 2^b - 1 with a > b
        const unsigned a = unsigned(std::bit_width(std::uint64_t(n) + 1)) - 1;
        const unsigned b = unsigned(std::countr_zero(std::uint64_t(n) + 1));
        if (b >= 1) cls = (a == b + 1) ? Codim1Class::B1 : Codim1Class::C2;
        // b == 0 is n = 2^a, already picked up above for a >= 2; n = 2 stays null
    }

    Codim1Report rep;
    rep.n = n;
    rep.cls = cls;
    rep.quotient = quotient_report(n, 1);

    const unsigned expected = cls == Codim1Class::NullCobordant ? 0u
                            : cls == Codim1Class::C2            ? 2u
                                                                : 1u;
    if (rep.quotient.quotient_dim != expected) {
        std::ostringstream os;
        os << "classify_codim1: arithmetic class " << codim1_class_name(cls) << " predicts dim "
           << expected << " but the relation engine computed " << rep.quotient.quotient_dim
           << " at n = " << n;
        throw std::logic_error(os.str());
    }

    switch (cls) {
        case Codim1Class::NullCobordant:
            rep.annotations.push_back(
                "every characteristic number is forced to vanish: a source admitting a "
                "codimension-1 fold map is null-cobordant");
            break;
        case Codim1Class::A1:
            rep.annotations.push_back(
                "one-dimensional class: all numbers vanish except w_2^{n/2} and w_n, which "
                "agree; generated by the n/4-fold product of the complex projective plane");
            if (n != 2 && n != 4 && n != 8)
                rep.annotations.push_back(
                    "external surgery results exclude w_n[M] = 1 in this dimension (possible "
                    "only for n = 2, 4, 8); the mod-2 relation engine cannot see that "
                    "refinement");
            break;
        case Codim1Class::B1:
            rep.annotations.push_back(
                "one-dimensional class detected by the single surviving product coordinate");
            break;
        case Codim1Class::C2:
            rep.annotations.push_back(
                "two-dimensional class: the two surviving coordinates vary independently");
            break;
    }
    rep.annotations.push_back(
        "oriented refinement not computed: rationally only powers of the first Pontryagin "
        "class could additionally survive");
    return rep;
}

// ---------------------------------------------------------------------------
// equal-degree equal-length pair violations
// ---------------------------------------------------------------------------

namespace {

struct PairViolation {
    unsigned degree = 0, length = 0;
    std::vector<unsigned> lhs;  // every part has coefficient 1 (value 1)
    std::vector<unsigned> rhs;  // contains a coefficient-0 part (value 0)
};

// Lexicographically least non-decreasing sequence of `len` parts >= minp
// summing to d, parts restricted to `ok`, containing at least one part
// flagged by `zero` when need_zero is set.
bool build_side(unsigned d, unsigned len, unsigned minp, const std::vector<std::uint8_t>& ok,
                const std::vector<std::uint8_t>& zero, bool need_zero,
                std::vector<unsigned>& out) {
    const unsigned n = unsigned(ok.size()) - 1;
    if (len == 0) return d == 0 && !need_zero;
    if (len == 1) {
        if (d >= minp && d <= n && ok[d] && (!need_zero || zero[d])) {
            out.push_back(d);
            return true;
        }
        return false;
    }
    for (unsigned p = minp; p <= n && p * len <= d; ++p) {
        if (!ok[p]) continue;
        out.push_back(p);
        if (build_side(d - p, len - 1, p, ok, zero, need_zero && !zero[p], out)) return true;
        out.pop_back();
    }
    return false;
}

// First (degree-ascending, then length-ascending) pair of equal-degree
// equal-length products with all parts >= threshold whose values differ.
// Degrees past n never appear: both sides would be zero in the ring.
std::optional<PairViolation> find_violation(const OneGenRing& ring, unsigned threshold) {
    const unsigned n = ring.n;
    if (threshold < 1) throw std::invalid_argument("find_violation: threshold must be >= 1");
    if (2 * threshold > n) return std::nullopt;  // no room for two parts

    std::vector<std::uint8_t> s1(n + 1, 0), s0(n + 1, 0), any(n + 1, 0);
    bool have1 = false, have0 = false;
    for (unsigned p = threshold; p <= n; ++p) {
        any[p] = 1;
        if (ring.coeff_at(p)) {
            s1[p] = 1;
            have1 = true;
        } else {
            s0[p] = 1;
            have0 = true;
        }
    }
    if (!have1 || !have0) return std::nullopt;  // one side can never be formed

    // A[L]: degrees of length-L products with all parts nonzero;
    // C[L]: with arbitrary parts; B[L]: with at least one zero part.
    const unsigned lmax = n / threshold;
    BitVec a_prev(n + 1), c_prev(n + 1);
    a_prev.set(0);
    c_prev.set(0);

    unsigned best_d = n + 1, best_l = 0;
    for (unsigned len = 1; len <= lmax; ++len) {
        BitVec a_cur(n + 1), c_cur(n + 1), b_cur(n + 1);
        for (unsigned p = threshold; p <= n; ++p) {
            if (s1[p]) a_cur.or_in_shifted(a_prev, p);
            if (any[p]) c_cur.or_in_shifted(c_prev, p);
            if (s0[p]) b_cur.or_in_shifted(c_prev, p);
        }
        if (len >= 2) {
            // a single product cannot take both values, so start at length 2
            for (unsigned d = len * threshold; d < best_d; ++d) {
                if (a_cur.get(d) && b_cur.get(d)) {
                    best_d = d;
                    best_l = len;
                    break;
                }
            }
        }
        a_prev = std::move(a_cur);
        c_prev = std::move(c_cur);
    }
    if (best_l == 0) return std::nullopt;

    PairViolation v;
    v.degree = best_d;
    v.length = best_l;
    if (!build_side(best_d, best_l, threshold, s1, s0, false, v.lhs) ||
        !build_side(best_d, best_l, threshold, any, s0, true, v.rhs))
        throw std::logic_error("find_violation: witness reconstruction failed");
    return v;
}

void apply_pair_scan(Verdict& v, const OneGenRing& ring, unsigned threshold, const char* tag) {
    v.provenance = tag;
    auto viol = find_violation(ring, threshold);
    if (viol) {
        v.status = Status::Obstructed;
        Witness w;
        w.kind = "relation-pair";
        w.degree = viol->degree;
        w.length = viol->length;
        w.threshold = threshold;
        w.lhs = viol->lhs;
        w.rhs = viol->rhs;
        w.note = "equal-degree equal-length products that must agree evaluate to 1 and 0";
        v.witnesses.push_back(std::move(w));
    } else {
        v.status = Status::NotObstructed;
    }
}

// first i in [lo, ring.n] with a nonzero coefficient, or 0
unsigned first_nonvanishing(const OneGenRing& ring, unsigned lo) {
    for (unsigned i = lo; i <= ring.n; ++i)
        if (ring.coeff_at(i)) return i;
    return 0;
}

void apply_vanishing_scan(Verdict& v, const OneGenRing& ring, unsigned lo) {
    v.provenance = "sw-vanishing-tame";
    const unsigned bad = first_nonvanishing(ring, lo);
    if (bad) {
        v.status = Status::Obstructed;
        Witness w;
        w.kind = "class-nonvanishing";
        w.index = bad;
        w.threshold = lo;
        w.note = "a tame corank-one map forces this class to vanish";
        v.witnesses.push_back(std::move(w));
    } else {
        v.status = Status::NotObstructed;
    }
}

}  // namespace

unsigned minimal_threshold(const OneGenRing& ring) {
    validate_ring(ring, "minimal_threshold");
    for (unsigned l = 1; l <= ring.n; ++l)
        if (!find_violation(ring, l)) return l;
    // a single part can never violate, so the loop always returns by l = n
    throw std::logic_error("minimal_threshold: scan fell through");
}

// ---------------------------------------------------------------------------
// relation_check
// ---------------------------------------------------------------------------

Verdict relation_check(const OneGenRing& ring, unsigned k, unsigned K, MapClass mc) {
    validate_ring(ring, "relation_check");
    if (k > ring.n) throw std::invalid_argument("relation_check: k exceeds the ring dimension");

    Verdict v;
    v.map_class = mc;
    const bool kodd = (k % 2) == 1;

    switch (mc) {
        case MapClass::Corank1:
            v.status = Status::Inconclusive;
            v.provenance = "corank1-pontryagin-vanishing";
            v.annotations.push_back(
                "no mod-2 class relations apply to arbitrary corank-one maps; the rational "
                "criterion needs Pontryagin data this ring does not carry");
            return v;

        case MapClass::TameCorank1: {
            v.hypotheses.push_back({"target-stably-parallelizable", K == 0,
                                    "class vanishing is proved for stably parallelizable "
                                    "targets only"});
            if (K != 0) {
                v.status = Status::Inconclusive;
                v.provenance = "sw-vanishing-tame";
                return v;
            }
            apply_vanishing_scan(v, ring, k + 2);
            return v;
        }

        case MapClass::Fold: {
            v.hypotheses.push_back({"codimension-parity", kodd,
                                    kodd ? "k odd: the fold relations apply directly"
                                         : "k even: every fold map is tame"});
            if (kodd) {
                v.hypotheses.push_back({"orientability", ring.orientable,
                                        ring.orientable
                                            ? "source orientable"
                                            : "source not orientable; fold maps are cusp maps, "
                                              "whose relations need no orientability"});
                if (ring.orientable) {
                    apply_pair_scan(v, ring, k + 2 + K, "fold-sw-equalities");
                } else {
                    apply_pair_scan(v, ring, k + 3 + K, "cusp-sw-equalities");
                    v.annotations.push_back(
                        "orientability unavailable: applied the cusp criterion, whose "
                        "threshold sits one degree higher");
                }
                return v;
            }
            // k even: tame, so the class-vanishing criterion carries the load
            v.annotations.push_back("fold maps of even codimension are tame corank-one maps");
            v.hypotheses.push_back({"target-stably-parallelizable", K == 0,
                                    "class vanishing is proved for stably parallelizable "
                                    "targets only"});
            if (K != 0) {
                v.status = Status::Inconclusive;
                v.provenance = "sw-vanishing-tame";
                return v;
            }
            apply_vanishing_scan(v, ring, k + 2);
            return v;
        }

        case MapClass::Cusp: {
            v.hypotheses.push_back({"codimension-parity", kodd,
                                    "the cusp relations are proved for odd k only"});
            if (!kodd) {
                v.status = Status::Inconclusive;
                v.provenance = "cusp-sw-equalities";
                return v;
            }
            apply_pair_scan(v, ring, k + 3 + K, "cusp-sw-equalities");
            return v;
        }

        case MapClass::Morin: {
            v.hypotheses.push_back({"codimension-parity", kodd,
                                    "the blowup relations are proved for odd k only"});
            v.hypotheses.push_back({"orientability", ring.orientable,
                                    "perturbing a Morin map to a cusp map needs an orientable "
                                    "source and target"});
            if (!kodd || !ring.orientable) {
                v.status = Status::Inconclusive;
                v.provenance = "morin-sw-equalities";
                return v;
            }
            apply_pair_scan(v, ring, k + 3 + K, "morin-sw-equalities");
            return v;
        }
    }
    throw std::logic_error("relation_check: unknown map class");
}

// ---------------------------------------------------------------------------
// projective-space verdicts
// ---------------------------------------------------------------------------

VerdictSet rp_verdict(unsigned n, unsigned target_dim) {
    if (n < 2 || n > 2048) throw std::invalid_argument("rp_verdict: need 2 <= n <= 2048");
    if (target_dim < 1 || target_dim > n)
        throw std::invalid_argument("rp_verdict: target dimension must lie in [1, n]");

    const unsigned k = n - target_dim;
    const OneGenRing ring = OneGenRing::rp(n);
    const bool kodd = (k % 2) == 1;

    VerdictSet out;
    out.space = "rp";
    out.n = n;
    out.target = target_dim;
    out.k = k;
    out.minimal_threshold = minimal_threshold(ring);

    // K-theoretic bound: applies to tame corank-one maps out of RP^{2^nu - 1}
    bool ktheory_applies = false;
    std::uint64_t kappa = 0;
    unsigned nu = 0;
    if (std::has_single_bit(std::uint64_t(n) + 1)) {
        nu = unsigned(std::bit_width(std::uint64_t(n) + 1)) - 1;
        if (nu >= 4) {
            kappa = ktheory_profile(nu).kappa;
            ktheory_applies = kappa >= 2 && k <= kappa - 2;
        }
    }

    auto ktheory_witness = [&](Verdict& v) {
        v.status = Status::Obstructed;
        v.provenance = "rp-ktheory-gdim";
        Witness w;
        w.kind = "ktheory-bound";
        w.index = unsigned(kappa);
        w.threshold = k;
        std::ostringstream os;
        os << "no tame corank-one map out of this space in codimension k <= " << (kappa - 2);
        w.note = os.str();
        v.witnesses.push_back(std::move(w));
    };

    // fold
    {
        Verdict v;
        v.map_class = MapClass::Fold;
        v.hypotheses.push_back({"codimension-parity", kodd,
                                kodd ? "k odd: the fold relations apply directly"
                                     : "k even: every fold map is tame"});
        if (kodd) {
            v.hypotheses.push_back({"orientability", ring.orientable,
                                    ring.orientable ? "source orientable (n odd)"
                                                    : "source not orientable (n even)"});
            if (ring.orientable) {
                apply_pair_scan(v, ring, k + 2, "fold-sw-equalities");
            } else {
                apply_pair_scan(v, ring, k + 3, "cusp-sw-equalities");
                v.annotations.push_back(
                    "orientability unavailable: applied the cusp criterion, whose threshold "
                    "sits one degree higher");
            }
        } else {
            v.annotations.push_back("fold maps of even codimension are tame corank-one maps");
            apply_vanishing_scan(v, ring, k + 2);
            if (v.status == Status::NotObstructed && ktheory_applies) {
                ktheory_witness(v);
                v.annotations.push_back(
                    "all positive classes vanish; the K-theoretic geometric-dimension bound "
                    "applies instead");
            }
        }
        out.verdicts.push_back(std::move(v));
    }

    // cusp
    {
        Verdict v;
        v.map_class = MapClass::Cusp;
        v.hypotheses.push_back({"codimension-parity", kodd,
                                "the cusp relations are proved for odd k only"});
        if (kodd) {
            apply_pair_scan(v, ring, k + 3, "cusp-sw-equalities");
        } else {
            v.status = Status::Inconclusive;
            v.provenance = "cusp-sw-equalities";
        }
        out.verdicts.push_back(std::move(v));
    }

    // morin
    {
        Verdict v;
        v.map_class = MapClass::Morin;
        v.hypotheses.push_back({"codimension-parity", kodd,
                                "the blowup relations are proved for odd k only"});
        v.hypotheses.push_back({"orientability", ring.orientable,
                                "perturbing a Morin map to a cusp map needs an orientable "
                                "source and target"});
        if (kodd && ring.orientable) {
            apply_pair_scan(v, ring, k + 3, "morin-sw-equalities");
        } else {
            v.status = Status::Inconclusive;
            v.provenance = "morin-sw-equalities";
            v.annotations.push_back(
                "cusp maps are special Morin maps, so the cusp route cannot stand in here");
        }
        out.verdicts.push_back(std::move(v));
    }

    // tame corank one
    {
        Verdict v;
        v.map_class = MapClass::TameCorank1;
        apply_vanishing_scan(v, ring, k + 2);
        if (v.status == Status::NotObstructed && ktheory_applies) {
            ktheory_witness(v);
            v.annotations.push_back(
                "all positive classes vanish; the K-theoretic geometric-dimension bound "
                "applies instead");
        }
        out.verdicts.push_back(std::move(v));
    }

    // arbitrary corank one
    {
        Verdict v;
        v.map_class = MapClass::Corank1;
        v.status = Status::NotObstructed;
        v.provenance = "corank1-pontryagin-vanishing";
        v.annotations.push_back(
            "every rational Pontryagin class of the source vanishes, so the rational "
            "criterion cannot obstruct");
        if (n < 2 * (k + 2))
            v.annotations.push_back(
                "existence: generic maps to this target already have corank <= 1 "
                "(corank1-existence-transversality)");
        out.verdicts.push_back(std::move(v));
    }

    // closed-form codimension ranges for n = 2^d + m, m odd, m < 2^d - 2
    const std::uint64_t high = std::uint64_t(1) << (std::bit_width(std::uint64_t(n)) - 1);
    const unsigned m = unsigned(n - high);
    if ((m % 2) == 1 && std::uint64_t(m) + 2 < high) {
        {
            Verdict v;
            v.map_class = MapClass::Fold;
            v.provenance = "fold-codim-range";
            v.annotations.push_back(
                "closed-form criterion; the engine verdicts above must agree with it");
            if (k + 1 < m) {
                v.status = Status::Obstructed;
                Witness w;
                w.kind = "codim-range";
                w.index = m;
                w.threshold = k + 1;
                w.note = "n = 2^d + m with m odd: fold maps are excluded whenever k+1 < m";
                v.witnesses.push_back(std::move(w));
            } else {
                v.status = Status::Inconclusive;
                v.annotations.push_back("the codimension range makes no claim at this k");
            }
            out.verdicts.push_back(std::move(v));
        }
        {
            Verdict v;
            v.map_class = MapClass::Morin;
            v.provenance = "morin-codim-range";
            v.hypotheses.push_back({"codimension-parity", kodd, "the range is proved for odd k"});
            v.annotations.push_back(
                "closed-form criterion; the engine verdicts above must agree with it");
            if (kodd && k + 2 < m) {
                v.status = Status::Obstructed;
                Witness w;
                w.kind = "codim-range";
                w.index = m;
                w.threshold = k + 2;
                w.note = "n = 2^d + m with m odd: Morin maps are excluded whenever k+2 < m";
                v.witnesses.push_back(std::move(w));
            } else {
                v.status = Status::Inconclusive;
                v.annotations.push_back("the codimension range makes no claim at this k");
            }
            out.verdicts.push_back(std::move(v));
        }
    }

    return out;
}

Verdict cp_verdict(unsigned n, unsigned target_dim) {
    if (n < 1 || n > 10000) throw std::invalid_argument("cp_verdict: need 1 <= n <= 10000");
    if (target_dim < 1 || target_dim > 2 * n)
        throw std::invalid_argument(
            "cp_verdict: target dimension must lie in [1, 2n] (the source has real "
            "dimension 2n)");

    const unsigned k = 2 * n - target_dim;
    Verdict v;
    v.map_class = MapClass::Corank1;
    v.provenance = "cp-pontryagin";
    v.hypotheses.push_back({"target-stably-parallelizable", true, "Euclidean target"});

    const unsigned half = n / 2;  // p_i is carried by nonzero rational cohomology iff i <= n/2
    if (2 * half >= k + 2) {
        const unsigned i = (k + 3) / 2;  // least i with 2i > k+1
        if (i > half) throw std::logic_error("cp_verdict: witness index escaped the range");
        v.status = Status::Obstructed;
        Witness w;
        w.kind = "pontryagin-class";
        w.index = i;
        w.threshold = k;
        std::ostringstream os;
        os << "p_" << i << " = C(" << n + 1 << ", " << i
           << ") y^{2i} is rationally nonzero with 2i > k+1";
        w.note = os.str();
        v.witnesses.push_back(std::move(w));
        v.annotations.push_back(
            "obstructs every map of corank <= 1, hence every fold, cusp and Morin map");
    } else {
        v.status = Status::NotObstructed;
        if (n < k + 2) {
            v.annotations.push_back(
                "existence: real source dimension 2n < 2(k+2), so generic maps to this "
                "target have corank <= 1 (corank1-existence-transversality)");
        } else {
            // only odd n reaches here without the existence margin: n = k+2
            v.annotations.push_back(
                "borderline case (odd n, target n+2): existence of a corank-one map is open");
        }
    }
    return v;
}

VerdictSet cp_verdict_set(unsigned n, unsigned target_dim) {
    Verdict v = cp_verdict(n, target_dim);  // validates the inputs
    VerdictSet out;
    out.space = "cp";
    out.n = n;
    out.target = target_dim;
    out.k = 2 * n - target_dim;
    out.verdicts.push_back(std::move(v));
    return out;
}

}  // namespace charrel
