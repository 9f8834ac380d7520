#include "doctest.h"

#include <charrel/obstruct.hpp>
#include <charrel/parity.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

using namespace charrel;

namespace {

// independent check of a single threshold: enumerate every partition with
// all parts >= l by (degree, length) and look for a separated bucket
bool brute_violated(const OneGenRing& ring, unsigned l) {
    for (unsigned d = 2 * l; d <= ring.n; ++d) {
        std::map<unsigned, std::pair<bool, bool>> seen;  // length -> (value 1?, value 0?)
        bool hit = false;
        for_each_partition(d, l, ring.n, [&](const std::vector<unsigned>& parts) {
            if (hit || parts.size() < 2) return;
            auto& [one, zero] = seen[unsigned(parts.size())];
            (ring.value(parts) ? one : zero) = true;
            if (one && zero) hit = true;
        });
        if (hit) return true;
    }
    return false;
}

unsigned brute_minimal_threshold(const OneGenRing& ring) {
    for (unsigned l = 1;; ++l)
        if (!brute_violated(ring, l)) return l;
}

CharNumbers zero_functional(unsigned n) {
    CharNumbers cn;
    cn.n = n;
    for_each_partition(n, 1, n, [&](const std::vector<unsigned>& parts) {
        cn.entries.emplace_back(parts, 0);
    });
    return cn;
}

void set_value(CharNumbers& cn, std::vector<unsigned> parts, int value) {
    std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
    for (auto& [p, v] : cn.entries)
        if (p == parts) {
            v = value;
            return;
        }
    REQUIRE(false);
}

const Verdict& verdict_for(const VerdictSet& set, MapClass mc) {
    const Verdict* v = set.first_for(mc);
    REQUIRE(v != nullptr);
    return *v;
}

}  // namespace

TEST_CASE("projective ring data") {
    const OneGenRing r13 = OneGenRing::rp(13);
    CHECK(r13.n == 13);
    CHECK(r13.orientable);
    for (unsigned j = 1; j <= 13; ++j) CHECK(r13.coeff_at(j) == (binom_parity(14, j) == 1));
    // values: product of coefficients, dead past the top degree
    CHECK(r13.value({4, 6}) == 1);
    CHECK(r13.value({5, 5}) == 0);
    CHECK(r13.value({4, 4, 6}) == 0);  // degree 14 > 13
    CHECK(r13.value({}) == 1);
    CHECK_THROWS_AS((void)r13.value({0, 4}), std::invalid_argument);

    CHECK_FALSE(OneGenRing::rp(12).orientable);

    // all coefficients below the top survive at n = 2^D - 2 ...
    const OneGenRing r14 = OneGenRing::rp(14);
    for (unsigned j = 1; j <= 14; ++j) CHECK(r14.coeff_at(j));
    // ... and every positive-degree one dies at n = 2^D - 1
    const OneGenRing r15 = OneGenRing::rp(15);
    for (unsigned j = 1; j <= 15; ++j) CHECK_FALSE(r15.coeff_at(j));
}

TEST_CASE("minimal threshold matches a brute-force scan") {
    for (unsigned n = 4; n <= 40; ++n) {
        const OneGenRing ring = OneGenRing::rp(n);
        CHECK(minimal_threshold(ring) == brute_minimal_threshold(ring));
    }
}

TEST_CASE("minimal threshold closed form for projective spaces") {
    for (unsigned n = 4; n <= 128; ++n) {
        const std::uint64_t high = std::uint64_t(1) << (std::bit_width(std::uint64_t(n)) - 1);
        const unsigned m = unsigned(n - high);
        const OneGenRing ring = OneGenRing::rp(n);
        if (std::uint64_t(m) + 2 < high) {
            CHECK(minimal_threshold(ring) == m + 1);
        } else {
            // n = 2^D - 2 (every class alive) and n = 2^D - 1 (every class
            // dead): one side of a violating pair can never be formed
            CHECK(minimal_threshold(ring) == 1);
        }
    }
}

TEST_CASE("relation pair witnesses on the landmark spaces") {
    // Morin relations on RP^13: parts >= 4, first violation in degree 10
    const Verdict morin = relation_check(OneGenRing::rp(13), 1, 0, MapClass::Morin);
    CHECK(morin.status == Status::Obstructed);
    CHECK(morin.provenance == "morin-sw-equalities");
    REQUIRE(morin.witnesses.size() == 1);
    const Witness& mw = morin.witnesses[0];
    CHECK(mw.kind == "relation-pair");
    CHECK(mw.degree == 10);
    CHECK(mw.length == 2);
    CHECK(mw.threshold == 4);
    CHECK(mw.lhs == std::vector<unsigned>{4, 6});
    CHECK(mw.rhs == std::vector<unsigned>{5, 5});

    // fold relations on RP^11: parts >= 3, first violation in degree 8
    const Verdict fold = relation_check(OneGenRing::rp(11), 1, 0, MapClass::Fold);
    CHECK(fold.status == Status::Obstructed);
    CHECK(fold.provenance == "fold-sw-equalities");
    REQUIRE(fold.witnesses.size() == 1);
    const Witness& fw = fold.witnesses[0];
    CHECK(fw.degree == 8);
    CHECK(fw.threshold == 3);
    CHECK(fw.lhs == std::vector<unsigned>{4, 4});
    CHECK(fw.rhs == std::vector<unsigned>{3, 5});

    // witness sides really take the claimed values
    CHECK(OneGenRing::rp(13).value(mw.lhs) == 1);
    CHECK(OneGenRing::rp(13).value(mw.rhs) == 0);
    CHECK(OneGenRing::rp(11).value(fw.lhs) == 1);
    CHECK(OneGenRing::rp(11).value(fw.rhs) == 0);
}

TEST_CASE("rings with one-sided coefficient patterns never violate pairs") {
    // every positive class dead: the nonzero side cannot be formed
    for (unsigned a = 3; a <= 7; ++a) {
        const OneGenRing ring = OneGenRing::rp((1u << a) - 1);
        CHECK(relation_check(ring, 1, 0, MapClass::Fold).status == Status::NotObstructed);
        CHECK(relation_check(ring, 3, 0, MapClass::Morin).status == Status::NotObstructed);
        CHECK(minimal_threshold(ring) == 1);
    }
    // every class alive: the zero side cannot be formed, but the tame
    // vanishing criterion obstructs everywhere it applies
    const OneGenRing dense = OneGenRing::rp(14);
    CHECK(relation_check(dense, 3, 0, MapClass::Cusp).status == Status::NotObstructed);
    CHECK(relation_check(dense, 1, 0, MapClass::TameCorank1).status == Status::Obstructed);
    CHECK(relation_check(dense, 1, 0, MapClass::TameCorank1).provenance == "sw-vanishing-tame");
}

TEST_CASE("relation checks respect their hypotheses") {
    const OneGenRing odd = OneGenRing::rp(13);    // orientable
    const OneGenRing even = OneGenRing::rp(12);   // not orientable

    // Morin: k even or non-orientable source degrade to inconclusive
    CHECK(relation_check(odd, 2, 0, MapClass::Morin).status == Status::Inconclusive);
    CHECK(relation_check(even, 1, 0, MapClass::Morin).status == Status::Inconclusive);
    // cusp: parity only
    CHECK(relation_check(even, 1, 0, MapClass::Cusp).status != Status::Inconclusive);
    CHECK(relation_check(odd, 2, 0, MapClass::Cusp).status == Status::Inconclusive);
    // fold with odd k and a non-orientable source reroutes through cusp
    const Verdict rerouted = relation_check(even, 1, 0, MapClass::Fold);
    CHECK(rerouted.provenance == "cusp-sw-equalities");
    // fold with even k rides the tameness vanishing criterion
    const Verdict tame = relation_check(even, 2, 0, MapClass::Fold);
    CHECK(tame.provenance == "sw-vanishing-tame");
    CHECK(tame.status == Status::Obstructed);  // RP^12 has classes above degree 4
    // vanishing criteria only proved for stably parallelizable targets
    CHECK(relation_check(even, 2, 1, MapClass::Fold).status == Status::Inconclusive);
    CHECK(relation_check(odd, 1, 1, MapClass::TameCorank1).status == Status::Inconclusive);
    // arbitrary corank 1 carries no mod-2 criterion
    CHECK(relation_check(odd, 1, 0, MapClass::Corank1).status == Status::Inconclusive);

    // a violation at threshold t persists at every lower threshold: raising
    // K through the same map class can only lose obstructions monotonically
    for (unsigned n : {11u, 13u, 21u, 37u}) {
        const OneGenRing ring = OneGenRing::rp(n);
        bool seen_not = false;
        for (unsigned K = 0; K <= 8; ++K) {
            const Verdict v = relation_check(ring, 1, K, MapClass::Fold);
            if (v.status != Status::Obstructed) seen_not = true;
            if (seen_not) CHECK(v.status != Status::Obstructed);
        }
    }
}

TEST_CASE("codimension-1 classification agrees with the engine") {
    CHECK(classify_codim1(6).cls == Codim1Class::NullCobordant);
    CHECK(classify_codim1(2).cls == Codim1Class::NullCobordant);
    CHECK(classify_codim1(3).cls == Codim1Class::NullCobordant);
    CHECK(classify_codim1(16).cls == Codim1Class::A1);
    CHECK(classify_codim1(4).cls == Codim1Class::A1);
    CHECK(classify_codim1(5).cls == Codim1Class::B1);
    CHECK(classify_codim1(11).cls == Codim1Class::B1);
    CHECK(classify_codim1(23).cls == Codim1Class::B1);
    CHECK(classify_codim1(9).cls == Codim1Class::C2);
    CHECK(classify_codim1(19).cls == Codim1Class::C2);

    const Codim1Report nine = classify_codim1(9);
    CHECK(nine.quotient.quotient_dim == 2);
    CHECK(nine.quotient.complement ==
          std::vector<std::pair<unsigned, unsigned>>{{2, 5}, {4, 1}});

    // the computed quotient dimension is cross-checked inside the call, so a
    // clean pass over a range is already a strong statement
    for (unsigned n = 2; n <= 200; ++n) CHECK_NOTHROW((void)classify_codim1(n));
}

TEST_CASE("quotient report carries the spec fields") {
    const QuotientReport q = quotient_report(9, 1);
    CHECK(q.n == 9);
    CHECK(q.k == 1);
    CHECK(q.dim_im_rho == 4);
    CHECK(q.dim_relations == 2);
    CHECK(q.quotient_dim == 2);
    CHECK(q.unit_included);
    CHECK(q.complement == std::vector<std::pair<unsigned, unsigned>>{{2, 5}, {4, 1}});

    const QuotientReport q8 = quotient_report(8, 1);
    CHECK(q8.quotient_dim == 1);
    CHECK(q8.complement == std::vector<std::pair<unsigned, unsigned>>{{4, 0}});
}

TEST_CASE("projective-space verdict sets on the landmark targets") {
    // no Morin map RP^13 -> R^12
    const VerdictSet a = rp_verdict(13, 12);
    CHECK(a.k == 1);
    CHECK(a.minimal_threshold == 6);  // 13 = 8 + 5
    CHECK(verdict_for(a, MapClass::Morin).status == Status::Obstructed);
    CHECK(verdict_for(a, MapClass::Morin).provenance == "morin-sw-equalities");
    CHECK(verdict_for(a, MapClass::Fold).status == Status::Obstructed);
    CHECK(verdict_for(a, MapClass::Cusp).status == Status::Obstructed);
    CHECK(a.any_obstructed());

    // no fold map RP^11 -> R^10, while the Morin question stays open
    const VerdictSet b = rp_verdict(11, 10);
    CHECK(b.minimal_threshold == 4);  // 11 = 8 + 3
    CHECK(verdict_for(b, MapClass::Fold).status == Status::Obstructed);
    CHECK(verdict_for(b, MapClass::Fold).provenance == "fold-sw-equalities");
    CHECK(verdict_for(b, MapClass::Morin).status == Status::NotObstructed);

    // the closed-form codimension ranges ride along and agree
    const Verdict* fold_range = nullptr;
    const Verdict* morin_range = nullptr;
    for (const Verdict& v : a.verdicts) {
        if (v.provenance == "fold-codim-range") fold_range = &v;
        if (v.provenance == "morin-codim-range") morin_range = &v;
    }
    REQUIRE(fold_range != nullptr);
    REQUIRE(morin_range != nullptr);
    CHECK(fold_range->status == Status::Obstructed);   // k+1 = 2 < 5
    CHECK(morin_range->status == Status::Obstructed);  // k+2 = 3 < 5
}

TEST_CASE("closed-form ranges never outrun the engine") {
    for (unsigned n = 5; n <= 128; n += 2) {
        const std::uint64_t high = std::uint64_t(1) << (std::bit_width(std::uint64_t(n)) - 1);
        const unsigned m = unsigned(n - high);
        if ((m % 2) != 1 || std::uint64_t(m) + 2 >= high) continue;
        for (unsigned k = 0; k + 2 < m; ++k) {
            const VerdictSet set = rp_verdict(n, n - k);
            // fold range fires for k+1 < m; checked against the engine route
            if (k + 1 < m) CHECK(verdict_for(set, MapClass::Fold).status == Status::Obstructed);
            if ((k % 2) == 1 && k + 2 < m)
                CHECK(verdict_for(set, MapClass::Morin).status == Status::Obstructed);
        }
    }
}

TEST_CASE("K-theoretic bounds on RP^31") {
    CHECK(ktheory_profile(5).kappa == 12);

    // tame corank-1 maps RP^31 -> R^{22+2j} for 0 <= j <= 4 are obstructed
    for (unsigned j = 0; j <= 4; ++j) {
        const VerdictSet set = rp_verdict(31, 22 + 2 * j);
        const Verdict& v = verdict_for(set, MapClass::TameCorank1);
        CHECK(v.status == Status::Obstructed);
        CHECK(v.provenance == "rp-ktheory-gdim");
    }
    // fold maps RP^31 -> R^{21+2j} for 0 <= j <= 5 (even codimension: tame)
    for (unsigned j = 0; j <= 5; ++j) {
        const VerdictSet set = rp_verdict(31, 21 + 2 * j);
        CHECK(set.k == 10 - 2 * j);
        const Verdict& v = verdict_for(set, MapClass::Fold);
        CHECK(v.status == Status::Obstructed);
        CHECK(v.provenance == "rp-ktheory-gdim");
    }
    // outside the bound (k = 11) nothing fires: every class of RP^31 is zero
    const VerdictSet out = rp_verdict(31, 20);
    CHECK(verdict_for(out, MapClass::Fold).status == Status::NotObstructed);
    CHECK(verdict_for(out, MapClass::Morin).status == Status::NotObstructed);
    CHECK(verdict_for(out, MapClass::TameCorank1).status == Status::NotObstructed);
    CHECK_FALSE(out.any_obstructed());
}

TEST_CASE("dense projective spaces obstruct through class vanishing") {
    // RP^14 has every class below the top alive; pairs can't separate but
    // the tame criterion fires for every applicable codimension
    const VerdictSet set = rp_verdict(14, 13);
    CHECK(verdict_for(set, MapClass::Fold).status == Status::NotObstructed);  // k=1 via cusp
    CHECK(verdict_for(set, MapClass::TameCorank1).status == Status::Obstructed);
    const VerdictSet even = rp_verdict(14, 12);  // k = 2: fold rides tameness
    CHECK(verdict_for(even, MapClass::Fold).status == Status::Obstructed);
    CHECK(verdict_for(even, MapClass::Fold).provenance == "sw-vanishing-tame");
}

TEST_CASE("rp verdicts validate their inputs") {
    CHECK_THROWS_AS((void)rp_verdict(13, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)rp_verdict(13, 14), std::invalid_argument);
    CHECK_THROWS_AS((void)rp_verdict(1, 1), std::invalid_argument);
    CHECK_NOTHROW((void)rp_verdict(13, 13));  // k = 0 is a legal question
}

TEST_CASE("complex projective verdicts") {
    // landmarks: CP^2 -> Q^4, CP^4 -> Q^7 and Q^8, CP^49 -> Q^93
    CHECK(cp_verdict(2, 4).status == Status::Obstructed);
    CHECK(cp_verdict(4, 7).status == Status::Obstructed);
    CHECK(cp_verdict(4, 8).status == Status::Obstructed);
    const Verdict big = cp_verdict(49, 93);
    CHECK(big.status == Status::Obstructed);
    CHECK(big.provenance == "cp-pontryagin");
    REQUIRE(big.witnesses.size() == 1);
    CHECK(big.witnesses[0].kind == "pontryagin-class");
    CHECK(big.witnesses[0].index == 4);  // k = 5: least i with 2i > 6

    // even n below k+2: no obstruction, and generic maps already comply
    for (unsigned n = 2; n <= 10; n += 2)
        for (unsigned k = n + 1; k <= std::min(n + 3, 2 * n - 1); ++k) {
            const Verdict v = cp_verdict(n, 2 * n - k);
            CHECK(v.status == Status::NotObstructed);
            REQUIRE(!v.annotations.empty());
            CHECK(v.annotations[0].find("existence") != std::string::npos);
        }
    // odd n at the borderline target n+2
    const Verdict border = cp_verdict(3, 5);
    CHECK(border.status == Status::NotObstructed);
    REQUIRE(!border.annotations.empty());
    CHECK(border.annotations[0].find("borderline") != std::string::npos);

    // the formula: obstructed exactly when 2*floor(n/2) >= k+2
    for (unsigned n = 1; n <= 30; ++n)
        for (unsigned target = 1; target <= 2 * n; ++target) {
            const unsigned k = 2 * n - target;
            const bool expect = 2 * (n / 2) >= k + 2;
            CHECK(cp_verdict(n, target).obstructed() == expect);
        }

    CHECK_THROWS_AS((void)cp_verdict(4, 9), std::invalid_argument);
    CHECK_THROWS_AS((void)cp_verdict(4, 0), std::invalid_argument);

    const VerdictSet set = cp_verdict_set(49, 93);
    CHECK(set.space == "cp");
    CHECK(set.k == 5);
    CHECK(set.any_obstructed());
}

TEST_CASE("numbers: zero functional is never obstructed") {
    for (unsigned n : {6u, 10u, 13u}) {
        const NumbersReport rep = numbers_check(zero_functional(n), 1, MapClass::Fold, 1);
        CHECK(rep.verdict.status == Status::NotObstructed);
        CHECK(rep.k_eff == 1);
        REQUIRE(rep.quotient.has_value());
        for (const auto& [parts, value] : rep.residual) CHECK(value == 0);
    }
}

TEST_CASE("numbers: equal-length separation is caught") {
    CharNumbers cn = zero_functional(10);
    set_value(cn, {4, 6}, 1);
    const NumbersReport rep = numbers_check(cn, 1, MapClass::Fold, 1);
    CHECK(rep.verdict.status == Status::Obstructed);
    CHECK(rep.verdict.provenance == "blowup-number-equalities");
    REQUIRE(rep.verdict.witnesses.size() == 1);
    const Witness& w = rep.verdict.witnesses[0];
    CHECK(w.kind == "number-pair");
    CHECK(w.length == 2);
    CHECK(w.lhs == std::vector<unsigned>{6, 4});
}

TEST_CASE("numbers: universal relation rows are enforced") {
    // n = 6 has a zero-dimensional quotient, so any surviving vector that is
    // nonzero must pair to 1 against some relation row
    CharNumbers cn = zero_functional(6);
    set_value(cn, {4, 2}, 1);
    set_value(cn, {3, 3}, 1);  // keep equal-length values constant
    const NumbersReport rep = numbers_check(cn, 1, MapClass::Fold, 1);
    CHECK(rep.verdict.status == Status::Obstructed);
    CHECK(rep.verdict.provenance == "dold-relations");
    REQUIRE(rep.verdict.witnesses.size() == 1);
    CHECK(rep.verdict.witnesses[0].kind == "relation-row");
}

TEST_CASE("numbers: the power-of-two pattern survives, elsewhere it dies") {
    // all numbers zero except w_2^{n/2} = w_n = 1
    auto pattern = [](unsigned n) {
        CharNumbers cn = zero_functional(n);
        set_value(cn, std::vector<unsigned>(n / 2, 2), 1);
        set_value(cn, {n}, 1);
        return cn;
    };
    const NumbersReport ok = numbers_check(pattern(16), 1, MapClass::Fold, 1);
    CHECK(ok.verdict.status == Status::NotObstructed);
    REQUIRE(ok.quotient.has_value());
    CHECK(ok.quotient->quotient_dim == 1);
    REQUIRE(ok.residual.size() == 1);
    CHECK(ok.residual[0].second == 1);

    CHECK(numbers_check(pattern(12), 1, MapClass::Fold, 1).verdict.status ==
          Status::Obstructed);
    CHECK(numbers_check(pattern(20), 1, MapClass::Fold, 1).verdict.status ==
          Status::Obstructed);
}

TEST_CASE("numbers: hypothesis closure and contradictions") {
    CharNumbers cn = zero_functional(12);
    set_value(cn, {11, 1}, 1);
    CHECK_THROWS_AS((void)numbers_check(cn, 1, MapClass::Fold, 1), std::runtime_error);

    // closure pushes w_1..w_4 = 0 out to w_7: a nonzero value on a part 5
    // partition contradicts the closed hypothesis
    CharNumbers closed = zero_functional(12);
    set_value(closed, {7, 5}, 1);
    CHECK_THROWS_AS((void)numbers_check(closed, 1, MapClass::Fold, 4), std::runtime_error);
    const NumbersReport rep = numbers_check(zero_functional(12), 1, MapClass::Fold, 4);
    CHECK(rep.hyp_closed == 7);
}

TEST_CASE("numbers: malformed functionals are rejected") {
    CharNumbers missing = zero_functional(8);
    missing.entries.pop_back();
    CHECK_THROWS_AS((void)numbers_check(missing, 1, MapClass::Fold, 1), std::invalid_argument);

    CharNumbers dup = zero_functional(8);
    dup.entries.emplace_back(std::vector<unsigned>{8}, 0);
    CHECK_THROWS_AS((void)numbers_check(dup, 1, MapClass::Fold, 1), std::invalid_argument);

    CharNumbers bad_sum = zero_functional(8);
    bad_sum.entries.emplace_back(std::vector<unsigned>{9}, 0);
    CHECK_THROWS_AS((void)numbers_check(bad_sum, 1, MapClass::Fold, 1), std::invalid_argument);

    CharNumbers bad_value = zero_functional(8);
    bad_value.entries[0].second = 2;
    CHECK_THROWS_AS((void)numbers_check(bad_value, 1, MapClass::Fold, 1),
                    std::invalid_argument);

    CHECK_THROWS_AS((void)numbers_check(zero_functional(8), 0, MapClass::Fold, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)numbers_check(zero_functional(8), 8, MapClass::Fold, 1),
                    std::invalid_argument);
}

TEST_CASE("numbers: per-class gating") {
    CHECK(numbers_check(zero_functional(10), 2, MapClass::Morin, 3).verdict.status ==
          Status::Inconclusive);
    CHECK(numbers_check(zero_functional(10), 2, MapClass::Cusp, 3).verdict.status ==
          Status::Inconclusive);
    CHECK(numbers_check(zero_functional(10), 1, MapClass::Corank1, 1).verdict.status ==
          Status::Inconclusive);
    // hypothesis too weak for the blowup relations
    CHECK(numbers_check(zero_functional(10), 3, MapClass::Fold, 2).verdict.status ==
          Status::Inconclusive);
    CHECK(numbers_check(zero_functional(10), 1, MapClass::Morin, 1).verdict.status ==
          Status::Inconclusive);  // k_eff = 2 needs hyp >= 2

    // even-codimension fold: vanishing criterion
    CharNumbers cn = zero_functional(10);
    set_value(cn, {5, 5}, 1);
    const NumbersReport even = numbers_check(cn, 2, MapClass::Fold, 0);
    CHECK(even.verdict.status == Status::Obstructed);
    CHECK(even.verdict.provenance == "sw-vanishing-tame");
    REQUIRE(even.verdict.witnesses.size() == 1);
    CHECK(even.verdict.witnesses[0].kind == "number-nonzero");

    // values supported on small parts slip under the even-fold criterion
    CharNumbers small = zero_functional(10);
    set_value(small, {3, 3, 2, 2}, 1);
    CHECK(numbers_check(small, 2, MapClass::Fold, 0).verdict.status ==
          Status::NotObstructed);

    // tame corank-1 applies the same scan one degree up
    CharNumbers tame = zero_functional(10);
    set_value(tame, {6, 4}, 1);
    CHECK(numbers_check(tame, 2, MapClass::TameCorank1, 0).verdict.status ==
          Status::Obstructed);
}

TEST_CASE("numbers: high-codimension hypotheses pin everything on the top class") {
    // With w_1..w_9 = 0 the closure reaches degree 15, so the only monomial of
    // the universal unit relation that can survive in degree 24 is w_24 itself:
    // the checker must reject w_24 = 1 outright through a relation row.
    CharNumbers cn = zero_functional(24);
    set_value(cn, {24}, 1);
    const NumbersReport rep = numbers_check(cn, 9, MapClass::Fold, 9);
    CHECK(rep.hyp_closed == 15);
    CHECK(rep.verdict.status == Status::Obstructed);
    CHECK(rep.verdict.provenance == "dold-relations");
    REQUIRE(!rep.verdict.witnesses.empty());
    CHECK(rep.verdict.witnesses[0].kind == "relation-row");

    // the zero functional passes, and the coarse annotations still apply
    const NumbersReport zrep = numbers_check(zero_functional(24), 9, MapClass::Fold, 9);
    CHECK(zrep.verdict.status == Status::NotObstructed);
    for (const auto& [parts, value] : zrep.residual) CHECK(value == 0);
    bool highcodim_note = false, exclusion_note = false;
    for (const std::string& a : zrep.verdict.annotations) {
        if (a.find("fold-highcodim-wn") != std::string::npos) highcodim_note = true;
        if (a.find("n-k is not 1, 3 or 7") != std::string::npos) exclusion_note = true;
    }
    CHECK(highcodim_note);
    CHECK(exclusion_note);  // n - k = 15

    // Morin in codimension 9 from a 20-manifold: the effective vanishing range
    // w_1..w_10 closes to 15 as well, leaving a one-dimensional ambient slice
    // where the unit relation alone kills the top number.
    CharNumbers morin = zero_functional(20);
    set_value(morin, {20}, 1);
    const NumbersReport mrep = numbers_check(morin, 9, MapClass::Morin, 10);
    CHECK(mrep.verdict.status == Status::Obstructed);
    CHECK(mrep.verdict.provenance == "dold-relations");

    const NumbersReport mzero = numbers_check(zero_functional(20), 9, MapClass::Morin, 10);
    CHECK(mzero.verdict.status == Status::NotObstructed);
    bool morin_note = false;
    for (const std::string& a : mzero.verdict.annotations)
        if (a.find("morin-highcodim-wn") != std::string::npos) morin_note = true;
    CHECK(morin_note);
}

TEST_CASE("numbers: verdicts match a symbolic expansion of the relation space") {
    // With w_1 = 0 given, a functional passes the check exactly when it kills
    // every universal relation class and every equal-length difference. The
    // symbolic side expands [w^{-1} Sq p]_n monomial by monomial; the checker
    // goes through the substituted slice vector. They must agree always.
    std::mt19937 rng(20260817);
    for (unsigned n = 6; n <= 13; ++n) {
        const SymbolicContext ctx(n, 1);
        // the functional table always enumerates partitions of n in the same
        // order, so generators can be frozen as index lists into that table
        std::map<std::vector<unsigned>, std::size_t> index_of;
        std::size_t table_size = 0;
        for_each_partition(n, 1, n, [&](const std::vector<unsigned>& parts) {
            index_of.emplace(parts, table_size++);
        });
        std::vector<std::vector<std::size_t>> gens;
        for (unsigned d = 0; d + 1 <= n; ++d)
            for_each_partition(d, 1, d ? d : 1, [&](const std::vector<unsigned>& parts) {
                WMonomial p;
                for (unsigned q : parts) p = mul(p, WMonomial::var(q));
                std::vector<std::size_t> idx;
                const WPoly g = ctx.dold_element(p, n);
                for (const WMonomial& m : g.terms())
                    idx.push_back(index_of.at(
                        std::vector<unsigned>(m.parts.begin(), m.parts.begin() + m.len)));
                gens.push_back(std::move(idx));
            });

        for (int trial = 0; trial < 40; ++trial) {
            CharNumbers cn;
            cn.n = n;
            const bool per_length = trial % 2 == 0;
            std::map<unsigned, int> by_len;
            for_each_partition(n, 1, n, [&](const std::vector<unsigned>& parts) {
                int value = 0;
                if (parts.back() >= 2) {  // keep w_1 = 0 consistent
                    if (per_length) {
                        auto [it, fresh] = by_len.try_emplace(unsigned(parts.size()),
                                                              int(rng() & 1));
                        value = it->second;
                        (void)fresh;
                    } else {
                        value = int(rng() & 1);
                    }
                }
                cn.entries.emplace_back(parts, value);
            });

            const NumbersReport rep = numbers_check(cn, 1, MapClass::Fold, 1);
            REQUIRE(rep.verdict.status != Status::Inconclusive);

            // brute truth: any equal-length separation or any relation class
            // evaluating to 1 obstructs
            bool brute = false;
            std::map<unsigned, int> first_by_len;
            for (const auto& [parts, value] : cn.entries) {
                if (parts.back() < 2) continue;
                auto [it, fresh] = first_by_len.try_emplace(unsigned(parts.size()), value);
                if (!fresh && it->second != value) brute = true;
            }
            if (!brute) {
                for (const std::vector<std::size_t>& g : gens) {
                    int acc = 0;
                    for (std::size_t idx : g) acc ^= cn.entries[idx].second;
                    if (acc) {
                        brute = true;
                        break;
                    }
                }
            }
            CHECK(rep.verdict.obstructed() == brute);
        }
    }
}

TEST_CASE("rank-2 reduction collapses onto the top power") {
    const Rank2Report two = rank2_reduction(2);
    CHECK(two.basis_dim == 2);
    CHECK(two.rank == 1);
    CHECK(two.quotient_dim == 1);
    CHECK(two.complement == std::vector<std::pair<unsigned, unsigned>>{{2, 0}});

    for (unsigned n = 2; n <= 200; ++n) {
        const Rank2Report rep = rank2_reduction(n);
        CHECK(rep.quotient_dim == 1);
        REQUIRE(rep.complement.size() == 1);
        CHECK(rep.complement[0] == std::pair<unsigned, unsigned>{n, 0});
    }

    CHECK_THROWS_AS((void)rank2_reduction(1), std::invalid_argument);
}

TEST_CASE("sweep violation rule") {
    CHECK_FALSE(sweep_violation(10, 3, 0));
    CHECK(sweep_violation(10, 3, 2));
    CHECK_FALSE(sweep_violation(16, 3, 1));   // 2^4, s = 4 >= 3
    CHECK_FALSE(sweep_violation(17, 3, 1));   // 2^4 + 1
    CHECK_FALSE(sweep_violation(8, 3, 1));    // 2^3, s = 3 >= 3
    CHECK(sweep_violation(4, 3, 1));          // s = 2 < a+1 = 3
    CHECK(sweep_violation(12, 3, 1));         // not 2^s or 2^s + 1
    CHECK(sweep_violation(16, 7, 1) == false);  // a = 3, s = 4 >= 4
    CHECK(sweep_violation(8, 7, 1));            // s = 3 < 4
}

TEST_CASE("sweep over a small grid") {
    SweepOptions opts;
    opts.n_max = 60;
    opts.ks = {3, 7};
    opts.jobs = 1;
    unsigned completions = 0;
    opts.on_complete = [&](const SweepRecord&) { ++completions; };
    const SweepResult serial = run_sweep(opts);
    CHECK(serial.violations.empty());
    CHECK(completions == serial.records.size());

    // records ascend by (n, k) and match direct engine calls
    for (std::size_t i = 1; i < serial.records.size(); ++i) {
        const auto &p = serial.records[i - 1], &q = serial.records[i];
        CHECK(std::make_pair(p.n, p.k) < std::make_pair(q.n, q.k));
    }
    for (std::size_t i = 0; i < serial.records.size(); i += 17) {
        const SweepRecord& r = serial.records[i];
        const QuotientResult q = relation_image(r.n, r.k);
        CHECK(r.quotient_dim == q.quotient_dim());
        CHECK(r.complement == q.complement);
    }

    // worker count must not affect the outcome
    opts.on_complete = nullptr;
    opts.jobs = 4;
    const SweepResult parallel = run_sweep(opts);
    REQUIRE(parallel.records.size() == serial.records.size());
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
        CHECK(parallel.records[i].n == serial.records[i].n);
        CHECK(parallel.records[i].k == serial.records[i].k);
        CHECK(parallel.records[i].quotient_dim == serial.records[i].quotient_dim);
        CHECK(parallel.records[i].complement == serial.records[i].complement);
    }

    // resumed records short-circuit their tasks and keep their payloads
    SweepOptions resumed = opts;
    resumed.resumed = serial.records;
    unsigned recomputed = 0;
    resumed.on_complete = [&](const SweepRecord&) { ++recomputed; };
    const SweepResult again = run_sweep(resumed);
    CHECK(recomputed == 0);
    for (std::size_t i = 0; i < serial.records.size(); ++i)
        CHECK(again.records[i].elapsed_ms == serial.records[i].elapsed_ms);

    CHECK_THROWS_AS((void)run_sweep(SweepOptions{.n_max = 10, .ks = {4}}), std::invalid_argument);
}

TEST_CASE("auto k set") {
    CHECK(auto_k_set(300) == std::vector<unsigned>{3, 7, 15, 31, 63, 127, 255});
    CHECK(auto_k_set(4) == std::vector<unsigned>{3});
    CHECK(auto_k_set(3).empty());
    const std::vector<unsigned> big = auto_k_set(1200);
    CHECK(big.back() == 1023);
}

TEST_CASE("map class and status names round-trip") {
    for (MapClass mc : {MapClass::Fold, MapClass::Cusp, MapClass::Morin,
                        MapClass::TameCorank1, MapClass::Corank1})
        CHECK(parse_map_class(map_class_name(mc)) == mc);
    CHECK_THROWS_AS((void)parse_map_class("swallowtail"), std::invalid_argument);
    CHECK(map_class_delta(MapClass::Fold) == 0);
    CHECK(map_class_delta(MapClass::Cusp) == 1);
    CHECK(map_class_delta(MapClass::TameCorank1) == 1);
}
