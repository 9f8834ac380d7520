#include "charrel/obstruct.hpp"

#include "charrel/parity.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace charrel {

namespace {

std::vector<unsigned> canonical_parts(std::vector<unsigned> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
    return parts;
}

std::string parts_text(const std::vector<unsigned>& parts) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " " : "") << parts[i];
    os << ")";
    return os.str();
}

}  // namespace

int CharNumbers::value(std::vector<unsigned> parts) const {
    const std::vector<unsigned> key = canonical_parts(std::move(parts));
    for (const auto& [p, v] : entries)
        if (canonical_parts(p) == key) return v;
    throw std::invalid_argument("CharNumbers::value: no entry for partition " + parts_text(key));
}

NumbersReport numbers_check(const CharNumbers& cn, unsigned k, MapClass mc,
                            unsigned vanishing_hyp) {
    const unsigned n = cn.n;
    if (n < 2 || n > 40) throw std::invalid_argument("numbers_check: need 2 <= n <= 40");
    if (k < 1 || k >= n) throw std::invalid_argument("numbers_check: need 1 <= k < n");
    if (vanishing_hyp > n)
        throw std::invalid_argument("numbers_check: vanishing_hyp exceeds the dimension");

    // canonical table, validated for duplicates and stray partitions
    std::map<std::vector<unsigned>, int> table;
    for (const auto& [parts, value] : cn.entries) {
        if (value != 0 && value != 1)
            throw std::invalid_argument("numbers_check: values must be 0 or 1");
        unsigned sum = 0;
        for (unsigned p : parts) {
            if (p == 0) throw std::invalid_argument("numbers_check: parts must be positive");
            sum += p;
        }
        if (sum != n)
            throw std::invalid_argument("numbers_check: partition " + parts_text(parts) +
                                        " does not sum to n");
        auto key = canonical_parts(parts);
        if (!table.emplace(std::move(key), value).second)
            throw std::invalid_argument("numbers_check: duplicate entry for partition " +
                                        parts_text(canonical_parts(parts)));
    }
    std::size_t expected = 0;
    for_each_partition(n, 1, n, [&](const std::vector<unsigned>&) { ++expected; });
    if (table.size() != expected) {
        std::ostringstream os;
        os << "numbers_check: the functional must cover every partition of " << n
           << " exactly once (" << table.size() << " of " << expected << " present)";
        throw std::invalid_argument(os.str());
    }

    NumbersReport rep;
    rep.n = n;
    rep.k = k;
    rep.map_class = mc;
    rep.vanishing_hyp = vanishing_hyp;
    rep.delta = map_class_delta(mc);
    rep.k_eff = k + rep.delta;
    Verdict& v = rep.verdict;
    v.map_class = mc;

    if (mc == MapClass::Corank1) {
        v.status = Status::Inconclusive;
        v.provenance = "corank1-pontryagin-vanishing";
        v.annotations.push_back(
            "arbitrary corank-one maps impose no mod-2 number relations; the rational "
            "criterion needs Pontryagin data");
        rep.hyp_closed = vanishing_hyp;
        return rep;
    }

    // close the vanishing hypothesis: with w_1..w_j = 0 and j+1 not a power
    // of two, w_{j+1} vanishes as well, so the zero range extends to the
    // next power of two minus one
    unsigned closed = vanishing_hyp;
    while (closed < n && !std::has_single_bit(std::uint64_t(closed) + 1)) ++closed;
    rep.hyp_closed = closed;

    // the data must not contradict the hypothesis it claims
    for (const auto& [parts, value] : table) {
        if (!value) continue;
        const unsigned least = parts.back();
        if (least <= closed) {
            std::ostringstream os;
            os << "numbers_check: w_" << parts_text(parts) << "[M] = 1 contradicts the "
               << "vanishing hypothesis (w_" << least << " is forced to zero, closure of w_1..w_"
               << vanishing_hyp << " = 0)";
            throw std::runtime_error(os.str());
        }
    }

    const bool kodd = (k % 2) == 1;
    bool vanishing_route = false;  // values with a part >= k+2 must be zero
    bool pair_route = false;       // equal-length equal-degree values must agree
    bool dold_route = false;       // the surviving vector must kill every relation row

    switch (mc) {
        case MapClass::TameCorank1:
            vanishing_route = true;
            pair_route = dold_route = vanishing_hyp >= rep.k_eff;
            if (!dold_route)
                v.annotations.push_back(
                    "vanishing hypothesis below k+1: the relation-row consistency check "
                    "was skipped");
            break;
        case MapClass::Fold:
            if (kodd) {
                pair_route = dold_route = true;
            } else {
                vanishing_route = true;
                v.annotations.push_back(
                    "fold maps of even codimension are tame corank-one maps; the "
                    "class-vanishing criterion carries the load");
            }
            v.hypotheses.push_back({"codimension-parity", kodd,
                                    kodd ? "k odd: the blowup relations apply"
                                         : "k even: every fold map is tame"});
            break;
        case MapClass::Cusp:
        case MapClass::Morin:
            v.hypotheses.push_back({"codimension-parity", kodd,
                                    "the blowup relations are proved for odd k only"});
            if (!kodd) {
                v.status = Status::Inconclusive;
                v.provenance =
                    mc == MapClass::Cusp ? "cusp-sw-equalities" : "morin-sw-equalities";
                return rep;
            }
            if (mc == MapClass::Morin)
                v.hypotheses.push_back({"orientability", vanishing_hyp >= 1,
                                        "w_1 = 0 makes the source orientable, so the Morin "
                                        "map perturbs to a cusp map"});
            pair_route = dold_route = true;
            break;
        default:
            throw std::logic_error("numbers_check: unhandled map class");
    }

    if (pair_route && vanishing_hyp < rep.k_eff) {
        // without w_1..w_{k_eff} = 0 the blowup relations do not factor
        // through the substitution image
        v.hypotheses.push_back({"vanishing-hypothesis", false,
                                "need w_1..w_" + std::to_string(rep.k_eff) +
                                    " = 0 for the number relations to apply"});
        if (mc == MapClass::TameCorank1) {
            pair_route = dold_route = false;  // the vanishing scan below still applies
        } else {
            v.status = Status::Inconclusive;
            v.provenance = "blowup-number-equalities";
            return rep;
        }
    }

    // tame route: every value with a part >= k+2 is forced to zero
    if (vanishing_route) {
        const unsigned thr = k + 2;
        for (const auto& [parts, value] : table) {
            if (!value || parts.front() < thr) continue;
            v.status = Status::Obstructed;
            v.provenance = "sw-vanishing-tame";
            Witness w;
            w.kind = "number-nonzero";
            w.threshold = thr;
            w.lhs = parts;
            w.note = "a tame corank-one map forces every number with a part >= k+2 to vanish";
            v.witnesses.push_back(std::move(w));
            return rep;
        }
    }

    // equal-length values over parts >= k_eff + 1 must be constant
    if (pair_route) {
        std::map<unsigned, std::pair<std::vector<unsigned>, int>> first_by_len;
        bool violated = false;
        Witness w;
        for_each_partition(n, rep.k_eff + 1, n, [&](const std::vector<unsigned>& parts) {
            if (violated) return;
            const int value = table.at(parts);
            auto [it, fresh] = first_by_len.try_emplace(unsigned(parts.size()),
                                                        std::make_pair(parts, value));
            if (fresh || it->second.second == value) return;
            violated = true;
            w.kind = "number-pair";
            w.degree = n;
            w.length = unsigned(parts.size());
            w.threshold = rep.k_eff + 1;
            if (value) {
                w.lhs = parts;
                w.rhs = it->second.first;
            } else {
                w.lhs = it->second.first;
                w.rhs = parts;
            }
            w.note = "numbers of equal length with all parts above the fold degree must agree";
        });
        if (violated) {
            v.status = Status::Obstructed;
            v.provenance = "blowup-number-equalities";
            v.witnesses.push_back(std::move(w));
            return rep;
        }
    }

    // surviving coordinates against the universal relation rows
    const unsigned ambient = n / (rep.k_eff + 1);
    std::vector<std::pair<std::vector<unsigned>, int>> ladder(ambient);
    if (dold_route && ambient >= 1) {
        BitVec psi(ambient);
        for (unsigned h = 1; h <= ambient; ++h) {
            std::vector<unsigned> parts{n - (rep.k_eff + 1) * (h - 1)};
            parts.insert(parts.end(), h - 1, rep.k_eff + 1);
            const int value = table.at(parts);
            ladder[h - 1] = {parts, value};
            if (value) psi.set(h - 1);
        }
        QuotientOptions opts;
        const QuotientResult image = relation_image(n, rep.k_eff, opts);
        for (const BitVec& row : image.image.rows()) {
            if (BitVec::and_parity(psi, row) == 0) continue;
            v.status = Status::Obstructed;
            v.provenance = "dold-relations";
            Witness w;
            w.kind = "relation-row";
            for (unsigned h = 1; h <= ambient; ++h)
                if (row.get(h - 1)) w.lhs.push_back(h);
            w.degree = n;
            w.note = "the surviving numbers pair to 1 against a universal relation row "
                     "(positions are ladder indices)";
            v.witnesses.push_back(std::move(w));
            return rep;
        }
        QuotientReport qr;
        qr.n = image.n;
        qr.k = image.k;
        qr.dim_im_rho = image.ambient_dim;
        qr.dim_relations = image.rank();
        qr.quotient_dim = image.quotient_dim();
        qr.unit_included = image.unit_included;
        for (unsigned h : image.complement)
            qr.complement.emplace_back(h, image.n - (image.k + 1) * h);
        rep.quotient = std::move(qr);
        for (unsigned h : image.complement) rep.residual.push_back(ladder[h - 1]);
    }

    v.status = Status::NotObstructed;
    if (v.provenance.empty())
        v.provenance = (vanishing_route || !dold_route) ? "sw-vanishing-tame" : "dold-relations";

    if (pair_route && !vanishing_route)
        v.annotations.push_back(
            "nonzero numbers with several parts reduce to the ladder family "
            "w_{k_eff+1}^l w_{n-(k_eff+1)l} (spin-fold-numbers)");
    if (mc == MapClass::Fold && kodd && k >= 5 && !std::has_single_bit(std::uint64_t(k) + 1) &&
        vanishing_hyp >= k) {
        v.annotations.push_back(
            "with w_1..w_k = 0 and k+1 not a power of two, every number except w_n[M] is "
            "forced to vanish (fold-highcodim-wn)");
        if (n - k != 1 && n - k != 3 && n - k != 7)
            v.annotations.push_back(
                "external surgery results exclude w_n[M] = 1 when n-k is not 1, 3 or 7, "
                "forcing null-cobordism");
    }
    if (mc == MapClass::Morin && kodd && vanishing_hyp >= k + 1) {
        v.annotations.push_back(
            "with w_1..w_{k+1} = 0 only w_n[M] can survive (morin-highcodim-wn)");
        if (n - k != 5 && n - k != 6)
            v.annotations.push_back(
                "external results exclude w_n[M] = 1 when n-k is not 5 or 6, forcing "
                "null-cobordism");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// rank-2 reduction
// ---------------------------------------------------------------------------

Rank2Report rank2_reduction(unsigned n) {
    if (n < 2 || n > 1024) throw std::invalid_argument("rank2_reduction: need 2 <= n <= 1024");

    // basis w_1^{n-2j} w_2^j for j = 0..n/2; one reduction row per m >= 1
    // expresses w_2^m w_1^{n-2m} through lower w_2-powers:
    //   R(n-2m) = sum_j C(n-2m-1-j, 2m-2j) w_1^{n-2j} w_2^j
    // with analytic binomials (the upper index may be negative).
    const unsigned half = n / 2;
    Gf2Matrix mat(half + 1);
    for (unsigned m = 1; m <= half; ++m) {
        BitVec row(half + 1);
        for (unsigned j = 0; j <= m; ++j)
            if (binom_parity_int(std::int64_t(n) - 2 * m - 1 - j, 2 * (m - j))) row.set(j);
        if (!row.get(m))
            throw std::logic_error("rank2_reduction: a reduction row lost its leading term");
        mat.insert(std::move(row));
    }

    Rank2Report rep;
    rep.n = n;
    rep.basis_dim = half + 1;
    rep.rank = unsigned(mat.rank());
    rep.quotient_dim = rep.basis_dim - rep.rank;
    if (rep.quotient_dim == 1) {
        // the rows are triangular in their top w_2-power, so exactly one
        // dimension survives; w_1^n must represent it, or the reduction would
        // collapse everything
        BitVec top(half + 1);
        top.set(0);
        if (mat.contains(top))
            throw std::logic_error("rank2_reduction: w_1^n fell into the relation span");
        rep.complement.emplace_back(n, 0u);
    } else {
        for (std::size_t j : mat.free_columns())
            rep.complement.emplace_back(n - 2 * unsigned(j), unsigned(j));
    }
    return rep;
}

}  // namespace charrel
