#pragma once

#include <charrel/dold.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

// Verdict layer: turns the relation engine plus the map-class theorems into
// obstruction decisions. Every positive verdict carries a concrete witness
// and a provenance tag naming the criterion that fired; whenever a theorem's
// hypotheses are not met the verdict degrades to "inconclusive" rather than
// guessing.

namespace charrel {

// ---------------------------------------------------------------------------
// rings and map classes
// ---------------------------------------------------------------------------

// A ring of the shape Z2[y]/(y^{n+1}) in which the total tangent class is
// sum_j c_j y^j. Products of Stiefel-Whitney classes evaluate to a single
// coefficient times y^{sum}, so a characteristic-class product is nonzero
// exactly when its parts' coefficients are all 1 and the total degree fits.
struct OneGenRing {
    unsigned n = 0;
    std::vector<std::uint8_t> coeff;  // coeff[j] for 0 <= j <= n; coeff[0] = 1
    bool orientable = false;

    // tangent data of real projective n-space: c_j = C(n+1, j) mod 2
    static OneGenRing rp(unsigned n);

    bool coeff_at(unsigned j) const { return j <= n && coeff[j] != 0; }

    // value of w_{i_1} ... w_{i_r} in top degree awareness: 0 when the total
    // degree exceeds n, otherwise the product of coefficients
    int value(const std::vector<unsigned>& parts) const;
};

enum class MapClass { Fold, Cusp, Morin, TameCorank1, Corank1 };

// number of extra codimensions the relation threshold moves by: fold maps
// relate classes from k+2 up, every other class from k+3 up
unsigned map_class_delta(MapClass mc);
const char* map_class_name(MapClass mc);
// parses "fold" / "cusp" / "morin" / "tame-corank1" / "corank1"
MapClass parse_map_class(const std::string& s);

// ---------------------------------------------------------------------------
// verdicts
// ---------------------------------------------------------------------------

enum class Status { Obstructed, NotObstructed, Inconclusive };
const char* status_name(Status s);

struct HypothesisCheck {
    std::string name;
    bool holds = false;
    std::string note;
};

// One concrete reason. `kind` selects which fields are meaningful:
//   "relation-pair"      lhs/rhs partitions, degree, length, threshold
//   "class-nonvanishing" index = i with w_i != 0 where vanishing is forced
//   "ktheory-bound"      index = kappa, note carries the bound
//   "pontryagin-class"   index = i with p_i != 0 rationally
//   "number-pair"        lhs/rhs partitions of n with unequal values
//   "relation-row"       lhs = slice positions h of a universal relation row
//                        pairing to 1 against the given numbers
struct Witness {
    std::string kind;
    unsigned degree = 0, length = 0, threshold = 0, index = 0;
    std::vector<unsigned> lhs, rhs;
    std::string note;
};

struct Verdict {
    MapClass map_class = MapClass::Fold;
    Status status = Status::Inconclusive;
    std::string provenance;  // tag of the criterion applied
    std::vector<HypothesisCheck> hypotheses;
    std::vector<Witness> witnesses;
    std::vector<std::string> annotations;

    bool obstructed() const { return status == Status::Obstructed; }
};

struct VerdictSet {
    std::string space;  // "rp" or "cp"
    unsigned n = 0, target = 0, k = 0;
    // least l such that no relation with all parts >= l is violated
    unsigned minimal_threshold = 0;
    std::vector<Verdict> verdicts;

    bool any_obstructed() const;
    const Verdict* first_for(MapClass mc) const;
};

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

struct QuotientReport {
    unsigned n = 0, k = 0;
    unsigned dim_im_rho = 0;    // floor(n/(k+1))
    unsigned dim_relations = 0; // rank of the relation image
    unsigned quotient_dim = 0;
    bool unit_included = true;
    // monomials x^h t^{n-(k+1)h} spanning the quotient, as (x-exp, t-exp)
    std::vector<std::pair<unsigned, unsigned>> complement;
};

QuotientReport quotient_report(unsigned n, unsigned k,
                               QuotientEngine engine = QuotientEngine::Auto,
                               bool include_unit = true);

// cobordism classes compatible with a codimension-1 fold map
enum class Codim1Class { NullCobordant, A1, B1, C2 };
const char* codim1_class_name(Codim1Class c);

struct Codim1Report {
    unsigned n = 0;
    Codim1Class cls = Codim1Class::NullCobordant;
    QuotientReport quotient;
    std::vector<std::string> annotations;
};

// Arithmetic classification of the fold quotient in codimension 1,
// cross-checked against the engine (disagreement throws logic_error).
Codim1Report classify_codim1(unsigned n);

// ---------------------------------------------------------------------------
// relation checks on a one-generator ring
// ---------------------------------------------------------------------------

// Decide whether the equal-degree equal-length relations with all parts
// >= threshold(mc) = k + 2 + delta(mc) + K hold in the ring, where K bounds
// the degrees of nonzero target classes. Hypothesis failures yield
// Inconclusive, never a fabricated obstruction.
Verdict relation_check(const OneGenRing& ring, unsigned k, unsigned K, MapClass mc);

// least l >= 1 such that no equal-degree equal-length pair of products with
// all parts >= l separates (one product nonzero, the other zero)
unsigned minimal_threshold(const OneGenRing& ring);

// all verdicts for maps RP^n -> R^target (every map class, the closed-form
// codimension-range criteria, and the minimal clean threshold)
VerdictSet rp_verdict(unsigned n, unsigned target_dim);

// rational Pontryagin-class verdict for corank-1 maps CP^n -> R^target
// (real source dimension 2n, so k = 2n - target)
Verdict cp_verdict(unsigned n, unsigned target_dim);
VerdictSet cp_verdict_set(unsigned n, unsigned target_dim);

// ---------------------------------------------------------------------------
// characteristic-number functionals
// ---------------------------------------------------------------------------

// A full assignment of mod-2 values to every partition of n (the candidate
// characteristic numbers of a closed n-manifold). Partitions are stored with
// parts descending.
struct CharNumbers {
    unsigned n = 0;
    std::vector<std::pair<std::vector<unsigned>, int>> entries;

    int value(std::vector<unsigned> parts) const;  // throws when absent
};

struct NumbersReport {
    unsigned n = 0, k = 0;
    MapClass map_class = MapClass::Fold;
    unsigned delta = 0, k_eff = 0;
    unsigned vanishing_hyp = 0, hyp_closed = 0;
    Verdict verdict;
    std::optional<QuotientReport> quotient;
    // surviving quotient coordinates: representative partition and its value
    std::vector<std::pair<std::vector<unsigned>, int>> residual;
};

// Check a complete functional against every number relation a map of the
// given class out of an n-manifold with w_1 = ... = w_{vanishing_hyp} = 0
// would impose. Values contradicting the vanishing hypothesis throw
// runtime_error (a hypothesis error, not an obstruction).
NumbersReport numbers_check(const CharNumbers& cn, unsigned k, MapClass mc,
                            unsigned vanishing_hyp);

// ---------------------------------------------------------------------------
// two-generator reduction
// ---------------------------------------------------------------------------

struct Rank2Report {
    unsigned n = 0;
    unsigned basis_dim = 0;  // monomials w_1^{n-2j} w_2^j, j = 0..n/2
    unsigned rank = 0;
    unsigned quotient_dim = 0;
    // surviving monomials as (w1-exp, w2-exp)
    std::vector<std::pair<unsigned, unsigned>> complement;
};

// Relations among numbers of n-manifolds whose classes live in a rank-2
// subalgebra generated by w_1, w_2. The quotient collapses onto w_1^n.
Rank2Report rank2_reduction(unsigned n);

// ---------------------------------------------------------------------------
// conjecture sweep
// ---------------------------------------------------------------------------

struct SweepRecord {
    unsigned n = 0, k = 0;
    unsigned quotient_dim = 0;
    std::vector<unsigned> complement;  // free x-powers h
    std::uint64_t elapsed_ms = 0;
    bool violation = false;
};

struct SweepOptions {
    unsigned n_max = 0;
    std::vector<unsigned> ks;  // each 2^a - 1, a >= 2
    unsigned jobs = 1;
    // tasks to reuse instead of recomputing (resumed from a checkpoint)
    std::vector<SweepRecord> resumed;
    // called under a lock as each freshly computed record completes
    std::function<void(const SweepRecord&)> on_complete;
};

struct SweepResult {
    std::vector<SweepRecord> records;  // ascending (n, k)
    std::vector<SweepRecord> violations;
};

// Exhaustive scan of the fold quotient for k = 2^a - 1: flags every (n, k)
// whose quotient escapes the predicted pattern (dim 0 everywhere except
// dim 1 at n = 2^s or 2^s + 1 with s >= a+1).
SweepResult run_sweep(const SweepOptions& opts);

// the default sweep column set: {2^a - 1 : a >= 2, 2^a - 1 < n_max, <= 1023}
std::vector<unsigned> auto_k_set(unsigned n_max);

// true when the record's (n, k) cell falls outside the predicted pattern
bool sweep_violation(unsigned n, unsigned k, unsigned quotient_dim);

}  // namespace charrel
