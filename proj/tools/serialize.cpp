#include "serialize.hpp"

#include <charrel/parity.hpp>
#include <charrel/version.hpp>

#include <sstream>
#include <stdexcept>

namespace charrel::cli {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += '"';
    return out;
}

std::string join_parts(const std::vector<unsigned>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(parts[i]);
    }
    return out;
}

std::string join_h(const std::vector<unsigned>& hs) {
    std::string out;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(hs[i]);
    }
    return out;
}

json monomial_xt(unsigned x, unsigned t) {
    json m;
    m["x"] = x;
    m["t"] = t;
    return m;
}

std::string witness_detail(const Witness& w) {
    std::ostringstream os;
    os << w.kind;
    if (w.degree) os << " d=" << w.degree;
    if (w.length) os << " len=" << w.length;
    if (w.threshold) os << " thr=" << w.threshold;
    if (w.index) os << " i=" << w.index;
    if (!w.lhs.empty()) os << " lhs=" << join_parts(w.lhs);
    if (!w.rhs.empty()) os << " rhs=" << join_parts(w.rhs);
    if (!w.note.empty()) os << " (" << w.note << ")";
    return os.str();
}

}  // namespace

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + s + "' (use text, json or csv)");
}

// ---------------------------------------------------------------------------
// json
// ---------------------------------------------------------------------------

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

json dims_json(const QuotientResult& q) {
    json j;
    j["command"] = "dims";
    j["engine_version"] = kEngineVersion;
    j["provenance"] = "dold-relations";
    j["n"] = q.n;
    j["k"] = q.k;
    j["ambient_dim"] = q.ambient_dim;
    j["unit_generator_included"] = q.unit_included;
    j["rank"] = q.rank();
    j["quotient_dim"] = q.quotient_dim();
    // the unit generator usually changes nothing; report the split only when
    // it actually separates the two spans
    if (q.rank_with_unit != q.rank_without_unit) {
        j["quotient_dim_with_unit"] = q.quotient_dim_with_unit();
        j["quotient_dim_without_unit"] = q.quotient_dim_without_unit();
    }
    json comp = json::array();
    for (unsigned h : q.complement) comp.push_back(monomial_xt(h, q.n - (q.k + 1) * h));
    j["complement"] = std::move(comp);
    return j;
}

json classify_json(const Codim1Report& r) {
    json j;
    j["command"] = "classify";
    j["engine_version"] = kEngineVersion;
    j["provenance"] = "codim1-fold-cobordism-trichotomy";
    j["n"] = r.n;
    j["class"] = codim1_class_name(r.cls);
    j["quotient_dim"] = r.quotient.quotient_dim;
    json comp = json::array();
    for (auto [x, t] : r.quotient.complement) comp.push_back(monomial_xt(x, t));
    j["complement"] = std::move(comp);
    j["annotations"] = r.annotations;
    return j;
}

json verdict_json(const Verdict& v) {
    json j;
    j["map_class"] = map_class_name(v.map_class);
    j["status"] = status_name(v.status);
    j["provenance"] = v.provenance;
    json hyps = json::array();
    for (const HypothesisCheck& h : v.hypotheses) {
        json e;
        e["name"] = h.name;
        e["holds"] = h.holds;
        e["note"] = h.note;
        hyps.push_back(std::move(e));
    }
    j["hypotheses"] = std::move(hyps);
    json wits = json::array();
    for (const Witness& w : v.witnesses) {
        json e;
        e["kind"] = w.kind;
        e["degree"] = w.degree;
        e["length"] = w.length;
        e["threshold"] = w.threshold;
        e["index"] = w.index;
        e["lhs"] = w.lhs;
        e["rhs"] = w.rhs;
        e["note"] = w.note;
        wits.push_back(std::move(e));
    }
    j["witnesses"] = std::move(wits);
    j["annotations"] = v.annotations;
    return j;
}

json verdict_set_json(const std::string& command, const VerdictSet& s) {
    json j;
    j["command"] = command;
    j["engine_version"] = kEngineVersion;
    j["space"] = s.space;
    j["n"] = s.n;
    j["target"] = s.target;
    j["k"] = s.k;
    j["minimal_threshold"] = s.minimal_threshold;
    j["obstructed"] = s.any_obstructed();
    json vs = json::array();
    for (const Verdict& v : s.verdicts) vs.push_back(verdict_json(v));
    j["verdicts"] = std::move(vs);
    return j;
}

json numbers_json(const NumbersReport& r) {
    json j;
    j["command"] = "numbers";
    j["engine_version"] = kEngineVersion;
    j["n"] = r.n;
    j["k"] = r.k;
    j["map_class"] = map_class_name(r.map_class);
    j["delta"] = r.delta;
    j["k_eff"] = r.k_eff;
    j["vanishing_hyp"] = r.vanishing_hyp;
    j["hyp_closed"] = r.hyp_closed;
    j["verdict"] = verdict_json(r.verdict);
    if (r.quotient) {
        json q;
        q["dim_im_rho"] = r.quotient->dim_im_rho;
        q["dim_relations"] = r.quotient->dim_relations;
        q["quotient_dim"] = r.quotient->quotient_dim;
        json comp = json::array();
        for (auto [x, t] : r.quotient->complement) comp.push_back(monomial_xt(x, t));
        q["complement"] = std::move(comp);
        j["quotient"] = std::move(q);
    } else {
        j["quotient"] = nullptr;
    }
    json res = json::array();
    for (const auto& [parts, value] : r.residual) {
        json e;
        e["partition"] = parts;
        e["value"] = value;
        res.push_back(std::move(e));
    }
    j["residual"] = std::move(res);
    return j;
}

json dold_basis_json(const QuotientResult& q) {
    json j;
    j["command"] = "dold-basis";
    j["engine_version"] = kEngineVersion;
    j["provenance"] = "dold-relations";
    j["n"] = q.n;
    j["k"] = q.k;
    j["ambient_dim"] = q.ambient_dim;
    j["unit_generator_included"] = q.unit_included;
    j["rank"] = q.rank();
    // reduced rows over the slice basis x^h t^{n-(k+1)h}, h listed 1-based
    json rows = json::array();
    for (const BitVec& row : q.image.rows()) {
        json r = json::array();
        for (unsigned h = 1; h <= q.ambient_dim; ++h)
            if (row.get(h - 1)) r.push_back(h);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    json comp = json::array();
    for (unsigned h : q.complement) comp.push_back(monomial_xt(h, q.n - (q.k + 1) * h));
    j["complement"] = std::move(comp);
    return j;
}

json rank2_json(const Rank2Report& r) {
    json j;
    j["command"] = "rank2";
    j["engine_version"] = kEngineVersion;
    j["provenance"] = "tame-corank1-w1n";
    j["n"] = r.n;
    j["basis_dim"] = r.basis_dim;
    j["rank"] = r.rank;
    j["quotient_dim"] = r.quotient_dim;
    json comp = json::array();
    for (auto [e1, e2] : r.complement) {
        json m;
        m["w1"] = e1;
        m["w2"] = e2;
        comp.push_back(std::move(m));
    }
    j["complement"] = std::move(comp);
    return j;
}

json sweep_json(const SweepResult& res, unsigned n_max,
                const std::vector<unsigned>& ks, std::size_t resumed_count) {
    json j;
    j["command"] = "sweep";
    j["engine_version"] = kEngineVersion;
    j["provenance"] = "dold-relations";
    j["n_max"] = n_max;
    j["k"] = ks;
    j["tasks"] = res.records.size();
    j["resumed"] = resumed_count;
    j["violations"] = res.violations.size();
    json recs = json::array();
    // timing stays out of the stdout record so reruns stay byte-identical;
    // the checkpoint file carries elapsed_ms instead
    for (const SweepRecord& r : res.records) {
        json e;
        e["n"] = r.n;
        e["k"] = r.k;
        e["quotient_dim"] = r.quotient_dim;
        e["complement"] = r.complement;
        e["violation"] = r.violation;
        recs.push_back(std::move(e));
    }
    j["records"] = std::move(recs);
    return j;
}

json binom_json(std::uint64_t b, std::uint64_t a) {
    json j;
    j["command"] = "binom";
    j["engine_version"] = kEngineVersion;
    j["b"] = b;
    j["a"] = a;
    j["parity"] = binom_parity(b, std::int64_t(a));
    j["val2"] = a <= b ? binom_val2(b, a) : 0;
    return j;
}

// ---------------------------------------------------------------------------
// csv
// ---------------------------------------------------------------------------

std::string dims_csv(const QuotientResult& q) {
    std::ostringstream os;
    os << "n,k,ambient_dim,rank,quotient_dim,unit_generator_included,complement\n"
       << q.n << ',' << q.k << ',' << q.ambient_dim << ',' << q.rank() << ','
       << q.quotient_dim() << ',' << (q.unit_included ? "true" : "false") << ','
       << csv_escape(join_h(q.complement)) << '\n';
    return os.str();
}

std::string classify_csv(const Codim1Report& r) {
    std::ostringstream os;
    os << "n,class,quotient_dim\n"
       << r.n << ',' << codim1_class_name(r.cls) << ',' << r.quotient.quotient_dim
       << '\n';
    return os.str();
}

std::string verdict_set_csv(const VerdictSet& s) {
    std::ostringstream os;
    os << "space,n,target,k,minimal_threshold,map_class,status,provenance,witness\n";
    for (const Verdict& v : s.verdicts) {
        os << s.space << ',' << s.n << ',' << s.target << ',' << s.k << ','
           << s.minimal_threshold << ',' << map_class_name(v.map_class) << ','
           << status_name(v.status) << ',' << v.provenance << ',';
        os << csv_escape(v.witnesses.empty() ? std::string()
                                             : witness_detail(v.witnesses[0]));
        os << '\n';
    }
    return os.str();
}

std::string numbers_csv(const NumbersReport& r) {
    std::ostringstream os;
    os << "n,k,map_class,k_eff,vanishing_hyp,hyp_closed,status,provenance,witness\n"
       << r.n << ',' << r.k << ',' << map_class_name(r.map_class) << ',' << r.k_eff
       << ',' << r.vanishing_hyp << ',' << r.hyp_closed << ','
       << status_name(r.verdict.status) << ',' << r.verdict.provenance << ','
       << csv_escape(r.verdict.witnesses.empty()
                         ? std::string()
                         : witness_detail(r.verdict.witnesses[0]))
       << '\n';
    return os.str();
}

std::string dold_basis_csv(const QuotientResult& q) {
    std::ostringstream os;
    os << "n,k,row,positions\n";
    unsigned idx = 0;
    for (const BitVec& row : q.image.rows()) {
        std::vector<unsigned> hs;
        for (unsigned h = 1; h <= q.ambient_dim; ++h)
            if (row.get(h - 1)) hs.push_back(h);
        os << q.n << ',' << q.k << ',' << ++idx << ','
           << csv_escape(join_h(hs)) << '\n';
    }
    return os.str();
}

std::string sweep_csv(const SweepResult& res) {
    std::ostringstream os;
    os << "n,k,quotient_dim,complement,violation\n";
    for (const SweepRecord& r : res.records)
        os << r.n << ',' << r.k << ',' << r.quotient_dim << ','
           << csv_escape(join_h(r.complement)) << ','
           << (r.violation ? "true" : "false") << '\n';
    return os.str();
}

std::string binom_csv(std::uint64_t b, std::uint64_t a) {
    std::ostringstream os;
    os << "b,a,parity,val2\n"
       << b << ',' << a << ',' << binom_parity(b, std::int64_t(a)) << ','
       << (a <= b ? binom_val2(b, a) : 0) << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// text
// ---------------------------------------------------------------------------

namespace {

std::string xt_text(unsigned x, unsigned t) {
    std::string s = "x";
    if (x != 1) s += "^" + std::to_string(x);
    if (t) {
        s += " t";
        if (t != 1) s += "^" + std::to_string(t);
    }
    return s;
}

void verdict_text(std::ostringstream& os, const Verdict& v) {
    os << "  " << map_class_name(v.map_class) << ": " << status_name(v.status);
    if (!v.provenance.empty()) os << "  [" << v.provenance << "]";
    os << '\n';
    for (const HypothesisCheck& h : v.hypotheses)
        os << "    hypothesis " << h.name << ": " << (h.holds ? "holds" : "fails")
           << (h.note.empty() ? "" : "  (" + h.note + ")") << '\n';
    for (const Witness& w : v.witnesses) os << "    witness: " << witness_detail(w) << '\n';
    for (const std::string& a : v.annotations) os << "    note: " << a << '\n';
}

}  // namespace

std::string dims_text(const QuotientResult& q) {
    std::ostringstream os;
    os << "relation quotient for (n, k) = (" << q.n << ", " << q.k << ")\n"
       << "  ambient slice dimension: " << q.ambient_dim << '\n'
       << "  relation rank: " << q.rank()
       << (q.unit_included ? " (unit generator included)" : " (unit generator excluded)")
       << '\n'
       << "  quotient dimension: " << q.quotient_dim() << '\n';
    if (!q.complement.empty()) {
        os << "  surviving monomials:";
        for (unsigned h : q.complement) os << "  " << xt_text(h, q.n - (q.k + 1) * h);
        os << '\n';
    }
    return os.str();
}

std::string classify_text(const Codim1Report& r) {
    std::ostringstream os;
    os << "codimension-1 fold class of a closed " << r.n << "-manifold: "
       << codim1_class_name(r.cls) << '\n'
       << "  quotient dimension: " << r.quotient.quotient_dim << '\n';
    if (!r.quotient.complement.empty()) {
        os << "  surviving monomials:";
        for (auto [x, t] : r.quotient.complement) os << "  " << xt_text(x, t);
        os << '\n';
    }
    for (const std::string& a : r.annotations) os << "  note: " << a << '\n';
    return os.str();
}

std::string verdict_set_text(const VerdictSet& s) {
    std::ostringstream os;
    os << (s.space == "rp" ? "RP^" : "CP^") << s.n << " -> R^" << s.target
       << "  (codimension " << (s.space == "cp" ? int(2 * s.n) - int(s.target) : int(s.n) - int(s.target))
       << ")\n";
    if (s.space == "rp") os << "  minimal clean threshold: " << s.minimal_threshold << '\n';
    os << "  overall: " << (s.any_obstructed() ? "OBSTRUCTED" : "no obstruction found") << '\n';
    for (const Verdict& v : s.verdicts) verdict_text(os, v);
    return os.str();
}

std::string numbers_text(const NumbersReport& r) {
    std::ostringstream os;
    os << "number audit: n = " << r.n << ", map class " << map_class_name(r.map_class)
       << ", codimension " << r.k << '\n'
       << "  vanishing hypothesis w_1..w_" << r.vanishing_hyp << " = 0, closes to degree "
       << r.hyp_closed << '\n'
       << "  effective threshold k_eff = " << r.k_eff << '\n';
    verdict_text(os, r.verdict);
    if (r.quotient) {
        os << "  quotient dimension " << r.quotient->quotient_dim << '\n';
        for (const auto& [parts, value] : r.residual)
            os << "    residual w_{" << join_parts(parts) << "} = " << value << '\n';
    }
    return os.str();
}

std::string dold_basis_text(const QuotientResult& q) {
    std::ostringstream os;
    os << "reduced relation rows for (n, k) = (" << q.n << ", " << q.k
       << ") over x^h t^{n-(k+1)h}\n";
    unsigned idx = 0;
    for (const BitVec& row : q.image.rows()) {
        os << "  row " << ++idx << ":";
        bool first = true;
        for (unsigned h = 1; h <= q.ambient_dim; ++h)
            if (row.get(h - 1)) {
                os << (first ? "  " : " + ") << xt_text(h, q.n - (q.k + 1) * h);
                first = false;
            }
        os << '\n';
    }
    os << "  rank " << q.rank() << ", quotient dimension " << q.quotient_dim() << '\n';
    return os.str();
}

std::string sweep_text(const SweepResult& res, std::size_t resumed_count) {
    std::ostringstream os;
    os << "sweep: " << res.records.size() << " pairs (" << resumed_count
       << " resumed), " << res.violations.size() << " violations\n";
    for (const SweepRecord& r : res.violations)
        os << "  VIOLATION at (n, k) = (" << r.n << ", " << r.k
           << "): quotient dimension " << r.quotient_dim << '\n';
    if (res.violations.empty()) os << "  every quotient matches the predicted pattern\n";
    return os.str();
}

std::string binom_text(std::uint64_t b, std::uint64_t a) {
    std::ostringstream os;
    os << "C(" << b << ", " << a << ") mod 2 = " << binom_parity(b, std::int64_t(a));
    if (a <= b) os << ", 2-adic valuation " << binom_val2(b, a);
    os << '\n';
    return os.str();
}

}  // namespace charrel::cli
