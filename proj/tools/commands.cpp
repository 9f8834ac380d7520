#include "commands.hpp"

#include "checkpoint.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace charrel::cli {

namespace {

void emit(std::ostream& out, Format f, const json& j, const std::string& csv,
          const std::string& text) {
    switch (f) {
        case Format::Json: out << render_json(j); break;
        case Format::Csv: out << csv; break;
        case Format::Text: out << text; break;
    }
}

}  // namespace

int cmd_dims(unsigned n, unsigned k, Format f, std::ostream& out) {
    const QuotientResult q = relation_image(n, k, {});
    emit(out, f, dims_json(q), dims_csv(q), dims_text(q));
    return 0;
}

int cmd_classify(unsigned n, Format f, std::ostream& out) {
    const Codim1Report r = classify_codim1(n);
    emit(out, f, classify_json(r), classify_csv(r), classify_text(r));
    return 0;
}

int cmd_rp(unsigned n, unsigned target, const std::string& cls_filter, Format f,
           std::ostream& out) {
    VerdictSet s = rp_verdict(n, target);
    if (!cls_filter.empty()) {
        const MapClass mc = parse_map_class(cls_filter);
        std::vector<Verdict> kept;
        for (Verdict& v : s.verdicts)
            if (v.map_class == mc) kept.push_back(std::move(v));
        s.verdicts = std::move(kept);
    }
    emit(out, f, verdict_set_json("rp", s), verdict_set_csv(s), verdict_set_text(s));
    return s.any_obstructed() ? 1 : 0;
}

int cmd_cp(unsigned n, unsigned target, Format f, std::ostream& out) {
    const VerdictSet s = cp_verdict_set(n, target);
    emit(out, f, verdict_set_json("cp", s), verdict_set_csv(s), verdict_set_text(s));
    return s.any_obstructed() ? 1 : 0;
}

int cmd_numbers(const std::string& file, unsigned k, const std::string& cls,
                unsigned hyp, Format f, std::ostream& out) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("numbers: cannot open " + file);
    const json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("n") ||
        !doc["n"].is_number_unsigned() || !doc.contains("numbers") ||
        !doc["numbers"].is_array())
        throw std::invalid_argument(
            "numbers: expected {\"n\": int, \"numbers\": [{\"partition\": [ints], "
            "\"value\": 0|1}]} in " + file);

    CharNumbers cn;
    cn.n = doc["n"].get<unsigned>();
    for (const json& e : doc["numbers"]) {
        if (!e.is_object() || !e.contains("partition") || !e["partition"].is_array() ||
            !e.contains("value") || !e["value"].is_number_integer())
            throw std::invalid_argument("numbers: malformed entry in " + file);
        std::vector<unsigned> parts;
        for (const json& p : e["partition"]) {
            if (!p.is_number_unsigned())
                throw std::invalid_argument("numbers: partition parts must be positive ints");
            parts.push_back(p.get<unsigned>());
        }
        const int value = e["value"].get<int>();
        if (value != 0 && value != 1)
            throw std::invalid_argument("numbers: values are mod-2, use 0 or 1");
        cn.entries.emplace_back(std::move(parts), value);
    }

    const NumbersReport r = numbers_check(cn, k, parse_map_class(cls), hyp);
    emit(out, f, numbers_json(r), numbers_csv(r), numbers_text(r));
    return r.verdict.obstructed() ? 1 : 0;
}

int cmd_dold_basis(unsigned n, unsigned k, Format f, std::ostream& out) {
    const QuotientResult q = relation_image(n, k, {});
    emit(out, f, dold_basis_json(q), dold_basis_csv(q), dold_basis_text(q));
    return 0;
}

int cmd_sweep(unsigned n_max, const std::string& kspec, unsigned jobs,
              const std::string& checkpoint_path, Format f, std::ostream& out,
              std::ostream& warn) {
    SweepOptions opts;
    opts.n_max = n_max;
    opts.jobs = jobs;
    if (kspec == "auto") {
        opts.ks = auto_k_set(n_max);
    } else {
        std::stringstream ss(kspec);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            std::size_t pos = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(tok, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != tok.size() || v == 0 || v > 1023)
                throw std::invalid_argument("sweep: bad --k entry '" + tok +
                                            "' (use auto or a comma list of 2^a-1 values)");
            opts.ks.push_back(unsigned(v));
        }
        if (opts.ks.empty())
            throw std::invalid_argument("sweep: --k lists no columns");
    }

    CheckpointStore store(checkpoint_path.empty() ? std::string() : checkpoint_path);
    if (!checkpoint_path.empty()) {
        for (const std::string& w : store.load()) warn << "warning: " << w << '\n';
        opts.resumed = store.records();
        opts.on_complete = [&store](const SweepRecord& r) { store.append(r); };
    }
    const std::size_t resumed_count = opts.resumed.size();

    const SweepResult res = run_sweep(opts);
    emit(out, f, sweep_json(res, n_max, opts.ks, resumed_count), sweep_csv(res),
         sweep_text(res, resumed_count));
    return res.violations.empty() ? 0 : 1;
}

int cmd_binom(std::uint64_t b, std::uint64_t a, Format f, std::ostream& out) {
    emit(out, f, binom_json(b, a), binom_csv(b, a), binom_text(b, a));
    return 0;
}

}  // namespace charrel::cli
