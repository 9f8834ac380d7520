#include "charrel/obstruct.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace charrel {

bool sweep_violation(unsigned n, unsigned k, unsigned quotient_dim) {
    if (quotient_dim == 0) return false;
    if (quotient_dim >= 2) return true;
    // dim 1 is tolerated exactly at n = 2^s or 2^s + 1 with s >= a+1,
    // where k = 2^a - 1
    const unsigned a = unsigned(std::bit_width(std::uint64_t(k) + 1)) - 1;
    std::uint64_t base = 0;
    if (std::has_single_bit(std::uint64_t(n)))
        base = n;
    else if (n >= 2 && std::has_single_bit(std::uint64_t(n) - 1))
        base = n - 1;
    if (!base) return true;
    const unsigned s = unsigned(std::bit_width(base)) - 1;
    return s < a + 1;
}

std::vector<unsigned> auto_k_set(unsigned n_max) {
    std::vector<unsigned> out;
    for (unsigned a = 2;; ++a) {
        const unsigned k = (1u << a) - 1;
        if (k > 1023 || k >= n_max) break;
        out.push_back(k);
    }
    return out;
}

SweepResult run_sweep(const SweepOptions& opts) {
    if (opts.n_max < 2) throw std::invalid_argument("run_sweep: need n_max >= 2");
    for (unsigned k : opts.ks)
        if (k < 3 || !std::has_single_bit(std::uint64_t(k) + 1))
            throw std::invalid_argument(
                "run_sweep: every sweep column must be 2^a - 1 with a >= 2");

    std::vector<unsigned> ks = opts.ks;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    std::vector<std::pair<unsigned, unsigned>> tasks;
    for (unsigned n = 2; n <= opts.n_max; ++n)
        for (unsigned k : ks)
            if (k < n) tasks.emplace_back(n, k);

    // records resumed from a checkpoint short-circuit their tasks; the
    // violation flag is always re-derived from the stored quotient data
    std::map<std::pair<unsigned, unsigned>, SweepRecord> resumed;
    for (const SweepRecord& r : opts.resumed) resumed.emplace(std::make_pair(r.n, r.k), r);

    std::vector<SweepRecord> records(tasks.size());
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const auto it = resumed.find(tasks[i]);
        if (it == resumed.end()) {
            pending.push_back(i);
        } else {
            records[i] = it->second;
            records[i].violation =
                sweep_violation(records[i].n, records[i].k, records[i].quotient_dim);
        }
    }

    std::mutex mx;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t slot = next.fetch_add(1);
            if (slot >= pending.size()) return;
            const std::size_t i = pending[slot];
            const auto [n, k] = tasks[i];
            const auto t0 = std::chrono::steady_clock::now();
            const QuotientResult q = relation_image(n, k);
            const auto t1 = std::chrono::steady_clock::now();

            SweepRecord rec;
            rec.n = n;
            rec.k = k;
            rec.quotient_dim = q.quotient_dim();
            rec.complement = q.complement;
            rec.elapsed_ms = std::uint64_t(
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
            rec.violation = sweep_violation(n, k, rec.quotient_dim);

            std::lock_guard<std::mutex> lock(mx);
            records[i] = rec;
            if (opts.on_complete) opts.on_complete(rec);
        }
    };

    const unsigned jobs =
        std::max(1u, std::min<unsigned>(opts.jobs, unsigned(pending.size())));
    if (jobs <= 1 || pending.empty()) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    SweepResult out;
    out.records = std::move(records);
    for (const SweepRecord& r : out.records)
        if (r.violation) out.violations.push_back(r);
    return out;
}

}  // namespace charrel
