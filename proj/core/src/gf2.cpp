#include "charrel/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace charrel {

void BitVec::clear() {
    std::fill(w_.begin(), w_.end(), 0);
}

bool BitVec::any() const {
    for (std::uint64_t x : w_)
        if (x) return true;
    return false;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (std::uint64_t x : w_) c += std::popcount(x);
    return c;
}

int BitVec::lowest_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

void BitVec::xor_in(const BitVec& o) {
    if (o.nbits_ != nbits_) throw std::invalid_argument("BitVec::xor_in: size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

void BitVec::xor_in_shifted(const BitVec& o, std::size_t shift) {
    const std::size_t wshift = shift >> 6, bshift = shift & 63;
    for (std::size_t i = 0; i + wshift < w_.size() && i < o.w_.size(); ++i) {
        const std::uint64_t x = o.w_[i];
        if (!x) continue;
        w_[i + wshift] ^= x << bshift;
        if (bshift && i + wshift + 1 < w_.size()) w_[i + wshift + 1] ^= x >> (64 - bshift);
    }
    mask_tail();
}

void BitVec::or_in_shifted(const BitVec& o, std::size_t shift) {
    const std::size_t wshift = shift >> 6, bshift = shift & 63;
    for (std::size_t i = 0; i + wshift < w_.size() && i < o.w_.size(); ++i) {
        const std::uint64_t x = o.w_[i];
        if (!x) continue;
        w_[i + wshift] |= x << bshift;
        if (bshift && i + wshift + 1 < w_.size()) w_[i + wshift + 1] |= x >> (64 - bshift);
    }
    mask_tail();
}

void BitVec::xor_in_shifted_down(const BitVec& o, std::size_t shift) {
    const std::size_t wshift = shift >> 6, bshift = shift & 63;
    for (std::size_t i = 0; i < w_.size() && i + wshift < o.w_.size(); ++i) {
        std::uint64_t x = o.w_[i + wshift] >> bshift;
        if (bshift && i + wshift + 1 < o.w_.size()) x |= o.w_[i + wshift + 1] << (64 - bshift);
        w_[i] ^= x;
    }
    mask_tail();
}

void BitVec::prefix_xor() {
    std::uint64_t carry = 0;
    for (std::uint64_t& w : w_) {
        w ^= w << 1;
        w ^= w << 2;
        w ^= w << 4;
        w ^= w << 8;
        w ^= w << 16;
        w ^= w << 32;
        w ^= carry;
        carry = std::uint64_t(0) - (w >> 63);  // all-ones when the running parity is odd
    }
    mask_tail();
}

BitVec BitVec::reversed() const {
    BitVec out(nbits_);
    for (std::size_t i = 0; i < nbits_; ++i)
        if (get(nbits_ - 1 - i)) out.set(i);
    return out;
}

void BitVec::mask_tail() {
    const std::size_t tail = nbits_ & 63;
    if (tail && !w_.empty()) w_.back() &= (std::uint64_t(1) << tail) - 1;
}

int BitVec::and_parity(const BitVec& a, const BitVec& b) {
    const std::size_t n = std::min(a.w_.size(), b.w_.size());
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc ^= a.w_[i] & b.w_[i];
    return std::popcount(acc) & 1;
}

int BitVec::and_parity_offset(const BitVec& a, const BitVec& b, std::size_t off) {
    const std::size_t wshift = off >> 6, bshift = off & 63;
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.w_.size() && i + wshift < b.w_.size(); ++i) {
        std::uint64_t x = b.w_[i + wshift] >> bshift;
        if (bshift && i + wshift + 1 < b.w_.size()) x |= b.w_[i + wshift + 1] << (64 - bshift);
        acc ^= a.w_[i] & x;
    }
    return std::popcount(acc) & 1;
}

bool Gf2Matrix::insert(BitVec row) {
    if (row.size() != cols_) throw std::invalid_argument("Gf2Matrix::insert: wrong width");
    row = reduce(std::move(row));
    const int p = row.lowest_set();
    if (p < 0) return true;  // dependent, absorbed

    // clear column p in the rows above to keep the form reduced
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r].get(std::size_t(p))) rows_[r].xor_in(row);

    // insert keeping rows sorted by pivot
    std::size_t at = 0;
    while (at < rows_.size() && pivot_of_row_[at] < p) ++at;
    rows_.insert(rows_.begin() + long(at), std::move(row));
    pivot_of_row_.insert(pivot_of_row_.begin() + long(at), p);
    for (std::size_t r = at; r < rows_.size(); ++r) pivot_row_[std::size_t(pivot_of_row_[r])] = int(r);
    return false;
}

BitVec Gf2Matrix::reduce(BitVec v) const {
    if (v.size() != cols_) throw std::invalid_argument("Gf2Matrix::reduce: wrong width");
    // rows are reduced, so no row touches another's pivot column and a
    // single pass eliminates every pivot coordinate of v
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (v.get(std::size_t(pivot_of_row_[r]))) v.xor_in(rows_[r]);
    return v;
}

std::vector<std::size_t> Gf2Matrix::free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c)
        if (pivot_row_[c] < 0) out.push_back(c);
    return out;
}

std::vector<BitVec> Gf2Matrix::annihilator_basis() const {
    // Reduced form makes this direct: for free column f, the functional
    // phi with phi[f] = 1 and phi[pivot(r)] = row_r[f] kills every row.
    std::vector<BitVec> out;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (pivot_row_[f] >= 0) continue;
        BitVec phi(cols_);
        phi.set(f);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (rows_[r].get(f)) phi.set(std::size_t(pivot_of_row_[r]));
        out.push_back(std::move(phi));
    }
    return out;
}

}  // namespace charrel
