#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Bit-packed GF(2) vectors and an incrementally maintained reduced
// row-echelon row space. These are the workhorses of every rank
// computation in the engine.

namespace charrel {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v = true) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void clear();
    bool any() const;
    std::size_t popcount() const;

    // Index of the lowest set bit, or -1 when the vector is zero.
    int lowest_set() const;

    // this ^= o (sizes must match)
    void xor_in(const BitVec& o);
    // this ^= (o << shift); bits shifted past size() are dropped
    void xor_in_shifted(const BitVec& o, std::size_t shift);
    // this |= (o << shift); bits shifted past size() are dropped
    void or_in_shifted(const BitVec& o, std::size_t shift);
    // this[i] ^= o[i + shift] wherever both indices are in range
    void xor_in_shifted_down(const BitVec& o, std::size_t shift);

    // replace each bit by the parity of all bits at or below it
    void prefix_xor();

    // bits in mirrored positions: out[i] = this[size()-1-i]
    BitVec reversed() const;

    // parity of |a AND b|; the shorter vector is treated as zero-padded
    static int and_parity(const BitVec& a, const BitVec& b);
    // parity of sum_i a[i] * b[i + off]
    static int and_parity_offset(const BitVec& a, const BitVec& b, std::size_t off);

    bool operator==(const BitVec& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    void mask_tail();

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

// Row space over GF(2) with a fixed column count, kept in reduced row-echelon
// form after every insertion. Pivot of a row is its lowest set bit; rows are
// stored sorted by pivot column.
class Gf2Matrix {
public:
    explicit Gf2Matrix(std::size_t cols) : cols_(cols), pivot_row_(cols, -1) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<BitVec>& rows() const { return rows_; }

    // Insert a row. Returns true when the row was absorbed (already in the
    // span, rank unchanged) and false when it was independent (rank + 1).
    bool insert(BitVec row);

    // Residual of v modulo the row space.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const { return !reduce(v).any(); }

    // Columns holding no pivot, ascending. Their basis monomials represent
    // the quotient by the row space.
    std::vector<std::size_t> free_columns() const;

    // Basis of {phi : phi . r = 0 for every row r}, one vector per free
    // column, ascending by that column.
    std::vector<BitVec> annihilator_basis() const;

private:
    std::size_t cols_;
    std::vector<BitVec> rows_;        // sorted by pivot column
    std::vector<int> pivot_of_row_;   // pivot column per row
    std::vector<int> pivot_row_;      // row index per column, -1 if none
};

}  // namespace charrel
