/**
 * Dense linear algebra over the two-element field with rows packed into
 * 64-bit words.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace neighborly::gf2 {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    /// Index of the lowest set bit, if any.
    std::optional<std::size_t> lowest() const;
    bool none() const;

    /// this ^= other, touching only words from `first_word` on.
    void add(const BitVector& other, std::size_t first_word = 0);

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }
    bool operator==(const BitVector&) const = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major matrix; each row is a packed BitVector.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool test(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
    void set(std::size_t r, std::size_t c) { rows_[r].set(c); }
    const BitVector& row(std::size_t r) const { return rows_[r]; }

    bool is_zero() const;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/**
 * Incremental row echelon basis. Pivots are keyed by the lowest set column,
 * so columns are eliminated in increasing (lexicographic face) order.
 */
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t cols) : pivot_of_col_(cols, none_) {}

    /// Reduces `v` against the basis; keeps it and returns true iff it was
    /// independent.
    bool insert(BitVector v);
    std::size_t rank() const noexcept { return basis_.size(); }

private:
    static constexpr std::size_t none_ = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pivot_of_col_;
    std::vector<BitVector> basis_;
};

std::size_t rank(const BitMatrix& m);

/// Matrix product a * b.
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

}  // namespace neighborly::gf2
