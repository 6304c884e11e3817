#include "neighborly/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace neighborly::gf2 {

std::optional<std::size_t> BitVector::lowest() const
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return std::nullopt;
}

bool BitVector::none() const
{
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

void BitVector::add(const BitVector& other, std::size_t first_word)
{
    for (std::size_t w = first_word; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
}

bool BitMatrix::is_zero() const
{
    for (const auto& r : rows_)
        if (!r.none())
            return false;
    return true;
}

bool EchelonBasis::insert(BitVector v)
{
    while (auto col = v.lowest()) {
        std::size_t p = pivot_of_col_[*col];
        if (p == none_) {
            pivot_of_col_[*col] = basis_.size();
            basis_.push_back(std::move(v));
            return true;
        }
        // both vectors vanish below the pivot word
        v.add(basis_[p], *col / 64);
    }
    return false;
}

std::size_t rank(const BitMatrix& m)
{
    EchelonBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        basis.insert(m.row(r));
    return basis.rank();
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("gf2::multiply: shape mismatch");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BitVector acc(b.cols());
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.test(r, k))
                acc.add(b.row(k));
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (acc.test(c))
                out.set(r, c);
    }
    return out;
}

}  // namespace neighborly::gf2
