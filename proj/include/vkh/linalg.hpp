#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "vkh/errors.hpp"

namespace vkh {

// Dense matrix over Z with arbitrary-precision entries. Row-major.
class ZMat {
public:
    ZMat() = default;
    ZMat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const mpz_class& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    void swapRows(int r1, int r2);
    void swapCols(int c1, int c2);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

// Invariant factors d_1 | d_2 | ... | d_r (all positive), Smith normal form.
struct SmithDecomposition {
    std::vector<mpz_class> factors;
    int rank = 0;
    int rows = 0, cols = 0;
};

SmithDecomposition smithNormalForm(ZMat m);

// Rank over Q via fraction-free (Bareiss) elimination.
int rankQ(ZMat m);

// Integer basis of the rational null space; each column of the result is a
// kernel vector with integer entries (primitive up to sign).
ZMat kernelBasisQ(const ZMat& m);

// Rank of the stacked matrix [a | b] over Q (columns concatenated).
int rankQJoined(const ZMat& a, const ZMat& b);

// Rank over GF(2).
int rankZ2(const ZMat& m);

// Prime-power factorization d = p1^e1 * ... (trial division; inputs here are
// small invariant factors).
std::vector<std::pair<mpz_class, int>> factorize(mpz_class d);

} // namespace vkh
