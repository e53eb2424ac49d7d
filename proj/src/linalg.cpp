#include "vkh/linalg.hpp"

#include <algorithm>

namespace vkh {

void ZMat::swapRows(int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
}

void ZMat::swapCols(int c1, int c2) {
    if (c1 == c2) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, c1), at(r, c2));
}

SmithDecomposition smithNormalForm(ZMat m) {
    SmithDecomposition out;
    out.rows = m.rows();
    out.cols = m.cols();
    const int R = m.rows(), C = m.cols();
    int k = 0;
    mpz_class q, tmp;
    while (k < R && k < C) {
        // Smallest nonzero |entry| in the remaining block as pivot: keeps the
        // intermediate entries from exploding.
        int pr = -1, pc = -1;
        mpz_class best;
        for (int r = k; r < R; ++r)
            for (int c = k; c < C; ++c) {
                if (m.at(r, c) == 0) continue;
                mpz_class a = abs(m.at(r, c));
                if (pr < 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;
        m.swapRows(k, pr);
        m.swapCols(k, pc);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = k + 1; r < R; ++r) {
                if (m.at(r, k) == 0) continue;
                q = m.at(r, k) / m.at(k, k); // truncated division
                if (q != 0)
                    for (int c = k; c < C; ++c) m.at(r, c) -= q * m.at(k, c);
                if (m.at(r, k) != 0) {
                    m.swapRows(k, r); // remainder is smaller; keep reducing
                    clean = false;
                }
            }
            for (int c = k + 1; c < C; ++c) {
                if (m.at(k, c) == 0) continue;
                q = m.at(k, c) / m.at(k, k);
                if (q != 0)
                    for (int r = k; r < R; ++r) m.at(r, c) -= q * m.at(r, k);
                if (m.at(k, c) != 0) {
                    m.swapCols(k, c);
                    clean = false;
                }
            }
        }
        ++k;
    }
    out.rank = k;
    out.factors.reserve(k);
    for (int i = 0; i < k; ++i) out.factors.push_back(abs(m.at(i, i)));
    // Enforce the divisibility chain d_i | d_{i+1}.
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (out.factors[i] == 0) std::swap(out.factors[i], out.factors[j]);
            if (out.factors[j] % out.factors[i] == 0) continue;
            mpz_class g, l;
            mpz_gcd(g.get_mpz_t(), out.factors[i].get_mpz_t(), out.factors[j].get_mpz_t());
            l = out.factors[i] / g * out.factors[j];
            out.factors[i] = g;
            out.factors[j] = l;
        }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

namespace {

// Fraction-free Gaussian elimination (Bareiss). Returns rank; when pivots is
// non-null, records the pivot column of each eliminated row.
int bareiss(ZMat& m, std::vector<int>* pivots) {
    const int R = m.rows(), C = m.cols();
    mpz_class prev = 1;
    int rank = 0;
    for (int c = 0; c < C && rank < R; ++c) {
        int pr = -1;
        for (int r = rank; r < R; ++r)
            if (m.at(r, c) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        m.swapRows(rank, pr);
        for (int r = rank + 1; r < R; ++r) {
            for (int cc = c + 1; cc < C; ++cc) {
                m.at(r, cc) = (m.at(rank, c) * m.at(r, cc) - m.at(r, c) * m.at(rank, cc)) / prev;
            }
            m.at(r, c) = 0;
        }
        prev = m.at(rank, c);
        if (pivots) pivots->push_back(c);
        ++rank;
    }
    return rank;
}

} // namespace

int rankQ(ZMat m) {
    return bareiss(m, nullptr);
}

ZMat kernelBasisQ(const ZMat& m) {
    ZMat e = m;
    std::vector<int> pivots;
    const int rank = bareiss(e, &pivots);
    const int C = m.cols();
    std::vector<char> isPivot(C, 0);
    for (int c : pivots) isPivot[c] = 1;
    ZMat ker(C, C - rank);
    int kcol = 0;
    for (int free = 0; free < C; ++free) {
        if (isPivot[free]) continue;
        // Solve the triangular system with x[free] = 1 over Q, clearing
        // denominators as we go.
        std::vector<mpq_class> x(C, 0);
        x[free] = 1;
        for (int r = rank - 1; r >= 0; --r) {
            const int pc = pivots[r];
            mpq_class s = 0;
            for (int c = pc + 1; c < C; ++c)
                if (x[c] != 0 && e.at(r, c) != 0) s += mpq_class(e.at(r, c)) * x[c];
            x[pc] = -s / mpq_class(e.at(r, pc));
        }
        mpz_class lcm = 1;
        for (int c = 0; c < C; ++c) {
            x[c].canonicalize();
            mpz_class den = x[c].get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        mpz_class g = 0;
        std::vector<mpz_class> col(C);
        for (int c = 0; c < C; ++c) {
            col[c] = mpz_class(x[c] * mpq_class(lcm));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), col[c].get_mpz_t());
        }
        if (g == 0) g = 1;
        for (int c = 0; c < C; ++c) ker.at(c, kcol) = col[c] / g;
        ++kcol;
    }
    return ker;
}

int rankQJoined(const ZMat& a, const ZMat& b) {
    if (a.rows() != b.rows()) throw DomainError("row count mismatch");
    ZMat m(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
    }
    return rankQ(std::move(m));
}

int rankZ2(const ZMat& m) {
    const int R = m.rows(), C = m.cols();
    const int words = (C + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(R, std::vector<std::uint64_t>(words, 0));
    for (int r = 0; r < R; ++r)
        for (int c = 0; c < C; ++c)
            if (mpz_odd_p(m.at(r, c).get_mpz_t())) rows[r][c / 64] |= 1ull << (c % 64);
    int rank = 0;
    for (int c = 0; c < C && rank < R; ++c) {
        int pr = -1;
        for (int r = rank; r < R; ++r)
            if ((rows[r][c / 64] >> (c % 64)) & 1ull) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[rank], rows[pr]);
        for (int r = 0; r < R; ++r) {
            if (r == rank) continue;
            if ((rows[r][c / 64] >> (c % 64)) & 1ull)
                for (int w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::pair<mpz_class, int>> factorize(mpz_class d) {
    std::vector<std::pair<mpz_class, int>> out;
    if (d < 0) d = -d;
    if (d <= 1) return out;
    mpz_class p = 2;
    while (p * p <= d) {
        if (d % p == 0) {
            int e = 0;
            while (d % p == 0) {
                d /= p;
                ++e;
            }
            out.push_back({p, e});
        }
        p += (p == 2) ? 1 : 2;
    }
    if (d > 1) out.push_back({d, 1});
    return out;
}

} // namespace vkh
