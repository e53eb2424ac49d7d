#pragma once

// Deliberately naive Smith normal form used as an oracle: always takes the
// first nonzero entry as pivot and never tries to keep entries small.

#include <gmpxx.h>

#include <vector>

#include "vkh/linalg.hpp"

namespace vkh_test {

inline std::vector<mpz_class> naiveSmithFactors(vkh::ZMat m) {
    const int R = m.rows(), C = m.cols();
    int k = 0;
    while (k < R && k < C) {
        int pr = -1, pc = -1;
        for (int r = k; r < R && pr < 0; ++r)
            for (int c = k; c < C; ++c)
                if (m.at(r, c) != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        m.swapRows(k, pr);
        m.swapCols(k, pc);
        bool again = true;
        while (again) {
            again = false;
            for (int r = k + 1; r < R; ++r) {
                if (m.at(r, k) == 0) continue;
                mpz_class q = m.at(r, k) / m.at(k, k);
                for (int c = k; c < C; ++c) m.at(r, c) -= q * m.at(k, c);
                if (m.at(r, k) != 0) {
                    m.swapRows(k, r);
                    again = true;
                }
            }
            for (int c = k + 1; c < C; ++c) {
                if (m.at(k, c) == 0) continue;
                mpz_class q = m.at(k, c) / m.at(k, k);
                for (int r = k; r < R; ++r) m.at(r, c) -= q * m.at(r, k);
                if (m.at(k, c) != 0) {
                    m.swapCols(k, c);
                    again = true;
                }
            }
        }
        ++k;
    }
    std::vector<mpz_class> f;
    for (int i = 0; i < k; ++i) f.push_back(abs(m.at(i, i)));
    // enforce divisibility
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (f[j] % f[i] == 0) continue;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), f[i].get_mpz_t(), f[j].get_mpz_t());
            mpz_class l = f[i] / g * f[j];
            f[i] = g;
            f[j] = l;
        }
    std::sort(f.begin(), f.end());
    return f;
}

} // namespace vkh_test
