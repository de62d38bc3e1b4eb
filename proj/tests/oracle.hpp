// Test-only oracles, deliberately independent of the library's Smith-form
// machinery: determinantal divisors computed from minors, and a mod-p^k
// cochain solver by valuation-pivot elimination over Z/p^k.

#ifndef PADLAB_TESTS_ORACLE_HPP
#define PADLAB_TESTS_ORACLE_HPP

#include "padlab/integer.hpp"

#include <optional>
#include <vector>

namespace padlab::oracle {

// gcd of all k x k minors, computed by brute-force expansion. The k-th
// invariant factor of A equals g_k / g_{k-1}.
inline Integer determinantal_divisor(const IMatrix& a, int k) {
    const Index m = a.rows(), n = a.cols();
    std::vector<int> rows(k), cols(k);
    Integer g(0);

    std::function<Integer(std::vector<int>&, std::vector<int>&)> det =
        [&](std::vector<int>& rs, std::vector<int>& cs) {
            const std::size_t kk = rs.size();
            if (kk == 1) return a(rs[0], cs[0]);
            Integer acc(0);
            std::vector<int> sub_rs(rs.begin() + 1, rs.end());
            for (std::size_t j = 0; j < kk; ++j) {
                std::vector<int> sub_cs;
                for (std::size_t t = 0; t < kk; ++t)
                    if (t != j) sub_cs.push_back(cs[t]);
                Integer term = a(rs[0], cs[j]) * det(sub_rs, sub_cs);
                if (j % 2 == 0) acc += term; else acc -= term;
            }
            return acc;
        };

    std::function<void(int, int)> choose_cols = [&](int start, int picked) {
        if (picked == k) {
            Integer d = det(rows, cols);
            g = gcd(g, d);
            return;
        }
        for (int c = start; c < n; ++c) {
            cols[picked] = c;
            choose_cols(c + 1, picked + 1);
        }
    };
    std::function<void(int, int)> choose_rows = [&](int start, int picked) {
        if (picked == k) {
            choose_cols(0, 0);
            return;
        }
        for (int r = start; r < m; ++r) {
            rows[picked] = r;
            choose_rows(r + 1, picked + 1);
        }
    };
    choose_rows(0, 0);
    return abs(g);
}

// One solution of A x == b (mod p^k) by Gaussian elimination over Z/p^k, or
// nullopt when the system is unsolvable. Full pivoting on the entry of
// minimal p-valuation: every entry right of a pivot then has valuation at
// least the pivot's, which makes back-substitution with zero free variables
// complete (a solvable system stays solvable under that choice).
inline std::optional<IVector> solve_mod_pk(IMatrix a, IVector b, const Integer& p, int k) {
    const Integer R = pow(p, (unsigned)k);
    const IMatrix a0 = a;
    const IVector b0 = b;
    const Index m = a.rows(), n = a.cols();
    auto val = [&](const Integer& x) {
        Integer y = mod_floor(x, R);
        if (y.is_zero()) return k;
        int v = 0;
        while ((y % p).is_zero()) { y /= p; ++v; }
        return v;
    };
    auto inv_unit = [&](const Integer& u) {
        Integer x, y;
        Integer g = gcdext(mod_floor(u, R), R, x, y);
        if (g != Integer(1)) throw std::logic_error("solve_mod_pk: not a unit");
        return mod_floor(x, R);
    };
    for (Index i = 0; i < m; ++i) {
        b(i) = mod_floor(b(i), R);
        for (Index j = 0; j < n; ++j) a(i, j) = mod_floor(a(i, j), R);
    }

    std::vector<Index> colpos(n);  // position j holds original column colpos[j]
    for (Index j = 0; j < n; ++j) colpos[j] = j;

    struct Pivot { Index row, col; int v; };
    std::vector<Pivot> pivots;
    Index row = 0, col = 0;
    while (row < m && col < n) {
        Index bi = -1, bj = -1;
        int bestv = k;
        for (Index r = row; r < m; ++r)
            for (Index c = col; c < n; ++c) {
                int v = val(a(r, c));
                if (v < bestv) { bestv = v; bi = r; bj = c; }
            }
        if (bi < 0) break;  // everything left is 0 mod R
        a.row(bi).swap(a.row(row));
        std::swap(b(bi), b(row));
        a.col(bj).swap(a.col(col));
        std::swap(colpos[bj], colpos[col]);
        Integer unit = mod_floor(a(row, col), R) / pow(p, (unsigned)bestv);
        Integer ui = inv_unit(unit);
        for (Index j = 0; j < n; ++j) a(row, j) = mod_floor(a(row, j) * ui, R);
        b(row) = mod_floor(b(row) * ui, R);
        for (Index r = row + 1; r < m; ++r) {
            Integer factor = mod_floor(a(r, col), R) / pow(p, (unsigned)bestv);
            for (Index j = 0; j < n; ++j) a(r, j) = mod_floor(a(r, j) - factor * a(row, j), R);
            b(r) = mod_floor(b(r) - factor * b(row), R);
        }
        pivots.push_back({row, col, bestv});
        ++row;
        ++col;
    }
    for (Index r = row; r < m; ++r)
        if (!mod_floor(b(r), R).is_zero()) return std::nullopt;

    IVector xp = IVector::Zero(n);  // in permuted coordinates
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        Integer rhs = b(it->row);
        for (Index j = it->col + 1; j < n; ++j) rhs -= a(it->row, j) * xp(j);
        rhs = mod_floor(rhs, R);
        Integer pv = pow(p, (unsigned)it->v);
        if (!(rhs % pv).is_zero()) return std::nullopt;
        xp(it->col) = rhs / pv;
    }
    IVector x = IVector::Zero(n);
    for (Index j = 0; j < n; ++j) x(colpos[j]) = xp(j);
    IVector chk = a0 * x;
    for (Index i = 0; i < m; ++i)
        if (!mod_floor(chk(i) - b0(i), R).is_zero())
            throw std::logic_error("solve_mod_pk: produced a non-solution");
    return x;
}

}  // namespace padlab::oracle

#endif
