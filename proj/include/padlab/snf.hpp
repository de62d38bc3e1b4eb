// Smith normal form over the integers, with unimodular transforms and the
// exact linear solvers built on top of it. This is the computational kernel
// behind every homology group in the engine.

#ifndef PADLAB_SNF_HPP
#define PADLAB_SNF_HPP

#include "padlab/integer.hpp"

#include <optional>
#include <stdexcept>

namespace padlab {

/// U * A * V = D with U, V unimodular, D diagonal, d1 | d2 | ..., di >= 0.
/// Uinv and Vinv are maintained alongside so that A = Uinv * D * Vinv.
struct SNFResult {
    IMatrix D;
    IMatrix U, Uinv;
    IMatrix V, Vinv;
    Index rank = 0;

    Integer diag(Index i) const {
        return (i < D.rows() && i < D.cols()) ? D(i, i) : Integer(0);
    }
};

namespace detail {

template <class Mat>
void snf_check_certificate(const Mat& a, const SNFResult& r) {
    // U*A*V = D is checked as U*A == D*Vinv, which is exact and avoids the
    // dense n^3 product on the V side. V*Vinv = I and U*Uinv = I are checked
    // with random probe vectors.
    IMatrix ua = r.U * a;
    for (Index i = 0; i < ua.rows(); ++i)
        for (Index j = 0; j < ua.cols(); ++j) {
            Integer rhs = (i < r.D.rows() && i < r.D.cols()) ? r.D(i, i) * r.Vinv(i, j) : Integer(0);
            if (ua(i, j) != rhs)
                throw std::logic_error("snf: certificate U*A*V == D failed");
        }
    auto probe = [](const IMatrix& m, const IMatrix& minv) {
        Index n = m.rows();
        IVector x(n);
        unsigned long long s = 0x9e3779b97f4a7c15ull;
        for (Index i = 0; i < n; ++i) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            x(i) = Integer(static_cast<long long>((s >> 33) % 1009) - 504);
        }
        IVector y = m * (minv * x);
        for (Index i = 0; i < n; ++i)
            if (y(i) != x(i)) throw std::logic_error("snf: transform not unimodular");
    };
    probe(r.U, r.Uinv);
    probe(r.V, r.Vinv);
    for (Index i = 0; i + 1 < std::min(r.D.rows(), r.D.cols()); ++i) {
        if (r.D(i + 1, i + 1).is_zero()) continue;
        if (r.D(i, i).is_zero() || !(r.D(i + 1, i + 1) % r.D(i, i)).is_zero())
            throw std::logic_error("snf: diagonal divisibility chain violated");
    }
}

}  // namespace detail

/// Smith normal form by alternating row/column reduction with a
/// minimum-magnitude pivot. Certificates are verified before returning.
template <class Scalar>
SNFResult snf(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Index m = a.rows(), n = a.cols();
    Mat M = a;
    SNFResult r;
    r.U = Mat::Identity(m, m);
    r.Uinv = Mat::Identity(m, m);
    r.V = Mat::Identity(n, n);
    r.Vinv = Mat::Identity(n, n);

    auto row_sub = [&](Index i, Index t, const Scalar& q) {
        M.row(i) -= q * M.row(t);
        r.U.row(i) -= q * r.U.row(t);
        r.Uinv.col(t) += q * r.Uinv.col(i);
    };
    auto col_sub = [&](Index j, Index t, const Scalar& q) {
        M.col(j) -= q * M.col(t);
        r.V.col(j) -= q * r.V.col(t);
        r.Vinv.row(t) += q * r.Vinv.row(j);
    };
    auto row_swap = [&](Index i, Index t) {
        if (i == t) return;
        M.row(i).swap(M.row(t));
        r.U.row(i).swap(r.U.row(t));
        r.Uinv.col(i).swap(r.Uinv.col(t));
    };
    auto col_swap = [&](Index j, Index t) {
        if (j == t) return;
        M.col(j).swap(M.col(t));
        r.V.col(j).swap(r.V.col(t));
        r.Vinv.row(j).swap(r.Vinv.row(t));
    };
    auto row_negate = [&](Index i) {
        M.row(i) = -M.row(i);
        r.U.row(i) = -r.U.row(i);
        r.Uinv.col(i) = -r.Uinv.col(i);
    };

    Index t = 0;
    while (t < std::min(m, n)) {
        // Locate the smallest nonzero entry of the trailing block.
        Index pi = -1, pj = -1;
        Scalar best(0);
        for (Index i = t; i < m; ++i)
            for (Index j = t; j < n; ++j) {
                if (M(i, j).is_zero()) continue;
                Scalar v = abs(M(i, j));
                if (pi < 0 || v < best) { best = v; pi = i; pj = j; }
            }
        if (pi < 0) break;
        row_swap(pi, t);
        col_swap(pj, t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (Index i = t + 1; i < m; ++i) {
                if (M(i, t).is_zero()) continue;
                Scalar q = M(i, t) / M(t, t);
                if (!q.is_zero()) row_sub(i, t, q);
                if (!M(i, t).is_zero()) {
                    // Remainder strictly smaller than the pivot: promote it.
                    row_swap(i, t);
                    clean = false;
                }
            }
            for (Index j = t + 1; j < n; ++j) {
                if (M(t, j).is_zero()) continue;
                Scalar q = M(t, j) / M(t, t);
                if (!q.is_zero()) col_sub(j, t, q);
                if (!M(t, j).is_zero()) {
                    col_swap(j, t);
                    clean = false;
                }
            }
        }

        // Pivot must divide the rest of the trailing block.
        bool redo = false;
        for (Index i = t + 1; i < m && !redo; ++i)
            for (Index j = t + 1; j < n && !redo; ++j)
                if (!(M(i, j) % M(t, t)).is_zero()) {
                    row_sub(t, i, Scalar(-1));  // fold row i into the pivot row
                    redo = true;
                }
        if (redo) continue;

        if (M(t, t).sign() < 0) row_negate(t);
        ++t;
    }
    r.rank = t;
    r.D = Mat::Zero(m, n);
    for (Index i = 0; i < t; ++i) r.D(i, i) = M(i, i);

    detail::snf_check_certificate(a, r);
    return r;
}

SNFResult snf(const SpMat& a);

/// One solution of A x = b over the integers, if any.
std::optional<IVector> solve_linear(const SNFResult& f, const IVector& b);
std::optional<IVector> solve_linear(const IMatrix& a, const IVector& b);

/// Basis of the integer kernel of A, as columns.
IMatrix kernel_basis(const SNFResult& f);

/// One solution of A x == b (mod modulus), if any; x is an integer vector.
std::optional<IVector> solve_mod(const IMatrix& a, const IVector& b, const Integer& modulus);

/// Inverse of a unimodular square matrix; throws if not unimodular.
IMatrix inverse_unimodular(const IMatrix& t);

}  // namespace padlab

#endif
