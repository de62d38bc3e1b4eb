#include "padlab/snf.hpp"

namespace padlab {

SNFResult snf(const SpMat& a) {
    return snf<Integer>(to_dense(a));
}

std::optional<IVector> solve_linear(const SNFResult& f, const IVector& b) {
    const Index m = f.U.rows(), n = f.V.rows();
    if (b.size() != m) throw std::invalid_argument("solve_linear: size mismatch");
    IVector ub = f.U * b;
    IVector y = IVector::Zero(n);
    for (Index i = 0; i < m; ++i) {
        Integer d = f.diag(i);
        if (d.is_zero()) {
            if (!ub(i).is_zero()) return std::nullopt;
        } else {
            if (!(ub(i) % d).is_zero()) return std::nullopt;
            if (i < n) y(i) = ub(i) / d;
        }
    }
    return IVector(f.V * y);
}

std::optional<IVector> solve_linear(const IMatrix& a, const IVector& b) {
    return solve_linear(snf<Integer>(a), b);
}

IMatrix kernel_basis(const SNFResult& f) {
    const Index n = f.V.rows();
    return f.V.rightCols(n - f.rank);
}

std::optional<IVector> solve_mod(const IMatrix& a, const IVector& b, const Integer& modulus) {
    const Index m = a.rows(), n = a.cols();
    if (modulus <= Integer(0)) throw std::invalid_argument("solve_mod: modulus must be positive");
    IMatrix aug(m, n + m);
    aug.leftCols(n) = a;
    aug.rightCols(m) = IMatrix::Zero(m, m);
    for (Index i = 0; i < m; ++i) aug(i, n + i) = modulus;
    auto sol = solve_linear(aug, b);
    if (!sol) return std::nullopt;
    return IVector(sol->head(n));
}

IMatrix inverse_unimodular(const IMatrix& t) {
    if (t.rows() != t.cols()) throw std::invalid_argument("inverse_unimodular: not square");
    SNFResult f = snf<Integer>(t);
    for (Index i = 0; i < t.rows(); ++i)
        if (f.diag(i) != Integer(1))
            throw std::invalid_argument("inverse_unimodular: matrix is not unimodular");
    // U t V = I  =>  t^{-1} = V U.
    return f.V * f.U;
}

}  // namespace padlab
