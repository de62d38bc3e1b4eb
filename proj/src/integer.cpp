#include "padlab/integer.hpp"

#include <ostream>

namespace padlab {

std::ostream& operator<<(std::ostream& os, const Integer& x) {
    return os << x.raw();
}

Integer gcdext(const Integer& a, const Integer& b, Integer& x, Integer& y) {
    // Iterative extended Euclid on the raw representation.
    Integer::rep old_r = a.raw(), r = b.raw();
    Integer::rep old_x = 1, xx = 0;
    Integer::rep old_y = 0, yy = 1;
    while (!r.is_zero()) {
        Integer::rep q = old_r / r;
        Integer::rep t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r.sign() < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = Integer(old_x);
    y = Integer(old_y);
    return Integer(old_r);
}

Integer pow(const Integer& base, unsigned exp) {
    return Integer(boost::multiprecision::pow(base.raw(), exp));
}

int valuation(Integer x, const Integer& p) {
    if (x.is_zero()) return -1;
    int v = 0;
    while ((x % p).is_zero()) { x /= p; ++v; }
    return v;
}

SpMat to_sparse(const IMatrix& a) {
    SpMat s(a.rows(), a.cols());
    std::vector<Eigen::Triplet<Integer>> trips;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (!a(i, j).is_zero()) trips.emplace_back(i, j, a(i, j));
    s.setFromTriplets(trips.begin(), trips.end());
    return s;
}

IMatrix to_dense(const SpMat& a) {
    IMatrix d = IMatrix::Zero(a.rows(), a.cols());
    for (Index k = 0; k < a.outerSize(); ++k)
        for (SpMat::InnerIterator it(a, k); it; ++it)
            d(it.row(), it.col()) = it.value();
    return d;
}

bool sparse_equal(const SpMat& a, const SpMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    SpMat d = a - b;
    for (Index k = 0; k < d.outerSize(); ++k)
        for (SpMat::InnerIterator it(d, k); it; ++it)
            if (!it.value().is_zero()) return false;
    return true;
}

}  // namespace padlab
