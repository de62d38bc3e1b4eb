// Exact integer scalar and Eigen aliases used throughout the engine.
//
// All chain-level arithmetic is done over arbitrary-precision integers;
// intermediate entry growth during Smith reduction is real and silent
// overflow is never acceptable. Integer wraps boost::multiprecision
// behind a small value type so it can be used as an Eigen scalar.

#ifndef PADLAB_INTEGER_HPP
#define PADLAB_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace padlab {

class Integer {
public:
    using rep = boost::multiprecision::cpp_int;

    Integer() = default;
    Integer(int v) : v_(v) {}
    Integer(long v) : v_(v) {}
    Integer(long long v) : v_(v) {}
    Integer(unsigned v) : v_(v) {}
    Integer(unsigned long v) : v_(v) {}
    Integer(unsigned long long v) : v_(v) {}
    explicit Integer(const rep& r) : v_(r) {}
    explicit Integer(const std::string& s) : v_(s) {}

    const rep& raw() const { return v_; }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    /// Narrowing accessor; throws when the value does not fit.
    long long to_ll() const {
        if (v_ > (std::numeric_limits<long long>::max)() ||
            v_ < (std::numeric_limits<long long>::min)())
            throw std::overflow_error("Integer::to_ll: value out of range");
        return static_cast<long long>(v_);
    }

    std::string str() const { return v_.str(); }

    Integer operator-() const { return Integer(rep(-v_)); }
    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
    /// Truncated division, as in C++ built-in integers.
    Integer& operator/=(const Integer& o) { v_ /= o.v_; return *this; }
    Integer& operator%=(const Integer& o) { v_ %= o.v_; return *this; }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
    friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Integer& a, const Integer& b) { return a.v_ != b.v_; }
    friend bool operator<(const Integer& a, const Integer& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Integer& a, const Integer& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Integer& a, const Integer& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Integer& a, const Integer& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Integer& x);

private:
    rep v_;
};

std::ostream& operator<<(std::ostream& os, const Integer& x);

inline Integer abs(const Integer& x) { return x.sign() < 0 ? -x : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
    return Integer(boost::multiprecision::gcd(a.raw(), b.raw()));
}

inline Integer lcm(const Integer& a, const Integer& b) {
    return Integer(boost::multiprecision::lcm(a.raw(), b.raw()));
}

/// Extended gcd: returns g = gcd(a,b) and sets x, y with a*x + b*y = g, g >= 0.
Integer gcdext(const Integer& a, const Integer& b, Integer& x, Integer& y);

/// Nonnegative remainder in [0, m), m > 0.
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r.sign() < 0) r += m;
    return r;
}

Integer pow(const Integer& base, unsigned exp);

/// p-adic valuation of x (x != 0); returns -1 for x == 0 (convention: infinite).
int valuation(Integer x, const Integer& p);

using IMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using SpMat = Eigen::SparseMatrix<Integer>;
using Index = Eigen::Index;

SpMat to_sparse(const IMatrix& a);
IMatrix to_dense(const SpMat& a);
bool sparse_equal(const SpMat& a, const SpMat& b);

}  // namespace padlab

namespace Eigen {
template <>
struct NumTraits<padlab::Integer> {
    using Real = padlab::Integer;
    using NonInteger = padlab::Integer;
    using Nested = padlab::Integer;
    using Literal = padlab::Integer;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16
    };
    static inline Real epsilon() { return padlab::Integer(0); }
    static inline Real dummy_precision() { return padlab::Integer(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif
