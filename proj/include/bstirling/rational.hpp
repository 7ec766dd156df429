#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "bstirling/errors.hpp"

namespace bstirling {

/// Exact rational scalar backed by GMP.  Always kept in canonical form
/// (reduced, positive denominator).  The wrapper hides gmpxx expression
/// templates so the type composes cleanly with Eigen, and turns GMP's
/// divide-by-zero abort into a thrown error.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(n) {}
    Rational(const mpz_class& n) : q_(n) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parse "num" or "num/den" with optional sign on either part.
    static Rational from_string(std::string_view text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Exact conversion; throws unless the value is an integer fitting a long.
    long to_long() const;

    /// Canonical text: "n" for integers, "n/d" otherwise.
    std::string str() const;

    /// Integer power with the convention 0^0 = 1.
    Rational pow(long e) const;

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as an exact integer.
mpz_class factorial(unsigned long n);

/// C(n, k); zero when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

/// n!! = n(n-2)(n-4)...; (-1)!! = 0!! = 1.
mpz_class double_factorial(long n);

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace bstirling

namespace Eigen {

template <>
struct NumTraits<bstirling::Rational> : GenericNumTraits<bstirling::Rational> {
    typedef bstirling::Rational Real;
    typedef bstirling::Rational NonInteger;
    typedef bstirling::Rational Nested;
    typedef bstirling::Rational Literal;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 100,
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
