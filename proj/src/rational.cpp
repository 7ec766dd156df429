#include "bstirling/rational.hpp"

#include <cctype>
#include <ostream>

namespace bstirling {

namespace {

void require_nonzero_den(const mpz_class& den) {
    if (sgn(den) == 0) throw Error("rational with zero denominator");
}

bool valid_integer_token(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
    require_nonzero_den(q_.get_den());
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    require_nonzero_den(den);
    q_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!valid_integer_token(den))
            throw Error("invalid rational literal '" + std::string(text) + "'");
    }
    if (!valid_integer_token(num))
        throw Error("invalid rational literal '" + std::string(text) + "'");
    if (!num.empty() && num.front() == '+') num.remove_prefix(1);
    if (!den.empty() && den.front() == '+') den.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (sgn(d) == 0) throw Error("invalid rational literal '" + std::string(text) + "': zero denominator");
    return Rational(n, d);
}

long Rational::to_long() const {
    if (!is_integer()) throw Error("rational " + str() + " is not an integer");
    mpz_class n = num();
    if (!n.fits_slong_p()) throw Error("integer " + n.get_str() + " out of range");
    return n.get_si();
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul
                             : static_cast<unsigned long>(e);
    mpq_class result;
    mpz_pow_ui(result.get_num_mpz_t(), q_.get_num_mpz_t(), n);
    mpz_pow_ui(result.get_den_mpz_t(), q_.get_den_mpz_t(), n);
    result.canonicalize();
    Rational r{std::move(result)};
    if (invert) return Rational(1) / r;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero rational");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return mpz_class(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class double_factorial(long n) {
    if (n <= 0) return mpz_class(1);
    mpz_class r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace bstirling
