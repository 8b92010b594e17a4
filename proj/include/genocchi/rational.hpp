#ifndef GENOCCHI_RATIONAL_HPP
#define GENOCCHI_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace genocchi {

// Exact rational number over arbitrary-precision integers.
//
// Invariants (canonical form, maintained after every operation):
//   - denominator > 0
//   - gcd(|numerator|, denominator) == 1
//   - zero is 0/1
//
// Values are immutable in spirit: every operation returns a fresh value and
// never mutates shared state, so concurrent use is safe.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) { assign(mpz_class(n), mpz_class(d)); }
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) { assign(n, d); }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        return Rational(mpq_class(1) / v_, already_canonical{});
    }

    // Integer power; negative exponents invert (and reject zero base).
    Rational pow(long e) const;

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    // Canonical text form "p/q" with the sign on p and q always printed,
    // e.g. "-3/2", "0/1", "5/1".
    std::string str() const;

    // Parses "p/q" or a bare integer "p". Rejects anything else, including
    // a zero denominator.
    static Rational parse(const std::string& text);

    // In-place fused a += b*c, the hot path of every convolution.
    void add_mul(const Rational& b, const Rational& c) {
        mpq_mul(scratch_().get_mpq_t(), b.v_.get_mpq_t(), c.v_.get_mpq_t());
        v_ += scratch_();
    }

    const mpq_class& raw() const { return v_; }

private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}

    void assign(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::domain_error("division by zero");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    static mpq_class& scratch_() {
        thread_local mpq_class s;
        return s;
    }

    mpq_class v_;
};

inline Rational rat_add(const Rational& a, const Rational& b) { return a + b; }
inline Rational rat_mul(const Rational& a, const Rational& b) { return a * b; }
inline Rational rat_neg(const Rational& a) { return -a; }
inline Rational rat_inv(const Rational& a) { return a.inverse(); }

// n! as an exact integer.
mpz_class factorial(unsigned long n);
// Binomial coefficient C(n, k); zero for k > n.
mpz_class binomial(unsigned long n, unsigned long k);
// n! / (a! b! c!) with a + b + c == n.
mpz_class multinomial(unsigned long n, unsigned long a, unsigned long b, unsigned long c);

}  // namespace genocchi

#endif
