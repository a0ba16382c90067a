#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cocompact {

// Thrown on malformed user input (bad literals, schema violations).
struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a configurable resource cap is exceeded.
struct resource_limit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational number. All endpoint/coefficient arithmetic in this library
// goes through this type; nothing is ever rounded until a value is exported
// as a double for logging or regression.
class rational {
public:
    rational() : v_(0) {}
    rational(int n) : v_(n) {}
    rational(long n) : v_(static_cast<long int>(n)) {}
    rational(long long n) { v_ = from_ll(n); }
    rational(long long num, long long den) {
        if (den == 0) throw invalid_input("rational: zero denominator");
        v_ = from_ll(num) / from_ll(den);
    }
    explicit rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "p", "p/q", and optional leading '-'.
    static rational parse(std::string_view s);
    // 2^e with e possibly negative; handy for epsilon ladders.
    static rational pow2(long e);

    std::string str() const;
    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    rational abs() const { return rational(mpq_class(::abs(v_))); }
    bool is_integer() const { return v_.get_den() == 1; }

    // floor(*this / step), as a signed 64-bit index. Throws if out of range.
    long long floor_div(const rational& step) const;

    friend rational operator+(const rational& a, const rational& b) { return rational(mpq_class(a.v_ + b.v_)); }
    friend rational operator-(const rational& a, const rational& b) { return rational(mpq_class(a.v_ - b.v_)); }
    friend rational operator*(const rational& a, const rational& b) { return rational(mpq_class(a.v_ * b.v_)); }
    friend rational operator/(const rational& a, const rational& b) {
        if (sgn(b.v_) == 0) throw invalid_input("rational: division by zero");
        return rational(mpq_class(a.v_ / b.v_));
    }
    rational operator-() const { return rational(mpq_class(-v_)); }
    rational& operator+=(const rational& b) { v_ += b.v_; return *this; }
    rational& operator-=(const rational& b) { v_ -= b.v_; return *this; }
    rational& operator*=(const rational& b) { v_ *= b.v_; return *this; }

    friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const rational& a, const rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const rational& a, const rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const rational& a, const rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const rational& a, const rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const rational& r);

private:
    static mpq_class from_ll(long long n) {
        if (n >= -2147483648LL && n <= 2147483647LL) return mpq_class(static_cast<long int>(n));
        const bool neg = n < 0;
        unsigned long long m = neg ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
        if (neg) z = -z;
        return mpq_class(z);
    }
    mpq_class v_;
};

inline rational rational::parse(std::string_view s) {
    if (s.empty()) throw invalid_input("rational: empty literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            mpq_class q(std::string(s), 10);
            q.canonicalize();
            return rational(std::move(q));
        }
        mpq_class num(std::string(s.substr(0, slash)), 10);
        mpq_class den(std::string(s.substr(slash + 1)), 10);
        if (sgn(den) == 0) throw invalid_input("rational: zero denominator in literal");
        mpq_class q = num / den;
        return rational(std::move(q));
    } catch (const std::invalid_argument&) {
        throw invalid_input("rational: bad literal '" + std::string(s) + "'");
    }
}

inline rational rational::pow2(long e) {
    mpq_class q(1);
    mpz_class two_abs;
    mpz_ui_pow_ui(two_abs.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) q = mpq_class(two_abs);
    else q = mpq_class(1) / mpq_class(two_abs);
    return rational(std::move(q));
}

inline std::string rational::str() const {
    return v_.get_str();  // "p" or "p/q", canonical
}

inline long long rational::floor_div(const rational& step) const {
    mpq_class q = v_ / step.v_;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!fl.fits_slong_p()) throw resource_limit("rational: floor_div index out of range");
    return fl.get_si();
}

inline std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.raw(); }

// Non-negative rational extended with +infinity; used for diameters,
// distances to complements and Lebesgue numbers.
class ext_rational {
public:
    ext_rational() : inf_(false), v_(0) {}
    ext_rational(rational v) : inf_(false), v_(std::move(v)) {}
    static ext_rational infinity() { ext_rational e; e.inf_ = true; return e; }

    bool is_infinite() const { return inf_; }
    const rational& value() const {
        if (inf_) throw std::logic_error("ext_rational: value() of infinity");
        return v_;
    }
    double to_double() const {
        return inf_ ? std::numeric_limits<double>::infinity() : v_.to_double();
    }

    friend bool operator==(const ext_rational& a, const ext_rational& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator<(const ext_rational& a, const ext_rational& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator>(const ext_rational& a, const ext_rational& b) { return b < a; }
    friend bool operator<=(const ext_rational& a, const ext_rational& b) { return !(b < a); }
    friend bool operator>=(const ext_rational& a, const ext_rational& b) { return !(a < b); }

    std::string str() const { return inf_ ? "inf" : v_.str(); }

private:
    bool inf_;
    rational v_;
};

}  // namespace cocompact
