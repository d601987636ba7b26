#pragma once

// Exact arithmetic in Q(sqrt2), the coefficient field for everything in this
// library. A value is r + s*sqrt2 with r, s exact rationals; equality is
// componentwise and the ordering is decided without floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace g2syms {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero in Q(sqrt2)") {}
};

class QSqrt2 {
public:
    QSqrt2() : r_(0), s_(0) {}
    QSqrt2(long v) : r_(v), s_(0) {}          // NOLINT: implicit by design
    QSqrt2(int v) : r_(v), s_(0) {}           // NOLINT
    explicit QSqrt2(Rational r) : r_(std::move(r)), s_(0) {}
    QSqrt2(Rational r, Rational s) : r_(std::move(r)), s_(std::move(s)) {}

    static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }
    static QSqrt2 inv_sqrt2() { return QSqrt2(Rational(0), Rational(1, 2)); }

    const Rational& rat_part() const { return r_; }
    const Rational& sqrt2_part() const { return s_; }

    bool is_zero() const { return r_ == 0 && s_ == 0; }
    bool is_rational() const { return s_ == 0; }

    friend QSqrt2 operator+(const QSqrt2& a, const QSqrt2& b) {
        return QSqrt2(mat(a.r_ + b.r_), mat(a.s_ + b.s_));
    }
    friend QSqrt2 operator-(const QSqrt2& a, const QSqrt2& b) {
        return QSqrt2(mat(a.r_ - b.r_), mat(a.s_ - b.s_));
    }
    friend QSqrt2 operator-(const QSqrt2& a) { return QSqrt2(mat(-a.r_), mat(-a.s_)); }
    friend QSqrt2 operator*(const QSqrt2& a, const QSqrt2& b) {
        // (r1 + s1 v)(r2 + s2 v) = r1 r2 + 2 s1 s2 + (r1 s2 + s1 r2) v,  v = sqrt2
        return QSqrt2(mat(a.r_ * b.r_ + 2 * a.s_ * b.s_), mat(a.r_ * b.s_ + a.s_ * b.r_));
    }
    friend QSqrt2 operator/(const QSqrt2& a, const QSqrt2& b) { return a * b.inverse(); }

    QSqrt2& operator+=(const QSqrt2& o) { return *this = *this + o; }
    QSqrt2& operator-=(const QSqrt2& o) { return *this = *this - o; }
    QSqrt2& operator*=(const QSqrt2& o) { return *this = *this * o; }
    QSqrt2& operator/=(const QSqrt2& o) { return *this = *this / o; }

    QSqrt2 inverse() const {
        if (is_zero()) throw DivisionByZero();
        // 1/(r + s v) = (r - s v)/(r^2 - 2 s^2); the norm is nonzero because
        // sqrt2 is irrational.
        Rational n = mat(r_ * r_ - 2 * s_ * s_);
        return QSqrt2(mat(r_ / n), mat(-s_ / n));
    }

    // Galois conjugate r - s*sqrt2.
    QSqrt2 conjugate() const { return QSqrt2(r_, mat(-s_)); }

    // Sign of the real number r + s*sqrt2, decided by exact case analysis:
    // for mixed-sign components compare r^2 against 2 s^2.
    int sign() const {
        int sr = sgn(r_), ss = sgn(s_);
        if (ss == 0) return sr;
        if (sr == 0) return ss;
        if (sr == ss) return sr;
        // r, s of opposite sign: |r| vs |s|*sqrt2 decided by r^2 vs 2 s^2.
        Rational d = mat(r_ * r_ - 2 * s_ * s_);
        int sd = sgn(d);
        return sd == 0 ? 0 : (sd > 0 ? sr : ss);
    }

    friend bool operator==(const QSqrt2& a, const QSqrt2& b) {
        return a.r_ == b.r_ && a.s_ == b.s_;
    }
    friend bool operator!=(const QSqrt2& a, const QSqrt2& b) { return !(a == b); }
    friend bool operator<(const QSqrt2& a, const QSqrt2& b) { return (a - b).sign() < 0; }
    friend bool operator>(const QSqrt2& a, const QSqrt2& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const QSqrt2& a, const QSqrt2& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const QSqrt2& a, const QSqrt2& b) { return (a - b).sign() >= 0; }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const QSqrt2& x) {
        if (x.is_zero()) return os << "0";
        bool first = true;
        if (x.r_ != 0) {
            os << x.r_;
            first = false;
        }
        if (x.s_ != 0) {
            if (!first && x.s_ > 0) os << "+";
            if (x.s_ == -1) os << "-";
            else if (x.s_ != 1) os << x.s_ << "*";
            os << "sqrt2";
        }
        return os;
    }

private:
    static Rational mat(const Rational& r) { return r; }
    template <class E>
    static Rational mat(const E& e) { return Rational(e); }  // materialize expression templates
    static int sgn(const Rational& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

    Rational r_, s_;
};

// Parses "p/q", "p", "r/s*sqrt2", "sqrt2", and sums like "1/2+3/4*sqrt2",
// "-1+sqrt2", "2-sqrt2". Whitespace is not allowed.
inline std::optional<QSqrt2> parse_scalar(const std::string& text) {
    if (text.empty()) return std::nullopt;
    QSqrt2 total(0);
    size_t pos = 0;
    while (pos < text.size()) {
        size_t start = pos;
        if (text[pos] == '+' || text[pos] == '-') ++pos;
        while (pos < text.size() && text[pos] != '+' && text[pos] != '-') ++pos;
        std::string term = text.substr(start, pos - start);
        if (term.empty() || term == "+" || term == "-") return std::nullopt;
        bool neg = term[0] == '-';
        if (term[0] == '+' || term[0] == '-') term = term.substr(1);
        bool has_sqrt2 = false;
        if (auto at = term.find("sqrt2"); at != std::string::npos) {
            if (at + 5 != term.size()) return std::nullopt;
            has_sqrt2 = true;
            term = term.substr(0, at);
            if (!term.empty()) {
                if (term.back() != '*') return std::nullopt;
                term.pop_back();
            }
        }
        Rational coeff(1);
        if (!term.empty()) {
            try {
                coeff = Rational(term);
            } catch (...) {
                return std::nullopt;
            }
            if (denominator(coeff) == 0) return std::nullopt;
        }
        if (neg) coeff = Rational(-coeff);
        total += has_sqrt2 ? QSqrt2(Rational(0), coeff) : QSqrt2(coeff);
    }
    return total;
}

}  // namespace g2syms
