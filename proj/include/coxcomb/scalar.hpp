#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <cstring>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coxcomb/error.hpp"

namespace coxcomb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_squarefree(long d) {
    if (d < 0) return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

/// The ambient coefficient field Q(sqrt(d)). d in {0,1} degenerates to plain Q.
struct FieldContext {
    long d = 0;

    FieldContext() = default;
    explicit FieldContext(long d_) : d(d_) {
        if (!is_squarefree(d))
            raise(errc::bad_parameters, "field parameter d must be a squarefree non-negative integer, got " + std::to_string(d_));
        if (d == 1) d = 0;
    }

    bool rational() const { return d == 0; }
    bool operator==(const FieldContext& o) const { return d == o.d; }
};

/// Element a + b*sqrt(d) of a real quadratic field, in canonical form:
/// fractions reduced with positive denominators, b = 0 forces d = 0.
/// A scalar with b = 0 is compatible with every field context.
class Scalar {
public:
    Scalar() : d_(0) {}
    Scalar(int v) : a_(v), d_(0) {}
    Scalar(long v) : a_(v), d_(0) {}
    Scalar(const Int& v) : a_(v), d_(0) {}
    Scalar(const Rational& a) : a_(a), d_(0) {}
    Scalar(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) { normalize(); }

    static Scalar sqrt_of(long d) { return Scalar(0, 1, d); }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    long field_d() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_integer() const { return b_ == 0 && denominator(a_) == 1; }

    /// Exact sign of a + b*sqrt(d), decided by rational comparisons of a^2 vs d*b^2.
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare |a| vs |b|*sqrt(d) via squares
        Rational aa = a_ * a_, dbb = Rational(d_) * b_ * b_;
        if (aa == dbb) return 0; // cannot happen for squarefree d >= 2, but exact anyway
        return (aa > dbb) ? sa : sb;
    }

    Scalar operator-() const { return Scalar(-a_, -b_, d_); }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        if (x.b_ == 0 && y.b_ == 0) return Scalar(x.a_ + y.a_);
        long d = join(x, y);
        return Scalar(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        if (x.b_ == 0 && y.b_ == 0) return Scalar(x.a_ - y.a_);
        return x + (-y);
    }

    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        if (x.b_ == 0 && y.b_ == 0) return Scalar(x.a_ * y.a_);
        if (x.b_ == 0) return Scalar(x.a_ * y.a_, x.a_ * y.b_, y.d_);
        if (y.b_ == 0) return Scalar(x.a_ * y.a_, x.b_ * y.a_, x.d_);
        long d = join(x, y);
        return Scalar(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
    }

    friend Scalar operator/(const Scalar& x, const Scalar& y) {
        if (y.is_zero()) raise(errc::division_by_zero, "scalar division by zero");
        if (y.b_ == 0) {
            if (x.b_ == 0) return Scalar(x.a_ / y.a_);
            return Scalar(x.a_ / y.a_, x.b_ / y.a_, x.d_);
        }
        long d = join(x, y);
        // multiply by the conjugate; the norm a^2 - d b^2 vanishes only at zero
        Rational norm = y.a_ * y.a_ - Rational(d) * y.b_ * y.b_;
        if (norm == 0) raise(errc::internal_error, "zero norm for nonzero scalar (d not squarefree?)");
        return Scalar((x.a_ * y.a_ - Rational(d) * x.b_ * y.b_) / norm,
                      (x.b_ * y.a_ - x.a_ * y.b_) / norm, d);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        join(x, y);
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    friend bool operator<(const Scalar& x, const Scalar& y) {
        if (x.b_ == 0 && y.b_ == 0) return x.a_ < y.a_;
        return (x - y).sign() < 0;
    }
    friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
    friend bool operator<=(const Scalar& x, const Scalar& y) { return !(y < x); }
    friend bool operator>=(const Scalar& x, const Scalar& y) { return !(x < y); }

    Scalar pow(long e) const {
        if (e < 0) return Scalar(1) / pow(-e);
        Scalar r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    /// Canonical text: "p/q", "r/s*sqrt(d)", or "p/q+r/s*sqrt(d)" (minus folded into r).
    std::string to_string() const {
        std::ostringstream os;
        if (b_ == 0) {
            os << a_;
            return os.str();
        }
        if (a_ != 0) {
            os << a_;
            if (b_ > 0) os << "+";
        }
        if (b_ == -1) os << "-";
        else if (b_ != 1) os << b_ << "*";
        os << "sqrt(" << d_ << ")";
        return os.str();
    }

    static Scalar parse(const std::string& text);
    static Scalar parse(const std::string& text, const FieldContext& ctx);

private:
    Rational a_, b_;
    long d_;

    void normalize() {
        if (d_ == 1) { a_ += b_; b_ = 0; }
        if (d_ == 0) b_ = 0;
        if (b_ == 0) d_ = 0;
    }

    static long join(const Scalar& x, const Scalar& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_)
            raise(errc::mixed_field_context,
                  "sqrt(" + std::to_string(x.d_) + ") and sqrt(" + std::to_string(y.d_) + ") in one expression");
        return x.d_;
    }
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace detail {

struct ScalarLexer {
    const std::string& s;
    size_t pos = 0;

    explicit ScalarLexer(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    bool consume_word(const char* w) {
        skip_ws();
        size_t n = std::strlen(w);
        if (s.compare(pos, n, w) == 0) { pos += n; return true; }
        return false;
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) raise(errc::parse_error, "expected digits at offset " + std::to_string(pos) + " in '" + s + "'");
        return Int(s.substr(start, pos - start));
    }
    Rational rational() {
        Int num = integer();
        if (consume('/')) {
            Int den = integer();
            if (den == 0) raise(errc::parse_error, "zero denominator in '" + s + "'");
            return Rational(num, den);
        }
        return Rational(num);
    }
};

} // namespace detail

/// Grammar: term ::= rat | [rat '*'] 'sqrt(' int ')'; scalar ::= ['+'|'-'] term {('+'|'-') term}.
/// At most one sqrt(d) may occur; parse round-trips to_string exactly.
inline Scalar Scalar::parse(const std::string& text) {
    detail::ScalarLexer lx(text);
    Scalar acc(0);
    bool first = true;
    while (!lx.eof()) {
        int sgn = 1;
        if (lx.consume('-')) sgn = -1;
        else if (lx.consume('+')) sgn = 1;
        else if (!first) raise(errc::parse_error, "expected '+' or '-' in '" + text + "'");
        first = false;

        Rational coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            coef = lx.rational();
            have_coef = true;
        }
        bool surd = false;
        if (have_coef ? lx.consume('*') : true) {
            if (lx.consume_word("sqrt")) {
                if (!lx.consume('(')) raise(errc::parse_error, "expected '(' after sqrt in '" + text + "'");
                Int d = lx.integer();
                if (!lx.consume(')')) raise(errc::parse_error, "expected ')' in '" + text + "'");
                if (d > 1000000) raise(errc::parse_error, "field parameter too large in '" + text + "'");
                long dl = static_cast<long>(d);
                if (!is_squarefree(dl)) raise(errc::parse_error, "d in sqrt(d) must be squarefree, got '" + text + "'");
                acc += Scalar(0, sgn * coef, dl);
                surd = true;
            } else if (!have_coef) {
                raise(errc::parse_error, "expected number or sqrt(...) in '" + text + "'");
            } else if (have_coef) {
                raise(errc::parse_error, "dangling '*' in '" + text + "'");
            }
        }
        if (!surd) acc += Scalar(sgn * coef);
    }
    if (first) raise(errc::parse_error, "empty scalar literal");
    return acc;
}

inline Scalar Scalar::parse(const std::string& text, const FieldContext& ctx) {
    Scalar v = parse(text);
    if (!v.is_rational() && v.field_d() != ctx.d)
        raise(errc::mixed_field_context,
              "literal '" + text + "' uses sqrt(" + std::to_string(v.field_d()) + ") but the fan's field is d=" + std::to_string(ctx.d));
    return v;
}

/// Exact complex number with components in Q(sqrt(d)).
struct ComplexScalar {
    Scalar re, im;

    ComplexScalar() = default;
    ComplexScalar(const Scalar& r) : re(r) {}
    ComplexScalar(int r) : re(r) {}
    ComplexScalar(const Scalar& r, const Scalar& i) : re(r), im(i) {}

    static ComplexScalar i() { return ComplexScalar(Scalar(0), Scalar(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    ComplexScalar operator-() const { return {-re, -im}; }
    friend ComplexScalar operator+(const ComplexScalar& x, const ComplexScalar& y) { return {x.re + y.re, x.im + y.im}; }
    friend ComplexScalar operator-(const ComplexScalar& x, const ComplexScalar& y) { return {x.re - y.re, x.im - y.im}; }
    friend ComplexScalar operator*(const ComplexScalar& x, const ComplexScalar& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend ComplexScalar operator/(const ComplexScalar& x, const ComplexScalar& y) {
        if (y.is_zero()) raise(errc::division_by_zero, "complex division by zero");
        Scalar n = y.re * y.re + y.im * y.im;
        return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
    }
    ComplexScalar& operator+=(const ComplexScalar& o) { return *this = *this + o; }
    ComplexScalar& operator*=(const ComplexScalar& o) { return *this = *this * o; }
    friend bool operator==(const ComplexScalar& x, const ComplexScalar& y) { return x.re == y.re && x.im == y.im; }
    friend bool operator!=(const ComplexScalar& x, const ComplexScalar& y) { return !(x == y); }

    ComplexScalar pow(long e) const {
        if (e < 0) return ComplexScalar(1) / pow(-e);
        ComplexScalar r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (im.is_zero()) return re.to_string();
        std::string i_part = im.to_string();
        std::string out;
        // a two-term imaginary part is parenthesized so the sum stays unambiguous
        bool compound = !im.is_rational() && im.rational_part() != 0;
        if (!re.is_zero()) {
            out = re.to_string();
            if (compound || im.sign() > 0) out += "+";
        }
        if (compound) out += "(" + i_part + ")*i";
        else if (i_part == "1") out += "i";
        else if (i_part == "-1") out += "-i";
        else out += i_part + "*i";
        return out;
    }

    /// Grammar: sum of scalar terms, each optionally tagged imaginary by a trailing
    /// 'i' or '*i' ("1+2i", "i", "-1/2*i", "sqrt(2)-i").
    static ComplexScalar parse(const std::string& text) {
        // split into signed chunks at top level, route each to re or im
        std::vector<std::pair<int, std::string>> terms;
        int depth = 0;
        std::string cur;
        int sign = 1;
        bool any = false;
        auto flush = [&]() {
            if (!cur.empty()) { terms.push_back({sign, cur}); cur.clear(); any = true; }
        };
        for (char c : text) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && (c == '+' || c == '-') && !cur.empty()) {
                flush();
                sign = (c == '-') ? -1 : 1;
                continue;
            }
            if (depth == 0 && (c == '+' || c == '-') && cur.empty()) {
                sign = (c == '-') ? -sign : sign;
                continue;
            }
            if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
        }
        flush();
        if (!any) raise(errc::parse_error, "empty complex literal");
        ComplexScalar out;
        for (auto& [sg, t] : terms) {
            bool imag = false;
            if (!t.empty() && t.back() == 'i') {
                imag = true;
                t.pop_back();
                if (!t.empty() && t.back() == '*') t.pop_back();
                if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
                if (t.empty()) t = "1";
            }
            Scalar v = Scalar::parse(t);
            if (sg < 0) v = -v;
            if (imag) out.im += v;
            else out.re += v;
        }
        return out;
    }
};

inline std::ostream& operator<<(std::ostream& os, const ComplexScalar& z) { return os << z.to_string(); }

} // namespace coxcomb
