#ifndef POWMON_LATTICE_HPP
#define POWMON_LATTICE_HPP

// Exact arithmetic on Z^2 and on positive quadratic irrationals a + b*sqrt(n).
// Every order decision made anywhere in the library ends up in sign_quad;
// nothing on the decision path touches floating point.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "text.hpp"

namespace powmon {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of the additive group Z^2.
///
/// The ordering is lexicographic by (x, y). It only fixes a canonical layout
/// for sets and carries no algebraic meaning.
struct GroupElement {
    Integer x;
    Integer y;

    GroupElement() = default;
    GroupElement(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}

    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    friend GroupElement operator+(const GroupElement& a, const GroupElement& b) { return {a.x + b.x, a.y + b.y}; }
    friend GroupElement operator-(const GroupElement& a, const GroupElement& b) { return {a.x - b.x, a.y - b.y}; }
    friend GroupElement operator-(const GroupElement& a) { return {-a.x, -a.y}; }
    GroupElement& operator+=(const GroupElement& o) {
        x += o.x;
        y += o.y;
        return *this;
    }

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

inline std::string to_string(const GroupElement& g) { return "(" + g.x.str() + "," + g.y.str() + ")"; }

inline std::ostream& operator<<(std::ostream& os, const GroupElement& g) { return os << to_string(g); }

namespace detail {

inline GroupElement parse_element(cursor& in) {
    in.expect('(');
    Integer x(in.signed_digits());
    in.expect(',');
    Integer y(in.signed_digits());
    in.expect(')');
    return {std::move(x), std::move(y)};
}

inline int sign_of(const Integer& v) { return v.sign(); }

inline bool is_perfect_square(const Integer& n) {
    if (n < 0)
        return false;
    Integer r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

// sign(p + q*sqrt(n)) for integers, n assumed non-square.
inline int sign_quad_int(const Integer& p, const Integer& q, const Integer& n) {
    const int sp = sign_of(p);
    const int sq = sign_of(q);
    if (sp >= 0 && sq >= 0)
        return (sp == 0 && sq == 0) ? 0 : 1;
    if (sp <= 0 && sq <= 0)
        return -1;
    // Opposite signs: compare squares.
    const Integer lhs = q * q * n;
    const Integer rhs = p * p;
    if (sq > 0)
        return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    return rhs > lhs ? 1 : (rhs < lhs ? -1 : 0);
}

// Floor division rounding toward negative infinity; d > 0.
inline Integer floor_div(const Integer& num, const Integer& d) {
    Integer q = num / d;
    if (num.sign() < 0 && q * d != num)
        --q;
    return q;
}

} // namespace detail

inline GroupElement parse_element(std::string_view text) {
    detail::cursor in(text);
    GroupElement g = detail::parse_element(in);
    in.finish();
    return g;
}

/// Sign of p + q*sqrt(n), decided exactly. Throws invalid_value when n is not
/// a positive non-square.
inline int sign_quad(const Rational& p, const Rational& q, const Integer& n) {
    if (n <= 0 || detail::is_perfect_square(n))
        throw invalid_value("sign_quad: radicand " + n.str() + " must be a positive non-square");
    // Scale by den(p)*den(q) > 0.
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return detail::sign_quad_int(numerator(p) * denominator(q), numerator(q) * denominator(p), n);
}

/// A positive real a + b*sqrt(n) with a, b rational, b != 0 and n a positive
/// non-square. Internally also kept as (A + B*sqrt(n)) / D over the integers.
class QuadraticIrrational {
public:
    QuadraticIrrational(Rational a, Rational b, Integer n) : a_(std::move(a)), b_(std::move(b)), n_(std::move(n)) {
        if (n_ <= 0 || detail::is_perfect_square(n_))
            throw invalid_value("radicand " + n_.str() + " must be a positive non-square");
        if (b_ == 0)
            throw invalid_value("coefficient of sqrt must be nonzero");
        if (sign_quad(a_, b_, n_) <= 0)
            throw invalid_value("alpha = " + str() + " must be positive");
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        den_ = boost::multiprecision::lcm(denominator(a_), denominator(b_));
        int_a_ = numerator(a_) * (den_ / denominator(a_));
        int_b_ = numerator(b_) * (den_ / denominator(b_));
    }

    /// sqrt(n).
    static QuadraticIrrational sqrt_of(const Integer& n) { return {Rational(0), Rational(1), n}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Integer& n() const { return n_; }

    /// Sign of alpha*x - y.
    int cmp_scaled(const Integer& x, const Integer& y) const {
        return detail::sign_quad_int(int_a_ * x - den_ * y, int_b_ * x, n_);
    }

    /// floor(alpha*x). With u = A*x, v = B*x and s = isqrt(v^2 n), v*sqrt(n)
    /// lies strictly inside (s, s+1) or (-s-1, -s), and no multiple of D can
    /// fall strictly between consecutive integers.
    Integer floor_scaled(const Integer& x) const {
        if (x.is_zero())
            return 0;
        const Integer u = int_a_ * x;
        const Integer v = int_b_ * x;
        const Integer s = boost::multiprecision::sqrt(Integer(v * v * n_));
        return v.sign() > 0 ? detail::floor_div(u + s, den_) : detail::floor_div(u - s - 1, den_);
    }

    std::string str() const {
        const std::string root = "sqrt(" + n_.str() + ")";
        const Rational mag = b_ < 0 ? Rational(-b_) : b_;
        const std::string coeff = mag == 1 ? root : mag.str() + "*" + root;
        if (a_ == 0)
            return b_ < 0 ? "-" + coeff : coeff;
        return a_.str() + (b_ < 0 ? "-" : "+") + coeff;
    }

    friend bool operator==(const QuadraticIrrational& l, const QuadraticIrrational& r) {
        return l.a_ == r.a_ && l.b_ == r.b_ && l.n_ == r.n_;
    }

private:
    Rational a_;
    Rational b_;
    Integer n_;
    Integer den_;
    Integer int_a_;
    Integer int_b_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadraticIrrational& q) { return os << q.str(); }

/// sign(alpha*x - y). Zero exactly at (0, 0).
inline int cmp_slope(const QuadraticIrrational& alpha, const Integer& x, const Integer& y) {
    return alpha.cmp_scaled(x, y);
}

/// floor(alpha*x), exact.
inline Integer floor_mul(const QuadraticIrrational& alpha, const Integer& x) { return alpha.floor_scaled(x); }

namespace detail {

inline Rational parse_rational(cursor& in) {
    Integer num(in.digits());
    if (in.accept('/')) {
        Integer den(in.digits());
        if (den.is_zero())
            in.fail("zero denominator");
        return Rational(num, den);
    }
    return Rational(num);
}

// One signed summand: either a rational constant or [rational *] sqrt(n).
struct summand {
    bool is_root = false;
    Rational value;
    Integer radicand;
};

inline summand parse_summand(cursor& in, bool negative) {
    summand s;
    Rational coeff(1);
    if (!in.accept("sqrt")) {
        coeff = parse_rational(in);
        if (!in.accept('*')) {
            s.value = negative ? Rational(-coeff) : coeff;
            return s;
        }
        if (!in.accept("sqrt"))
            in.fail("expected sqrt after '*'");
    }
    in.expect('(');
    s.radicand = Integer(in.digits());
    in.expect(')');
    s.is_root = true;
    s.value = negative ? Rational(-coeff) : coeff;
    return s;
}

} // namespace detail

/// Parses `sqrt(n)`, `a+b*sqrt(n)`, `a-b*sqrt(n)`, `b*sqrt(n)` with a, b
/// written as integers or p/q. Rejects perfect-square n, b = 0 and
/// nonpositive values.
inline QuadraticIrrational parse_quadratic(std::string_view text) {
    detail::cursor in(text);
    bool negative = false;
    if (in.accept('-'))
        negative = true;
    else
        in.accept('+');
    std::optional<Rational> constant;
    std::optional<std::pair<Rational, Integer>> root;
    for (int term = 0;; ++term) {
        detail::summand s = detail::parse_summand(in, negative);
        if (s.is_root) {
            if (root)
                in.fail("more than one sqrt term");
            root.emplace(s.value, s.radicand);
        } else {
            if (constant)
                in.fail("more than one constant term");
            constant = s.value;
        }
        if (in.at_end())
            break;
        if (term == 1)
            in.fail("at most two terms allowed");
        if (in.accept('-'))
            negative = true;
        else if (in.accept('+'))
            negative = false;
        else
            in.fail("expected '+' or '-'");
    }
    if (!root)
        throw parse_error("alpha \"" + std::string(text) + "\" has no sqrt term (alpha must be irrational)");
    return QuadraticIrrational(constant.value_or(Rational(0)), root->first, root->second);
}

} // namespace powmon

#endif // POWMON_LATTICE_HPP
