#include "cubforge/exact_scalar.hpp"

#include <cmath>
#include <ostream>

namespace cubforge {

ExactScalar ExactScalar::make(const Rational& a, const Rational& b, const Integer& D) {
    if (D < 0) throw std::domain_error("negative discriminant: no complex support");
    if (b == 0 || D == 0) return ExactScalar(a, 0, 0);
    auto split = squarefree_split(D);
    Rational b2 = b * Rational(split.root);
    if (split.squarefree == 1) return ExactScalar(a + b2, 0, 0);
    return ExactScalar(a, b2, split.squarefree);
}

const Rational& ExactScalar::as_rational() const {
    if (!is_rational()) throw std::domain_error("scalar " + str() + " is irrational");
    return a_;
}

const Integer& ExactScalar::joint_discriminant(const ExactScalar& o) const {
    if (d_ == 0) return o.d_;
    if (o.d_ == 0 || o.d_ == d_) return d_;
    throw MixedDiscriminantError(d_, o.d_);
}

ExactScalar ExactScalar::operator-() const { return ExactScalar(-a_, -b_, d_); }

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    Integer d = joint_discriminant(o);
    a_ += o.a_;
    b_ += o.b_;
    d_ = (b_ == 0) ? Integer(0) : d;
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    Integer d = joint_discriminant(o);
    a_ -= o.a_;
    b_ -= o.b_;
    d_ = (b_ == 0) ? Integer(0) : d;
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    Integer d = joint_discriminant(o);
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = (b_ == 0) ? Integer(0) : d;
    return *this;
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) return ExactScalar(1 / a_, 0, 0);
    // 1/(a + b sqrt(D)) = (a - b sqrt(D)) / (a^2 - b^2 D); the norm is
    // nonzero because sqrt(D) is irrational.
    Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
    return ExactScalar(a_ / norm, -b_ / norm, d_);
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

int ExactScalar::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b*sqrt(D) pull in opposite directions: compare |a| with |b|sqrt(D)
    // via squares.
    int cmp = sgn(Rational(a_ * a_ - b_ * b_ * Rational(d_)));
    if (cmp == 0) return 0;  // unreachable for squarefree D > 1, kept for safety
    return cmp > 0 ? sa : sb;
}

ExactScalar ExactScalar::pow(unsigned long e) const {
    ExactScalar r(1);
    ExactScalar base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::string ExactScalar::str() const {
    if (is_rational()) return to_string(a_);
    std::string s = to_string(a_);
    if (b_ > 0)
        s += " + " + to_string(b_);
    else
        s += " - " + to_string(-b_);
    s += "*sqrt(" + d_.get_str() + ")";
    return s;
}

ExactScalar ExactScalar::parse(const std::string& text) {
    auto fail = [&]() -> ExactScalar {
        throw std::invalid_argument("malformed scalar literal: '" + text + "'");
    };
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) return fail();

    auto star = s.find("*sqrt(");
    if (star == std::string::npos) {
        if (s.find("sqrt") != std::string::npos) return fail();
        return ExactScalar(parse_rational(s));
    }
    if (s.back() != ')') return fail();
    Integer D(s.substr(star + 6, s.size() - star - 7), 10);

    // split "<a><+/-><b>" at the sign that separates the two terms: the
    // last '+' or '-' before the surd coefficient that is not a leading or
    // exponent sign (coefficients are plain rationals, so any sign not at
    // position 0 and not after '/' is the separator).
    std::string head = s.substr(0, star);
    std::size_t sep = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
            head[i - 1] != '-') {
            sep = i;
            break;
        }
    }
    Rational a = 0, b;
    if (sep == std::string::npos) {
        b = parse_rational(head);
    } else {
        a = parse_rational(head.substr(0, sep));
        std::string btext = head.substr(sep + 1);
        b = parse_rational(btext);
        if (head[sep] == '-') b = -b;
    }
    return make(a, b, D);
}

double ExactScalar::approx() const {
    double v = a_.get_d();
    if (d_ != 0) v += b_.get_d() * std::sqrt(d_.get_d());
    return v;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.str(); }

}  // namespace cubforge
