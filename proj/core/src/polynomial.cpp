#include "cubforge/polynomial.hpp"

#include <stdexcept>

namespace cubforge {

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return RationalPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator*(const Rational& v) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= v;
    return RationalPoly(std::move(r));
}

ExactScalar RationalPoly::eval(const ExactScalar& x) const {
    ExactScalar acc(Rational(0));
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + ExactScalar(c_[i]);
    return acc;
}

int RationalPoly::strip_zero_roots() {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    if (k == c_.size()) {
        c_.clear();
        return 0;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    return static_cast<int>(k);
}

RationalPoly RationalPoly::deflate(const Rational& root) const {
    if (c_.empty()) throw std::invalid_argument("deflate: zero polynomial");
    std::vector<Rational> q(c_.size() - 1, Rational(0));
    Rational carry = 0;
    for (std::size_t i = c_.size(); i-- > 1;) {
        carry = c_[i] + carry * root;
        q[i - 1] = carry;
    }
    if (c_[0] + carry * root != 0)
        throw std::invalid_argument("deflate: value is not a root");
    return RationalPoly(std::move(q));
}

std::optional<std::vector<ExactScalar>> quadratic_field_roots(const RationalPoly& p) {
    if (p.is_zero()) return std::nullopt;  // everything is a root; not useful
    RationalPoly q = p;
    q.strip_zero_roots();  // roots at 0 are never admissible parameters
    for (Rational r : {Rational(1), Rational(-1)}) {
        while (q.degree() >= 1 && q.eval(ExactScalar(r)).is_zero()) q = q.deflate(r);
    }
    std::vector<ExactScalar> roots;
    if (q.degree() <= 0) return roots;
    if (q.degree() == 1) {
        roots.push_back(ExactScalar(-q.coeffs()[0] / q.coeffs()[1]));
        return roots;
    }
    if (q.degree() > 2) return std::nullopt;
    const Rational a = q.coeffs()[2], b = q.coeffs()[1], c = q.coeffs()[0];
    const Rational disc = b * b - 4 * a * c;
    if (disc < 0) return roots;  // provably no real root
    // sqrt(n/d) = sqrt(n*d)/d
    Integer nd = disc.get_num() * disc.get_den();
    ExactScalar root_disc = ExactScalar::make(0, Rational(1, disc.get_den()), nd);
    ExactScalar two_a{Rational(2) * a};
    roots.push_back((ExactScalar(-b) + root_disc) / two_a);
    ExactScalar other = (ExactScalar(-b) - root_disc) / two_a;
    if (other != roots[0]) roots.push_back(other);
    return roots;
}

}  // namespace cubforge
