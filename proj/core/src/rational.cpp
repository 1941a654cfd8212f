#include "cubforge/rational.hpp"

#include <stdexcept>

namespace cubforge {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(const Integer& n, unsigned long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return binomial(Integer(n), static_cast<unsigned long>(k));
}

Rational pochhammer(const Rational& x, unsigned long n) {
    Rational r = 1;
    for (unsigned long i = 0; i < n; ++i) r *= x + static_cast<long>(i);
    return r;
}

Integer double_factorial(long n) {
    if (n <= 0) return 1;
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

SquarefreeSplit squarefree_split(const Integer& n) {
    if (n <= 0) throw std::invalid_argument("squarefree_split: n must be positive");
    Integer rest = n;
    Integer root = 1, core = 1;
    // Trial division; inputs here are small discriminants and products of
    // small node denominators, so this is never the bottleneck.
    for (Integer p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) root *= p;
        if (e % 2 == 1) core *= p;
    }
    core *= rest;  // leftover prime, exponent 1
    return {root, core};
}

bool perfect_square(const Integer& n, Integer* root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (root) {
        mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    }
    return true;
}

}  // namespace cubforge
