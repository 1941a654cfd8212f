#pragma once

#include <functional>
#include <map>
#include <vector>

#include "cubforge/exact_scalar.hpp"

namespace cubforge::detail {

// Dense multivariate polynomial keyed by exponent vectors. Small by
// construction here: <= 5 variables, degree <= 10.
template <typename Coeff>
using PolyMap = std::map<std::vector<int>, Coeff>;

template <typename Coeff>
void add_term(PolyMap<Coeff>& poly, const std::vector<int>& expo, const Coeff& c) {
    auto [it, inserted] = poly.emplace(expo, c);
    if (!inserted) it->second += c;
}

// M (x_1^2 + ... + x_n^2)^t
template <typename Coeff>
PolyMap<Coeff> sum_of_squares_power(int n, int t, const Coeff& scale) {
    PolyMap<Coeff> out;
    std::vector<int> gamma(static_cast<std::size_t>(n), 0);
    std::function<void(int, int, Integer)> rec = [&](int pos, int remaining,
                                                     Integer multinomial) {
        if (pos == n - 1) {
            gamma[static_cast<std::size_t>(pos)] = remaining;
            Integer coeff = multinomial / factorial(static_cast<unsigned long>(remaining));
            std::vector<int> expo(gamma.size());
            for (std::size_t i = 0; i < gamma.size(); ++i) expo[i] = 2 * gamma[i];
            add_term(out, expo, scale * Coeff(Rational(coeff)));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            gamma[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, remaining - v,
                multinomial / factorial(static_cast<unsigned long>(v)));
        }
    };
    if (n > 0) rec(0, t, factorial(static_cast<unsigned long>(t)));
    return out;
}

// Adds scale * sum over the podal sign orbit of <g, x>^{power} for one fixed
// arrangement g (entries >= 0; zeros allowed). Only even exponent vectors
// survive the sign sum; the podal half contributes 2^{tau-1} per term.
template <typename Coeff>
void add_podal_sign_expansion(PolyMap<Coeff>& poly, const std::vector<Coeff>& g,
                              int power, const Coeff& scale) {
    const int n = static_cast<int>(g.size());
    int tau = 0;
    for (const auto& v : g)
        if (!(v == Coeff(Rational(0)))) ++tau;
    if (tau == 0) return;
    Integer half = 1;
    half <<= (tau - 1);
    Coeff factor = scale * Coeff(Rational(half));

    std::vector<int> beta(static_cast<std::size_t>(n), 0);
    std::function<void(int, int, Integer, Coeff)> rec =
        [&](int pos, int remaining, Integer multinomial, Coeff value) {
            if (pos == n) {
                if (remaining == 0) add_term(poly, beta, factor * value * Coeff(Rational(multinomial)));
                return;
            }
            const bool zero = g[static_cast<std::size_t>(pos)] == Coeff(Rational(0));
            for (int b = 0; b <= remaining; b += 2) {
                if (b > 0 && zero) break;
                beta[static_cast<std::size_t>(pos)] = b;
                Coeff v = value;
                if (b > 0) v = v * g[static_cast<std::size_t>(pos)].pow(
                                       static_cast<unsigned long>(b));
                rec(pos + 1, remaining - b,
                    multinomial / factorial(static_cast<unsigned long>(b)), v);
                beta[static_cast<std::size_t>(pos)] = 0;
            }
        };
    rec(0, power, factorial(static_cast<unsigned long>(power)), Coeff(Rational(1)));
}

}  // namespace cubforge::detail
