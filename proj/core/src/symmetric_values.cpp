#include "cubforge/symmetric_values.hpp"

#include <stdexcept>

namespace cubforge {

namespace {

Integer run_length_multinomial(const std::vector<Partition::Group>& groups, int r) {
    Integer m = factorial(static_cast<unsigned long>(r));
    for (const auto& g : groups) m /= factorial(static_cast<unsigned long>(g.count));
    return m;
}

}  // namespace

Integer s_value_at_vk(const Partition& l, long k) {
    if (k < 0) throw std::invalid_argument("s_value_at_vk: k must be >= 0");
    const int r = l.length();
    if (k < r) return 0;
    return binomial(Integer(k), static_cast<unsigned long>(r)) *
           run_length_multinomial(l.groups(), r);
}

ExactScalar s_value_at_u(const Partition& l, const ExactScalar& a, int p) {
    if (p < 0) throw std::invalid_argument("s_value_at_u: p must be >= 0");
    auto coeffs = s_value_at_u_poly(l, p);
    ExactScalar total(Rational(0));
    ExactScalar apow(Rational(1));
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e] != 0) total += apow * ExactScalar(coeffs[e]);
        if (e + 1 < coeffs.size()) apow *= a;
    }
    return total;
}

std::vector<Rational> s_value_at_u_poly(const Partition& l, int p) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(l.weight()) + 1, Rational(0));
    const int r = l.length();
    const auto& groups = l.groups();
    // Monomials avoiding the first coordinate: all r parts go onto the ones.
    coeffs[0] += Rational(run_length_multinomial(groups, r) *
                          binomial(static_cast<long>(p), static_cast<long>(r)));
    // Monomials placing one part of group j on the first coordinate.
    const Integer c_rest = binomial(static_cast<long>(p), static_cast<long>(r - 1));
    if (c_rest != 0) {
        for (std::size_t j = 0; j < groups.size(); ++j) {
            Integer m = factorial(static_cast<unsigned long>(r - 1));
            for (std::size_t i = 0; i < groups.size(); ++i) {
                int c = groups[i].count - (i == static_cast<std::size_t>(j) ? 1 : 0);
                m /= factorial(static_cast<unsigned long>(c));
            }
            coeffs[static_cast<std::size_t>(groups[j].value)] += Rational(m * c_rest);
        }
    }
    return coeffs;
}

Integer arrangement_count(const std::vector<ValueClass>& classes) {
    int n = 0;
    for (const auto& c : classes) n += c.count;
    Integer m = factorial(static_cast<unsigned long>(n));
    for (const auto& c : classes) m /= factorial(static_cast<unsigned long>(c.count));
    return m;
}

namespace {

// State per value class while distributing the parts of l.
struct ClassLoad {
    int used = 0;             // parts assigned so far
    long exponent_sum = 0;    // total exponent carried by this class
    Integer split_denom = 1;  // prod over part-groups of x_{j,c}!
};

struct MspContext {
    const std::vector<Partition::Group>& groups;
    const std::vector<ValueClass>& classes;
    std::vector<ClassLoad> load;
    ExactScalar acc{Rational(0)};

    void finish() {
        Integer ways = 1;
        ExactScalar value(Rational(1));
        for (std::size_t c = 0; c < classes.size(); ++c) {
            const auto& ld = load[c];
            if (ld.used > classes[c].count) return;
            if (ld.exponent_sum > 0 && classes[c].value.is_zero()) return;
            ways *= binomial(Integer(classes[c].count),
                             static_cast<unsigned long>(ld.used)) *
                    factorial(static_cast<unsigned long>(ld.used)) / ld.split_denom;
            if (ld.exponent_sum > 0)
                value *= classes[c].value.pow(static_cast<unsigned long>(ld.exponent_sum));
        }
        acc += value * ExactScalar(Rational(ways));
    }

    // Distribute group gi's parts: x parts to class c, recurse.
    void split_group(std::size_t gi, std::size_t c, int remaining) {
        if (c == classes.size()) {
            if (remaining == 0) place_group(gi + 1);
            return;
        }
        const int value = groups[gi].value;
        for (int x = 0; x <= remaining; ++x) {
            if (x > 0) {
                load[c].used += x;
                load[c].exponent_sum += static_cast<long>(x) * value;
                load[c].split_denom *= factorial(static_cast<unsigned long>(x));
            }
            split_group(gi, c + 1, remaining - x);
            if (x > 0) {
                load[c].used -= x;
                load[c].exponent_sum -= static_cast<long>(x) * value;
                load[c].split_denom /= factorial(static_cast<unsigned long>(x));
            }
        }
    }

    void place_group(std::size_t gi) {
        if (gi == groups.size()) {
            finish();
            return;
        }
        split_group(gi, 0, groups[gi].count);
    }
};

}  // namespace

ExactScalar msp_eval(const Partition& l, const std::vector<ValueClass>& classes) {
    int n = 0;
    for (const auto& c : classes) n += c.count;
    if (l.length() > n) return ExactScalar(Rational(0));
    MspContext ctx{l.groups(), classes, std::vector<ClassLoad>(classes.size()), {}};
    ctx.place_group(0);
    return ctx.acc;
}

namespace {

void perm_rec(const std::vector<int>& positions, std::size_t pi,
              const std::vector<int>& alpha, const std::vector<ValueClass>& classes,
              std::vector<int>& used, const ExactScalar& value, int placed,
              ExactScalar& acc) {
    if (pi == positions.size()) {
        int n = 0;
        for (const auto& c : classes) n += c.count;
        Integer ways = factorial(static_cast<unsigned long>(n - placed));
        for (std::size_t c = 0; c < classes.size(); ++c)
            ways /= factorial(static_cast<unsigned long>(classes[c].count - used[c]));
        acc += value * ExactScalar(Rational(ways));
        return;
    }
    const int pos = positions[pi];
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (used[c] == classes[c].count) continue;
        if (classes[c].value.is_zero()) continue;  // 0^alpha kills the term
        ++used[c];
        perm_rec(positions, pi + 1, alpha, classes, used,
                 value * classes[c].value.pow(
                             static_cast<unsigned long>(alpha[static_cast<std::size_t>(pos)])),
                 placed + 1, acc);
        --used[c];
    }
}

}  // namespace

ExactScalar perm_monomial_sum(const std::vector<int>& alpha,
                              const std::vector<ValueClass>& classes) {
    int n = 0;
    for (const auto& c : classes) n += c.count;
    if (static_cast<int>(alpha.size()) != n)
        throw std::invalid_argument("perm_monomial_sum: alpha size mismatch");
    std::vector<int> positions;
    for (int i = 0; i < n; ++i) {
        if (alpha[static_cast<std::size_t>(i)] < 0)
            throw std::invalid_argument("perm_monomial_sum: negative exponent");
        if (alpha[static_cast<std::size_t>(i)] > 0) positions.push_back(i);
    }
    if (positions.empty()) return ExactScalar(Rational(arrangement_count(classes)));
    std::vector<int> used(classes.size(), 0);
    ExactScalar acc(Rational(0));
    perm_rec(positions, 0, alpha, classes, used, ExactScalar(Rational(1)), 0, acc);
    return acc;
}

}  // namespace cubforge
