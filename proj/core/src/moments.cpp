#include "cubforge/moments.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace cubforge {

WeightExponent::WeightExponent(Rational g) : value_(std::move(g)) {
    if (value_ <= -1) throw std::domain_error("weight exponent must satisfy gamma > -1");
}

Rational monomial_moment(const std::vector<int>& alpha, int d, const WeightExponent& gamma) {
    if (static_cast<int>(alpha.size()) != d + 1)
        throw std::invalid_argument("monomial_moment: alpha must have d+1 entries");
    const Rational g1 = gamma.value() + 1;
    Rational num = 1;
    unsigned long total = 0;
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("monomial_moment: negative exponent");
        num *= pochhammer(g1, static_cast<unsigned long>(a));
        total += static_cast<unsigned long>(a);
    }
    return num / pochhammer(g1 * (d + 1), total);
}

Rational monomial_moment_of_partition(const Partition& l, int d,
                                      const WeightExponent& gamma) {
    std::vector<int> alpha(static_cast<std::size_t>(d + 1), 0);
    if (l.length() > d + 1)
        throw std::invalid_argument("monomial_moment_of_partition: too many parts");
    std::copy(l.parts().begin(), l.parts().end(), alpha.begin());
    return monomial_moment(alpha, d, gamma);
}

Integer monomial_count(const Partition& l, int d) {
    const int r = l.length();
    if (r > d + 1) return 0;
    Integer count = factorial(static_cast<unsigned long>(d + 1)) /
                    factorial(static_cast<unsigned long>(d + 1 - r));
    for (const auto& g : l.groups())
        count /= factorial(static_cast<unsigned long>(g.count));
    return count;
}

Rational partition_integral(const Partition& l, int d, const WeightExponent& gamma) {
    if (l.length() > d + 1) return 0;
    return Rational(monomial_count(l, d)) * monomial_moment_of_partition(l, d, gamma);
}

Rational sphere_monomial_moment(const std::vector<int>& alpha, int d) {
    std::vector<int> half(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] % 2 != 0) return 0;
        half[i] = alpha[i] / 2;
    }
    return monomial_moment(half, d, WeightExponent::chebyshev());
}

Rational MomentTable::of_partition(const Partition& l) const {
    const std::vector<int>& key = l.parts();
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    Rational v = partition_integral(l, d_, gamma_);
    std::unique_lock lock(mutex_);
    return cache_.emplace(key, std::move(v)).first->second;
}

Rational MomentTable::of_monomial(const std::vector<int>& alpha) const {
    return monomial_moment(alpha, d_, gamma_);
}

}  // namespace cubforge
