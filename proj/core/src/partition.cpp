#include "cubforge/partition.hpp"

#include <stdexcept>

namespace cubforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
        if (!groups_.empty() && groups_.back().value == parts_[i])
            ++groups_.back().count;
        else
            groups_.push_back({parts_[i], 1});
    }
}

std::string Partition::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "}";
}

namespace {
void enumerate(int remaining, int maxpart, std::vector<int>& acc,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int first = std::min(remaining, maxpart); first >= 1; --first) {
        acc.push_back(first);
        enumerate(remaining - first, first, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int t) {
    if (t < 1) throw std::invalid_argument("partitions_of: t must be >= 1");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate(t, t, acc, out);
    return out;
}

}  // namespace cubforge
