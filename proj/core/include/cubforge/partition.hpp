#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cubforge {

// Weakly decreasing tuple of positive integers. Indexes the monomial
// symmetric polynomials S_l and their moments.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }                       // |l|
    int length() const { return static_cast<int>(parts_.size()); }  // r

    // Maximal runs of equal parts, in order: {part value, run length}.
    struct Group {
        int value;
        int count;
    };
    const std::vector<Group>& groups() const { return groups_; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    std::string str() const;  // "{2,1,1}"

private:
    std::vector<int> parts_;
    std::vector<Group> groups_;
    int weight_ = 0;
};

// All partitions of t in reverse-lexicographic order, {t} first,
// {1,...,1} last. Deterministic ordering for linear-system assembly.
std::vector<Partition> partitions_of(int t);

}  // namespace cubforge
