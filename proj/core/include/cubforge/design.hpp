#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubforge/rational.hpp"

namespace cubforge {

class InvalidDesignError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// t-(v,k,lambda) design: blocks are k-subsets of {0..v-1} covering every
// t-subset exactly lambda times. Validation is exhaustive over t-subsets.
class CombinatorialDesign {
public:
    // Validates and determines lambda; throws InvalidDesignError with a
    // witnessing t-subset on non-uniform coverage.
    static CombinatorialDesign validate(std::vector<std::vector<int>> blocks, int v,
                                        int k, int t);

    // The complete design: all C(v,k) k-subsets, lambda = C(v-t, k-t).
    static CombinatorialDesign complete(int v, int k, int t);

    int v() const { return v_; }
    int k() const { return k_; }
    int t() const { return t_; }
    long lambda() const { return lambda_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }

    // v x b zero-one incidence matrix, rows indexed by points.
    std::vector<std::vector<int>> incidence_matrix() const;

private:
    CombinatorialDesign() = default;
    int v_ = 0, k_ = 0, t_ = 0;
    long lambda_ = 0;
    std::vector<std::vector<int>> blocks_;
};

// Expected block count b = lambda C(v,t) / C(k,t).
Integer design_block_count(int v, int k, int t, long lambda);

// All v cyclic shifts of each base block (subsets of Z_v), deduplicated,
// in sorted order.
std::vector<std::vector<int>> cyclic_design(const std::vector<std::vector<int>>& base,
                                            int v);

// Orthogonal array OA(L, l, 2, s) over {-1,+1}: every s-column projection
// carries each sign pattern exactly L/2^s times.
class OrthogonalArray {
public:
    // Exhaustive projection counting; throws InvalidDesignError carrying the
    // witnessing column set and pattern on imbalance.
    static OrthogonalArray validate(std::vector<std::vector<int>> rows, int strength);

    // The full factorial {-1,+1}^l (strength l, index 1).
    static OrthogonalArray full_factorial(int columns);

    int rows() const { return static_cast<int>(rows_.size()); }
    int columns() const { return columns_; }
    int strength() const { return strength_; }
    long index() const { return index_; }  // mu = L / 2^s
    bool antipodal() const { return antipodal_; }  // rows closed under negation
    const std::vector<std::vector<int>>& row_data() const { return rows_; }

private:
    OrthogonalArray() = default;
    std::vector<std::vector<int>> rows_;
    int columns_ = 0, strength_ = 0;
    long index_ = 0;
    bool antipodal_ = false;
};

// --- file formats ---
// Design file: header "v k t lambda", then one block per line (point indices).
// OA file: header "L l s", then rows of +-1 entries.
CombinatorialDesign load_design(const std::string& path);
void save_design(const CombinatorialDesign& design, const std::string& path);
CombinatorialDesign design_from_text(const std::string& text);
std::string design_to_text(const CombinatorialDesign& design);

OrthogonalArray load_oa(const std::string& path);
void save_oa(const OrthogonalArray& oa, const std::string& path);
OrthogonalArray oa_from_text(const std::string& text);
std::string oa_to_text(const OrthogonalArray& oa);

}  // namespace cubforge
