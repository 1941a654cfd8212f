#include "cubforge/design.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "cubforge/threading.hpp"

namespace cubforge {

namespace {

std::string subset_str(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

void for_each_subset(int n, int r, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> subset(static_cast<std::size_t>(r));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == r) {
            fn(subset);
            return;
        }
        for (int i = start; i <= n - (r - depth); ++i) {
            subset[static_cast<std::size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

// index of a sorted r-subset in colex order, for flat coverage counters
std::size_t subset_rank(const std::vector<int>& s) {
    Integer rank = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        rank += binomial(static_cast<long>(s[i]), static_cast<long>(i + 1));
    return static_cast<std::size_t>(rank.get_ui());
}

}  // namespace

Integer design_block_count(int v, int k, int t, long lambda) {
    Integer num = Integer(lambda) * binomial(static_cast<long>(v), static_cast<long>(t));
    Integer den = binomial(static_cast<long>(k), static_cast<long>(t));
    if (den == 0 || num % den != 0)
        throw InvalidDesignError("block-count equation has no integer solution");
    return num / den;
}

CombinatorialDesign CombinatorialDesign::validate(std::vector<std::vector<int>> blocks,
                                                  int v, int k, int t) {
    if (t < 0 || t > k || k > v) throw InvalidDesignError("need 0 <= t <= k <= v");
    for (auto& block : blocks) {
        std::sort(block.begin(), block.end());
        if (static_cast<int>(block.size()) != k)
            throw InvalidDesignError("block " + subset_str(block) + " has size " +
                                     std::to_string(block.size()) + ", expected " +
                                     std::to_string(k));
        if (std::adjacent_find(block.begin(), block.end()) != block.end())
            throw InvalidDesignError("block " + subset_str(block) + " repeats a point");
        if (block.front() < 0 || block.back() >= v)
            throw InvalidDesignError("block " + subset_str(block) + " leaves 0.." +
                                     std::to_string(v - 1));
    }
    if (blocks.empty()) throw InvalidDesignError("design has no blocks");

    Integer total = binomial(static_cast<long>(v), static_cast<long>(t));
    std::vector<long> coverage(static_cast<std::size_t>(total.get_ui()), 0);
    std::vector<int> tsub(static_cast<std::size_t>(t));
    for (const auto& block : blocks) {
        std::function<void(std::size_t, int)> rec = [&](std::size_t start, int depth) {
            if (depth == t) {
                ++coverage[subset_rank(tsub)];
                return;
            }
            for (std::size_t i = start; i < block.size(); ++i) {
                tsub[static_cast<std::size_t>(depth)] = block[i];
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
    }
    long lambda = coverage.empty() ? 0 : coverage[0];
    // locate a witness on failure, in lexicographic subset order
    bool uniform = std::all_of(coverage.begin(), coverage.end(),
                               [&](long c) { return c == lambda; });
    if (!uniform) {
        std::string witness;
        for_each_subset(v, t, [&](const std::vector<int>& s) {
            if (!witness.empty()) return;
            if (coverage[subset_rank(s)] != lambda)
                witness = subset_str(s) + " is covered " +
                          std::to_string(coverage[subset_rank(s)]) + " times, first subset " +
                          std::to_string(lambda) + " times";
        });
        throw InvalidDesignError("non-uniform coverage: " + witness);
    }
    if (design_block_count(v, k, t, lambda) != Integer(blocks.size()))
        throw InvalidDesignError("block count disagrees with the counting identity");

    CombinatorialDesign d;
    d.v_ = v;
    d.k_ = k;
    d.t_ = t;
    d.lambda_ = lambda;
    d.blocks_ = std::move(blocks);
    return d;
}

CombinatorialDesign CombinatorialDesign::complete(int v, int k, int t) {
    std::vector<std::vector<int>> blocks;
    for_each_subset(v, k, [&](const std::vector<int>& s) { blocks.push_back(s); });
    return validate(std::move(blocks), v, k, t);
}

std::vector<std::vector<int>> CombinatorialDesign::incidence_matrix() const {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(v_),
                                    std::vector<int>(blocks_.size(), 0));
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (int point : blocks_[b]) m[static_cast<std::size_t>(point)][b] = 1;
    return m;
}

std::vector<std::vector<int>> cyclic_design(const std::vector<std::vector<int>>& base,
                                            int v) {
    std::set<std::vector<int>> blocks;
    for (const auto& block : base) {
        for (int shift = 0; shift < v; ++shift) {
            std::vector<int> shifted;
            shifted.reserve(block.size());
            for (int point : block) shifted.push_back((point + shift) % v);
            std::sort(shifted.begin(), shifted.end());
            blocks.insert(std::move(shifted));
        }
    }
    return {blocks.begin(), blocks.end()};
}

OrthogonalArray OrthogonalArray::validate(std::vector<std::vector<int>> rows,
                                          int strength) {
    if (rows.empty()) throw InvalidDesignError("empty array");
    const int l = static_cast<int>(rows[0].size());
    if (strength < 0 || strength > l)
        throw InvalidDesignError("strength must lie in 0..columns");
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != l) throw InvalidDesignError("ragged array");
        for (int e : row)
            if (e != 1 && e != -1) throw InvalidDesignError("entries must be +-1");
    }
    const long L = static_cast<long>(rows.size());
    if (strength > 0 && L % (1L << strength) != 0)
        throw InvalidDesignError("row count " + std::to_string(L) +
                                 " is not divisible by 2^" + std::to_string(strength));
    const long mu = strength > 0 ? L >> strength : L;

    // check every s-column projection; parallel over column subsets
    std::vector<std::vector<int>> subsets;
    for_each_subset(l, strength, [&](const std::vector<int>& s) { subsets.push_back(s); });
    std::vector<std::string> witness(subsets.size());
    parallel_for(subsets.size(), [&](std::size_t si) {
        const auto& cols = subsets[si];
        std::vector<long> counts(1UL << strength, 0);
        for (const auto& row : rows) {
            std::size_t pattern = 0;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (row[static_cast<std::size_t>(cols[j])] < 0) pattern |= (1UL << j);
            ++counts[pattern];
        }
        for (std::size_t pat = 0; pat < counts.size(); ++pat) {
            if (counts[pat] != mu) {
                std::string bits;
                for (std::size_t j = 0; j < cols.size(); ++j)
                    bits += (pat & (1UL << j)) ? "-" : "+";
                witness[si] = "columns " + subset_str(cols) + " pattern " + bits +
                              " appears " + std::to_string(counts[pat]) +
                              " times, expected " + std::to_string(mu);
                return;
            }
        }
    });
    for (const auto& w : witness)
        if (!w.empty()) throw InvalidDesignError("projection imbalance: " + w);

    OrthogonalArray oa;
    oa.columns_ = l;
    oa.strength_ = strength;
    oa.index_ = mu;
    // antipodality: rows closed under negation
    std::set<std::vector<int>> row_set(rows.begin(), rows.end());
    oa.antipodal_ = true;
    for (const auto& row : rows) {
        std::vector<int> neg(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) neg[i] = -row[i];
        if (row_set.find(neg) == row_set.end()) {
            oa.antipodal_ = false;
            break;
        }
    }
    oa.rows_ = std::move(rows);
    return oa;
}

OrthogonalArray OrthogonalArray::full_factorial(int columns) {
    if (columns < 1 || columns > 24)
        throw InvalidDesignError("full factorial limited to 1..24 columns");
    std::vector<std::vector<int>> rows;
    rows.reserve(1UL << columns);
    for (std::size_t bits = 0; bits < (1UL << columns); ++bits) {
        std::vector<int> row(static_cast<std::size_t>(columns));
        for (int j = 0; j < columns; ++j)
            row[static_cast<std::size_t>(j)] = (bits & (1UL << j)) ? -1 : 1;
        rows.push_back(std::move(row));
    }
    return validate(std::move(rows), columns);
}

// --- file formats ---

CombinatorialDesign design_from_text(const std::string& text) {
    std::istringstream in(text);
    int v, k, t;
    long lambda;
    if (!(in >> v >> k >> t >> lambda))
        throw InvalidDesignError("design file: malformed header (want 'v k t lambda')");
    std::vector<std::vector<int>> blocks;
    std::string line;
    std::getline(in, line);  // finish header line
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<int> block;
        int x;
        while (ls >> x) block.push_back(x);
        if (!ls.eof())
            throw InvalidDesignError("design file: line " + std::to_string(lineno) +
                                     ": non-integer token");
        if (!block.empty()) blocks.push_back(std::move(block));
    }
    CombinatorialDesign d = CombinatorialDesign::validate(std::move(blocks), v, k, t);
    if (d.lambda() != lambda)
        throw InvalidDesignError("design file: header says lambda = " +
                                 std::to_string(lambda) + ", data gives " +
                                 std::to_string(d.lambda()));
    return d;
}

std::string design_to_text(const CombinatorialDesign& design) {
    std::ostringstream out;
    out << design.v() << ' ' << design.k() << ' ' << design.t() << ' ' << design.lambda()
        << '\n';
    for (const auto& block : design.blocks()) {
        for (std::size_t i = 0; i < block.size(); ++i)
            out << (i ? " " : "") << block[i];
        out << '\n';
    }
    return out.str();
}

OrthogonalArray oa_from_text(const std::string& text) {
    std::istringstream in(text);
    long L;
    int l, s;
    if (!(in >> L >> l >> s))
        throw InvalidDesignError("oa file: malformed header (want 'L l s')");
    std::vector<std::vector<int>> rows;
    for (long r = 0; r < L; ++r) {
        std::vector<int> row(static_cast<std::size_t>(l));
        for (int c = 0; c < l; ++c)
            if (!(in >> row[static_cast<std::size_t>(c)]))
                throw InvalidDesignError("oa file: truncated at row " + std::to_string(r));
        rows.push_back(std::move(row));
    }
    return OrthogonalArray::validate(std::move(rows), s);
}

std::string oa_to_text(const OrthogonalArray& oa) {
    std::ostringstream out;
    out << oa.rows() << ' ' << oa.columns() << ' ' << oa.strength() << '\n';
    for (const auto& row : oa.row_data()) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << '\n';
    }
    return out.str();
}

namespace {
std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

CombinatorialDesign load_design(const std::string& path) {
    return design_from_text(read_file(path));
}

void save_design(const CombinatorialDesign& design, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << design_to_text(design);
}

OrthogonalArray load_oa(const std::string& path) { return oa_from_text(read_file(path)); }

void save_oa(const OrthogonalArray& oa, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << oa_to_text(oa);
}

}  // namespace cubforge
