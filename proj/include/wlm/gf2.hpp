#pragma once

#include <cstdint>
#include <vector>

#include "wlm/rational.hpp"

namespace wlm {

// Dense bit-row system over Z_2 with row-combination tracking: when the
// system is inconsistent, `certificate` marks a subset of the original rows
// summing to (0 | 1), i.e. a Fredholm witness.
class Gf2System {
public:
    explicit Gf2System(int vars);

    void add_row(const std::vector<int>& var_indices, bool rhs);

    int vars() const { return vars_; }
    int rows() const { return static_cast<int>(rows_.size()); }

    struct Solution {
        bool consistent = true;
        int rank = 0;
        std::vector<std::uint8_t> certificate; // over original rows; empty when consistent
    };

    Solution solve() const;

    // 2^(vars - rank) when consistent, else 0.
    BigInt solution_count() const;

private:
    struct Row {
        std::vector<std::uint64_t> bits;
        bool rhs = false;
    };
    int vars_;
    std::vector<Row> rows_;
};

} // namespace wlm
