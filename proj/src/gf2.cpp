#include "wlm/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace wlm {

namespace {

constexpr int kBlock = 64;

inline bool get_bit(const std::vector<std::uint64_t>& bits, int i) {
    return (bits[i / kBlock] >> (i % kBlock)) & 1;
}

inline void set_bit(std::vector<std::uint64_t>& bits, int i) {
    bits[i / kBlock] ^= std::uint64_t(1) << (i % kBlock);
}

inline void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
    for (std::size_t b = 0; b < dst.size(); ++b) dst[b] ^= src[b];
}

} // namespace

Gf2System::Gf2System(int vars) : vars_(vars) {
    if (vars < 0) throw std::invalid_argument("negative variable count");
}

void Gf2System::add_row(const std::vector<int>& var_indices, bool rhs) {
    Row r;
    r.bits.assign((vars_ + kBlock - 1) / kBlock + (vars_ == 0 ? 1 : 0), 0);
    if (r.bits.empty()) r.bits.assign(1, 0);
    for (int i : var_indices) {
        if (i < 0 || i >= vars_) throw std::out_of_range("variable index out of range");
        set_bit(r.bits, i);
    }
    r.rhs = rhs;
    rows_.push_back(std::move(r));
}

Gf2System::Solution Gf2System::solve() const {
    const int m = rows();
    struct Work {
        std::vector<std::uint64_t> bits;
        bool rhs;
        std::vector<std::uint64_t> combo; // over original rows
    };
    std::vector<Work> work(m);
    const std::size_t combo_blocks = (m + kBlock - 1) / kBlock + (m == 0 ? 1 : 0);
    for (int i = 0; i < m; ++i) {
        work[i].bits = rows_[i].bits;
        work[i].rhs = rows_[i].rhs;
        work[i].combo.assign(std::max<std::size_t>(combo_blocks, 1), 0);
        set_bit(work[i].combo, i);
    }

    Solution sol;
    int rank = 0;
    for (int col = 0; col < vars_ && rank < m; ++col) {
        int pivot = -1;
        for (int r = rank; r < m; ++r)
            if (get_bit(work[r].bits, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(work[rank], work[pivot]);
        for (int r = 0; r < m; ++r) {
            if (r == rank || !get_bit(work[r].bits, col)) continue;
            xor_into(work[r].bits, work[rank].bits);
            work[r].rhs ^= work[rank].rhs;
            xor_into(work[r].combo, work[rank].combo);
        }
        ++rank;
    }
    sol.rank = rank;
    for (int r = rank; r < m; ++r) {
        if (work[r].rhs) {
            sol.consistent = false;
            sol.certificate.assign(m, 0);
            for (int i = 0; i < m; ++i)
                if (get_bit(work[r].combo, i)) sol.certificate[i] = 1;
            break;
        }
    }
    return sol;
}

BigInt Gf2System::solution_count() const {
    Solution sol = solve();
    if (!sol.consistent) return 0;
    BigInt count = 1;
    count <<= (vars_ - sol.rank);
    return count;
}

} // namespace wlm
