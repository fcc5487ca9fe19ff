#include "wlm/partitions.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace wlm {

void for_each_partition(int n, const std::function<bool(const std::vector<int>&)>& fn) {
    if (n <= 0) {
        fn({});
        return;
    }
    std::vector<int> rgs(n, 0), maxval(n, 0); // maxval[i] = max(rgs[0..i-1])
    for (;;) {
        if (!fn(rgs)) return;
        int i = n - 1;
        while (i > 0 && rgs[i] == maxval[i] + 1) --i;
        if (i == 0) return;
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            maxval[j] = std::max(maxval[j - 1], rgs[j - 1]);
        }
    }
}

std::string bell_number_string(int n) {
    using boost::multiprecision::cpp_int;
    // Bell triangle
    std::vector<cpp_int> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<cpp_int> next;
        next.reserve(i + 1);
        next.push_back(row.back());
        for (const cpp_int& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front().str();
}

} // namespace wlm
