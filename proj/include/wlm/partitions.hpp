#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "wlm/labeled_graph.hpp"

namespace wlm {

// Calls fn for every set partition of {0..n-1}, in restricted-growth-string
// order. fn may return false to stop early.
void for_each_partition(int n, const std::function<bool(const std::vector<int>& rgs)>& fn);

// Bell number B(n) as a decimal string (OEIS A000110); exact for any n we
// would ever print in a guard message.
std::string bell_number_string(int n);

} // namespace wlm
