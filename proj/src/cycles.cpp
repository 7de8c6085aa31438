#include "apcycles/cycles.hpp"

#include <stdexcept>

namespace apc {

CycleStats decompose(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<char> seen(sigma.size(), 0);
    for (int x : sigma)
        if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]++)
            throw std::invalid_argument("decompose: sigma is not a bijection");

    CycleStats stats;
    stats.n = n;
    std::fill(seen.begin(), seen.end(), 0);
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int length = 0;
        int cur = start;
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            cur = sigma[static_cast<std::size_t>(cur)];
            ++length;
        } while (cur != start);
        ++stats.cycle_lengths[length];
        ++stats.n_cycles;
        if (length % 2 == 0 && length > stats.max_even_cycle_length)
            stats.max_even_cycle_length = length;
    }
    if (auto it = stats.cycle_lengths.find(2); it != stats.cycle_lengths.end())
        stats.two_cycle_count = it->second;
    stats.is_n_cycle = stats.n_cycles == 1 && stats.cycle_lengths.count(n) == 1;
    return stats;
}

int count_k_cycles(const CycleStats& stats, int k) {
    if (k < 1 || k > stats.n)
        throw std::invalid_argument("count_k_cycles: k outside [1, n]");
    auto it = stats.cycle_lengths.find(k);
    return it == stats.cycle_lengths.end() ? 0 : it->second;
}

}  // namespace apc
