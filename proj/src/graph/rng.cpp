#include "ramsey/rng.hpp"

#include <algorithm>
#include <numeric>

#include "ramsey/error.hpp"

namespace ramsey {

std::vector<int> Rng::subset(int n, int k) {
    require(0 <= k && k <= n, "subset size out of range");
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) {
        auto j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace ramsey
