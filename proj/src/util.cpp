#include "wha/util.hpp"

#include <numeric>

namespace wha {

static void gen_parts(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen_parts(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    gen_parts(n, n, cur, out);
    if (n == 0) out = {{}};
    return out;
}

bool is_p_regular(const Partition& mu, long p) {
    int run = 1;
    for (size_t i = 1; i <= mu.size(); ++i) {
        if (i < mu.size() && mu[i] == mu[i - 1]) {
            if (++run >= p) return false;
        } else {
            run = 1;
        }
    }
    return true;
}

int partition_sum(const Partition& mu) { return std::accumulate(mu.begin(), mu.end(), 0); }

long count_p_regular(int n, long p) {
    // Glaisher: #(p-regular partitions of n) = #(partitions of n with no part
    // divisible by p); computed from the product over allowed part sizes
    std::vector<long> coeff(n + 1, 0);
    coeff[0] = 1;
    for (int m = 1; m <= n; ++m) {
        if (m % p == 0) continue;
        for (int k = m; k <= n; ++k) coeff[k] += coeff[k - m];
    }
    return coeff[n];
}

}  // namespace wha
