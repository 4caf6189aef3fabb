#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace wha {

// Deterministic PRNG; avoids std::uniform_int_distribution on purpose since
// its output is implementation-defined and reports must be byte-identical.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    // uniform-ish value in [0, bound); bound > 0
    std::uint64_t next(std::uint64_t bound) { return eng_() % bound; }
    long next_long(long bound) { return static_cast<long>(next(static_cast<std::uint64_t>(bound))); }

private:
    std::mt19937_64 eng_;
};

using Partition = std::vector<int>;  // weakly decreasing positive parts

// all partitions of n, descending-lex order, n >= 0
std::vector<Partition> partitions_of(int n);
// no part repeated p or more times
bool is_p_regular(const Partition& mu, long p);
int partition_sum(const Partition& mu);
// count of p-regular partitions of n (independent counting oracle: equals
// the number of partitions into parts not divisible by p)
long count_p_regular(int n, long p);

}  // namespace wha
