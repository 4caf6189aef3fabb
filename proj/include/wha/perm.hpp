#pragma once

// Permutations of {0..n-1}, stored in one-line notation: w[i] is the image
// of i. Serialization uses one-indexed images.

#include <cstdint>
#include <vector>

namespace wha {

using Perm = std::vector<int>;

Perm perm_identity(int n);
bool perm_is_identity(const Perm& w);
// composition: (a*b)(i) = a(b(i))
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& w);
Perm perm_transposition(int n, int i, int j);
// the simple reflection s_i = (i, i+1), 0-indexed positions i and i+1
Perm perm_simple(int n, int i);
int perm_length(const Perm& w);  // number of inversions

// deterministic reduced word by bubble sort; w = s_{r[0]} * s_{r[1]} * ... * s_{r[back]}
std::vector<int> reduced_word(const Perm& w);

// Bruhat order via the rank-matrix criterion
bool bruhat_leq(const Perm& u, const Perm& w);

// all n! permutations, identity first, in lexicographic order
std::vector<Perm> all_perms(int n);

// action on index tuples: (w . alpha)[i] = alpha[w^{-1}(i)]
template <typename T>
std::vector<T> perm_act(const Perm& w, const std::vector<T>& alpha) {
    std::vector<T> out(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) out[w[i]] = alpha[i];
    return out;
}

// Young-subgroup machinery for a composition (n_1,...,n_r) of n.
struct YoungBlocks {
    explicit YoungBlocks(const std::vector<int>& comp);
    std::vector<int> comp;
    std::vector<int> block_of;    // block index of each position
    std::vector<int> block_begin; // first position of each block

    bool in_subgroup(const Perm& w) const;
    // factor w = tau * sigma with tau the minimal-length left-coset
    // representative and sigma in the Young subgroup
    void coset_factor(const Perm& w, Perm& tau, Perm& sigma) const;
    // all minimal-length left-coset representatives, BFS order by length
    std::vector<Perm> coset_reps(int n) const;
};

}  // namespace wha
