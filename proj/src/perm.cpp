#include "wha/perm.hpp"

#include <algorithm>
#include <numeric>

#include "wha/gf.hpp"

namespace wha {

Perm perm_identity(int n) {
    Perm w(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

bool perm_is_identity(const Perm& w) {
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (w[i] != i) return false;
    return true;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm perm_inverse(const Perm& w) {
    Perm v(w.size());
    for (size_t i = 0; i < w.size(); ++i) v[w[i]] = static_cast<int>(i);
    return v;
}

Perm perm_transposition(int n, int i, int j) {
    Perm w = perm_identity(n);
    std::swap(w[i], w[j]);
    return w;
}

Perm perm_simple(int n, int i) { return perm_transposition(n, i, i + 1); }

int perm_length(const Perm& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

std::vector<int> reduced_word(const Perm& w) {
    // peel descents from the left: if v has v(i) > v(i+1) for the smallest
    // such i, then v = s_i * v' with l(v') = l(v) - 1
    std::vector<int> word;
    Perm v = w;
    const int n = static_cast<int>(w.size());
    for (;;) {
        int i = -1;
        Perm vi = perm_inverse(v);
        for (int k = 0; k + 1 < n; ++k) {
            if (vi[k] > vi[k + 1]) {
                i = k;
                break;
            }
        }
        if (i < 0) break;
        word.push_back(i);
        v = perm_mul(perm_simple(n, i), v);
    }
    // collected as w = s_{word[0]} ... s_{word.back()} reading left to right
    return word;
}

bool bruhat_leq(const Perm& u, const Perm& w) {
    const int n = static_cast<int>(u.size());
    // u <= w iff for all i,j: #{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j}
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int cu = 0, cw = 0;
            for (int a = 0; a <= i; ++a) {
                if (u[a] >= j) ++cu;
                if (w[a] >= j) ++cw;
            }
            if (cu > cw) return false;
        }
    }
    return true;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm w = perm_identity(n);
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

YoungBlocks::YoungBlocks(const std::vector<int>& c) : comp(c) {
    int pos = 0;
    for (size_t b = 0; b < comp.size(); ++b) {
        block_begin.push_back(pos);
        for (int k = 0; k < comp[b]; ++k) block_of.push_back(static_cast<int>(b));
        pos += comp[b];
    }
}

bool YoungBlocks::in_subgroup(const Perm& w) const {
    for (size_t i = 0; i < w.size(); ++i)
        if (block_of[w[i]] != block_of[i]) return false;
    return true;
}

void YoungBlocks::coset_factor(const Perm& w, Perm& tau, Perm& sigma) const {
    const int n = static_cast<int>(w.size());
    // tau maps each block, in increasing order, onto the sorted image w(block)
    tau.assign(n, 0);
    for (size_t b = 0; b < comp.size(); ++b) {
        std::vector<int> img;
        for (int k = 0; k < comp[b]; ++k) img.push_back(w[block_begin[b] + k]);
        std::sort(img.begin(), img.end());
        for (int k = 0; k < comp[b]; ++k) tau[block_begin[b] + k] = img[k];
    }
    sigma = perm_mul(perm_inverse(tau), w);
    if (!in_subgroup(sigma)) throw error("coset_factor: sigma escaped the Young subgroup");
}

std::vector<Perm> YoungBlocks::coset_reps(int n) const {
    std::vector<Perm> reps;
    for (const Perm& w : all_perms(n)) {
        bool minimal = true;
        // minimal-length representative: increasing on each block
        for (size_t b = 0; b < comp.size() && minimal; ++b)
            for (int k = 0; k + 1 < comp[b]; ++k)
                if (w[block_begin[b] + k] > w[block_begin[b] + k + 1]) {
                    minimal = false;
                    break;
                }
        if (minimal) reps.push_back(w);
    }
    std::stable_sort(reps.begin(), reps.end(),
                     [](const Perm& a, const Perm& b) { return perm_length(a) < perm_length(b); });
    return reps;
}

}  // namespace wha
