#include "wha/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wha {

WreathElement wreath_identity(const GroupPtr& G, int n) {
    (void)G;
    return WreathElement{std::vector<int>(n, 0), perm_identity(n)};
}

WreathElement wreath_mul(const GroupPtr& G, const WreathElement& a, const WreathElement& b) {
    const int n = static_cast<int>(a.g.size());
    if (b.g.size() != a.g.size()) throw size_mismatch("wreath_mul");
    // (g, w)(h, tau) = (g . w(h), w tau), with (w(h))_i = h_{w^{-1}(i)}
    WreathElement c;
    c.g.resize(n);
    Perm winv = perm_inverse(a.w);
    for (int i = 0; i < n; ++i) c.g[i] = G->mul(a.g[i], b.g[winv[i]]);
    c.w = perm_mul(a.w, b.w);
    return c;
}

WreathElement wreath_inv(const GroupPtr& G, const WreathElement& a) {
    const int n = static_cast<int>(a.g.size());
    WreathElement b;
    b.w = perm_inverse(a.w);
    b.g.resize(n);
    // (h, w^{-1}) with h_i = (g_{w(i)})^{-1}
    for (int i = 0; i < n; ++i) b.g[i] = G->inv(a.g[a.w[i]]);
    return b;
}

WreathElement wreath_conj(const GroupPtr& G, const WreathElement& x, const WreathElement& a) {
    return wreath_mul(G, wreath_mul(G, x, a), wreath_inv(G, x));
}

std::vector<WreathElement> wreath_all(const GroupPtr& G, int n) {
    std::vector<WreathElement> out;
    auto perms = all_perms(n);
    std::vector<int> g(n, 0);
    long total = 1;
    for (int i = 0; i < n; ++i) total *= G->order();
    for (long e = 0; e < total; ++e) {
        long t = e;
        for (int i = 0; i < n; ++i) {
            g[i] = static_cast<int>(t % G->order());
            t /= G->order();
        }
        for (const auto& w : perms) out.push_back(WreathElement{g, w});
    }
    return out;
}

long wreath_element_order(const GroupPtr& G, const WreathElement& a) {
    WreathElement x = a;
    WreathElement id = wreath_identity(G, static_cast<int>(a.g.size()));
    long o = 1;
    while (!(x == id)) {
        x = wreath_mul(G, x, a);
        ++o;
    }
    return o;
}

Perm wreath_perm_model(const GroupPtr& G, int n, const WreathElement& a) {
    // (g, w) sends (c, i) to (g_{w(i)} c, w(i))
    const int m = G->order();
    Perm out(m * n);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < m; ++c) out[c + m * i] = G->mul(a.g[a.w[i]], c) + m * a.w[i];
    return out;
}

int WreathType::total() const {
    int t = 0;
    for (const auto& mu : per_class) t += partition_sum(mu);
    return t;
}

WreathType type_of(const GroupPtr& G, const WreathElement& a) {
    const int n = static_cast<int>(a.g.size());
    WreathType ty;
    ty.per_class.assign(G->classes().size(), {});
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        // walk the cycle of w through s: i, w(i), w(w(i)), ...
        // cycle (i_1 i_2 ... i_k) of w means w(i_j) = i_{j+1}; the cycle
        // product is g_{i_k} g_{i_{k-1}} ... g_{i_1}
        std::vector<int> cyc;
        int i = s;
        do {
            seen[i] = true;
            cyc.push_back(i);
            i = a.w[i];
        } while (i != s);
        int prod = 0;  // identity
        for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) prod = G->mul(prod, a.g[*it]);
        ty.per_class[G->class_of(prod)].push_back(static_cast<int>(cyc.size()));
    }
    for (auto& mu : ty.per_class) std::sort(mu.begin(), mu.end(), std::greater<int>());
    return ty;
}

namespace {

// count families of partitions indexed by `slots` classes, total n, with no
// part divisible by p
long count_families(int slots, long p, int n) {
    // dp over slots: number of ways to write k with parts from one slot
    std::vector<long> one(n + 1, 0);
    {
        std::vector<long> coeff(n + 1, 0);
        coeff[0] = 1;
        for (int m = 1; m <= n; ++m) {
            if (p > 0 && m % p == 0) continue;
            for (int k = m; k <= n; ++k) coeff[k] += coeff[k - m];
        }
        one = coeff;
    }
    std::vector<long> acc(n + 1, 0);
    acc[0] = 1;
    for (int s = 0; s < slots; ++s) {
        std::vector<long> nxt(n + 1, 0);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b) nxt[a + b] += acc[a] * one[b];
        acc = std::move(nxt);
    }
    return acc[n];
}

}  // namespace

long p_regular_type_count(const GroupPtr& G, long p, int n) {
    const int slots = static_cast<int>(G->p_regular_class_indices(p).size());
    return count_families(slots, p, n);
}

std::vector<long> class_count_series(const GroupPtr& G, long p, int N) {
    const int slots = static_cast<int>(G->p_regular_class_indices(p).size());
    // prod_{m>=1, p!|m} (1-q^m)^(-slots) expanded over the integers
    std::vector<long> coeff(N + 1, 0);
    coeff[0] = 1;
    for (int m = 1; m <= N; ++m) {
        if (m % p == 0) continue;
        for (int rep = 0; rep < slots; ++rep)
            for (int k = m; k <= N; ++k) coeff[k] += coeff[k - m];
    }
    return coeff;
}

long p_regular_class_count_brute(const GroupPtr& G, long p, int n) {
    auto all = wreath_all(G, n);
    std::map<WreathElement, int> index;
    for (size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<int>(i);
    // conjugating by every element of a generating set preserves classes;
    // use single-coordinate group elements and simple reflections
    std::vector<WreathElement> gens;
    for (int a = 1; a < G->order(); ++a) {
        WreathElement x = wreath_identity(G, n);
        x.g[0] = a;
        gens.push_back(x);
    }
    for (int i = 0; i + 1 < n; ++i) {
        WreathElement x = wreath_identity(G, n);
        x.w = perm_simple(n, i);
        gens.push_back(x);
    }
    std::vector<int> comp(all.size(), -1);
    int ncomp = 0;
    long regular = 0;
    for (size_t s = 0; s < all.size(); ++s) {
        if (comp[s] >= 0) continue;
        // BFS over conjugation by the generating set
        std::vector<int> stack{static_cast<int>(s)};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (const auto& x : gens) {
                int img = index.at(wreath_conj(G, x, all[cur]));
                if (comp[img] < 0) {
                    comp[img] = ncomp;
                    stack.push_back(img);
                }
            }
        }
        if (wreath_element_order(G, all[s]) % p != 0) ++regular;
        ++ncomp;
    }
    return regular;
}

void GroupAlgebraElement::add(const WreathElement& x, const Gf& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(x);
    if (it == terms_.end()) {
        terms_.emplace(x, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    GroupAlgebraElement r = *this;
    for (const auto& [x, c] : o.terms_) r.add(x, c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
    GroupAlgebraElement r = *this;
    for (const auto& [x, c] : o.terms_) r.add(x, -c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
    GroupAlgebraElement r(G_, n_, F_);
    for (const auto& [x, c] : terms_)
        for (const auto& [y, d] : o.terms_) r.add(wreath_mul(G_, x, y), c * d);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Gf& c) const {
    GroupAlgebraElement r(G_, n_, F_);
    for (const auto& [x, d] : terms_) r.add(x, c * d);
    return r;
}

GroupAlgebraElement ga_unit(const GroupPtr& G, int n, const FieldPtr& F) {
    GroupAlgebraElement e(G, n, F);
    e.add(wreath_identity(G, n), Gf::one(F));
    return e;
}

GroupAlgebraElement ga_of(const GroupPtr& G, int n, const FieldPtr& F, const WreathElement& x) {
    GroupAlgebraElement e(G, n, F);
    e.add(x, Gf::one(F));
    return e;
}

GroupAlgebraElement jucys_murphy(const GroupPtr& G, int n, int k, const FieldPtr& F) {
    if (k < 1 || k > n) throw index_out_of_range("jucys_murphy");
    GroupAlgebraElement xi(G, n, F);
    for (int i = 1; i < k; ++i) {
        for (int a = 0; a < G->order(); ++a) {
            WreathElement x = wreath_identity(G, n);
            x.g[i - 1] = a;
            x.g[k - 1] = G->inv(a);
            x.w = perm_transposition(n, i - 1, k - 1);
            xi.add(x, Gf::one(F));
        }
    }
    return xi;
}

JmReport verify_jm_identities(const GroupPtr& G, int n, const FieldPtr& F) {
    JmReport rep;
    std::vector<GroupAlgebraElement> xi;
    xi.push_back(GroupAlgebraElement(G, n, F));  // placeholder for index 0
    for (int k = 1; k <= n; ++k) xi.push_back(jucys_murphy(G, n, k, F));

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (!(xi[i] * xi[j] == xi[j] * xi[i])) rep.commute_pairwise = false;

    // group part: single-coordinate generators suffice to span FG^n
    for (int pos = 0; pos < n; ++pos)
        for (int a = 1; a < G->order(); ++a) {
            WreathElement x = wreath_identity(G, n);
            x.g[pos] = a;
            auto gx = ga_of(G, n, F, x);
            for (int i = 1; i <= n; ++i)
                if (!(gx * xi[i] == xi[i] * gx)) rep.commute_with_group = false;
        }

    for (int i = 1; i < n; ++i) {
        WreathElement s = wreath_identity(G, n);
        s.w = perm_simple(n, i - 1);
        auto si = ga_of(G, n, F, s);
        // t_{i,i+1} as a group algebra element
        GroupAlgebraElement t(G, n, F);
        for (int a = 0; a < G->order(); ++a) {
            WreathElement x = wreath_identity(G, n);
            x.g[i - 1] = a;
            x.g[i] = G->inv(a);
            t.add(x, Gf::one(F));
        }
        if (!(si * xi[i] == xi[i + 1] * si - t)) rep.simple_reflection_rule = false;
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            if (!(si * xi[j] == xi[j] * si)) rep.distant_commute = false;
        }
    }
    return rep;
}

}  // namespace wha
