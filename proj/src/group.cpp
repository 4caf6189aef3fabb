#include "wha/group.hpp"

#include <algorithm>
#include <numeric>

#include "wha/perm.hpp"

namespace wha {

GroupPtr FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw invalid_table("empty");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw invalid_table("not square");
        for (int v : row)
            if (v < 0 || v >= n) throw invalid_table("entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (table[0][a] != a || table[a][0] != a) throw invalid_table("index 0 is not the identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw invalid_table("associativity fails");
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table[a][b] == 0 && table[b][a] == 0) inv[a] = b;
        if (inv[a] < 0) throw invalid_table("missing inverse");
    }
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = n;
    g->name_ = std::move(name);
    g->table_ = std::move(table);
    g->inverse_ = std::move(inv);
    g->finish();
    return g;
}

void FiniteGroup::finish() {
    const int n = order_;
    elt_order_.assign(n, 1);
    for (int a = 0; a < n; ++a) {
        long o = 1;
        int x = a;
        while (x != 0) {
            x = table_[x][a];
            ++o;
        }
        elt_order_[a] = o;
    }
    class_of_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        if (class_of_[a] >= 0) continue;
        ConjugacyClass cls;
        cls.representative = a;
        cls.element_order = elt_order_[a];
        for (int x = 0; x < n; ++x) {
            int c = table_[table_[x][a]][inverse_[x]];
            if (class_of_[c] < 0) {
                class_of_[c] = static_cast<int>(classes_.size());
                cls.members.push_back(c);
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        classes_.push_back(std::move(cls));
    }
}

long FiniteGroup::exponent() const {
    long e = 1;
    for (long o : elt_order_) e = std::lcm(e, o);
    return e;
}

std::vector<int> FiniteGroup::p_regular_class_indices(long p) const {
    std::vector<int> out;
    for (size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].element_order % p != 0) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<ConjugacyClass> FiniteGroup::p_regular_classes(long p) const {
    std::vector<ConjugacyClass> out;
    for (int i : p_regular_class_indices(p)) out.push_back(classes_[i]);
    return out;
}

GroupPtr FiniteGroup::cyclic(int r) {
    if (r < 1) throw error("cyclic group needs r >= 1");
    std::vector<std::vector<int>> t(r, std::vector<int>(r));
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) t[a][b] = (a + b) % r;
    return from_table(std::move(t), "cyclic:" + std::to_string(r));
}

GroupPtr FiniteGroup::dihedral(int r) {
    if (r < 1) throw error("dihedral group needs r >= 1");
    const int n = 2 * r;
    // elements a + r*f with rotation a and flip bit f; (a,f)(b,g) uses
    // flip * rot_b = rot_{-b} * flip
    auto idx = [r](int a, int f) { return ((a % r) + r) % r + r * f; };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < r; ++a)
        for (int f = 0; f < 2; ++f)
            for (int b = 0; b < r; ++b)
                for (int g = 0; g < 2; ++g)
                    t[idx(a, f)][idx(b, g)] = idx(f ? a - b : a + b, f ^ g);
    return from_table(std::move(t), "dihedral:" + std::to_string(r));
}

GroupPtr FiniteGroup::symmetric(int m) {
    if (m < 1) throw error("symmetric group needs m >= 1");
    auto perms = all_perms(m);  // identity first, lex order
    const int n = static_cast<int>(perms.size());
    auto find = [&](const Perm& w) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), w) - perms.begin());
    };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = find(perm_mul(perms[a], perms[b]));
    return from_table(std::move(t), "symmetric:" + std::to_string(m));
}

}  // namespace wha
