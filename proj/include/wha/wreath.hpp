#pragma once

// The wreath product G_n = G^n x| S_n: elements, conjugacy types, p-regular
// class counting with its generating function, and the group algebra FG_n
// with the generalized Jucys-Murphy elements.

#include <cstdint>
#include <map>
#include <vector>

#include "wha/gf.hpp"
#include "wha/group.hpp"
#include "wha/perm.hpp"
#include "wha/util.hpp"

namespace wha {

struct size_mismatch : error {
    explicit size_mismatch(const std::string& where) : error("size mismatch in " + where) {}
};
struct index_out_of_range : error {
    explicit index_out_of_range(const std::string& where) : error("index out of range in " + where) {}
};

struct WreathElement {
    std::vector<int> g;  // element indices of G, one per position
    Perm w;

    bool operator==(const WreathElement& o) const { return g == o.g && w == o.w; }
    bool operator<(const WreathElement& o) const {
        return g != o.g ? g < o.g : w < o.w;
    }
};

WreathElement wreath_identity(const GroupPtr& G, int n);
// (g, w)(h, tau) = (g . w(h), w tau)
WreathElement wreath_mul(const GroupPtr& G, const WreathElement& a, const WreathElement& b);
WreathElement wreath_inv(const GroupPtr& G, const WreathElement& a);
WreathElement wreath_conj(const GroupPtr& G, const WreathElement& x, const WreathElement& a);

// all |G|^n * n! elements, deterministic order
std::vector<WreathElement> wreath_all(const GroupPtr& G, int n);
long wreath_element_order(const GroupPtr& G, const WreathElement& a);

// the faithful permutation model on G x {1..n}: index pairs (c, i) -> c + |G| * i
Perm wreath_perm_model(const GroupPtr& G, int n, const WreathElement& a);

// conjugation-type invariant: one partition per conjugacy class of G
struct WreathType {
    std::vector<Partition> per_class;  // indexed by class index of G
    bool operator==(const WreathType& o) const { return per_class == o.per_class; }
    bool operator<(const WreathType& o) const { return per_class < o.per_class; }
    int total() const;
};

WreathType type_of(const GroupPtr& G, const WreathElement& a);

// number of types supported on p-regular classes with no part divisible by p
long p_regular_type_count(const GroupPtr& G, long p, int n);
// coefficients 0..N of  prod_{m >= 1, p !| m} (1 - q^m)^(-|G_p*|)
std::vector<long> class_count_series(const GroupPtr& G, long p, int N);
// brute force over group elements: conjugacy classes all of whose elements
// have order coprime to p (orbits under conjugation by generators)
long p_regular_class_count_brute(const GroupPtr& G, long p, int n);

// sparse element of FG_n
class GroupAlgebraElement {
public:
    GroupAlgebraElement(GroupPtr G, int n, FieldPtr F) : G_(std::move(G)), n_(n), F_(std::move(F)) {}

    const GroupPtr& group() const { return G_; }
    int n() const { return n_; }
    const FieldPtr& field() const { return F_; }
    const std::map<WreathElement, Gf>& terms() const { return terms_; }

    void add(const WreathElement& x, const Gf& c);
    bool is_zero() const { return terms_.empty(); }

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
    GroupAlgebraElement scaled(const Gf& c) const;
    bool operator==(const GroupAlgebraElement& o) const { return terms_ == o.terms_; }

private:
    GroupPtr G_;
    int n_;
    FieldPtr F_;
    std::map<WreathElement, Gf> terms_;
};

GroupAlgebraElement ga_unit(const GroupPtr& G, int n, const FieldPtr& F);
GroupAlgebraElement ga_of(const GroupPtr& G, int n, const FieldPtr& F, const WreathElement& x);

// xi_k = sum_{i<k} sum_{g in G} (g^(i) (g^-1)^(k), (i,k)); k is 1-based
GroupAlgebraElement jucys_murphy(const GroupPtr& G, int n, int k, const FieldPtr& F);

struct JmReport {
    bool commute_pairwise = true;
    bool commute_with_group = true;
    bool simple_reflection_rule = true;  // s_i xi_i = xi_{i+1} s_i - t_{i,i+1}
    bool distant_commute = true;         // s_i xi_j = xi_j s_i, j != i, i+1
    bool all() const {
        return commute_pairwise && commute_with_group && simple_reflection_rule && distant_commute;
    }
};

JmReport verify_jm_identities(const GroupPtr& G, int n, const FieldPtr& F);

}  // namespace wha
