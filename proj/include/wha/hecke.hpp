#pragma once

// The wreath Hecke algebra H_n(G) in PBW normal form. Elements are sparse
// maps over keys x^alpha g w; multiplication pushes simple reflections
// through the right factor one at a time, which strictly lowers a
// (Bruhat length, x-degree) measure and therefore terminates.
//
// Public indices are 1-based as in the algebra relations: x_1..x_n,
// s_1..s_{n-1}, t_{ij} with 1 <= i < j <= n. Internal storage is 0-based.

#include <functional>
#include <map>
#include <vector>

#include "wha/gf.hpp"
#include "wha/group.hpp"
#include "wha/perm.hpp"
#include "wha/rep.hpp"
#include "wha/util.hpp"
#include "wha/wreath.hpp"

namespace wha {

struct mismatch : error {
    explicit mismatch(const std::string& where) : error("context mismatch in " + where) {}
};
struct degree_bound_violated : error {
    explicit degree_bound_violated(const std::string& why) : error("pbw_extract: " + why) {}
};
struct not_scalar : error {
    explicit not_scalar(const std::string& why) : error("c_scalars: " + why) {}
};

struct HeckeContext {
    GroupPtr G;
    int n = 0;
    FieldPtr F;
    bool same(const HeckeContext& o) const {
        return G.get() == o.G.get() && n == o.n && F->same(*o.F);
    }
};
using CtxPtr = std::shared_ptr<const HeckeContext>;
CtxPtr make_ctx(GroupPtr G, int n, FieldPtr F);

struct PBWKey {
    std::vector<int> alpha;
    std::vector<int> g;
    Perm w;

    int degree() const;
    // canonical order: degree-lex on alpha, then g, then w
    bool operator<(const PBWKey& o) const;
    bool operator==(const PBWKey& o) const { return alpha == o.alpha && g == o.g && w == o.w; }
};

class HeckeElement {
public:
    HeckeElement() = default;
    explicit HeckeElement(CtxPtr ctx) : ctx_(std::move(ctx)) {}

    const CtxPtr& ctx() const { return ctx_; }
    const std::map<PBWKey, Gf>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max total x-degree, -1 for zero

    void add(const PBWKey& k, const Gf& c);

    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement operator-(const HeckeElement& o) const;
    HeckeElement operator-() const;
    HeckeElement scaled(const Gf& c) const;
    bool operator==(const HeckeElement& o) const;
    bool operator!=(const HeckeElement& o) const { return !(*this == o); }

private:
    CtxPtr ctx_;
    std::map<PBWKey, Gf> terms_;
};

// ----- generators -----
HeckeElement h_zero(const CtxPtr& c);
HeckeElement h_one(const CtxPtr& c);
HeckeElement h_scalar(const CtxPtr& c, const Gf& v);
HeckeElement h_x(const CtxPtr& c, int i);                    // 1 <= i <= n
HeckeElement h_s(const CtxPtr& c, int i);                    // 1 <= i <= n-1
HeckeElement h_perm(const CtxPtr& c, const Perm& w);
HeckeElement h_g(const CtxPtr& c, const std::vector<int>& g);
HeckeElement h_g_at(const CtxPtr& c, int pos, int a);        // a in coordinate pos (1-based)
HeckeElement h_t(const CtxPtr& c, int i, int j);             // t_{ij}, 1 <= i < j <= n
HeckeElement h_omega(const CtxPtr& c, int i);                // s_i (x_i - x_{i+1}) + t_{i,i+1}
HeckeElement h_monomial(const CtxPtr& c, const std::vector<int>& alpha);
HeckeElement h_key(const CtxPtr& c, const PBWKey& k, const Gf& coeff);

// ----- multiplication -----
HeckeElement normal_mul(const HeckeElement& a, const HeckeElement& b);
HeckeElement mul_simple_left(int i, const HeckeElement& b);  // s_i * b, 1-based i

// divided difference of a monomial: (x^a - x^{s_i a}) / (x_{i+1} - x_i) as a
// signed list of exponent vectors; 1 <= i <= n-1
std::vector<std::pair<std::vector<int>, int>> divided_difference(const std::vector<int>& alpha, int i);
// same packaged as an x-only element
HeckeElement h_divided_difference(const CtxPtr& c, const std::vector<int>& alpha, int i);

// image of the group-algebra element under x_k -> xi_k (identity on FG_n)
HeckeElement h_from_group_algebra(const CtxPtr& c, const GroupAlgebraElement& a);

// ----- the faithful polynomial module FG^n tensor F[y_1..y_n] -----
struct PolyKey {
    std::vector<int> h;
    std::vector<int> beta;
    bool operator<(const PolyKey& o) const { return h != o.h ? h < o.h : beta < o.beta; }
    bool operator==(const PolyKey& o) const { return h == o.h && beta == o.beta; }
};

class PolyVec {
public:
    PolyVec() = default;
    explicit PolyVec(CtxPtr ctx) : ctx_(std::move(ctx)) {}
    const CtxPtr& ctx() const { return ctx_; }
    const std::map<PolyKey, Gf>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const PolyKey& k, const Gf& c);
    PolyVec operator+(const PolyVec& o) const;
    PolyVec operator-(const PolyVec& o) const;
    PolyVec scaled(const Gf& c) const;
    bool operator==(const PolyVec& o) const { return terms_ == o.terms_; }

private:
    CtxPtr ctx_;
    std::map<PolyKey, Gf> terms_;
};

PolyVec poly_basis_vector(const CtxPtr& c, const std::vector<int>& h, const std::vector<int>& beta);
PolyVec poly_action(const HeckeElement& a, const PolyVec& v);

// recover the PBW form of a black-box operator of x-degree <= deg_bound
HeckeElement pbw_extract(const std::function<PolyVec(const PolyVec&)>& op, const CtxPtr& c,
                         int deg_bound);

// ----- scalars c_k (Lemma 3.1 / Cor 3.3 data) -----
struct CScalars {
    std::vector<Gf> c;            // one per irrep
    std::vector<bool> integral;   // c_k in Z*1
    std::vector<bool> zero;
};
CScalars c_scalars(const GroupPtr& G, const FieldPtr& F, const std::vector<Irrep>& irreps);
// action of t_{12} on V_k tensor V_l (matrix on the tensor basis)
Mat t12_on_tensor(const GroupPtr& G, const FieldPtr& F, const Irrep& Vk, const Irrep& Vl);
Mat swap_operator(const FieldPtr& F, int dk, int dl);

// ----- center -----
bool is_central(const HeckeElement& z);
bool center_coeff_check(const HeckeElement& z);

struct IntertwinerReport {
    bool square_identity = true;   // O_i^2 = t_{i,i+1}^2 - (x_i - x_{i+1})^2
    bool swap_left = true;         // O_i x_i = x_{i+1} O_i
    bool swap_right = true;        // O_i x_{i+1} = x_i O_i
    bool distant = true;           // O_i x_j = x_j O_i for j != i, i+1
    bool all() const { return square_identity && swap_left && swap_right && distant; }
};
IntertwinerReport verify_intertwiners(const GroupPtr& G, int n, const FieldPtr& F);

// ----- decomposition over a Young subalgebra (used by induction) -----
// writes h as sum over minimal-length coset representatives tau of
// tau * (element of H_nhat(G)); the returned map is keyed by tau
std::map<Perm, HeckeElement> decompose_cosets(const HeckeElement& h, const YoungBlocks& blocks);

// random sparse element for the verification suites
HeckeElement random_hecke(const CtxPtr& c, Rng& rng, int max_keys, int max_deg);

std::string hecke_str(const HeckeElement& a);

}  // namespace wha
