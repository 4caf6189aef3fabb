#include "wha/hecke.hpp"

#include <algorithm>
#include <sstream>

namespace wha {

CtxPtr make_ctx(GroupPtr G, int n, FieldPtr F) {
    auto c = std::make_shared<HeckeContext>();
    c->G = std::move(G);
    c->n = n;
    c->F = std::move(F);
    return c;
}

int PBWKey::degree() const {
    int d = 0;
    for (int a : alpha) d += a;
    return d;
}

bool PBWKey::operator<(const PBWKey& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    if (alpha != o.alpha) return alpha < o.alpha;
    if (g != o.g) return g < o.g;
    return w < o.w;
}

int HeckeElement::degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.degree());
    return d;
}

void HeckeElement::add(const PBWKey& k, const Gf& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    HeckeElement r = *this;
    if (!o.terms_.empty() && r.ctx_ == nullptr) r.ctx_ = o.ctx_;
    for (const auto& [k, c] : o.terms_) r.add(k, c);
    return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const { return *this + (-o); }

HeckeElement HeckeElement::operator-() const {
    HeckeElement r(ctx_);
    for (const auto& [k, c] : terms_) r.add(k, -c);
    return r;
}

HeckeElement HeckeElement::scaled(const Gf& c) const {
    HeckeElement r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [k, d] : terms_) r.add(k, c * d);
    return r;
}

bool HeckeElement::operator==(const HeckeElement& o) const { return terms_ == o.terms_; }

HeckeElement h_zero(const CtxPtr& c) { return HeckeElement(c); }

HeckeElement h_one(const CtxPtr& c) { return h_scalar(c, Gf::one(c->F)); }

HeckeElement h_scalar(const CtxPtr& c, const Gf& v) {
    HeckeElement e(c);
    e.add(PBWKey{std::vector<int>(c->n, 0), std::vector<int>(c->n, 0), perm_identity(c->n)}, v);
    return e;
}

HeckeElement h_key(const CtxPtr& c, const PBWKey& k, const Gf& coeff) {
    HeckeElement e(c);
    e.add(k, coeff);
    return e;
}

HeckeElement h_x(const CtxPtr& c, int i) {
    if (i < 1 || i > c->n) throw index_out_of_range("h_x");
    std::vector<int> alpha(c->n, 0);
    alpha[i - 1] = 1;
    return h_monomial(c, alpha);
}

HeckeElement h_monomial(const CtxPtr& c, const std::vector<int>& alpha) {
    HeckeElement e(c);
    e.add(PBWKey{alpha, std::vector<int>(c->n, 0), perm_identity(c->n)}, Gf::one(c->F));
    return e;
}

HeckeElement h_s(const CtxPtr& c, int i) {
    if (i < 1 || i >= c->n) throw index_out_of_range("h_s");
    return h_perm(c, perm_simple(c->n, i - 1));
}

HeckeElement h_perm(const CtxPtr& c, const Perm& w) {
    HeckeElement e(c);
    e.add(PBWKey{std::vector<int>(c->n, 0), std::vector<int>(c->n, 0), w}, Gf::one(c->F));
    return e;
}

HeckeElement h_g(const CtxPtr& c, const std::vector<int>& g) {
    HeckeElement e(c);
    e.add(PBWKey{std::vector<int>(c->n, 0), g, perm_identity(c->n)}, Gf::one(c->F));
    return e;
}

HeckeElement h_g_at(const CtxPtr& c, int pos, int a) {
    if (pos < 1 || pos > c->n) throw index_out_of_range("h_g_at");
    std::vector<int> g(c->n, 0);
    g[pos - 1] = a;
    return h_g(c, g);
}

HeckeElement h_t(const CtxPtr& c, int i, int j) {
    if (i < 1 || j <= i || j > c->n) throw index_out_of_range("h_t");
    HeckeElement e(c);
    for (int a = 0; a < c->G->order(); ++a) {
        std::vector<int> g(c->n, 0);
        g[i - 1] = a;
        g[j - 1] = c->G->inv(a);
        e.add(PBWKey{std::vector<int>(c->n, 0), g, perm_identity(c->n)}, Gf::one(c->F));
    }
    return e;
}

HeckeElement h_omega(const CtxPtr& c, int i) {
    return normal_mul(h_s(c, i), h_x(c, i) - h_x(c, i + 1)) + h_t(c, i, i + 1);
}

std::vector<std::pair<std::vector<int>, int>> divided_difference(const std::vector<int>& alpha,
                                                                 int i) {
    // (x^alpha - x^{s_i alpha}) / (x_{i+1} - x_i); exact division, zero when
    // alpha is s_i-symmetric
    const int lo = i - 1, hi = i;  // 0-based positions
    const int a = alpha[lo], b = alpha[hi];
    std::vector<std::pair<std::vector<int>, int>> out;
    if (a == b) return out;
    if (a < b) {
        for (int j = 0; j < b - a; ++j) {
            std::vector<int> e = alpha;
            e[lo] = a + j;
            e[hi] = b - 1 - j;
            out.emplace_back(std::move(e), +1);
        }
    } else {
        for (int j = 0; j < a - b; ++j) {
            std::vector<int> e = alpha;
            e[lo] = b + j;
            e[hi] = a - 1 - j;
            out.emplace_back(std::move(e), -1);
        }
    }
    return out;
}

HeckeElement h_divided_difference(const CtxPtr& c, const std::vector<int>& alpha, int i) {
    HeckeElement e(c);
    Gf one = Gf::one(c->F);
    for (const auto& [ex, sgn] : divided_difference(alpha, i))
        e.add(PBWKey{ex, std::vector<int>(c->n, 0), perm_identity(c->n)},
              sgn > 0 ? one : -one);
    return e;
}

HeckeElement mul_simple_left(int i, const HeckeElement& b) {
    // s_i g f = (s_i g)((s_i f) s_i + t_{i,i+1} (f - s_i f)/(x_{i+1} - x_i))
    const CtxPtr& c = b.ctx();
    const auto& G = c->G;
    const int lo = i - 1, hi = i;
    Perm si = perm_simple(c->n, lo);
    HeckeElement out(c);
    for (const auto& [k, coeff] : b.terms()) {
        // leading part: x^{s_i beta} (s_i h) (s_i u)
        PBWKey lead;
        lead.alpha = k.alpha;
        std::swap(lead.alpha[lo], lead.alpha[hi]);
        lead.g = k.g;
        std::swap(lead.g[lo], lead.g[hi]);
        lead.w = perm_mul(si, k.w);
        out.add(lead, coeff);
        // divided-difference part: (s_i h) t_{i,i+1} expanded over the group
        auto dd = divided_difference(k.alpha, i);
        if (dd.empty()) continue;
        std::vector<int> sh = k.g;
        std::swap(sh[lo], sh[hi]);
        for (int a = 0; a < G->order(); ++a) {
            std::vector<int> g2 = sh;
            g2[lo] = G->mul(g2[lo], a);
            g2[hi] = G->mul(g2[hi], G->inv(a));
            for (const auto& [ex, sgn] : dd) {
                PBWKey kk{ex, g2, k.w};
                out.add(kk, sgn > 0 ? coeff : -coeff);
            }
        }
    }
    return out;
}

namespace {

// x^alpha * g * b for b in normal form (alpha and g commute past each other)
HeckeElement mul_xg_left(const std::vector<int>& alpha, const std::vector<int>& g,
                         const HeckeElement& b) {
    const CtxPtr& c = b.ctx();
    HeckeElement out(c);
    for (const auto& [k, coeff] : b.terms()) {
        PBWKey kk = k;
        for (int i = 0; i < c->n; ++i) {
            kk.alpha[i] += alpha[i];
            kk.g[i] = c->G->mul(g[i], kk.g[i]);
        }
        out.add(kk, coeff);
    }
    return out;
}

}  // namespace

HeckeElement normal_mul(const HeckeElement& a, const HeckeElement& b) {
    if (!a.ctx() || !b.ctx()) {
        if (a.is_zero()) return a;
        if (b.is_zero()) return b;
    }
    if (a.ctx() && b.ctx() && !a.ctx()->same(*b.ctx())) throw mismatch("normal_mul");
    const CtxPtr& c = a.ctx() ? a.ctx() : b.ctx();
    HeckeElement out(c);
    for (const auto& [k, coeff] : a.terms()) {
        // w * b via the reduced word, one simple reflection at a time
        HeckeElement cur = b;
        auto word = reduced_word(k.w);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            cur = mul_simple_left(*it + 1, cur);
        cur = mul_xg_left(k.alpha, k.g, cur);
        for (const auto& [kk, cc] : cur.terms()) out.add(kk, coeff * cc);
    }
    return out;
}

HeckeElement h_from_group_algebra(const CtxPtr& c, const GroupAlgebraElement& a) {
    HeckeElement out(c);
    for (const auto& [x, coeff] : a.terms())
        out.add(PBWKey{std::vector<int>(c->n, 0), x.g, x.w}, coeff);
    return out;
}

// ----- polynomial module -----

void PolyVec::add(const PolyKey& k, const Gf& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyVec PolyVec::operator+(const PolyVec& o) const {
    PolyVec r = *this;
    if (!o.terms_.empty() && r.ctx_ == nullptr) r.ctx_ = o.ctx_;
    for (const auto& [k, c] : o.terms_) r.add(k, c);
    return r;
}

PolyVec PolyVec::operator-(const PolyVec& o) const {
    PolyVec r = *this;
    if (!o.terms_.empty() && r.ctx_ == nullptr) r.ctx_ = o.ctx_;
    for (const auto& [k, c] : o.terms_) r.add(k, -c);
    return r;
}

PolyVec PolyVec::scaled(const Gf& c) const {
    PolyVec r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [k, d] : terms_) r.add(k, c * d);
    return r;
}

PolyVec poly_basis_vector(const CtxPtr& c, const std::vector<int>& h, const std::vector<int>& beta) {
    PolyVec v(c);
    v.add(PolyKey{h, beta}, Gf::one(c->F));
    return v;
}

namespace {

PolyVec poly_act_x(const CtxPtr& c, int i, const PolyVec& v) {
    PolyVec out(c);
    for (const auto& [k, coeff] : v.terms()) {
        PolyKey kk = k;
        kk.beta[i - 1] += 1;
        out.add(kk, coeff);
    }
    return out;
}

PolyVec poly_act_g(const CtxPtr& c, const std::vector<int>& g, const PolyVec& v) {
    PolyVec out(c);
    for (const auto& [k, coeff] : v.terms()) {
        PolyKey kk = k;
        for (int i = 0; i < c->n; ++i) kk.h[i] = c->G->mul(g[i], kk.h[i]);
        out.add(kk, coeff);
    }
    return out;
}

PolyVec poly_act_s(const CtxPtr& c, int j, const PolyVec& v) {
    // s_j . (h (x) y^beta) = (s_j h) (x) y^{s_j beta}
    //                      + (s_j h) t_{j,j+1} (x) (y^beta - y^{s_j beta})/(y_{j+1} - y_j)
    const int lo = j - 1, hi = j;
    PolyVec out(c);
    for (const auto& [k, coeff] : v.terms()) {
        PolyKey lead = k;
        std::swap(lead.h[lo], lead.h[hi]);
        std::swap(lead.beta[lo], lead.beta[hi]);
        out.add(lead, coeff);
        auto dd = divided_difference(k.beta, j);
        if (dd.empty()) continue;
        std::vector<int> sh = k.h;
        std::swap(sh[lo], sh[hi]);
        for (int a = 0; a < c->G->order(); ++a) {
            std::vector<int> h2 = sh;
            h2[lo] = c->G->mul(h2[lo], a);
            h2[hi] = c->G->mul(h2[hi], c->G->inv(a));
            for (const auto& [ex, sgn] : dd)
                out.add(PolyKey{h2, ex}, sgn > 0 ? coeff : -coeff);
        }
    }
    return out;
}

}  // namespace

PolyVec poly_action(const HeckeElement& a, const PolyVec& v) {
    if (a.is_zero() || v.is_zero()) return PolyVec(a.ctx() ? a.ctx() : v.ctx());
    if (!a.ctx()->same(*v.ctx())) throw mismatch("poly_action");
    const CtxPtr& c = a.ctx();
    PolyVec out(c);
    for (const auto& [k, coeff] : a.terms()) {
        PolyVec cur = v;
        auto word = reduced_word(k.w);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            cur = poly_act_s(c, *it + 1, cur);
        cur = poly_act_g(c, k.g, cur);
        for (int i = 0; i < c->n; ++i)
            for (int rep = 0; rep < k.alpha[i]; ++rep) cur = poly_act_x(c, i + 1, cur);
        out = out + cur.scaled(coeff);
    }
    return out;
}

HeckeElement pbw_extract(const std::function<PolyVec(const PolyVec&)>& op, const CtxPtr& c,
                         int deg_bound) {
    const int n = c->n;
    const long N = deg_bound + 1;
    std::vector<int> M(n);
    for (int i = 0; i < n; ++i) M[i] = static_cast<int>((i + 1) * N);
    PolyVec probe = poly_basis_vector(c, std::vector<int>(n, 0), M);
    PolyVec residual = op(probe);
    HeckeElement result(c);
    long guard = 0;
    while (!residual.is_zero()) {
        if (++guard > 100000) throw degree_bound_violated("extraction did not terminate");
        // take a term of maximal total degree
        const PolyKey* best = nullptr;
        const Gf* bestc = nullptr;
        long bestdeg = -1;
        for (const auto& [k, coeff] : residual.terms()) {
            long d = 0;
            for (int e : k.beta) d += e;
            if (d > bestdeg) {
                bestdeg = d;
                best = &k;
                bestc = &coeff;
            }
        }
        // decode (alpha, g, w) from the exponent vector: beta_i = w^{-1}(i)*N + alpha_i
        PBWKey key;
        key.alpha.resize(n);
        key.g = best->h;
        Perm winv(n);
        for (int i = 0; i < n; ++i) {
            long q = best->beta[i] / N;
            long r = best->beta[i] % N;
            if (q < 1 || q > n) throw degree_bound_violated("monomial outside the probe lattice");
            if (r > deg_bound) throw degree_bound_violated("x-degree exceeds the stated bound");
            winv[i] = static_cast<int>(q - 1);
            key.alpha[i] = static_cast<int>(r);
        }
        key.w = perm_inverse(winv);
        {
            // winv must be a permutation
            std::vector<bool> seen(n, false);
            for (int v : winv) {
                if (seen[v]) throw degree_bound_violated("degenerate probe image");
                seen[v] = true;
            }
        }
        Gf coeff = *bestc;
        result.add(key, coeff);
        residual = residual - poly_action(h_key(c, key, coeff), probe);
    }
    return result;
}

// ----- scalars -----

Mat swap_operator(const FieldPtr& F, int dk, int dl) {
    Mat P(F, dk * dl, dk * dl);
    // P(v (x) w) = w (x) v; basis e_a (x) e_b at index a*dl + b
    for (int a = 0; a < dk; ++a)
        for (int b = 0; b < dl; ++b) P.at(b * dk + a, a * dl + b) = Gf::one(F);
    return P;
}

Mat t12_on_tensor(const GroupPtr& G, const FieldPtr& F, const Irrep& Vk, const Irrep& Vl) {
    Mat T(F, Vk.dim * Vl.dim, Vk.dim * Vl.dim);
    for (int a = 0; a < G->order(); ++a)
        T = T + Mat::kron(Vk.rho[a], Vl.rho[G->inv(a)]);
    return T;
}

CScalars c_scalars(const GroupPtr& G, const FieldPtr& F, const std::vector<Irrep>& irreps) {
    CScalars out;
    for (const auto& V : irreps) {
        Mat T = t12_on_tensor(G, F, V, V);
        Mat P = swap_operator(F, V.dim, V.dim);
        // c is the coefficient of the swap on (e_0 (x) e_0)
        Gf c = T.at(0, 0);
        if (T != P.scaled(c)) throw not_scalar("t_{12} is not a multiple of the swap");
        if (Gf::from_int(F, V.dim) * c != Gf::from_int(F, G->order()))
            throw not_scalar("d_k c_k != |G| in the field");
        out.c.push_back(c);
        out.integral.push_back(c.in_prime_subfield());
        out.zero.push_back(c.is_zero());
    }
    return out;
}

// ----- center -----

bool is_central(const HeckeElement& z) {
    const CtxPtr& c = z.ctx();
    std::vector<HeckeElement> gens;
    gens.push_back(h_x(c, 1));
    for (int i = 1; i < c->n; ++i) gens.push_back(h_s(c, i));
    for (int pos = 1; pos <= c->n; ++pos)
        for (int a = 1; a < c->G->order(); ++a) gens.push_back(h_g_at(c, pos, a));
    for (const auto& g : gens)
        if (normal_mul(g, z) != normal_mul(z, g)) return false;
    return true;
}

bool center_coeff_check(const HeckeElement& z) {
    const CtxPtr& c = z.ctx();
    const auto& G = c->G;
    // membership in P_n(G): no permutation part
    for (const auto& [k, coeff] : z.terms())
        if (!perm_is_identity(k.w)) return false;
    // constant on conjugacy classes of G^n: coefficient depends only on the
    // class tuple, and the whole class sum must be present
    std::map<std::pair<std::vector<int>, std::vector<int>>, Gf> cls_coeff;
    auto class_tuple = [&](const std::vector<int>& g) {
        std::vector<int> t(g.size());
        for (size_t i = 0; i < g.size(); ++i) t[i] = G->class_of(g[i]);
        return t;
    };
    for (const auto& [k, coeff] : z.terms()) {
        auto key = std::make_pair(k.alpha, class_tuple(k.g));
        auto it = cls_coeff.find(key);
        if (it == cls_coeff.end())
            cls_coeff.emplace(key, coeff);
        else if (it->second != coeff)
            return false;
    }
    // every member of each class tuple carries the coefficient
    for (const auto& [key, coeff] : cls_coeff) {
        const auto& [alpha, itup] = key;
        // enumerate C_{i_1} x ... x C_{i_n}
        std::vector<const std::vector<int>*> members;
        long total = 1;
        for (int ci : itup) {
            members.push_back(&G->classes()[ci].members);
            total *= static_cast<long>(G->classes()[ci].members.size());
        }
        for (long e = 0; e < total; ++e) {
            long t = e;
            std::vector<int> g(itup.size());
            for (size_t i = 0; i < itup.size(); ++i) {
                g[i] = (*members[i])[t % members[i]->size()];
                t /= static_cast<long>(members[i]->size());
            }
            PBWKey k{alpha, g, perm_identity(c->n)};
            auto it = z.terms().find(k);
            if (it == z.terms().end() || it->second != coeff) return false;
        }
    }
    // S_n-invariance of the coefficients d_{i,alpha}
    for (const auto& w : all_perms(c->n)) {
        for (const auto& [key, coeff] : cls_coeff) {
            auto wa = perm_act(w, key.first);
            auto wi = perm_act(w, key.second);
            auto it = cls_coeff.find(std::make_pair(wa, wi));
            if (it == cls_coeff.end() || it->second != coeff) return false;
        }
    }
    return true;
}

IntertwinerReport verify_intertwiners(const GroupPtr& G, int n, const FieldPtr& F) {
    auto c = make_ctx(G, n, F);
    IntertwinerReport rep;
    for (int i = 1; i < n; ++i) {
        HeckeElement om = h_omega(c, i);
        HeckeElement t = h_t(c, i, i + 1);
        HeckeElement dx = h_x(c, i) - h_x(c, i + 1);
        if (normal_mul(om, om) != normal_mul(t, t) - normal_mul(dx, dx))
            rep.square_identity = false;
        if (normal_mul(om, h_x(c, i)) != normal_mul(h_x(c, i + 1), om)) rep.swap_left = false;
        if (normal_mul(om, h_x(c, i + 1)) != normal_mul(h_x(c, i), om)) rep.swap_right = false;
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            if (normal_mul(om, h_x(c, j)) != normal_mul(h_x(c, j), om)) rep.distant = false;
        }
    }
    return rep;
}

std::map<Perm, HeckeElement> decompose_cosets(const HeckeElement& h, const YoungBlocks& blocks) {
    const CtxPtr& c = h.ctx();
    std::map<Perm, HeckeElement> out;
    HeckeElement rem = h;
    long guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 200000) throw error("decompose_cosets did not terminate");
        // key with maximal-length coset representative
        const PBWKey* pick = nullptr;
        Perm pick_tau, pick_sigma;
        int best_len = -1;
        for (const auto& [k, coeff] : rem.terms()) {
            Perm tau, sigma;
            blocks.coset_factor(k.w, tau, sigma);
            int len = perm_length(tau);
            if (len > best_len) {
                best_len = len;
                pick = &k;
                pick_tau = tau;
                pick_sigma = sigma;
            }
        }
        Gf coeff = rem.terms().at(*pick);
        if (perm_is_identity(pick_tau)) {
            // already inside the Young subalgebra
            auto it = out.find(pick_tau);
            if (it == out.end()) it = out.emplace(pick_tau, HeckeElement(c)).first;
            HeckeElement piece = rem;  // gather the whole tau = id remainder at once
            for (const auto& [k, cc] : piece.terms()) {
                Perm tau, sigma;
                blocks.coset_factor(k.w, tau, sigma);
                if (perm_is_identity(tau)) {
                    it->second.add(k, cc);
                    rem.add(k, -cc);
                }
            }
            continue;
        }
        // z = x^{tau^{-1} alpha} (tau^{-1} g) sigma
        Perm taui = perm_inverse(pick_tau);
        PBWKey z;
        z.alpha = perm_act(taui, pick->alpha);
        z.g = perm_act(taui, pick->g);
        z.w = pick_sigma;
        auto it = out.find(pick_tau);
        if (it == out.end()) it = out.emplace(pick_tau, HeckeElement(c)).first;
        it->second.add(z, coeff);
        rem = rem - normal_mul(h_perm(c, pick_tau), h_key(c, z, coeff));
    }
    return out;
}

HeckeElement random_hecke(const CtxPtr& c, Rng& rng, int max_keys, int max_deg) {
    HeckeElement e(c);
    auto perms = all_perms(c->n);
    int nk = 1 + static_cast<int>(rng.next(static_cast<std::uint64_t>(max_keys)));
    for (int t = 0; t < nk; ++t) {
        PBWKey k;
        k.alpha.resize(c->n);
        k.g.resize(c->n);
        for (int i = 0; i < c->n; ++i) {
            k.alpha[i] = static_cast<int>(rng.next(static_cast<std::uint64_t>(max_deg + 1)));
            k.g[i] = static_cast<int>(rng.next(static_cast<std::uint64_t>(c->G->order())));
        }
        k.w = perms[rng.next(perms.size())];
        Gf coeff = Gf::from_index(c->F, 1 + rng.next(c->F->q() - 1));
        e.add(k, coeff);
    }
    return e;
}

std::string hecke_str(const HeckeElement& a) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : a.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*x^(";
        for (size_t i = 0; i < k.alpha.size(); ++i) os << (i ? "," : "") << k.alpha[i];
        os << ")g(";
        for (size_t i = 0; i < k.g.size(); ++i) os << (i ? "," : "") << k.g[i];
        os << ")w(";
        for (size_t i = 0; i < k.w.size(); ++i) os << (i ? "," : "") << k.w[i] + 1;
        os << ")";
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace wha
