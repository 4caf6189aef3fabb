#include "wha/gf.hpp"

#include <algorithm>
#include <sstream>

namespace wha {

namespace {

long mod_norm(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

// multiplication of GF(p)[x] polynomials, little-endian
std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b, long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = mod_norm(out[i + j] + a[i] * b[j], p);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& m, long p) {
    // m monic
    long dm = static_cast<long>(m.size()) - 1;
    while (static_cast<long>(a.size()) - 1 >= dm) {
        long da = static_cast<long>(a.size()) - 1;
        long c = a.back();
        if (c != 0) {
            for (long i = 0; i <= dm; ++i)
                a[da - dm + i] = mod_norm(a[da - dm + i] - c * m[i], p);
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<long> poly_powmod(std::vector<long> base, std::uint64_t e,
                              const std::vector<long>& m, long p) {
    std::vector<long> acc{1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) acc = poly_mod(poly_mul(acc, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return acc;
}

std::vector<long> poly_gcd(std::vector<long> a, std::vector<long> b, long p) {
    auto inv_mod_p = [&](long x) {
        long r = 1, e = p - 2, base = mod_norm(x, p);
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // normalize b monic for stable reduction
        long lc = b.back();
        if (lc != 1) {
            long il = inv_mod_p(lc);
            for (auto& c : b) c = mod_norm(c * il, p);
        }
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

}  // namespace

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace gfpoly {

bool is_irreducible_mod_p(const std::vector<long>& poly, long p) {
    long d = static_cast<long>(poly.size()) - 1;
    if (d < 1) return false;
    if (poly.back() != 1) return false;
    if (d == 1) return true;
    // x^(p^d) == x mod poly, and x^(p^(d/t)) != x for every prime t | d
    std::vector<long> x{0, 1};
    auto qpow = [&](long e) {
        std::uint64_t pe = 1;
        for (long i = 0; i < e; ++i) pe *= static_cast<std::uint64_t>(p);
        return poly_powmod(x, pe, poly, p);
    };
    if (qpow(d) != poly_mod(x, poly, p)) return false;
    for (long t = 2; t <= d; ++t) {
        if (d % t != 0 || !is_prime(t)) continue;
        auto r = qpow(d / t);
        auto diff = r;
        // diff = r - x
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = mod_norm(diff[1] - 1, p);
        while (!diff.empty() && diff.back() == 0) diff.pop_back();
        auto g = poly_gcd(poly, diff, p);
        if (static_cast<long>(g.size()) - 1 > 0) return false;
    }
    return true;
}

}  // namespace gfpoly

FieldSpec::FieldSpec(long p, std::vector<long> modulus) : p_(p), modulus_(std::move(modulus)) {
    m_ = static_cast<long>(modulus_.size()) - 1;
    q_ = 1;
    for (long i = 0; i < m_; ++i) q_ *= static_cast<std::uint64_t>(p_);
    // reductions of x^(m+k) for k = 0..m-2
    red_.resize(m_ > 1 ? m_ - 1 : 0);
    std::vector<long> cur(m_, 0);  // x^m reduced:
    for (long i = 0; i < m_; ++i) cur[i] = mod_norm(-modulus_[i], p_);
    for (long k = 0; k + 1 < m_; ++k) {
        red_[k] = cur;
        // multiply by x and reduce
        std::vector<long> nxt(m_, 0);
        long top = cur[m_ - 1];
        for (long i = m_ - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        if (top != 0)
            for (long i = 0; i < m_; ++i)
                nxt[i] = mod_norm(nxt[i] - top * modulus_[i], p_);
        cur = std::move(nxt);
    }
}

FieldPtr FieldSpec::make(long p, std::vector<long> modulus) {
    if (!is_prime(p)) throw error("characteristic must be prime, got " + std::to_string(p));
    for (auto& c : modulus) c = mod_norm(c, p);
    while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
    if (modulus.size() < 2 || modulus.back() != 1)
        throw error("modulus must be monic of degree >= 1");
    if (!gfpoly::is_irreducible_mod_p(modulus, p))
        throw error("modulus is reducible over GF(p)");
    return FieldPtr(new FieldSpec(p, std::move(modulus)));
}

FieldPtr FieldSpec::prime_field(long p) { return make(p, {0, 1}); }

bool FieldSpec::same(const FieldSpec& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
}

Gf::Gf(FieldPtr spec, std::vector<long> coeffs) : spec_(std::move(spec)), c_(std::move(coeffs)) {
    c_.resize(spec_->m(), 0);
    for (auto& x : c_) x = mod_norm(x, spec_->p());
}

Gf Gf::zero(const FieldPtr& spec) { return Gf(spec, {}); }
Gf Gf::one(const FieldPtr& spec) { return Gf(spec, {1}); }

Gf Gf::from_int(const FieldPtr& spec, long k) { return Gf(spec, {mod_norm(k, spec->p())}); }

Gf Gf::gen(const FieldPtr& spec) {
    if (spec->m() == 1) {
        // class of x modulo a linear modulus x + a
        return Gf(spec, {mod_norm(-spec->modulus()[0], spec->p())});
    }
    return Gf(spec, {0, 1});
}

Gf Gf::from_index(const FieldPtr& spec, std::uint64_t e) {
    std::vector<long> c(spec->m());
    for (long i = 0; i < spec->m(); ++i) {
        c[i] = static_cast<long>(e % static_cast<std::uint64_t>(spec->p()));
        e /= static_cast<std::uint64_t>(spec->p());
    }
    return Gf(spec, std::move(c));
}

std::uint64_t Gf::index() const {
    std::uint64_t e = 0;
    for (long i = spec_->m() - 1; i >= 0; --i)
        e = e * static_cast<std::uint64_t>(spec_->p()) + static_cast<std::uint64_t>(c_[i]);
    return e;
}

bool Gf::is_zero() const {
    for (long x : c_)
        if (x) return false;
    return true;
}

bool Gf::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

bool Gf::in_prime_subfield() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

long Gf::as_int() const {
    if (!in_prime_subfield()) throw error("field element not in the prime subring");
    return c_.empty() ? 0 : c_[0];
}

void Gf::check_compatible(const Gf& o) const {
    if (!spec_ || !o.spec_ || !spec_->same(*o.spec_))
        throw error("field mismatch in Gf arithmetic");
}

Gf Gf::operator+(const Gf& o) const {
    check_compatible(o);
    std::vector<long> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = mod_norm(c_[i] + o.c_[i], spec_->p());
    Gf out;
    out.spec_ = spec_;
    out.c_ = std::move(r);
    return out;
}

Gf Gf::operator-(const Gf& o) const { return *this + (-o); }

Gf Gf::operator-() const {
    std::vector<long> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = mod_norm(-c_[i], spec_->p());
    Gf out;
    out.spec_ = spec_;
    out.c_ = std::move(r);
    return out;
}

Gf Gf::operator*(const Gf& o) const {
    check_compatible(o);
    const long m = spec_->m();
    const long p = spec_->p();
    std::vector<long> prod(2 * m - 1, 0);
    for (long i = 0; i < m; ++i) {
        if (c_[i] == 0) continue;
        for (long j = 0; j < m; ++j)
            prod[i + j] = mod_norm(prod[i + j] + c_[i] * o.c_[j], p);
    }
    std::vector<long> r(prod.begin(), prod.begin() + m);
    for (long k = 0; k + 1 < m; ++k) {
        long c = prod[m + k];
        if (c == 0) continue;
        const auto& red = spec_->red_[k];
        for (long i = 0; i < m; ++i) r[i] = mod_norm(r[i] + c * red[i], p);
    }
    Gf out;
    out.spec_ = spec_;
    out.c_ = std::move(r);
    return out;
}

Gf Gf::pow(std::uint64_t e) const {
    Gf acc = Gf::one(spec_);
    Gf base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Gf Gf::inv() const {
    if (is_zero()) throw inversion_of_zero();
    return pow(spec_->q() - 2);
}

bool Gf::operator==(const Gf& o) const {
    check_compatible(o);
    return c_ == o.c_;
}

bool Gf::operator<(const Gf& o) const {
    check_compatible(o);
    return c_ < o.c_;
}

std::uint64_t Gf::mult_order() const {
    if (is_zero()) throw error("mult_order of zero");
    std::uint64_t n = spec_->q() - 1;
    std::vector<std::uint64_t> primes;
    std::uint64_t t = n;
    for (std::uint64_t d = 2; d * d <= t; ++d) {
        if (t % d) continue;
        primes.push_back(d);
        while (t % d == 0) t /= d;
    }
    if (t > 1) primes.push_back(t);
    std::uint64_t ord = n;
    for (std::uint64_t d : primes)
        while (ord % d == 0 && pow(ord / d).is_one()) ord /= d;
    return ord;
}

std::string Gf::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

FieldPtr find_splitting_field(long p, const std::vector<long>& orders) {
    if (!is_prime(p)) throw error("p must be prime");
    for (long o : orders)
        if (o > 0 && o % p == 0) throw order_divisible_by_p(o, p);
    long m = 1;
    for (;; ++m) {
        // does every order divide p^m - 1?
        std::uint64_t q = 1;
        for (long i = 0; i < m; ++i) q *= static_cast<std::uint64_t>(p);
        bool ok = true;
        for (long o : orders)
            if (o > 1 && (q - 1) % static_cast<std::uint64_t>(o) != 0) ok = false;
        if (ok) break;
        if (m > 32) throw error("splitting-field search exceeded degree bound");
    }
    if (m == 1) return FieldSpec::prime_field(p);
    // lexicographically-smallest monic irreducible of degree m (low coeffs first)
    std::vector<long> mod(m + 1, 0);
    mod[m] = 1;
    std::uint64_t total = 1;
    for (long i = 0; i < m; ++i) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t e = 0; e < total; ++e) {
        std::uint64_t t = e;
        // enumerate in lex order on (c_{m-1}, ..., c_0)? The outputs must be
        // reproducible; fix lex order on the little-endian tuple.
        for (long i = 0; i < m; ++i) {
            mod[m - 1 - i] = static_cast<long>(t % static_cast<std::uint64_t>(p));
            t /= static_cast<std::uint64_t>(p);
        }
        if (gfpoly::is_irreducible_mod_p(mod, p)) return FieldSpec::make(p, mod);
    }
    throw error("no irreducible modulus found");
}

}  // namespace wha
