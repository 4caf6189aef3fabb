#pragma once

// Exact arithmetic in GF(p^m), with the prime subring Z*1 kept explicit.
// Field specs are immutable and shared; elements hold a reference plus a
// reduced coefficient vector of length m (little-endian in the generator).

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace wha {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct inversion_of_zero : error {
    inversion_of_zero() : error("inversion of zero field element") {}
};

struct order_divisible_by_p : error {
    explicit order_divisible_by_p(long o, long p)
        : error("element order " + std::to_string(o) + " divisible by p = " + std::to_string(p)) {}
};

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

// GF(p^m) = GF(p)[x]/(modulus), modulus monic irreducible of degree m.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
    static FieldPtr make(long p, std::vector<long> modulus);
    static FieldPtr prime_field(long p);

    long p() const { return p_; }
    long m() const { return m_; }
    // q = p^m as unsigned; desk scale keeps this far below 2^63
    std::uint64_t q() const { return q_; }
    const std::vector<long>& modulus() const { return modulus_; }

    bool same(const FieldSpec& other) const;

private:
    FieldSpec(long p, std::vector<long> modulus);
    long p_ = 0;
    long m_ = 0;
    std::uint64_t q_ = 0;
    std::vector<long> modulus_;               // little-endian, length m+1, monic
    std::vector<std::vector<long>> red_;      // x^(m+k) reduced, k = 0..m-2
    friend class Gf;
};

class Gf {
public:
    Gf() = default;
    Gf(FieldPtr spec, std::vector<long> coeffs);

    static Gf zero(const FieldPtr& spec);
    static Gf one(const FieldPtr& spec);
    // k * 1, the image of the integer k; depends only on k mod p
    static Gf from_int(const FieldPtr& spec, long k);
    // the generator x of the extension (requires m >= 2... for m = 1 this is
    // the class of x mod a linear modulus, i.e. a scalar)
    static Gf gen(const FieldPtr& spec);
    // element with index e = sum c_i p^i, 0 <= e < q
    static Gf from_index(const FieldPtr& spec, std::uint64_t e);

    const FieldPtr& field() const { return spec_; }
    const std::vector<long>& coeffs() const { return c_; }
    std::uint64_t index() const;

    bool is_zero() const;
    bool is_one() const;
    // true when the element lies in the prime subring Z*1
    bool in_prime_subfield() const;
    // the representative 0..p-1 when in_prime_subfield(), else throws
    long as_int() const;

    Gf operator+(const Gf& o) const;
    Gf operator-(const Gf& o) const;
    Gf operator-() const;
    Gf operator*(const Gf& o) const;
    Gf inv() const;
    Gf pow(std::uint64_t e) const;

    Gf& operator+=(const Gf& o) { *this = *this + o; return *this; }
    Gf& operator-=(const Gf& o) { *this = *this - o; return *this; }
    Gf& operator*=(const Gf& o) { *this = *this * o; return *this; }

    bool operator==(const Gf& o) const;
    bool operator!=(const Gf& o) const { return !(*this == o); }
    bool operator<(const Gf& o) const;   // lexicographic on coefficients

    // multiplicative order; element must be nonzero
    std::uint64_t mult_order() const;

    std::string str() const;

private:
    void check_compatible(const Gf& o) const;
    FieldPtr spec_;
    std::vector<long> c_;
};

// Polynomials over GF(p) as little-endian coefficient vectors; helpers used
// by the splitting-field search and by characteristic-polynomial root scans.
namespace gfpoly {
bool is_irreducible_mod_p(const std::vector<long>& poly, long p);
}

bool is_prime(long p);

// Smallest m with every order in `orders` dividing p^m - 1, together with the
// lexicographically-smallest monic irreducible modulus of degree m over GF(p).
FieldPtr find_splitting_field(long p, const std::vector<long>& orders);

}  // namespace wha
