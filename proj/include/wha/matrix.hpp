#pragma once

// Dense exact linear algebra over GF(p^m): row reduction, kernels, solving,
// characteristic polynomials with root scans over the finite field.

#include <optional>
#include <vector>

#include "wha/gf.hpp"

namespace wha {

class Mat {
public:
    Mat() = default;
    Mat(FieldPtr f, int rows, int cols);
    static Mat identity(const FieldPtr& f, int n);
    static Mat zero(const FieldPtr& f, int rows, int cols) { return Mat(f, rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Gf& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Gf& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const Gf& c) const;
    Mat transpose() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const;

    std::vector<Gf> apply(const std::vector<Gf>& v) const;  // matrix * column
    Mat pow(std::uint64_t e) const;

    // tensor (Kronecker) product, row-major index (i1 * rows2 + i2)
    static Mat kron(const Mat& A, const Mat& B);

    // in-place reduced row echelon form; returns pivot column list
    std::vector<int> rref();
    int rank() const;
    // basis of the right kernel, as columns collected in a matrix (cols = nullity)
    Mat kernel() const;
    // solve A x = b; nullopt if inconsistent
    std::optional<std::vector<Gf>> solve(const std::vector<Gf>& b) const;
    Mat inverse() const;  // throws if singular

    // characteristic polynomial, little-endian coefficients, length rows+1
    std::vector<Gf> charpoly() const;

    std::string str() const;

private:
    FieldPtr field_;
    int rows_ = 0, cols_ = 0;
    std::vector<Gf> a_;
};

// evaluate a little-endian polynomial at x
Gf poly_eval(const std::vector<Gf>& poly, const Gf& x);

// roots of a polynomial that lie in the field, by exhaustive scan
std::vector<Gf> roots_in_field(const std::vector<Gf>& poly, const FieldPtr& f);

// incremental row-space basis with exact membership tests
class RowSpace {
public:
    explicit RowSpace(FieldPtr f, int dim);
    // inserts v if independent from the current span; returns true if added
    bool insert(std::vector<Gf> v);
    bool contains(std::vector<Gf> v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }
    // basis rows in echelon form
    const std::vector<std::vector<Gf>>& rows() const { return rows_; }
    Mat basis_matrix() const;  // rank x dim

private:
    void reduce(std::vector<Gf>& v) const;
    FieldPtr field_;
    int dim_;
    std::vector<std::vector<Gf>> rows_;
    std::vector<int> pivot_;  // pivot column per row
};

}  // namespace wha
