#include "wha/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace wha {

Mat::Mat(FieldPtr f, int rows, int cols) : field_(std::move(f)), rows_(rows), cols_(cols) {
    a_.assign(static_cast<size_t>(rows_) * cols_, Gf::zero(field_));
}

Mat Mat::identity(const FieldPtr& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Gf::one(f);
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw error("matrix shape mismatch in product");
    Mat r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Gf& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Gf& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

Mat Mat::scaled(const Gf& c) const {
    Mat r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

Mat Mat::transpose() const {
    Mat r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Gf> Mat::apply(const std::vector<Gf>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw error("matrix apply shape mismatch");
    std::vector<Gf> out(rows_, Gf::zero(field_));
    for (int j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < rows_; ++i) {
            const Gf& aij = at(i, j);
            if (!aij.is_zero()) out[i] += aij * v[j];
        }
    }
    return out;
}

Mat Mat::pow(std::uint64_t e) const {
    Mat acc = identity(field_, rows_);
    Mat base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Mat Mat::kron(const Mat& A, const Mat& B) {
    Mat r(A.field(), A.rows() * B.rows(), A.cols() * B.cols());
    for (int i1 = 0; i1 < A.rows(); ++i1)
        for (int j1 = 0; j1 < A.cols(); ++j1) {
            const Gf& a = A.at(i1, j1);
            if (a.is_zero()) continue;
            for (int i2 = 0; i2 < B.rows(); ++i2)
                for (int j2 = 0; j2 < B.cols(); ++j2) {
                    const Gf& b = B.at(i2, j2);
                    if (!b.is_zero()) r.at(i1 * B.rows() + i2, j1 * B.cols() + j2) = a * b;
                }
        }
    return r;
}

std::vector<int> Mat::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int r = row; r < rows_; ++r)
            if (!at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
        Gf iv = at(row, col).inv();
        for (int j = col; j < cols_; ++j) at(row, j) *= iv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row) continue;
            Gf f = at(r, col);
            if (f.is_zero()) continue;
            for (int j = col; j < cols_; ++j) at(r, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int Mat::rank() const {
    Mat tmp = *this;
    return static_cast<int>(tmp.rref().size());
}

Mat Mat::kernel() const {
    Mat tmp = *this;
    auto pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat K(field_, cols_, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        K.at(fc, static_cast<int>(k)) = Gf::one(field_);
        for (size_t r = 0; r < pivots.size(); ++r)
            K.at(pivots[r], static_cast<int>(k)) = -tmp.at(static_cast<int>(r), fc);
    }
    return K;
}

std::optional<std::vector<Gf>> Mat::solve(const std::vector<Gf>& b) const {
    Mat aug(field_, rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Gf> x(cols_, Gf::zero(field_));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
    return x;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw error("inverse of non-square matrix");
    Mat aug(field_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Gf::one(field_);
    }
    auto pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || pivots[rows_ - 1] != rows_ - 1)
        throw error("matrix not invertible");
    Mat r(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
    return r;
}

std::vector<Gf> Mat::charpoly() const {
    if (rows_ != cols_) throw error("charpoly of non-square matrix");
    const int n = rows_;
    const Gf one = Gf::one(field_);
    if (n == 0) return {one};
    // Faddeev-LeVerrier needs division by integers; use expansion via
    // Hessenberg form instead, which is division-safe over a field.
    Mat H = *this;
    for (int col = 0; col < n - 2; ++col) {
        int piv = -1;
        for (int r = col + 1; r < n; ++r)
            if (!H.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != col + 1) {
            for (int j = 0; j < n; ++j) std::swap(H.at(piv, j), H.at(col + 1, j));
            for (int i = 0; i < n; ++i) std::swap(H.at(i, piv), H.at(i, col + 1));
        }
        Gf iv = H.at(col + 1, col).inv();
        for (int r = col + 2; r < n; ++r) {
            Gf f = H.at(r, col) * iv;
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) H.at(r, j) -= f * H.at(col + 1, j);
            for (int i = 0; i < n; ++i) H.at(i, col + 1) += f * H.at(i, r);
        }
    }
    // p_k(x) = charpoly of leading k x k block of the Hessenberg matrix
    std::vector<std::vector<Gf>> p(n + 1);
    p[0] = {one};
    for (int k = 1; k <= n; ++k) {
        // p_k = (x - H[k-1][k-1]) p_{k-1} - sum_{i<k-1} H[i][k-1] (prod sub) p_i
        std::vector<Gf> cur(k + 1, Gf::zero(field_));
        for (int i = 0; i < k; ++i) cur[i + 1] += p[k - 1][i];
        for (int i = 0; i < k; ++i) cur[i] -= H.at(k - 1, k - 1) * p[k - 1][i];
        Gf prod = one;
        for (int i = k - 2; i >= 0; --i) {
            prod *= H.at(i + 1, i);
            Gf c = H.at(i, k - 1) * prod;
            if (!c.is_zero())
                for (int j = 0; j <= i; ++j) cur[j] -= c * p[i][j];
        }
        p[k] = std::move(cur);
    }
    return p[n];
}

std::string Mat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) os << at(i, j).str() << " ";
        os << "\n";
    }
    return os.str();
}

Gf poly_eval(const std::vector<Gf>& poly, const Gf& x) {
    Gf acc = Gf::zero(x.field());
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<Gf> roots_in_field(const std::vector<Gf>& poly, const FieldPtr& f) {
    std::vector<Gf> out;
    for (std::uint64_t e = 0; e < f->q(); ++e) {
        Gf x = Gf::from_index(f, e);
        if (poly_eval(poly, x).is_zero()) out.push_back(x);
    }
    return out;
}

RowSpace::RowSpace(FieldPtr f, int dim) : field_(std::move(f)), dim_(dim) {}

void RowSpace::reduce(std::vector<Gf>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Gf& c = v[pivot_[r]];
        if (c.is_zero()) continue;
        Gf f = c;
        for (int j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
    }
}

bool RowSpace::insert(std::vector<Gf> v) {
    reduce(v);
    int piv = -1;
    for (int j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    Gf iv = v[piv].inv();
    for (int j = 0; j < dim_; ++j) v[j] *= iv;
    // keep earlier rows reduced against the new one
    for (size_t r = 0; r < rows_.size(); ++r) {
        Gf c = rows_[r][piv];
        if (c.is_zero()) continue;
        for (int j = 0; j < dim_; ++j) rows_[r][j] -= c * v[j];
    }
    rows_.push_back(std::move(v));
    pivot_.push_back(piv);
    return true;
}

bool RowSpace::contains(std::vector<Gf> v) const {
    reduce(v);
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Mat RowSpace::basis_matrix() const {
    Mat m(field_, rank(), dim_);
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < dim_; ++j) m.at(i, j) = rows_[i][j];
    return m;
}

}  // namespace wha
