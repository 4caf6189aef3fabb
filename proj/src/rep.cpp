#include "wha/rep.hpp"

#include <algorithm>

namespace wha {

GroupModule regular_module(const GroupPtr& G, const FieldPtr& F) {
    GroupModule M;
    M.G = G;
    M.F = F;
    const int n = G->order();
    M.rho.reserve(n);
    for (int a = 0; a < n; ++a) {
        Mat m(F, n, n);
        for (int b = 0; b < n; ++b) m.at(G->mul(a, b), b) = Gf::one(F);
        M.rho.push_back(std::move(m));
    }
    return M;
}

bool is_group_module(const GroupModule& M) {
    const int n = M.G->order();
    if (static_cast<int>(M.rho.size()) != n) return false;
    if (M.rho[0] != Mat::identity(M.F, M.dim())) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (M.rho[a] * M.rho[b] != M.rho[M.G->mul(a, b)]) return false;
    return true;
}

std::vector<Mat> hom_space(const GroupModule& A, const GroupModule& B) {
    const int da = A.dim(), db = B.dim();
    const FieldPtr& F = A.F;
    // unknowns X_{ij}, i < db, j < da, flattened; equations X A_g - B_g X = 0
    const int nv = da * db;
    std::vector<std::vector<Gf>> rows;
    for (int g = 1; g < A.G->order(); ++g) {
        const Mat& Ag = A.rho[g];
        const Mat& Bg = B.rho[g];
        for (int i = 0; i < db; ++i)
            for (int j = 0; j < da; ++j) {
                std::vector<Gf> row(nv, Gf::zero(F));
                // (X Ag)_{ij} = sum_k X_{ik} Ag_{kj}
                for (int k = 0; k < da; ++k) row[i * da + k] += Ag.at(k, j);
                // (Bg X)_{ij} = sum_k Bg_{ik} X_{kj}
                for (int k = 0; k < db; ++k) row[k * da + j] -= Bg.at(i, k);
                rows.push_back(std::move(row));
            }
    }
    Mat sys(F, static_cast<int>(rows.size()), nv);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < nv; ++c) sys.at(static_cast<int>(r), c) = rows[r][c];
    Mat K = sys.kernel();
    std::vector<Mat> basis;
    for (int k = 0; k < K.cols(); ++k) {
        Mat X(F, db, da);
        for (int i = 0; i < db; ++i)
            for (int j = 0; j < da; ++j) X.at(i, j) = K.at(i * da + j, k);
        basis.push_back(std::move(X));
    }
    return basis;
}

int end_dim(const GroupModule& M) { return static_cast<int>(hom_space(M, M).size()); }

GroupModule submodule_on_basis(const GroupModule& M, const Mat& C) {
    // columns of C independent and spanning an invariant subspace;
    // rho'(g) solves  M.rho[g] * C = C * rho'(g)
    const FieldPtr& F = M.F;
    const int k = C.cols();
    GroupModule S;
    S.G = M.G;
    S.F = F;
    for (int g = 0; g < M.G->order(); ++g) {
        Mat img = M.rho[g] * C;
        Mat r(F, k, k);
        for (int j = 0; j < k; ++j) {
            std::vector<Gf> b(C.rows(), Gf::zero(F));
            for (int i = 0; i < C.rows(); ++i) b[i] = img.at(i, j);
            auto x = C.solve(b);
            if (!x) throw error("submodule basis is not invariant");
            for (int i = 0; i < k; ++i) r.at(i, j) = (*x)[i];
        }
        S.rho.push_back(std::move(r));
    }
    return S;
}

Mat maschke_complement(const GroupModule& M, const Mat& C) {
    const FieldPtr& F = M.F;
    const int d = M.dim(), k = C.cols();
    // extend the columns of C to a basis P = [C | D]
    RowSpace rs(F, d);
    for (int j = 0; j < k; ++j) {
        std::vector<Gf> col(d, Gf::zero(F));
        for (int i = 0; i < d; ++i) col[i] = C.at(i, j);
        if (!rs.insert(col)) throw error("dependent columns in maschke_complement");
    }
    Mat P(F, d, d);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < d; ++i) P.at(i, j) = C.at(i, j);
    int have = k;
    for (int e = 0; e < d && have < d; ++e) {
        std::vector<Gf> col(d, Gf::zero(F));
        col[e] = Gf::one(F);
        if (rs.insert(col)) {
            P.at(e, have) = Gf::one(F);
            ++have;
        }
    }
    Mat Pinv = P.inverse();
    // pi0 projects onto span(C) along span(D)
    Mat D0(F, d, d);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < d; ++i) D0.at(i, j) = P.at(i, j);
    Mat pi0 = D0 * Pinv;
    // average over the group
    Gf invg = Gf::from_int(F, M.G->order()).inv();
    Mat e = Mat::zero(F, d, d);
    for (int g = 0; g < M.G->order(); ++g)
        e = e + M.rho[g] * pi0 * M.rho[M.G->inv(g)];
    e = e.scaled(invg);
    return e.kernel();
}

namespace {

// proper nonzero invariant subspace of M, or empty matrix if M irreducible
Mat find_proper_submodule(const GroupModule& M, Rng& rng) {
    const FieldPtr& F = M.F;
    const int d = M.dim();
    auto E = hom_space(M, M);
    if (E.size() <= 1) return Mat(F, d, 0);

    auto try_kernel_cuts = [&](const Mat& phi) -> Mat {
        auto cp = phi.charpoly();
        for (const Gf& a : roots_in_field(cp, F)) {
            Mat shifted = phi - Mat::identity(F, d).scaled(a);
            Mat K = shifted.kernel();
            if (K.cols() > 0 && K.cols() < d) return K;
        }
        return Mat(F, d, 0);
    };

    // center of End: elements commuting with every basis endomorphism; these
    // are semisimple with eigenvalues in the field whenever F splits FG
    {
        const int nv = d * d;
        std::vector<std::vector<Gf>> rows;
        for (const Mat& b : E) {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    std::vector<Gf> row(nv, Gf::zero(F));
                    for (int k = 0; k < d; ++k) {
                        row[i * d + k] += b.at(k, j);
                        row[k * d + j] -= b.at(i, k);
                    }
                    rows.push_back(std::move(row));
                }
        }
        // also force membership in End: express as combination of E-basis
        Mat memb(F, nv, static_cast<int>(E.size()));
        for (size_t c = 0; c < E.size(); ++c)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) memb.at(i * d + j, static_cast<int>(c)) = E[c].at(i, j);
        Mat sys(F, static_cast<int>(rows.size()), static_cast<int>(E.size()));
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < E.size(); ++c) {
                Gf acc = Gf::zero(F);
                for (int v = 0; v < nv; ++v) acc += rows[r][v] * memb.at(v, static_cast<int>(c));
                sys.at(static_cast<int>(r), static_cast<int>(c)) = acc;
            }
        Mat Z = sys.kernel();  // coefficients over the E-basis
        for (int zc = 0; zc < Z.cols(); ++zc) {
            Mat z = Mat::zero(F, d, d);
            for (size_t c = 0; c < E.size(); ++c) z = z + E[c].scaled(Z.at(static_cast<int>(c), zc));
            // skip scalars
            Gf top = z.at(0, 0);
            if (z == Mat::identity(F, d).scaled(top)) continue;
            Mat cut = try_kernel_cuts(z);
            if (cut.cols() > 0) return cut;
        }
    }

    // isotypic case: random endomorphisms until one has a rational eigenvalue
    for (int attempt = 0; attempt < 400; ++attempt) {
        Mat phi = Mat::zero(F, d, d);
        for (const Mat& b : E) phi = phi + b.scaled(Gf::from_index(F, rng.next(F->q())));
        Gf top = phi.at(0, 0);
        if (phi == Mat::identity(F, d).scaled(top)) continue;
        Mat cut = try_kernel_cuts(phi);
        if (cut.cols() > 0) return cut;
    }
    throw error("module splitter failed to find a submodule; is the field a splitting field?");
}

void split_rec(const GroupModule& M, const Mat& basis, Rng& rng, std::vector<Mat>& out) {
    GroupModule S = submodule_on_basis(M, basis);
    Mat cut = find_proper_submodule(S, rng);
    if (cut.cols() == 0) {
        out.push_back(basis);
        return;
    }
    Mat comp = maschke_complement(S, cut);
    // lift back to ambient coordinates
    split_rec(M, basis * cut, rng, out);
    split_rec(M, basis * comp, rng, out);
}

}  // namespace

std::vector<Mat> split_irreducible_bases(const GroupModule& M, Rng& rng) {
    if (M.G->order() % M.F->p() == 0) throw modular_group_order(M.F->p(), M.G->order());
    std::vector<Mat> out;
    split_rec(M, Mat::identity(M.F, M.dim()), rng, out);
    return out;
}

std::vector<Irrep> irreps(const GroupPtr& G, const FieldPtr& F) {
    if (G->order() % F->p() == 0) throw modular_group_order(F->p(), G->order());
    Rng rng(0x5eedf1e1dULL);
    GroupModule reg = regular_module(G, F);
    auto bases = split_irreducible_bases(reg, rng);
    std::vector<Irrep> list;
    for (const Mat& b : bases) {
        GroupModule S = submodule_on_basis(reg, b);
        // keep one representative per isomorphism class
        bool dup = false;
        for (const auto& known : list) {
            if (known.dim != S.dim()) continue;
            GroupModule K;
            K.G = G;
            K.F = F;
            K.rho = known.rho;
            if (!hom_space(S, K).empty()) {
                dup = true;
                break;
            }
        }
        if (dup) continue;
        Irrep v;
        v.dim = S.dim();
        v.rho = S.rho;
        for (const auto& cls : G->classes()) {
            Gf tr = Gf::zero(F);
            for (int i = 0; i < v.dim; ++i) tr += S.rho[cls.representative].at(i, i);
            v.character.push_back(tr);
        }
        list.push_back(std::move(v));
    }
    std::sort(list.begin(), list.end(), [](const Irrep& a, const Irrep& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        for (size_t i = 0; i < a.character.size(); ++i) {
            if (a.character[i] != b.character[i]) return a.character[i] < b.character[i];
        }
        return false;
    });
    int total = 0;
    for (auto& v : list) total += v.dim * v.dim;
    if (total != G->order()) throw error("irrep list incomplete: sum of squares mismatch");
    for (size_t i = 0; i < list.size(); ++i) list[i].label = static_cast<int>(i);
    return list;
}

std::vector<Gf> central_idempotent(const GroupPtr& G, const FieldPtr& F, const Irrep& V) {
    // e_V = (dim V / |G|) sum_g chi(g^{-1}) g
    Gf scale = Gf::from_int(F, V.dim) * Gf::from_int(F, G->order()).inv();
    std::vector<Gf> coeff(G->order(), Gf::zero(F));
    for (int g = 0; g < G->order(); ++g) {
        const Gf& chi = V.character[G->class_of(G->inv(g))];
        coeff[g] = scale * chi;
    }
    return coeff;
}

}  // namespace wha
