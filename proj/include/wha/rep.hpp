#pragma once

// Matrix representations of a finite group over GF(p^m) and the module
// splitter that produces a complete irreducible list when p does not divide
// |G|. Splitting works on the regular module: compute endomorphism algebras
// by exact solves, cut along central elements, then separate isotypic
// multiplicities with seeded random endomorphisms.

#include <vector>

#include "wha/group.hpp"
#include "wha/matrix.hpp"
#include "wha/util.hpp"

namespace wha {

struct modular_group_order : error {
    modular_group_order(long p, int order)
        : error("p = " + std::to_string(p) + " divides |G| = " + std::to_string(order)) {}
};

// module over FG: one matrix per group element
struct GroupModule {
    GroupPtr G;
    FieldPtr F;
    std::vector<Mat> rho;  // indexed by group element
    int dim() const { return rho.empty() ? 0 : rho[0].rows(); }
};

struct Irrep {
    int label = 0;  // position in the canonical ordering, 0-based
    int dim = 0;
    std::vector<Mat> rho;
    std::vector<Gf> character;  // trace per conjugacy class, class order
};

GroupModule regular_module(const GroupPtr& G, const FieldPtr& F);
bool is_group_module(const GroupModule& M);  // multiplicativity + identity

// basis of Hom_FG(A, B) as matrices X (dim B x dim A) with X rho_A = rho_B X
std::vector<Mat> hom_space(const GroupModule& A, const GroupModule& B);
int end_dim(const GroupModule& M);

// restriction of M to an invariant subspace given by independent columns C
GroupModule submodule_on_basis(const GroupModule& M, const Mat& C);
// invariant complement of the column span of C (requires p coprime to |G|)
Mat maschke_complement(const GroupModule& M, const Mat& C);

// irreducible constituents of M, as column bases (requires p coprime to |G|)
std::vector<Mat> split_irreducible_bases(const GroupModule& M, Rng& rng);

// complete canonical list of irreps, sorted by (dim, character); requires
// p coprime to |G| and F a splitting field (exp(G) | q - 1)
std::vector<Irrep> irreps(const GroupPtr& G, const FieldPtr& F);

// central primitive idempotent attached to an irrep, as a group-algebra
// coefficient vector indexed by group elements
std::vector<Gf> central_idempotent(const GroupPtr& G, const FieldPtr& F, const Irrep& V);

}  // namespace wha
