#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "pathalg.hpp"

namespace preproj::repmod {

using pathalg::Algebra;
using pathalg::AlgebraPtr;

struct Presentation;

/// Finite-dimensional right module: a space M_i = M e_i per vertex and, for
/// each arrow a, the map M_{t(a)} -> M_{s(a)}, m |-> m a.  Elements are
/// column vectors of length dim(), ordered vertex by vertex.
class ModuleRep {
public:
    ModuleRep() = default;
    /// Checks that every relation of the algebra acts as zero.
    ModuleRep(AlgebraPtr alg, std::vector<size_t> dims, std::vector<Matrix> action, bool check = true);
    static ModuleRep zero(AlgebraPtr alg);

    const Algebra& algebra() const { return *alg_; }
    const AlgebraPtr& algebra_ptr() const { return alg_; }
    int n() const { return static_cast<int>(dims_.size()); }
    size_t dim() const { return total_; }
    size_t dim(int i) const { return dims_[i]; }
    const std::vector<size_t>& dims() const { return dims_; }
    size_t offset(int i) const { return offsets_[i]; }
    bool is_zero() const { return total_ == 0; }

    /// dims[s(a)] x dims[t(a)] matrix of the arrow.
    const Matrix& action(int arrow) const { return act_[arrow]; }
    /// Local matrix of a basis element b of the algebra (dims[s(b)] x dims[t(b)]).
    const Matrix& basis_action(size_t b) const;
    /// v * x for a global vector v and algebra element x.
    Vector act(const Vector& v, const Vector& x) const;
    Vector act_basis(const Vector& v, size_t b) const;
    /// Block of v at vertex i, as a local vector.
    Vector local(const Vector& v, int i) const;
    Vector embed(const Vector& local, int i) const;

    void validate() const;
    const Presentation& presentation() const;
    std::string dims_string() const;

private:
    struct Cache;

    AlgebraPtr alg_;
    std::vector<size_t> dims_, offsets_;
    size_t total_ = 0;
    std::vector<Matrix> act_;
    std::shared_ptr<Cache> cache_;
};

/// Module homomorphisms are dim(N) x dim(M) matrices respecting vertices.
bool is_module_map(const Matrix& f, const ModuleRep& m, const ModuleRep& n);

struct DirectSum {
    ModuleRep module;
    std::vector<std::vector<size_t>> start;  // start[s][j]: global index of summand s, vertex j

    size_t index(size_t summand, int vertex, size_t local) const { return start[summand][vertex] + local; }
    Matrix injection(size_t summand, const ModuleRep& m) const;
    Matrix projection(size_t summand, const ModuleRep& m) const;
};

DirectSum direct_sum(AlgebraPtr alg, const std::vector<ModuleRep>& summands);

struct Sub {
    ModuleRep module;
    Matrix inclusion;  // dim(M) x dim(U)
};

struct Quot {
    ModuleRep module;
    Matrix projection;  // dim(Q) x dim(M)
    Matrix lift;        // dim(M) x dim(Q), a section of the projection as spaces
};

/// Smallest submodule containing the vectors.
Subspace generated_submodule(const ModuleRep& m, const std::vector<Vector>& gens);
/// The subspace must be a submodule; its vertex components are used.
Sub submodule(const ModuleRep& m, const Subspace& u);
Quot quotient(const ModuleRep& m, const Subspace& u);
Subspace radical(const ModuleRep& m);
Subspace socle(const ModuleRep& m);
Subspace image(const Matrix& f, const ModuleRep& target);
Subspace kernel_space(const Matrix& f, const ModuleRep& source);

// Standard modules ----------------------------------------------------------

ModuleRep projective(AlgebraPtr alg, int i);
ModuleRep regular(AlgebraPtr alg);
/// ^dS_i: uniserial with d copies of S_i, eps_i a single Jordan block.
ModuleRep uniserial(AlgebraPtr alg, int i, size_t d);
ModuleRep simple(AlgebraPtr alg, int i);
ModuleRep generalized_simple(AlgebraPtr alg, int i);
/// D(Pi e_i) with its right module structure.
ModuleRep dual_projective(AlgebraPtr alg, int i);

// Homological toolkit -------------------------------------------------------

/// P0 = sum of e_{v_k} Pi with a projective cover P0 -> M and the top
/// generators of its kernel (the relations).
struct Presentation {
    std::vector<int> gen_vertex;
    std::vector<Vector> generators;  // global vectors of M
    DirectSum p0;
    std::vector<size_t> p0_summand, p0_basis;  // P0 coordinate -> (summand, algebra basis element)
    Matrix cover;  // dim(M) x dim(P0)
    Sub kernel;    // kernel of the cover inside P0
    std::vector<int> rel_vertex;
    std::vector<Vector> relations;  // global vectors of P0
    std::vector<size_t> basis_columns;
    Matrix basis_inverse;

    /// Component of a P0 vector in summand k as an element of the algebra.
    Vector component(const Vector& p0_vec, size_t k) const;
};

struct MinimalPresentation {
    std::vector<int> p1_vertices, p0_vertices;
    Matrix map;  // dim(P0) x dim(P1)
};

MinimalPresentation minimal_projective_presentation(const ModuleRep& m);

/// Basis of Hom(M, N) as matrices.
std::vector<Matrix> hom_basis(const ModuleRep& m, const ModuleRep& n);
size_t hom_dim(const ModuleRep& m, const ModuleRep& n);
/// Hom dimension from the intertwining equations for every arrow.
size_t hom_dim_direct(const ModuleRep& m, const ModuleRep& n);

struct StructureSeries {
    std::vector<std::vector<size_t>> radical_layers;  // per layer, multiplicity of each S_i
    std::vector<std::vector<size_t>> socle_layers;    // bottom layer first
    std::vector<size_t> top, socle;
};

StructureSeries structure_series(const ModuleRep& m);
std::vector<size_t> layer_totals(const std::vector<std::vector<size_t>>& layers);

ModuleRep tau(const ModuleRep& m);
/// nu(M) = D Hom(M, Pi).
ModuleRep nakayama_functor(const ModuleRep& m);
/// sigma(i) = vertex of soc(e_i Pi).
std::vector<int> nakayama_permutation(const AlgebraPtr& alg);

size_t ext1_dim(const ModuleRep& m, const ModuleRep& n);
std::optional<std::vector<size_t>> locally_free_rank(const ModuleRep& m);
bool is_tau_rigid(const ModuleRep& m);
Subspace trace(const ModuleRep& t, const ModuleRep& x);
bool in_fac(const ModuleRep& t, const ModuleRep& x);
bool is_isomorphic(const ModuleRep& m, const ModuleRep& n, uint64_t seed = 0);
bool is_indecomposable(const ModuleRep& m);

}  // namespace preproj::repmod
