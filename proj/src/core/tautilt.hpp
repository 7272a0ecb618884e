#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "module.hpp"

namespace preproj::tautilt {

using pathalg::AlgebraPtr;
using repmod::ModuleRep;

/// Two-sided ideal of Pi as a subspace of K^{dim Pi}.  Every generator used
/// here lies in a single block e_t Pi e_s, so the echelon rows do too.
struct Ideal {
    Subspace space;

    size_t dim() const { return space.dim(); }
    friend bool operator==(const Ideal& a, const Ideal& b) { return a.space == b.space; }
};

/// Pi (1 - sum_{j in S} e_j) Pi.
Ideal vertex_ideal(const pathalg::Algebra& a, const std::vector<int>& s);
Ideal ideal_product(const pathalg::Algebra& a, const Ideal& i, const Ideal& j);
Ideal whole(const pathalg::Algebra& a);
bool is_two_sided(const pathalg::Algebra& a, const Ideal& i);
/// e_i I as a submodule of e_i Pi.
ModuleRep ideal_block(const AlgebraPtr& a, const Ideal& ideal, int i);
/// Product I_{w_1} ... I_{w_k} of vertex ideals along an arbitrary word.
Ideal ideal_of_letters(const pathalg::Algebra& a, const coxeter::Word& w);

/// Cache of I_w for the elements of an enumerated Weyl group.
class IdealSemigroup {
public:
    IdealSemigroup(AlgebraPtr alg, const coxeter::WeylGroup& w);

    const pathalg::Algebra& algebra() const { return *alg_; }
    const AlgebraPtr& algebra_ptr() const { return alg_; }
    const coxeter::WeylGroup& weyl() const { return w_; }
    const Ideal& generator(int i) const { return gens_[i]; }
    /// I_w along the canonical word, memoized per element.
    const Ideal& of(size_t w);
    /// I_w along the given word; products of word suffixes are memoized.
    const Ideal& of_word(const coxeter::Word& word);

private:
    AlgebraPtr alg_;
    const coxeter::WeylGroup& w_;
    std::vector<Ideal> gens_;
    std::vector<std::unique_ptr<Ideal>> by_element_;
    std::map<coxeter::Word, Ideal> by_word_;
};

struct Summand {
    int vertex = -1;  // vertex i of a block e_i I, or -1 for other modules
    std::string name;
    ModuleRep module;
};

/// Support tau-tilting pair (M, P) with M = sum of summands and P = sum of
/// e_v Pi for v in projective.
struct SttPair {
    std::optional<size_t> element;  // Weyl element w when built from I_w
    std::string word;               // canonical word of w
    std::vector<Summand> summands;
    std::vector<int> projective;  // sorted vertices

    std::string label() const;  // "+"-joined summand names, "0" when empty
    ModuleRep module(const AlgebraPtr& a) const;
};

/// Summand names: e{j}P for e_j Pi, E{k} for generalized simples, e{k}I{k}
/// for e_k I_k, otherwise e{j}I{word}.
std::string summand_name(const AlgebraPtr& a, const ModuleRep& m, int vertex, const std::string& word);

SttPair stt_pair(IdealSemigroup& sg, size_t w);

struct SttCheck {
    bool ok = true;
    std::string reason;
};

SttCheck verify_stt(const AlgebraPtr& a, const SttPair& pair);

/// Left mutation at summand k (AIR); throws NotMutable if it lies in Fac of the rest.
SttPair left_mutation(const AlgebraPtr& a, const SttPair& pair, size_t k, uint64_t seed = 0);

/// Pieces of a module split by Fitting decompositions of endomorphisms.
std::vector<ModuleRep> split_module(const ModuleRep& m);

/// Two pairs agree when the summands match up to isomorphism and the projective parts coincide.
bool same_pair(const SttPair& a, const SttPair& b);

struct MutationEdge {
    size_t from, to;
    int label;  // vertex i, 0-based
};

struct MutationGraph {
    std::vector<SttPair> nodes;  // indexed by Weyl element
    std::vector<MutationEdge> edges;
};

MutationGraph mutation_graph(IdealSemigroup& sg);

struct EdgeCheck {
    size_t edge;
    bool ok;
    std::string reason;
};

/// Recomputes the chosen edges by left_mutation and compares with the graph.
std::vector<EdgeCheck> check_edges_by_mutation(const AlgebraPtr& a, const MutationGraph& g,
                                               const std::vector<size_t>& edges);

struct ClassificationReport {
    bool well_defined = true;
    bool injective = true;
    bool stt_ok = true;
    bool tau_rigid_ok = true;
    bool demazure_ok = true;
    size_t weyl_order = 0;
    size_t stt_count = 0;
    size_t demazure_pairs = 0;
    std::vector<std::string> tau_rigid_names;  // deduplicated nonzero blocks
    std::vector<std::string> failures;

    bool ok() const { return well_defined && injective && stt_ok && tau_rigid_ok && demazure_ok; }
};

/// Checks (i)-(v): words give equal ideals, ideals distinct, every pair is
/// support tau-tilting, blocks are tau-rigid indecomposables, Demazure
/// products match ideal products (exhaustive up to `demazure_limit` pairs,
/// otherwise that many seeded random pairs).
ClassificationReport classification_report(IdealSemigroup& sg, size_t demazure_limit = 400, uint64_t seed = 0);

}  // namespace preproj::tautilt
