#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartan.hpp"
#include "matrix.hpp"

namespace preproj::pathalg {

/// Nonempty path as a sequence of arrow indices written left to right.  The
/// product x*y is nonzero only when source(x) = target(y).
using Path = std::vector<int>;

/// Length first, then lexicographic in the fixed arrow order.
struct PathLess {
    bool operator()(const Path& a, const Path& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Linear combination of nonempty paths.  The leading term is the last entry.
using Poly = std::map<Path, Scalar, PathLess>;

void add_term(Poly& p, const Path& m, const Scalar& c);
Path concat(const Path& a, const Path& b);
Path concat(const Path& a, const Path& b, const Path& c);

enum class RelationKind { Nilpotency, Commutativity, Mesh };

struct Relation {
    RelationKind kind;
    int vertex = 0;  // vertex of the loop or mesh; target vertex for commutativity
    Poly poly;
};

/// Generators (P1)-(P3) of the ideal: n nilpotency relations, one
/// commutativity relation per arrow a^{(g)}_{ij}, one mesh relation per vertex.
std::vector<Relation> preprojective_relations(const cartan::CartanData& data, const Field& field);

std::string path_string(const cartan::DoubledQuiver& q, const Path& p);
std::string poly_string(const cartan::DoubledQuiver& q, const Poly& p);

struct GroebnerCaps {
    int max_degree = 64;
    size_t max_basis = 20000;
};

/// Reduced two-sided Groebner basis in the path algebra of the doubled quiver.
class GroebnerBasis {
public:
    static GroebnerBasis complete(const cartan::DoubledQuiver& q, const std::vector<Poly>& generators,
                                  const GroebnerCaps& caps);

    const std::vector<Poly>& elements() const { return elements_; }
    Poly reduce(Poly p) const;
    /// Whether some leading monomial is a suffix of p.
    bool tip_is_suffix(const Path& p) const;

private:
    std::optional<std::pair<size_t, size_t>> find_tip(const Path& m) const;

    std::vector<Poly> elements_;
    std::vector<Path> tips_;
    std::vector<std::vector<size_t>> by_last_;  // tips grouped by last arrow
};

struct BasisPath {
    Path path;  // empty for the idempotent e_vertex
    int source = 0;
    int target = 0;
};

using SparseVec = std::vector<std::pair<size_t, Scalar>>;

/// Finite-dimensional quotient of the path algebra on its normal monomials.
class Algebra {
public:
    static std::shared_ptr<const Algebra> build(const cartan::CartanData& data, const Field& field = Field::rationals(),
                                                const GroebnerCaps& caps = {});

    const cartan::CartanData& data() const { return data_; }
    const cartan::DoubledQuiver& quiver() const { return data_.quiver; }
    int n() const { return data_.n(); }
    const Field& field() const { return field_; }

    size_t dim() const { return basis_.size(); }
    const std::vector<BasisPath>& basis() const { return basis_; }
    int source(size_t b) const { return basis_[b].source; }
    int target(size_t b) const { return basis_[b].target; }
    /// Basis indices of e_t Pi e_s in increasing order.
    const std::vector<size_t>& block(int t, int s) const { return blocks_[t * n() + s]; }
    size_t idempotent(int i) const { return idempotents_[i]; }
    std::optional<size_t> find(const Path& p) const;
    std::string basis_name(size_t b) const;

    /// right_arrow(a)[b] = b*a, left_arrow(a)[b] = a*b, as sparse vectors.
    const std::vector<SparseVec>& right_arrow(int a) const { return right_[a]; }
    const std::vector<SparseVec>& left_arrow(int a) const { return left_[a]; }
    const SparseVec& product(size_t b1, size_t b2) const { return table_[b1 * dim() + b2]; }

    Vector zero() const { return Vector(dim(), field_.zero()); }
    Vector unit(size_t b) const;
    Vector one() const;
    Vector multiply(const Vector& x, const Vector& y) const;
    /// Image of a path; empty paths are not allowed here (use unit()).
    Vector path_vector(const Path& p) const;
    Vector to_vector(const Poly& p) const;
    Poly normal_form(Poly p) const { return groebner_.reduce(std::move(p)); }

    const std::vector<Relation>& relations() const { return relations_; }
    const GroebnerBasis& groebner() const { return groebner_; }

private:
    cartan::CartanData data_;
    Field field_;
    std::vector<Relation> relations_;
    GroebnerBasis groebner_;
    std::vector<BasisPath> basis_;
    std::map<Path, size_t> index_;
    std::vector<size_t> idempotents_;
    std::vector<std::vector<size_t>> blocks_;
    std::vector<std::vector<SparseVec>> right_, left_;
    std::vector<SparseVec> table_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AlgebraReport {
    bool ok = true;
    std::string failure;
    size_t dim = 0;
    std::vector<size_t> projective_dims;             // dim e_i Pi
    std::vector<std::vector<size_t>> radical_layers;  // of e_i Pi
    size_t associativity_triples = 0;
};

/// Relation, associativity and identity checks plus dimension data.
AlgebraReport verify_algebra(const Algebra& a, size_t exhaustive_limit = 64, uint64_t seed = 0);

/// Dimensions of the radical layers of e_i Pi.
std::vector<size_t> projective_radical_layers(const Algebra& a, int i);

}  // namespace preproj::pathalg
