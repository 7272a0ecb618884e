#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace preproj::cartan {

using IntMatrix = std::vector<std::vector<int64_t>>;

/// Symmetrizable generalized Cartan matrix.  Vertices are 0-based internally
/// and printed 1-based.
class CartanMatrix {
public:
    /// Checks (C1)-(C3) and existence of a symmetrizer; throws preproj::Error.
    static CartanMatrix validate(const IntMatrix& entries);

    int n() const { return static_cast<int>(entries_.size()); }
    int64_t operator()(int i, int j) const { return entries_[i][j]; }
    const IntMatrix& entries() const { return entries_; }

    /// Connected components of the underlying graph, each sorted.
    const std::vector<std::vector<int>>& components() const { return components_; }
    bool adjacent(int i, int j) const { return i != j && entries_[i][j] != 0; }

private:
    IntMatrix entries_;
    std::vector<std::vector<int>> components_;
};

struct Symmetrizer {
    std::vector<int64_t> c;
    bool minimal = false;

    int64_t operator[](int i) const { return c[i]; }
};

Symmetrizer minimal_symmetrizer(const CartanMatrix& cm);
/// Verifies a user-supplied symmetrizer (positivity and DC symmetric).
Symmetrizer given_symmetrizer(const CartanMatrix& cm, const std::vector<int64_t>& c);

/// Ordered pairs (i, j), 0-based; (i, j) in the orientation means arrows j -> i
/// in the unloop quiver.
struct Orientation {
    std::set<std::pair<int, int>> pairs;

    bool contains(int i, int j) const { return pairs.count({i, j}) > 0; }
};

Orientation default_orientation(const CartanMatrix& cm);
Orientation opposite(const Orientation& o);
/// Throws InvalidOrientation unless (A1) and (A2) hold.
void validate_orientation(const CartanMatrix& cm, const Orientation& o);
/// +1 for (i, j) in the orientation, -1 for its opposite.
int sgn(const Orientation& o, int i, int j);

int64_t g_local(const CartanMatrix& cm, int i, int j);
int64_t f_local(const CartanMatrix& cm, int i, int j);

struct Arrow {
    int source = 0;
    int target = 0;
    bool loop = false;
    // for a^{(g)}_{ij}: i = target, j = source; for eps_i both equal i
    int i = 0;
    int j = 0;
    int g = 0;
    std::string name;
};

/// Doubled quiver with loops: arrows are ordered loops first, then families
/// a^{(g)}_{ij} by (min(i,j), max(i,j), direction, g).
struct DoubledQuiver {
    int n = 0;
    std::vector<Arrow> arrows;
    IntMatrix g;  // g_ij (0 off the edges)
    IntMatrix f;  // f_ij (0 off the edges)

    int loop(int i) const { return i; }
    /// Index of a^{(g)}_{ij} with g 1-based.
    int arrow_index(int i, int j, int g) const;
    int arrow_count() const { return static_cast<int>(arrows.size()); }
};

DoubledQuiver double_quiver(const CartanMatrix& cm, const Symmetrizer& d);

/// Doubled Gram matrix of q_C: diagonal 2c_i, off-diagonal -c_i|c_ij|.
IntMatrix gram_matrix(const CartanMatrix& cm, const Symmetrizer& d);
bool is_dynkin(const CartanMatrix& cm, const Symmetrizer& d);
bool component_is_dynkin(const CartanMatrix& cm, const Symmetrizer& d, const std::vector<int>& comp);
bool has_no_dynkin_component(const CartanMatrix& cm, const Symmetrizer& d);

/// Validated Cartan datum (C, D, Omega) together with its doubled quiver.
struct CartanData {
    CartanMatrix cartan;
    Symmetrizer symmetrizer;
    Orientation orientation;
    DoubledQuiver quiver;

    int n() const { return cartan.n(); }
    int64_t c(int i) const { return symmetrizer.c[i]; }

    static CartanData make(const IntMatrix& entries, const std::vector<int64_t>* symmetrizer = nullptr,
                           const Orientation* orientation = nullptr);
};

}  // namespace preproj::cartan
