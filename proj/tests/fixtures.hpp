#pragma once

#include <memory>
#include <vector>

#include "cartan.hpp"
#include "pathalg.hpp"

namespace fixtures {

using preproj::cartan::CartanData;
using preproj::cartan::IntMatrix;

inline const IntMatrix A2{{2, -1}, {-1, 2}};
inline const IntMatrix B2{{2, -1}, {-2, 2}};
inline const IntMatrix G2{{2, -1}, {-3, 2}};
inline const IntMatrix A3{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
inline const IntMatrix B3{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
inline const IntMatrix AFFINE_A1{{2, -2}, {-2, 2}};

inline CartanData make(const IntMatrix& c, std::vector<int64_t> d = {}) {
    if (d.empty()) return CartanData::make(c);
    return CartanData::make(c, &d);
}

inline CartanData eg1() { return make(A2, {2, 2}); }
inline CartanData eg2() { return make(B2, {2, 1}); }

inline preproj::pathalg::AlgebraPtr algebra(const CartanData& d,
                                             preproj::Field f = preproj::Field::rationals()) {
    return preproj::pathalg::Algebra::build(d, f);
}

}  // namespace fixtures
