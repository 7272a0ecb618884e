#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <unordered_map>
#include <vector>

#include "cartan.hpp"

namespace preproj::coxeter {

/// Square integer matrix stored row-major.
struct IntSquare {
    int n = 0;
    std::vector<int64_t> data;

    static IntSquare identity(int n);
    int64_t operator()(int r, int c) const { return data[r * n + c]; }
    int64_t& operator()(int r, int c) { return data[r * n + c]; }
    friend IntSquare operator*(const IntSquare& a, const IntSquare& b);
    friend bool operator==(const IntSquare& a, const IntSquare& b) { return a.data == b.data; }
};

struct IntSquareHash {
    size_t operator()(const IntSquare& m) const;
};

/// Matrix of sigma_i^* on V^* in the basis alpha_1^*, ..., alpha_n^*.
IntSquare simple_reflection_matrix(const cartan::CartanMatrix& cm, int i);

/// Order m_ij of s_i s_j; 0 encodes infinity.
int coxeter_order(const cartan::CartanMatrix& cm, int i, int j);

using Word = std::vector<int>;

struct WeylElement {
    IntSquare matrix;
    int length = 0;
    Word word;  // lexicographically least reduced word (0-based letters)
};

/// Ball (or all) of W(C) enumerated breadth-first by left multiplication.
class WeylGroup {
public:
    static constexpr size_t npos = std::numeric_limits<size_t>::max();
    static constexpr size_t default_cap = 1'000'000;

    /// Enumerates until the group closes, `cap` elements are reached, or the
    /// length exceeds `max_length`.
    static WeylGroup enumerate(const cartan::CartanMatrix& cm, size_t cap = default_cap,
                               int max_length = std::numeric_limits<int>::max());

    int rank() const { return rank_; }
    size_t size() const { return elements_.size(); }
    /// True when the enumeration closed under all generators.
    bool complete() const { return complete_; }
    const WeylElement& operator[](size_t idx) const { return elements_[idx]; }
    const std::vector<WeylElement>& elements() const { return elements_; }

    size_t identity() const { return 0; }
    size_t find(const IntSquare& m) const;
    size_t left_mul(int i, size_t w) const { return left_[w * rank_ + i]; }
    size_t right_mul(size_t w, int i) const;
    size_t from_word(const Word& word) const;
    size_t multiply(size_t u, size_t v) const;
    size_t longest() const;
    int max_length() const;

    std::set<Word> all_reduced_words(size_t w) const;
    /// 0-Hecke product: u * s_i = u s_i if that is longer, u otherwise.
    size_t demazure(size_t u, size_t v) const;
    /// Whether the word is reduced, i.e. its length equals the element length.
    bool is_reduced(const Word& word) const;

private:
    int rank_ = 0;
    bool complete_ = false;
    std::vector<IntSquare> generators_;
    std::vector<WeylElement> elements_;
    std::vector<size_t> left_;
    std::unordered_map<IntSquare, size_t, IntSquareHash> index_;
};

std::string word_string(const Word& w);

}  // namespace preproj::coxeter
