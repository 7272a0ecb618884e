#include "coxeter.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "errors.hpp"

namespace preproj::coxeter {

IntSquare IntSquare::identity(int n) {
    IntSquare m{n, std::vector<int64_t>(static_cast<size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntSquare operator*(const IntSquare& a, const IntSquare& b) {
    const int n = a.n;
    IntSquare m{n, std::vector<int64_t>(static_cast<size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int64_t x = a(i, k);
            if (x == 0) continue;
            for (int j = 0; j < n; ++j) m(i, j) += x * b(k, j);
        }
    return m;
}

size_t IntSquareHash::operator()(const IntSquare& m) const {
    size_t h = 1469598103934665603ull;
    for (int64_t v : m.data) h = (h ^ static_cast<size_t>(v + 0x9e3779b9)) * 1099511628211ull;
    return h;
}

IntSquare simple_reflection_matrix(const cartan::CartanMatrix& cm, int i) {
    const int n = cm.n();
    IntSquare m = IntSquare::identity(n);
    for (int j = 0; j < n; ++j) m(j, i) -= cm(j, i);
    return m;
}

int coxeter_order(const cartan::CartanMatrix& cm, int i, int j) {
    if (i == j) return 1;
    switch (cm(i, j) * cm(j, i)) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: return 0;
    }
}

WeylGroup WeylGroup::enumerate(const cartan::CartanMatrix& cm, size_t cap, int max_length) {
    if (cap == 0) fail(ErrorCode::InvalidArgument, "Weyl enumeration cap must be positive");
    WeylGroup w;
    const int n = cm.n();
    w.rank_ = n;
    for (int i = 0; i < n; ++i) w.generators_.push_back(simple_reflection_matrix(cm, i));
    w.elements_.push_back({IntSquare::identity(n), 0, {}});
    w.index_.emplace(w.elements_[0].matrix, 0);
    w.complete_ = true;

    size_t level_begin = 0;
    bool truncated = false;
    while (level_begin < w.elements_.size()) {
        const size_t level_end = w.elements_.size();
        const int len = w.elements_[level_begin].length;
        if (len >= max_length) {
            truncated = true;
            break;
        }
        // generator-major order so the first discovery of an element uses the
        // smallest possible first letter
        for (int i = 0; i < n && !truncated; ++i)
            for (size_t u = level_begin; u < level_end; ++u) {
                IntSquare m = w.generators_[i] * w.elements_[u].matrix;
                if (w.index_.count(m)) continue;
                if (w.elements_.size() >= cap) {
                    truncated = true;
                    break;
                }
                Word word{i};
                word.insert(word.end(), w.elements_[u].word.begin(), w.elements_[u].word.end());
                w.index_.emplace(m, w.elements_.size());
                w.elements_.push_back({std::move(m), len + 1, std::move(word)});
            }
        if (truncated) break;
        level_begin = level_end;
    }
    // Lex-least words: among candidates i.word(s_i u) with s_i u one shorter,
    // the smallest i wins, then the canonical word of s_i u (processed in
    // length order, so already canonical).
    w.left_.assign(w.elements_.size() * n, npos);
    for (size_t u = 0; u < w.elements_.size(); ++u)
        for (int i = 0; i < n; ++i) {
            auto it = w.index_.find(w.generators_[i] * w.elements_[u].matrix);
            if (it != w.index_.end()) w.left_[u * n + i] = it->second;
        }
    for (size_t u = 1; u < w.elements_.size(); ++u) {
        for (int i = 0; i < n; ++i) {
            size_t v = w.left_[u * n + i];
            if (v != npos && w.elements_[v].length + 1 == w.elements_[u].length) {
                Word word{i};
                word.insert(word.end(), w.elements_[v].word.begin(), w.elements_[v].word.end());
                w.elements_[u].word = std::move(word);
                break;
            }
        }
    }
    if (truncated) {
        w.complete_ = false;
    } else {
        w.complete_ = std::find(w.left_.begin(), w.left_.end(), npos) == w.left_.end();
    }
    return w;
}

size_t WeylGroup::find(const IntSquare& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? npos : it->second;
}

size_t WeylGroup::right_mul(size_t w, int i) const {
    if (w == npos) return npos;
    return find(elements_[w].matrix * generators_[i]);
}

size_t WeylGroup::from_word(const Word& word) const {
    IntSquare m = IntSquare::identity(rank_);
    for (int i : word) m = m * generators_.at(i);
    return find(m);
}

size_t WeylGroup::multiply(size_t u, size_t v) const { return find(elements_[u].matrix * elements_[v].matrix); }

size_t WeylGroup::longest() const {
    size_t best = 0;
    for (size_t u = 0; u < elements_.size(); ++u)
        if (elements_[u].length > elements_[best].length) best = u;
    return best;
}

int WeylGroup::max_length() const { return elements_.empty() ? 0 : elements_.back().length; }

std::set<Word> WeylGroup::all_reduced_words(size_t w) const {
    std::map<size_t, std::set<Word>> memo;
    std::function<const std::set<Word>&(size_t)> rec = [&](size_t u) -> const std::set<Word>& {
        auto it = memo.find(u);
        if (it != memo.end()) return it->second;
        std::set<Word> out;
        if (elements_[u].length == 0) {
            out.insert(Word{});
        } else {
            for (int i = 0; i < rank_; ++i) {
                size_t v = left_mul(i, u);
                if (v == npos || elements_[v].length >= elements_[u].length) continue;
                for (const Word& tail : rec(v)) {
                    Word word{i};
                    word.insert(word.end(), tail.begin(), tail.end());
                    out.insert(std::move(word));
                }
            }
        }
        return memo.emplace(u, std::move(out)).first->second;
    };
    return rec(w);
}

size_t WeylGroup::demazure(size_t u, size_t v) const {
    size_t x = u;
    for (int i : elements_[v].word) {
        size_t y = right_mul(x, i);
        if (y == npos) fail(ErrorCode::CapExceeded, "Demazure product leaves the enumerated ball");
        if (elements_[y].length > elements_[x].length) x = y;
    }
    return x;
}

bool WeylGroup::is_reduced(const Word& word) const {
    size_t w = from_word(word);
    return w != npos && elements_[w].length == static_cast<int>(word.size());
}

std::string word_string(const Word& w) {
    std::string s;
    bool wide = std::any_of(w.begin(), w.end(), [](int i) { return i >= 9; });
    for (size_t k = 0; k < w.size(); ++k) {
        if (wide && k) s += ".";
        s += std::to_string(w[k] + 1);
    }
    return s;
}

}  // namespace preproj::coxeter
