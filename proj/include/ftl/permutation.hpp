#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ftl {

/// Permutation of {1..n} in image notation; composition is right to left,
/// (w * v)(k) = w(v(k)), so right multiplication by s_i swaps positions i and i+1.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size() + 1, false);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("not a permutation");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        for (int k = 0; k < n; ++k) img[k] = k + 1;
        return Permutation(std::move(img), Unchecked{});
    }
    /// The simple transposition s_i of S_n.
    static Permutation simple(int n, int i) {
        Permutation p = identity(n);
        p.check_simple(i);
        std::swap(p.img_[i - 1], p.img_[i]);
        return p;
    }
    /// s_{i_1} s_{i_2} ... s_{i_k}.
    static Permutation from_word(int n, const std::vector<int>& word) {
        Permutation p = identity(n);
        for (int i : word) p = p.times_simple(i);
        return p;
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_[k - 1]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const {
        std::vector<int> inv(img_.size());
        for (std::size_t k = 0; k < img_.size(); ++k) inv[img_[k] - 1] = static_cast<int>(k) + 1;
        return Permutation(std::move(inv), Unchecked{});
    }
    friend Permutation operator*(const Permutation& w, const Permutation& v) {
        if (w.size() != v.size()) throw std::invalid_argument("permutations of different degree");
        std::vector<int> img(v.img_.size());
        for (std::size_t k = 0; k < img.size(); ++k) img[k] = w.img_[v.img_[k] - 1];
        return Permutation(std::move(img), Unchecked{});
    }
    /// w * s_i.
    Permutation times_simple(int i) const {
        check_simple(i);
        Permutation p = *this;
        std::swap(p.img_[i - 1], p.img_[i]);
        return p;
    }

    /// Coxeter length (number of inversions).
    int length() const {
        int inv = 0;
        for (std::size_t a = 0; a < img_.size(); ++a)
            for (std::size_t b = a + 1; b < img_.size(); ++b) inv += img_[a] > img_[b];
        return inv;
    }

    /// l(w s_i) > l(w), i.e. w(i) < w(i+1).
    bool right_length_increases(int i) const {
        check_simple(i);
        return img_[i - 1] < img_[i];
    }

    /// Reduced word, peeling the right descent of smallest index each step.
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        Permutation w = *this;
        for (;;) {
            int i = 1;
            while (i < w.size() && w.img_[i - 1] < w.img_[i]) ++i;
            if (i >= w.size()) break;
            word.push_back(i);
            std::swap(w.img_[i - 1], w.img_[i]);
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    /// Restriction of a permutation fixing its last point to S_{n-1}.
    Permutation restricted() const {
        if (img_.empty() || img_.back() != size()) throw std::invalid_argument("permutation does not fix n");
        return Permutation(std::vector<int>(img_.begin(), img_.end() - 1), Unchecked{});
    }
    /// Embedding into S_m (m >= n) fixing the new points.
    Permutation extended(int m) const {
        std::vector<int> img = img_;
        for (int k = size() + 1; k <= m; ++k) img.push_back(k);
        return Permutation(std::move(img), Unchecked{});
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    /// "(2,3,1)".
    friend std::string to_string(const Permutation& p) {
        std::string s = "(";
        for (std::size_t k = 0; k < p.img_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(p.img_[k]);
        }
        return s + ")";
    }

private:
    struct Unchecked {};
    Permutation(std::vector<int> images, Unchecked) : img_(std::move(images)) {}

    void check_simple(int i) const {
        if (i < 1 || i >= size()) throw std::out_of_range("simple transposition index out of range");
    }

    std::vector<int> img_;
};

/// Last-strand factorization w = w' * (s_{n-1} s_{n-2} ... s_j) of w in S_n,
/// with w' fixing n and lengths adding. `j` is empty when w already fixes n.
struct CosetDecomposition {
    Permutation head;      // w' restricted to S_{n-1}
    std::optional<int> j;  // w^{-1}(n)
};

inline CosetDecomposition coset_decompose(const Permutation& w) {
    const int n = w.size();
    if (n < 1) throw std::invalid_argument("coset_decompose on empty permutation");
    if (w(n) == n) return {w.restricted(), std::nullopt};
    const int j = w.inverse()(n);
    Permutation head = w;
    for (int k = j; k < n; ++k) head = head.times_simple(k);
    return {head.restricted(), j};
}

/// All permutations of S_n in lexicographic image order.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = k + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace ftl
