#pragma once

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftl/hecke.hpp"
#include "ftl/yokonuma.hpp"

namespace ftl {

struct BraidLetter {
    int index = 1;     // sigma_index
    int exponent = 1;  // nonzero
    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// t_1^{a_1} ... t_n^{a_n} followed by braid letters.
struct FramedBraidWord {
    int n = 1;
    std::vector<long long> framings = std::vector<long long>(1, 0);
    std::vector<BraidLetter> letters;

    explicit FramedBraidWord(int strands = 1) : n(strands), framings(strands, 0) {
        if (strands < 1) throw std::invalid_argument("a braid needs at least one strand");
    }

    long long exponent_sum() const {
        long long e = 0;
        for (const auto& l : letters) e += l.exponent;
        return e;
    }
    bool is_classical() const {
        for (long long a : framings)
            if (a != 0) return false;
        return true;
    }
    friend bool operator==(const FramedBraidWord&, const FramedBraidWord&) = default;
};

/// Canonical text "n=3: t1^2 s1 s2^-1".
inline std::string to_string(const FramedBraidWord& w) {
    std::string s = "n=" + std::to_string(w.n) + ":";
    for (int j = 0; j < w.n; ++j) {
        if (w.framings[j] == 0) continue;
        s += " t" + std::to_string(j + 1);
        if (w.framings[j] != 1) s += "^" + std::to_string(w.framings[j]);
    }
    for (const auto& l : w.letters) {
        s += " s" + std::to_string(l.index);
        if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
    }
    return s;
}

class BraidParseError : public std::runtime_error {
public:
    BraidParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class BraidParser {
public:
    BraidParser(const std::string& text, bool allow_framing) : s_(text), allow_framing_(allow_framing) {}

    FramedBraidWord parse() {
        skip_space();
        expect('n');
        skip_space();
        expect('=');
        skip_space();
        const std::size_t n_at = pos_;
        const long long n = integer(false);
        if (n < 1 || n > kMaxStrands) throw BraidParseError("strand count must be in [1, 8]", n_at);
        skip_space();
        expect(':');
        FramedBraidWord word(static_cast<int>(n));
        // Permutation of the braid prefix, used to move later framing letters to the front.
        std::vector<int> prefix(n);
        for (int k = 0; k < n; ++k) prefix[k] = k + 1;
        for (;;) {
            skip_space();
            if (pos_ >= s_.size()) break;
            const std::size_t at = pos_;
            const char kind = s_[pos_];
            if (kind != 's' && kind != 't') throw BraidParseError(std::string("unexpected character '") + kind + "'", at);
            ++pos_;
            const std::size_t index_at = pos_;
            const long long index = integer(false);
            long long exponent = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                exponent = integer(true);
            }
            if (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])))
                throw BraidParseError("letters must be separated by whitespace", pos_);
            if (kind == 's') {
                if (index < 1 || index >= n) throw BraidParseError("braid index out of range", index_at);
                if (exponent == 0) throw BraidParseError("braid exponent must be nonzero", at);
                word.letters.push_back({static_cast<int>(index), static_cast<int>(exponent)});
                if (exponent % 2 != 0) std::swap(prefix[index - 1], prefix[index]);
            } else {
                if (!allow_framing_) throw BraidParseError("framing letter in a classical braid", at);
                if (index < 1 || index > n) throw BraidParseError("framing index out of range", index_at);
                // p t_j = t_{p(j)} p.
                word.framings[prefix[index - 1] - 1] += exponent;
            }
        }
        return word;
    }

private:
    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c) throw BraidParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    long long integer(bool allow_sign) {
        const std::size_t start = pos_;
        if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) throw BraidParseError("expected an integer", start);
        if (pos_ - digits > 9) throw BraidParseError("integer too large", start);
        return std::stoll(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    bool allow_framing_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses "n=<int>: letter letter ..." with letters s<i>[^<exp>] and t<i>[^<exp>].
inline FramedBraidWord parse_braid(const std::string& text, bool allow_framing = true) {
    return detail::BraidParser(text, allow_framing).parse();
}

/// gamma: t_j -> t_j, sigma_i -> g_i.
inline AlgebraElement to_algebra(const FramedBraidWord& word, const AlgebraContext& ctx) {
    if (ctx.n != word.n) throw std::invalid_argument("braid and algebra strand counts differ");
    AlgebraElement r = AlgebraElement::unit(ctx);
    for (int j = 0; j < word.n; ++j)
        if (word.framings[j] % ctx.d != 0) r = r.mul_by_framing(j + 1, word.framings[j]);
    for (const auto& l : word.letters) {
        for (int k = 0; k < std::abs(l.exponent); ++k)
            r = l.exponent > 0 ? r.mul_by_generator(l.index) : r.mul_by_inverse_generator(l.index);
    }
    return r;
}

/// pi: sigma_i -> h_i in H_n(u).
inline HeckeElement to_hecke(const FramedBraidWord& word) {
    if (!word.is_classical()) throw std::invalid_argument("framed braid in the Iwahori-Hecke path");
    HeckeElement r = HeckeElement::unit(word.n);
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
        for (int k = 0; k < std::abs(it->exponent); ++k)
            r = it->exponent > 0 ? r.left_generator(it->index) : r.left_inverse_generator(it->index);
    return r;
}

/// beta alpha beta^{-1}; the framing of alpha moves to the front through beta.
inline FramedBraidWord conjugate(const FramedBraidWord& alpha, const std::vector<BraidLetter>& beta) {
    FramedBraidWord r(alpha.n);
    std::vector<int> perm(alpha.n);
    for (int k = 0; k < alpha.n; ++k) perm[k] = k + 1;
    for (const auto& l : beta) {
        if (l.index < 1 || l.index >= alpha.n) throw std::out_of_range("braid index out of range");
        if (l.exponent % 2 != 0) std::swap(perm[l.index - 1], perm[l.index]);
    }
    for (int j = 0; j < alpha.n; ++j) r.framings[perm[j] - 1] = alpha.framings[j];
    r.letters = beta;
    r.letters.insert(r.letters.end(), alpha.letters.begin(), alpha.letters.end());
    for (auto it = beta.rbegin(); it != beta.rend(); ++it) r.letters.push_back({it->index, -it->exponent});
    return r;
}

/// alpha sigma_n^{sign} on n + 1 strands; the new strand carries framing 0.
inline FramedBraidWord stabilize(const FramedBraidWord& alpha, int sign) {
    if (alpha.n >= kMaxStrands) throw std::invalid_argument("too many strands to stabilize");
    FramedBraidWord r(alpha.n + 1);
    for (int j = 0; j < alpha.n; ++j) r.framings[j] = alpha.framings[j];
    r.letters = alpha.letters;
    r.letters.push_back({alpha.n, sign > 0 ? 1 : -1});
    return r;
}

}  // namespace ftl
