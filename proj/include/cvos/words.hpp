#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvos {

inline constexpr int kMinRank = 3;   // standing assumption: rank >= 3
inline constexpr int kMaxRank = 26;  // serialization uses a..z / A..Z

inline void check_rank(int rank) {
    if (rank < kMinRank || rank > kMaxRank)
        throw std::invalid_argument("rank must be in [3, 26], got " + std::to_string(rank));
}

// A signed generator.  Encoded as 2*index + (inverse ? 1 : 0), so the induced
// order is a < a^-1 < b < b^-1 < ...; that order fixes all canonical forms.
class Letter {
  public:
    Letter() = default;

    static Letter make(int index, bool inverse) {
        if (index < 0 || index >= kMaxRank) throw std::invalid_argument("letter index out of range");
        return Letter(static_cast<std::int8_t>(2 * index + (inverse ? 1 : 0)));
    }

    int index() const { return code_ >> 1; }
    bool is_inverse() const { return (code_ & 1) != 0; }
    Letter inverse() const { return Letter(static_cast<std::int8_t>(code_ ^ 1)); }
    int code() const { return code_; }

    char to_char() const {
        return is_inverse() ? static_cast<char>('A' + index()) : static_cast<char>('a' + index());
    }

    static Letter from_char(char c) {
        if (c >= 'a' && c <= 'z') return make(c - 'a', false);
        if (c >= 'A' && c <= 'Z') return make(c - 'A', true);
        throw std::invalid_argument(std::string("invalid letter character '") + c + "'");
    }

    auto operator<=>(const Letter&) const = default;

  private:
    explicit Letter(std::int8_t code) : code_(code) {}
    std::int8_t code_ = 0;
};

using Letters = std::vector<Letter>;

inline Letters inverse_letters(const Letters& w) {
    Letters out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

inline Letters free_reduce_letters(const Letters& raw) {
    Letters out;
    out.reserve(raw.size());
    for (Letter l : raw) {
        if (!out.empty() && out.back() == l.inverse())
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

// freely reduce, then trim inverse pairs across the wrap-around
inline Letters cyclic_reduce_letters(const Letters& raw) {
    Letters w = free_reduce_letters(raw);
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) { ++lo; --hi; }
    return Letters(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

inline Letters parse_letters(const std::string& s, int rank) {
    Letters out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == ' ' || c == '\t') continue;
        Letter l = Letter::from_char(c);
        if (l.index() >= rank)
            throw std::invalid_argument(std::string("letter '") + c + "' exceeds rank " + std::to_string(rank));
        out.push_back(l);
    }
    return out;
}

inline std::string format_letters(const Letters& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter l : w) s.push_back(l.to_char());
    return s;
}

// Booth's least-rotation algorithm; returns the starting index.
inline std::size_t least_rotation(const Letters& w) {
    const std::size_t n = w.size();
    if (n <= 1) return 0;
    std::vector<std::ptrdiff_t> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const Letter sj = w[j % n];
        std::ptrdiff_t i = f[j - k - 1];
        while (i != -1 && sj != w[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < w[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != w[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < w[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

inline Letters rotate_to(const Letters& w, std::size_t start) {
    Letters out;
    out.reserve(w.size());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(start), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
    return out;
}

// A freely reduced word (an element of the free group, based).
class Word {
  public:
    Word() = default;

    static Word reduce(Letters raw) { return Word(free_reduce_letters(raw)); }
    static Word parse(const std::string& s, int rank) { return Word(free_reduce_letters(parse_letters(s, rank))); }

    const Letters& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const { return Word(inverse_letters(letters_)); }

    static Word concat(const Word& a, const Word& b) {
        Letters l = a.letters_;
        l.insert(l.end(), b.letters_.begin(), b.letters_.end());
        return Word(free_reduce_letters(l));
    }

    std::string str() const { return format_letters(letters_); }

    auto operator<=>(const Word&) const = default;

  private:
    explicit Word(Letters l) : letters_(std::move(l)) {}
    Letters letters_;
};

// A nontrivial conjugacy class, identified with its inverse class (one vertex
// of the primitive loop graph).  Canonical form: the lexicographically least
// rotation among the cyclically reduced word and its inverse, so structural
// equality is equality of classes.
class CyclicWord {
  public:
    CyclicWord() = default;

    static CyclicWord from_letters(const Letters& raw) {
        Letters w = cyclic_reduce_letters(raw);
        if (w.empty())
            throw std::invalid_argument("trivial class: length functions need a nontrivial conjugacy class");
        Letters a = rotate_to(w, least_rotation(w));
        Letters wi = inverse_letters(w);
        Letters b = rotate_to(wi, least_rotation(wi));
        return CyclicWord(std::min(a, b));
    }

    static CyclicWord from_word(const Word& w) { return from_letters(w.letters()); }
    static CyclicWord parse(const std::string& s, int rank) { return from_letters(parse_letters(s, rank)); }

    const Letters& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    std::string str() const { return format_letters(letters_); }

    auto operator<=>(const CyclicWord&) const = default;

  private:
    explicit CyclicWord(Letters canon) : letters_(std::move(canon)) {}
    Letters letters_;
};

// ordering used for deterministic set output: by length, then lexicographic
struct ShortlexLess {
    bool operator()(const CyclicWord& a, const CyclicWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.letters() < b.letters();
    }
};

inline int max_index(const Letters& w) {
    int m = -1;
    for (Letter l : w) m = std::max(m, l.index());
    return m;
}

}  // namespace cvos
