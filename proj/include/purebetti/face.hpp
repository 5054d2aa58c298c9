#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace purebetti {

// Largest vertex universe a Face can address.
inline constexpr int kMaxVertices = 512;

// A set of vertex indices stored as a fixed-width bit vector.
class Face {
public:
    static constexpr int kWords = kMaxVertices / 64;

    Face() = default;
    Face(std::initializer_list<int> indices) {
        for (int i : indices) set(i);
    }
    static Face from_indices(const std::vector<int>& indices) {
        Face f;
        for (int i : indices) f.set(i);
        return f;
    }
    // The first n indices.
    static Face prefix(int n) {
        Face f;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            f.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return f;
    }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    // Index of the lowest set bit, or -1.
    int first() const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }
    // One past the highest set bit.
    int span() const {
        for (int w = kWords - 1; w >= 0; --w)
            if (words_[w]) return w * 64 + 64 - std::countl_zero(words_[w]);
        return 0;
    }

    bool is_subset_of(const Face& o) const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }
    bool intersects(const Face& o) const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    Face operator|(const Face& o) const {
        Face r;
        for (int w = 0; w < kWords; ++w) r.words_[w] = words_[w] | o.words_[w];
        return r;
    }
    Face operator&(const Face& o) const {
        Face r;
        for (int w = 0; w < kWords; ++w) r.words_[w] = words_[w] & o.words_[w];
        return r;
    }
    // Set difference.
    Face operator-(const Face& o) const {
        Face r;
        for (int w = 0; w < kWords; ++w) r.words_[w] = words_[w] & ~o.words_[w];
        return r;
    }
    Face& operator|=(const Face& o) { return *this = *this | o; }
    Face& operator&=(const Face& o) { return *this = *this & o; }

    bool operator==(const Face& o) const = default;

    template <class F>
    void for_each(F&& fn) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                fn(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }
    std::vector<int> indices() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    std::uint64_t word(int w) const { return words_[w]; }
    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    std::array<std::uint64_t, kWords> words_{};
};

// Lexicographic order on sorted index lists, restricted to equal sizes:
// the set holding the smallest element of the symmetric difference comes first.
inline bool lex_less(const Face& a, const Face& b) {
    for (int w = 0; w < Face::kWords; ++w) {
        std::uint64_t diff = a.word(w) ^ b.word(w);
        if (diff) {
            std::uint64_t low = diff & (~diff + 1);
            return (a.word(w) & low) != 0;
        }
    }
    return false;
}

// The canonical facet order: size first, then lexicographic.
inline bool size_lex_less(const Face& a, const Face& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return lex_less(a, b);
}

struct FaceHash {
    std::size_t operator()(const Face& f) const { return f.hash(); }
};

}  // namespace purebetti

template <>
struct std::hash<purebetti::Face> {
    std::size_t operator()(const purebetti::Face& f) const { return f.hash(); }
};
