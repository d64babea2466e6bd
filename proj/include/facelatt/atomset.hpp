#pragma once

// Fixed-capacity atom sets: the vertex-set representation of lattice
// elements. A set over n atoms is a bit vector chunked into 64-bit words;
// bits above the capacity are kept zero at all times so word-wise comparison
// and hashing never see garbage.
//
// Atoms are 1-indexed at the API/I-O boundary (from_indices, indices) and
// 0-indexed in the bit positions underneath. Operations are value-producing:
// intersection/union return fresh sets, inputs are never modified.

#include "facelatt/errors.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace facelatt {

class AtomSet {
public:
    AtomSet() = default;

    /// Empty set over `capacity` atoms.
    explicit AtomSet(int capacity)
        : words_(words_for(capacity), 0), capacity_(capacity) {}

    /// Build from 1-based atom indices. Duplicates collapse; an index
    /// outside [1, capacity] raises InputError naming the offending index.
    static AtomSet from_indices(int capacity, std::span<const int> one_based) {
        AtomSet s(capacity);
        for (int ix : one_based) {
            if (ix < 1 || ix > capacity)
                throw InputError("atom index " + std::to_string(ix) +
                                 " out of range [1, " + std::to_string(capacity) + "]");
            s.words_[static_cast<size_t>(ix - 1) >> 6] |= uint64_t{1} << ((ix - 1) & 63);
        }
        return s;
    }

    static AtomSet from_indices(int capacity, std::initializer_list<int> one_based) {
        return from_indices(capacity, std::span<const int>(one_based.begin(), one_based.size()));
    }

    /// Full set {1..capacity}.
    static AtomSet full(int capacity) {
        AtomSet s(capacity);
        for (int i = 0; i < capacity; ++i)
            s.words_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63);
        return s;
    }

    int capacity() const { return capacity_; }
    size_t word_count() const { return words_.size(); }
    std::span<const uint64_t> words() const { return words_; }

    bool contains(int one_based) const {
        if (one_based < 1 || one_based > capacity_) return false;
        return (words_[static_cast<size_t>(one_based - 1) >> 6] >>
                ((one_based - 1) & 63)) & 1;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    /// Sorted 1-based indices of the members.
    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                out.push_back(static_cast<int>(w * 64) + b + 1);
                bits &= bits - 1;
            }
        }
        return out;
    }

    AtomSet operator&(const AtomSet& o) const {
        check_same_capacity(o);
        AtomSet r(capacity_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }

    AtomSet operator|(const AtomSet& o) const {
        check_same_capacity(o);
        AtomSet r(capacity_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }

    bool is_subset_of(const AtomSet& o) const {
        check_same_capacity(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// True if this set is contained in (or equal to) any element of `sets`.
    bool is_subset_of_any(std::span<const AtomSet> sets) const {
        for (const AtomSet& s : sets)
            if (is_subset_of(s)) return true;
        return false;
    }

    bool operator==(const AtomSet& o) const {
        return capacity_ == o.capacity_ && words_ == o.words_;
    }

    size_t hash() const {
        // FNV-1a over the words; padding is guaranteed zero so equal sets
        // hash equal regardless of how they were built.
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h ^ static_cast<uint64_t>(capacity_));
    }

    /// "{1,3,4}" — for diagnostics and test failure messages.
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int ix : indices()) {
            if (!first) s += ",";
            s += std::to_string(ix);
            first = false;
        }
        return s + "}";
    }

    static constexpr size_t words_for(int capacity) {
        return (static_cast<size_t>(capacity) + 63) / 64;
    }

private:
    void check_same_capacity(const AtomSet& o) const {
        if (capacity_ != o.capacity_)
            throw InputError("capacity mismatch: " + std::to_string(capacity_) +
                             " vs " + std::to_string(o.capacity_));
    }

    friend AtomSet atomset_from_words(int capacity, std::span<const uint64_t> words);

    std::vector<uint64_t> words_;
    int capacity_ = 0;
};

/// Internal constructor used by the iteration engine; `words` must already
/// respect the padding invariant.
inline AtomSet atomset_from_words(int capacity, std::span<const uint64_t> words) {
    AtomSet s(capacity);
    for (size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = words[i];
    return s;
}

/// Lexicographic order on the sorted 1-based index sequences, i.e.
/// {1,2} < {1,2,3} < {1,4} < {2}. This is the canonical sort everywhere.
/// Rule: at the smallest atom where the sets disagree, the owner of that atom
/// comes first — unless the non-owner has no atom beyond it, in which case the
/// non-owner is a proper prefix and comes first.
inline bool lex_less(const AtomSet& a, const AtomSet& b) {
    size_t n = std::min(a.word_count(), b.word_count());
    auto any_from = [n](const AtomSet& s, size_t word, uint64_t mask) {
        if (s.words()[word] & mask) return true;
        for (size_t j = word + 1; j < n; ++j)
            if (s.words()[j]) return true;
        return false;
    };
    for (size_t i = 0; i < n; ++i) {
        uint64_t wa = a.words()[i], wb = b.words()[i];
        if (wa == wb) continue;
        uint64_t low = (wa ^ wb) & ~((wa ^ wb) - 1); // lowest differing bit
        uint64_t above = ~low & ~(low - 1);          // strictly higher bits of this word
        if (wa & low) return any_from(b, i, above);  // a owns it: a < b iff b continues
        return !any_from(a, i, above);               // b owns it: a < b iff a is a prefix
    }
    return false;
}

struct AtomSetHash {
    size_t operator()(const AtomSet& s) const { return s.hash(); }
};

} // namespace facelatt
