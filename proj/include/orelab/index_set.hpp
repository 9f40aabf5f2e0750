#pragma once

#include <cstdint>
#include <vector>

namespace orelab {

// Subset of an enumerable ring, stored as a bitset over element indices.
// Annihilators, ideals and lattice-closure members all live here.
class IndexSet {
  public:
    IndexSet() : n_(0) {}
    explicit IndexSet(std::uint32_t n) : n_(n), bits_((n + 63) / 64, 0) {}

    std::uint32_t universe() const { return n_; }

    void set(std::uint32_t i) { bits_[i >> 6] |= 1ull << (i & 63); }
    bool test(std::uint32_t i) const {
        return (bits_[i >> 6] >> (i & 63)) & 1;
    }

    std::uint32_t count() const {
        std::uint32_t c = 0;
        for (std::uint64_t w : bits_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : bits_)
            if (w) return false;
        return true;
    }

    IndexSet intersect(const IndexSet& o) const {
        IndexSet r(n_);
        for (std::size_t w = 0; w < bits_.size(); ++w)
            r.bits_[w] = bits_[w] & o.bits_[w];
        return r;
    }

    bool subset_of(const IndexSet& o) const {
        for (std::size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w] & ~o.bits_[w]) return false;
        return true;
    }

    bool operator==(const IndexSet& o) const {
        return n_ == o.n_ && bits_ == o.bits_;
    }
    bool operator!=(const IndexSet& o) const { return !(*this == o); }

    // Lexicographic on the word vector; any total order works for keeping
    // closure members in a canonical, reproducible sequence.
    bool operator<(const IndexSet& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return bits_ < o.bits_;
    }

    std::vector<std::uint32_t> indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for (std::uint32_t i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

  private:
    std::uint32_t n_;
    std::vector<std::uint64_t> bits_;
};

} // namespace orelab
