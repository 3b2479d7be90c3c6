#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace pindraw {

// Counter-based generator: output i is splitmix64's mix function applied to
// key + (i+1)*golden. Stateless apart from the counter, so streams are
// reproducible bit-for-bit on every platform and cheap to split.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(seed), counter_(0) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_u64() {
        ++counter_;
        return mix(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
    }

    // Unbiased integer in [0, bound) via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    // [lo, hi] inclusive
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool next_bool() { return (next_u64() & 1) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Uniform permutation of 0..n-1.
    std::vector<int> permutation(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        shuffle(p);
        return p;
    }

    // Independent child stream; index selects the stream.
    Rng derive(std::uint64_t index) const {
        return Rng(mix(key_ ^ mix((index + 1) * 0xD1B54A32D192ED03ULL)));
    }

    std::uint64_t seed() const { return key_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

}  // namespace pindraw
