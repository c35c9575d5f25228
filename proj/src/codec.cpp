#include "vc/codec.hpp"

#include <stdexcept>

namespace vc {

namespace {

// Pattern literals transcribed row-major from the 2x2 matrices.
constexpr std::array<Block, 4> kBlackShare1 = {{
    {1, 0, 0, 1},
    {0, 0, 1, 1},
    {1, 1, 0, 0},
    {0, 1, 1, 0},
}};

constexpr std::array<Block, 4> kBlackShare2 = {{
    {0, 1, 1, 0},
    {1, 1, 0, 0},
    {0, 0, 1, 1},
    {1, 0, 0, 1},
}};

// White blocks use the same pattern in both shares.
constexpr std::array<Block, 4> kWhite = {{
    {1, 0, 0, 1},
    {0, 0, 1, 1},
    {1, 1, 0, 0},
    {0, 1, 1, 0},
}};

constexpr std::array<Block, 4> kMixedShare1 = {{
    {0, 1, 1, 0},
    {1, 0, 1, 0},
    {0, 1, 1, 1},
    {1, 0, 1, 1},
}};

// The first and last entries are identical in the source table; kept as is.
constexpr std::array<Block, 4> kMixedShare2 = {{
    {0, 1, 0, 1},
    {1, 1, 0, 1},
    {1, 0, 1, 0},
    {0, 1, 0, 1},
}};

PatternTables build_tables() {
    PatternTables t;
    for (int i = 0; i < 4; ++i) {
        t.black[i] = {kBlackShare1[i], kBlackShare2[i]};
        t.white[i] = {kWhite[i], kWhite[i]};
        t.mixed[i] = {kMixedShare1[i], kMixedShare2[i]};
    }
    return t;
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace

const PatternTables& pattern_tables() {
    static const PatternTables tables = build_tables();
    return tables;
}

BlockClass classify_block(const Block& b) {
    const int ones = popcount(b);
    if (ones == 4) return BlockClass::Black;
    if (ones == 0) return BlockClass::White;
    return BlockClass::Mixed;
}

const PatternPair& pattern_pair(BlockClass cls, int index) {
    if (index < 0 || index > 3)
        throw std::out_of_range("pattern_pair: index must be in [0,4)");
    const PatternTables& t = pattern_tables();
    switch (cls) {
        case BlockClass::Black: return t.black[static_cast<std::size_t>(index)];
        case BlockClass::White: return t.white[static_cast<std::size_t>(index)];
        case BlockClass::Mixed: return t.mixed[static_cast<std::size_t>(index)];
    }
    throw std::invalid_argument("pattern_pair: bad block class");
}

Block stack(const Block& a, const Block& b) {
    return {static_cast<std::uint8_t>(a[0] ^ b[0]),
            static_cast<std::uint8_t>(a[1] ^ b[1]),
            static_cast<std::uint8_t>(a[2] ^ b[2]),
            static_cast<std::uint8_t>(a[3] ^ b[3])};
}

int popcount(const Block& b) { return b[0] + b[1] + b[2] + b[3]; }

std::uint64_t RngStream::next_u64() {
    ++position_;
    std::uint64_t z = seed_ + position_ * kGolden;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint32_t RngStream::next_below(std::uint32_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be >= 1");
    // Reject the tail of the 32-bit range that would bias the result.
    const std::uint32_t limit = UINT32_MAX - UINT32_MAX % bound;
    for (;;) {
        const auto v = static_cast<std::uint32_t>(next_u64() >> 32);
        if (v < limit) return v % bound;
    }
}

std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
    return mix64(base ^ mix64(tag + kGolden));
}

std::uint64_t block_seed(std::uint64_t base, int block_row, int block_col) {
    return derive_seed(derive_seed(base, static_cast<std::uint64_t>(block_row)),
                       static_cast<std::uint64_t>(block_col));
}

namespace {

int hamming(const Block& a, const Block& b) { return popcount(stack(a, b)); }

}  // namespace

int choose_index(BlockClass cls, const Block& input, MixedPolicy policy,
                 RngStream& rng) {
    if (cls != classify_block(input))
        throw std::invalid_argument("choose_index: class does not match input block");

    if (policy == MixedPolicy::PaperRandom || cls != BlockClass::Mixed)
        return static_cast<int>(rng.next_below(4));

    const PatternTables& t = pattern_tables();
    std::array<int, 4> dist{};
    int best = 5;
    for (int i = 0; i < 4; ++i) {
        dist[i] = hamming(stack(t.mixed[i].share1, t.mixed[i].share2), input);
        if (dist[i] < best) best = dist[i];
    }
    std::array<int, 4> tied{};
    int n_tied = 0;
    for (int i = 0; i < 4; ++i)
        if (dist[i] == best) tied[n_tied++] = i;
    if (n_tied == 1) return tied[0];
    return tied[rng.next_below(static_cast<std::uint32_t>(n_tied))];
}

}  // namespace vc
