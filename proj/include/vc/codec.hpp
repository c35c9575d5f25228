#ifndef VC_CODEC_HPP
#define VC_CODEC_HPP

#include <array>
#include <cstdint>

namespace vc {

// A 2x2 pixel tile in row-major order: top-left, top-right, bottom-left,
// bottom-right. 1 = black, 0 = white.
using Block = std::array<std::uint8_t, 4>;

enum class BlockClass { Black, White, Mixed };

struct PatternPair {
    Block share1;
    Block share2;
};

// The fixed share-pattern tables. Each class has four pairs; pairs are
// indexed in the order the patterns are defined. For black blocks
// share1 XOR share2 is all-ones, for white blocks share1 == share2,
// and mixed pairs reconstruct to tiles with 2-3 black pixels.
struct PatternTables {
    std::array<PatternPair, 4> black;
    std::array<PatternPair, 4> white;
    std::array<PatternPair, 4> mixed;
};

const PatternTables& pattern_tables();

BlockClass classify_block(const Block& b);

// index must be in [0, 4); throws std::out_of_range otherwise.
const PatternPair& pattern_pair(BlockClass cls, int index);

// Pixelwise XOR of two tiles.
Block stack(const Block& a, const Block& b);

int popcount(const Block& b);

enum class MixedPolicy { PaperRandom, BestMatch };

// Deterministic counter-based stream (splitmix64). The n-th draw depends
// only on (seed, n), so streams can be copied, compared and replayed on
// any platform. One stream must not be shared between threads; derive a
// child stream per work item instead.
class RngStream {
public:
    RngStream() = default;
    explicit RngStream(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return position_; }

    std::uint64_t next_u64();

    // Unbiased draw in [0, bound); bound must be >= 1.
    std::uint32_t next_below(std::uint32_t bound);

private:
    std::uint64_t seed_ = 0;
    std::uint64_t position_ = 0;
};

// splitmix64 finalizer; the mixing primitive behind seed derivation.
std::uint64_t mix64(std::uint64_t x);

// Derives a child seed from a base seed and a tag. Fixed for all time:
// golden tests and the on-disk manifests depend on this exact function.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag);

// The per-block stream used by the encoders: derive by row, then column.
std::uint64_t block_seed(std::uint64_t base, int block_row, int block_col);

// Picks the pattern index for one block. cls must equal
// classify_block(input); throws std::invalid_argument otherwise.
// PaperRandom draws uniformly over {0..3}. BestMatch minimizes the
// Hamming distance between the pair's reconstruction and the input for
// mixed blocks (ties broken uniformly at random) and falls back to the
// PaperRandom draw sequence for pure blocks.
int choose_index(BlockClass cls, const Block& input, MixedPolicy policy,
                 RngStream& rng);

}  // namespace vc

#endif  // VC_CODEC_HPP
