#ifndef VC_VC2_HPP
#define VC_VC2_HPP

#include "vc/bitmap.hpp"
#include "vc/codec.hpp"

namespace vc {

struct EncodeConfig {
    std::uint64_t seed = 0;
    MixedPolicy mixed_policy = MixedPolicy::PaperRandom;
    NormalizeMode normalize_mode = NormalizeMode::Scale;
};

// Both shares always have the dimensions of the normalized secret; the
// scheme is expansionless (ratio 1:1).
struct SharePair {
    BinaryImage share1;
    BinaryImage share2;
    Dimensions source_dims;
};

// Normalizes the secret, then replaces every 2x2 block independently by
// the pattern pair chosen for its class. Each block draws from a stream
// derived from (cfg.seed, block row, block col), so the output does not
// depend on traversal order or thread count.
SharePair encode(const BinaryImage& secret, const EncodeConfig& cfg);

// Block encoding without the normalization step. Dimensions must be even.
SharePair encode_blocks(const BinaryImage& normalized, const EncodeConfig& cfg);

// Pixelwise XOR of the two shares. No thresholding or cleanup.
BinaryImage reveal(const SharePair& pair);

// Pixelwise XOR of two equally sized images.
BinaryImage xor_images(const BinaryImage& a, const BinaryImage& b);

// True iff every 2x2 block is entirely black or entirely white; the class
// of images level-1 encoding reconstructs exactly.
bool is_pure_block_image(const BinaryImage& img);

}  // namespace vc

#endif  // VC_VC2_HPP
