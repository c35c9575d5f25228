#ifndef VC_BITMAP_HPP
#define VC_BITMAP_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vc/codec.hpp"

namespace vc {

struct Dimensions {
    int width = 0;
    int height = 0;
    bool operator==(const Dimensions&) const = default;
};

// Rectangular grid of bits, one byte per pixel, row-major. 1 = black,
// 0 = white. Values are immutable by convention once an image has been
// built, which makes them safe to share across threads.
class BinaryImage {
public:
    BinaryImage() = default;

    // All-white image.
    BinaryImage(int width, int height);

    // Takes ownership of bits; throws std::invalid_argument if the size
    // does not match width*height or any element is not 0/1.
    BinaryImage(int width, int height, std::vector<std::uint8_t> bits);

    int width() const { return width_; }
    int height() const { return height_; }
    Dimensions dims() const { return {width_, height_}; }
    std::size_t pixel_count() const { return bits_.size(); }

    std::uint8_t get(int row, int col) const {
        return bits_[static_cast<std::size_t>(row) * width_ + col];
    }
    void set(int row, int col, std::uint8_t v) {
        bits_[static_cast<std::size_t>(row) * width_ + col] = v;
    }

    const std::vector<std::uint8_t>& bits() const { return bits_; }
    std::vector<std::uint8_t>& bits() { return bits_; }

    bool operator==(const BinaryImage&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> bits_;
};

enum class PbmVariant { P1, P4 };

// Parse failure; kind() distinguishes the contract cases and offset() is
// the byte position in the input the parser gave up at.
class PbmError : public std::runtime_error {
public:
    enum class Kind { NonBitmapFormat, MalformedHeader, PayloadMismatch };

    PbmError(Kind kind, std::size_t offset, const std::string& message);

    Kind kind() const { return kind_; }
    std::size_t offset() const { return offset_; }

private:
    Kind kind_;
    std::size_t offset_;
};

// PBM codec. P1 is the ASCII variant, P4 the packed one with rows padded
// to byte boundaries (pad bits written as 0). Header comments are honored.
BinaryImage parse_pbm(std::string_view data);
std::string write_pbm(const BinaryImage& img, PbmVariant variant);

BinaryImage load_pbm(const std::filesystem::path& path);
void save_pbm(const BinaryImage& img, const std::filesystem::path& path,
              PbmVariant variant);

enum class NormalizeMode { Scale, Pad };

// Rounds both dimensions up to the next multiple of 4. Scale resamples
// nearest-neighbor; Pad appends white rows/columns at the right/bottom.
// Images already sized to multiples of 4 are returned unchanged.
BinaryImage normalize_size(const BinaryImage& img, NormalizeMode mode);

// The 2x2 tile whose top-left pixel is (2*block_row, 2*block_col).
// Requires even dimensions; throws std::out_of_range on bad indices.
Block block_at(const BinaryImage& img, int block_row, int block_col);

void put_block(BinaryImage& img, int block_row, int block_col, const Block& b);

}  // namespace vc

#endif  // VC_BITMAP_HPP
