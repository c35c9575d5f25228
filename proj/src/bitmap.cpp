#include "vc/bitmap.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace vc {

namespace {

// Caps a hostile header before we allocate. Generous for this domain.
constexpr long long kMaxDimension = 1 << 20;
constexpr long long kMaxPixels = 1LL << 28;

}  // namespace

BinaryImage::BinaryImage(int width, int height)
    : width_(width), height_(height),
      bits_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("BinaryImage: dimensions must be >= 1");
}

BinaryImage::BinaryImage(int width, int height, std::vector<std::uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("BinaryImage: dimensions must be >= 1");
    if (bits_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
        throw std::invalid_argument("BinaryImage: bit count does not match dimensions");
    for (std::uint8_t b : bits_)
        if (b > 1) throw std::invalid_argument("BinaryImage: bits must be 0 or 1");
}

PbmError::PbmError(Kind kind, std::size_t offset, const std::string& message)
    : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"),
      kind_(kind), offset_(offset) {}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view data) : data_(data) {}

    std::size_t pos() const { return pos_; }
    bool eof() const { return pos_ >= data_.size(); }
    char peek() const { return data_[pos_]; }
    char take() { return data_[pos_++]; }

    // Whitespace and '#' comments (to end of line) separate header tokens.
    void skip_space_and_comments() {
        while (!eof()) {
            const char c = peek();
            if (c == '#') {
                while (!eof() && take() != '\n') {}
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    long long read_uint(const char* what) {
        skip_space_and_comments();
        const std::size_t start = pos_;
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw PbmError(PbmError::Kind::MalformedHeader, pos_,
                           std::string("malformed header: expected ") + what);
        long long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (take() - '0');
            if (v > kMaxPixels)
                throw PbmError(PbmError::Kind::MalformedHeader, start,
                               std::string("malformed header: ") + what + " out of range");
        }
        return v;
    }

private:
    std::string_view data_;
    std::size_t pos_ = 0;
};

BinaryImage parse_p1(Cursor& cur, int width, int height) {
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(width) * height);
    const std::size_t want = static_cast<std::size_t>(width) * height;
    while (bits.size() < want) {
        cur.skip_space_and_comments();
        if (cur.eof())
            throw PbmError(PbmError::Kind::PayloadMismatch, cur.pos(),
                           "payload ends after " + std::to_string(bits.size()) +
                               " of " + std::to_string(want) + " pixels");
        const char c = cur.take();
        if (c != '0' && c != '1')
            throw PbmError(PbmError::Kind::PayloadMismatch, cur.pos() - 1,
                           std::string("unexpected character '") + c + "' in P1 raster");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    cur.skip_space_and_comments();
    if (!cur.eof())
        throw PbmError(PbmError::Kind::PayloadMismatch, cur.pos(),
                       "trailing data after " + std::to_string(want) + " pixels");
    return BinaryImage(width, height, std::move(bits));
}

BinaryImage parse_p4(Cursor& cur, int width, int height) {
    // Exactly one whitespace byte separates the header from the raster.
    if (cur.eof() || !std::isspace(static_cast<unsigned char>(cur.peek())))
        throw PbmError(PbmError::Kind::MalformedHeader, cur.pos(),
                       "malformed header: expected single whitespace before P4 raster");
    cur.take();

    const std::size_t row_bytes = (static_cast<std::size_t>(width) + 7) / 8;
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(width) * height, 0);
    for (int r = 0; r < height; ++r) {
        for (std::size_t byte = 0; byte < row_bytes; ++byte) {
            if (cur.eof())
                throw PbmError(PbmError::Kind::PayloadMismatch, cur.pos(),
                               "payload ends inside row " + std::to_string(r) + " of " +
                                   std::to_string(height));
            const auto v = static_cast<std::uint8_t>(cur.take());
            for (int bit = 0; bit < 8; ++bit) {
                const std::size_t col = byte * 8 + static_cast<std::size_t>(bit);
                if (col >= static_cast<std::size_t>(width)) break;  // row padding
                bits[static_cast<std::size_t>(r) * width + col] =
                    static_cast<std::uint8_t>((v >> (7 - bit)) & 1);
            }
        }
    }
    if (!cur.eof())
        throw PbmError(PbmError::Kind::PayloadMismatch, cur.pos(),
                       "trailing data after packed raster");
    return BinaryImage(width, height, std::move(bits));
}

}  // namespace

BinaryImage parse_pbm(std::string_view data) {
    Cursor cur(data);
    if (data.size() < 2)
        throw PbmError(PbmError::Kind::NonBitmapFormat, 0, "not a PBM file: too short");
    const char m0 = cur.take();
    const char m1 = cur.take();
    if (m0 != 'P' || (m1 != '1' && m1 != '4'))
        throw PbmError(PbmError::Kind::NonBitmapFormat, 0,
                       std::string("not a PBM bitmap: magic \"") + m0 + m1 + '"');
    const long long w = cur.read_uint("image width");
    const long long h = cur.read_uint("image height");
    if (w < 1 || h < 1 || w > kMaxDimension || h > kMaxDimension || w * h > kMaxPixels)
        throw PbmError(PbmError::Kind::MalformedHeader, cur.pos(),
                       "malformed header: unsupported dimensions " + std::to_string(w) +
                           "x" + std::to_string(h));
    return m1 == '1' ? parse_p1(cur, static_cast<int>(w), static_cast<int>(h))
                     : parse_p4(cur, static_cast<int>(w), static_cast<int>(h));
}

std::string write_pbm(const BinaryImage& img, PbmVariant variant) {
    std::ostringstream out;
    if (variant == PbmVariant::P1) {
        out << "P1\n" << img.width() << ' ' << img.height() << '\n';
        for (int r = 0; r < img.height(); ++r) {
            for (int c = 0; c < img.width(); ++c) {
                out << static_cast<int>(img.get(r, c));
                // Keep lines within the classic 70-column limit.
                const bool line_break = (c + 1) % 32 == 0 || c + 1 == img.width();
                out << (line_break ? '\n' : ' ');
            }
        }
    } else {
        out << "P4\n" << img.width() << ' ' << img.height() << '\n';
        const int row_bytes = (img.width() + 7) / 8;
        for (int r = 0; r < img.height(); ++r) {
            for (int byte = 0; byte < row_bytes; ++byte) {
                std::uint8_t v = 0;
                for (int bit = 0; bit < 8; ++bit) {
                    const int c = byte * 8 + bit;
                    if (c < img.width() && img.get(r, c))
                        v = static_cast<std::uint8_t>(v | (1u << (7 - bit)));
                }
                out.put(static_cast<char>(v));
            }
        }
    }
    return std::move(out).str();
}

BinaryImage load_pbm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string() + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pbm(std::move(buf).str());
}

void save_pbm(const BinaryImage& img, const std::filesystem::path& path,
              PbmVariant variant) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    const std::string data = write_pbm(img, variant);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out)
        throw std::runtime_error("failed to write " + path.string());
}

namespace {

int round_up4(int v) { return (v + 3) / 4 * 4; }

}  // namespace

BinaryImage normalize_size(const BinaryImage& img, NormalizeMode mode) {
    const int w = img.width();
    const int h = img.height();
    const int nw = round_up4(w);
    const int nh = round_up4(h);
    if (nw == w && nh == h) return img;

    BinaryImage out(nw, nh);
    if (mode == NormalizeMode::Pad) {
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < w; ++c)
                out.set(r, c, img.get(r, c));
    } else {
        // Center-aligned nearest neighbor. Upscaling only, so every source
        // pixel is sampled at least once.
        for (int r = 0; r < nh; ++r) {
            const int sr = static_cast<int>(((2LL * r + 1) * h) / (2LL * nh));
            for (int c = 0; c < nw; ++c) {
                const int sc = static_cast<int>(((2LL * c + 1) * w) / (2LL * nw));
                out.set(r, c, img.get(sr, sc));
            }
        }
    }
    return out;
}

Block block_at(const BinaryImage& img, int block_row, int block_col) {
    if (img.width() % 2 != 0 || img.height() % 2 != 0)
        throw std::invalid_argument("block_at: image dimensions must be even");
    if (block_row < 0 || block_col < 0 || 2 * block_row >= img.height() ||
        2 * block_col >= img.width())
        throw std::out_of_range("block_at: block index out of range");
    const int r = 2 * block_row;
    const int c = 2 * block_col;
    return {img.get(r, c), img.get(r, c + 1), img.get(r + 1, c), img.get(r + 1, c + 1)};
}

void put_block(BinaryImage& img, int block_row, int block_col, const Block& b) {
    const int r = 2 * block_row;
    const int c = 2 * block_col;
    img.set(r, c, b[0]);
    img.set(r, c + 1, b[1]);
    img.set(r + 1, c, b[2]);
    img.set(r + 1, c + 1, b[3]);
}

}  // namespace vc
