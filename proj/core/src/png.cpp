#include "smdedge/png.hpp"

#include <zlib.h>

#include <cmath>
#include <cstring>
#include <string>

namespace smdedge {

std::uint8_t luma_from_rgb(int r, int g, int b) {
  const long v = std::lround(0.299 * r + 0.587 * g + 0.114 * b);
  return static_cast<std::uint8_t>(v < 0 ? 0 : (v > 255 ? 255 : v));
}

namespace {

constexpr std::uint8_t kSignature[8] = {137, 'P', 'N', 'G', 13, 10, 26, 10};

std::uint32_t be32(const std::uint8_t* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) |
         (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) | static_cast<std::uint32_t>(p[3]);
}

void push_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void append_chunk(std::vector<std::uint8_t>& out, const char type[4],
                  std::span<const std::uint8_t> data) {
  push_be32(out, static_cast<std::uint32_t>(data.size()));
  const std::size_t type_at = out.size();
  out.insert(out.end(), type, type + 4);
  out.insert(out.end(), data.begin(), data.end());
  const uLong crc =
      crc32(0L, out.data() + type_at, static_cast<uInt>(4 + data.size()));
  push_be32(out, static_cast<std::uint32_t>(crc));
}

int paeth_predictor(int a, int b, int c) {
  const int p = a + b - c;
  const int pa = std::abs(p - a);
  const int pb = std::abs(p - b);
  const int pc = std::abs(p - c);
  if (pa <= pb && pa <= pc) return a;
  if (pb <= pc) return b;
  return c;
}

int channels_for_color_type(int color_type) {
  switch (color_type) {
    case 0: return 1;  // gray
    case 2: return 3;  // rgb
    case 3: return 1;  // palette index
    case 4: return 2;  // gray + alpha
    case 6: return 4;  // rgba
    default:
      throw FormatError("unsupported PNG color type " + std::to_string(color_type));
  }
}

}  // namespace

GrayImage read_png(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8 || std::memcmp(bytes.data(), kSignature, 8) != 0)
    throw FormatError("not a PNG file");

  std::size_t pos = 8;
  bool saw_ihdr = false;
  std::uint32_t width = 0, height = 0;
  int depth = 0, color_type = 0, interlace = 0;
  std::vector<std::uint8_t> palette;  // rgb triples
  std::vector<std::uint8_t> idat;

  while (pos + 8 <= bytes.size()) {
    const std::uint32_t length = be32(bytes.data() + pos);
    if (pos + 12 + static_cast<std::size_t>(length) > bytes.size())
      throw FormatError("truncated PNG chunk");
    const char* type = reinterpret_cast<const char*>(bytes.data() + pos + 4);
    const std::uint8_t* data = bytes.data() + pos + 8;

    const uLong expect = be32(bytes.data() + pos + 8 + length);
    if (crc32(0L, bytes.data() + pos + 4, 4 + length) != expect)
      throw FormatError("PNG chunk CRC mismatch");

    if (std::memcmp(type, "IHDR", 4) == 0) {
      if (length != 13) throw FormatError("malformed IHDR chunk");
      width = be32(data);
      height = be32(data + 4);
      depth = data[8];
      color_type = data[9];
      interlace = data[12];
      saw_ihdr = true;
    } else if (std::memcmp(type, "PLTE", 4) == 0) {
      if (length % 3 != 0) throw FormatError("malformed PLTE chunk");
      palette.assign(data, data + length);
    } else if (std::memcmp(type, "IDAT", 4) == 0) {
      idat.insert(idat.end(), data, data + length);
    } else if (std::memcmp(type, "IEND", 4) == 0) {
      break;
    }
    pos += 12 + length;
  }

  if (!saw_ihdr) throw FormatError("PNG is missing its IHDR chunk");
  if (depth != 8)
    throw FormatError("unsupported PNG bit depth " + std::to_string(depth) +
                      ", only 8 is handled");
  if (interlace != 0) throw FormatError("interlaced PNG is not supported");
  if (width < 1 || height < 1 || width > (1u << 24) || height > (1u << 24))
    throw FormatError("invalid PNG dimensions");
  const int channels = channels_for_color_type(color_type);
  if (color_type == 3 && palette.empty())
    throw FormatError("palette PNG without a PLTE chunk");
  if (idat.empty()) throw FormatError("PNG has no image data");

  const std::size_t stride = 1 + static_cast<std::size_t>(width) * channels;
  const std::size_t raw_size = stride * height;
  std::vector<std::uint8_t> raw(raw_size);
  uLongf got = raw_size;
  const int rc = uncompress(raw.data(), &got, idat.data(),
                            static_cast<uLong>(idat.size()));
  if (rc != Z_OK || got != raw_size)
    throw FormatError("corrupt PNG image data");

  // Undo per-row filtering in place; the filter byte leads each row.
  const int bpp = channels;
  for (std::uint32_t r = 0; r < height; ++r) {
    std::uint8_t* row = raw.data() + static_cast<std::size_t>(r) * stride;
    const std::uint8_t* prev = r > 0 ? row - stride : nullptr;
    const std::uint8_t filter = row[0];
    std::uint8_t* cur = row + 1;
    const std::size_t n = stride - 1;
    switch (filter) {
      case 0:
        break;
      case 1:  // sub
        for (std::size_t i = bpp; i < n; ++i) cur[i] += cur[i - bpp];
        break;
      case 2:  // up
        if (prev)
          for (std::size_t i = 0; i < n; ++i) cur[i] += prev[i + 1];
        break;
      case 3:  // average
        for (std::size_t i = 0; i < n; ++i) {
          const int left = i >= static_cast<std::size_t>(bpp) ? cur[i - bpp] : 0;
          const int up = prev ? prev[i + 1] : 0;
          cur[i] = static_cast<std::uint8_t>(cur[i] + ((left + up) >> 1));
        }
        break;
      case 4:  // paeth
        for (std::size_t i = 0; i < n; ++i) {
          const int left = i >= static_cast<std::size_t>(bpp) ? cur[i - bpp] : 0;
          const int up = prev ? prev[i + 1] : 0;
          const int up_left =
              (prev && i >= static_cast<std::size_t>(bpp)) ? prev[i + 1 - bpp] : 0;
          cur[i] = static_cast<std::uint8_t>(cur[i] +
                                             paeth_predictor(left, up, up_left));
        }
        break;
      default:
        throw FormatError("invalid PNG filter type " + std::to_string(filter));
    }
  }

  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(width) * height);
  for (std::uint32_t r = 0; r < height; ++r) {
    const std::uint8_t* cur = raw.data() + static_cast<std::size_t>(r) * stride + 1;
    std::uint8_t* out = pixels.data() + static_cast<std::size_t>(r) * width;
    for (std::uint32_t c = 0; c < width; ++c) {
      const std::uint8_t* px = cur + static_cast<std::size_t>(c) * channels;
      switch (color_type) {
        case 0:
        case 4:
          out[c] = px[0];
          break;
        case 2:
        case 6:
          out[c] = luma_from_rgb(px[0], px[1], px[2]);
          break;
        case 3: {
          const std::size_t idx = static_cast<std::size_t>(px[0]) * 3;
          if (idx + 2 >= palette.size())
            throw FormatError("PNG palette index out of range");
          out[c] = luma_from_rgb(palette[idx], palette[idx + 1], palette[idx + 2]);
          break;
        }
      }
    }
  }
  return {static_cast<int>(height), static_cast<int>(width), std::move(pixels)};
}

std::vector<std::uint8_t> write_png(const GrayImage& img) {
  const std::size_t stride = 1 + static_cast<std::size_t>(img.cols());
  std::vector<std::uint8_t> raw;
  raw.reserve(stride * img.rows());
  for (int r = 0; r < img.rows(); ++r) {
    raw.push_back(0);  // filter: none
    const auto row = img.row(r);
    raw.insert(raw.end(), row.begin(), row.end());
  }

  uLongf bound = compressBound(static_cast<uLong>(raw.size()));
  std::vector<std::uint8_t> compressed(bound);
  if (compress2(compressed.data(), &bound, raw.data(),
                static_cast<uLong>(raw.size()), Z_DEFAULT_COMPRESSION) != Z_OK)
    throw std::runtime_error("PNG deflate failed");
  compressed.resize(bound);

  std::vector<std::uint8_t> ihdr;
  ihdr.reserve(13);
  push_be32(ihdr, static_cast<std::uint32_t>(img.cols()));
  push_be32(ihdr, static_cast<std::uint32_t>(img.rows()));
  ihdr.push_back(8);  // bit depth
  ihdr.push_back(0);  // color type: grayscale
  ihdr.push_back(0);  // compression
  ihdr.push_back(0);  // filter method
  ihdr.push_back(0);  // no interlace

  std::vector<std::uint8_t> out(kSignature, kSignature + 8);
  append_chunk(out, "IHDR", ihdr);
  append_chunk(out, "IDAT", compressed);
  append_chunk(out, "IEND", {});
  return out;
}

}  // namespace smdedge
