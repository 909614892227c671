#include "smdedge/io.hpp"

#include <fstream>

#include "smdedge/pgm.hpp"
#if defined(SMDEDGE_WITH_PNG)
#include "smdedge/png.hpp"
#endif

namespace smdedge {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::vector<std::uint8_t> bytes(std::istreambuf_iterator<char>(in), {});
  if (in.bad()) throw IoError("failed while reading " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed while writing " + path.string());
}

GrayImage load_image(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '2'))
    return read_pgm(bytes);
#if defined(SMDEDGE_WITH_PNG)
  if (bytes.size() >= 4 && bytes[0] == 0x89 && bytes[1] == 'P' && bytes[2] == 'N' &&
      bytes[3] == 'G')
    return read_png(bytes);
#endif
  throw FormatError(path.string() + " is neither binary PGM nor a supported PNG");
}

void save_image(const GrayImage& img, const std::filesystem::path& path) {
  if (path.extension() == ".png") {
#if defined(SMDEDGE_WITH_PNG)
    write_file(path, write_png(img));
    return;
#else
    throw IoError("PNG output requested but the PNG codec is not built in");
#endif
  }
  write_file(path, write_pgm(img));
}

}  // namespace smdedge
