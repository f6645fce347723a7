// 8-bit grayscale PNG writing (zlib-deflated, fixed layout, deterministic).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ws {

std::vector<std::uint8_t> encode_gray_png(const std::uint8_t* pixels, int width, int height);
void write_gray_png(const std::string& path, const std::uint8_t* pixels, int width, int height);

} // namespace ws
