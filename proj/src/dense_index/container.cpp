// Copyright 2026 The artk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "artk/dense_index/container.hpp"

#include <array>
#include <bit>
#include <istream>
#include <ostream>

#include "artk/core/error.hpp"

namespace artk {
namespace {

template <typename T>
std::array<unsigned char, sizeof(T)> to_le(T v) {
  std::array<unsigned char, sizeof(T)> bytes{};
  for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
  return bytes;
}

template <typename T>
T from_le(const std::array<unsigned char, sizeof(T)>& bytes) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(bytes[i]) << (8 * i);
  return v;
}

}  // namespace

void BinaryWriter::raw(const void* data, std::size_t size) {
  out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  require(out_.good(), ErrorCode::kIo, "write failed");
}

void BinaryWriter::header() {
  raw(kContainerMagic.data(), kContainerMagic.size());
  u16(kContainerVersion);
}

void BinaryWriter::u8(std::uint8_t v) { raw(&v, 1); }
void BinaryWriter::u16(std::uint16_t v) { raw(to_le(v).data(), 2); }
void BinaryWriter::u32(std::uint32_t v) { raw(to_le(v).data(), 4); }
void BinaryWriter::u64(std::uint64_t v) { raw(to_le(v).data(), 8); }
void BinaryWriter::f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }
void BinaryWriter::f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

void BinaryWriter::blob(std::string_view bytes) {
  require(bytes.size() <= UINT32_MAX, ErrorCode::kInvalidArgument, "blob too large");
  u32(static_cast<std::uint32_t>(bytes.size()));
  raw(bytes.data(), bytes.size());
}

void BinaryReader::raw(void* data, std::size_t size) {
  in_.read(static_cast<char*>(data), static_cast<std::streamsize>(size));
  require(static_cast<std::size_t>(in_.gcount()) == size, ErrorCode::kFormat,
          "truncated container");
}

void BinaryReader::header() {
  std::array<char, 4> magic{};
  raw(magic.data(), magic.size());
  require(std::string_view(magic.data(), magic.size()) == kContainerMagic, ErrorCode::kFormat,
          "bad magic, not an ARTK container");
  const auto version = u16();
  require(version == kContainerVersion, ErrorCode::kFormat,
          "unsupported container version " + std::to_string(version));
}

std::uint8_t BinaryReader::u8() {
  std::uint8_t v = 0;
  raw(&v, 1);
  return v;
}

std::uint16_t BinaryReader::u16() {
  std::array<unsigned char, 2> b{};
  raw(b.data(), b.size());
  return from_le<std::uint16_t>(b);
}

std::uint32_t BinaryReader::u32() {
  std::array<unsigned char, 4> b{};
  raw(b.data(), b.size());
  return from_le<std::uint32_t>(b);
}

std::uint64_t BinaryReader::u64() {
  std::array<unsigned char, 8> b{};
  raw(b.data(), b.size());
  return from_le<std::uint64_t>(b);
}

float BinaryReader::f32() { return std::bit_cast<float>(u32()); }
double BinaryReader::f64() { return std::bit_cast<double>(u64()); }

std::string BinaryReader::blob() {
  const auto size = u32();
  std::string bytes(size, '\0');
  if (size > 0) raw(bytes.data(), size);
  return bytes;
}

}  // namespace artk
