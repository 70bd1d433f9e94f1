#include "verba/bitset.hpp"

#include <cstdio>

#include "verba/error.hpp"

namespace verba {

std::string Bitset::to_hex() const {
  std::string out;
  out.reserve(words_.size() * 16);
  char buf[17];
  for (auto w : words_) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(w));
    out += buf;
  }
  return out;
}

Bitset Bitset::from_hex(std::size_t size, const std::string& hex) {
  Bitset b(size);
  if (hex.size() != b.words_.size() * 16)
    throw Error(ErrorKind::InvalidArgument, "bitset hex has wrong length");
  for (std::size_t i = 0; i < b.words_.size(); ++i)
    b.words_[i] = std::stoull(hex.substr(i * 16, 16), nullptr, 16);
  return b;
}

}  // namespace verba
