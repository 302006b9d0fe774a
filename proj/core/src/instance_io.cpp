#include "bghard/instance.hpp"

#include <cstdint>

namespace bghard {

const char* variant_name(Variant variant) {
  switch (variant) {
    case Variant::kskr: return "kskr";
    case Variant::uskr: return "uskr";
    case Variant::usur: return "usur";
  }
  return "unknown";
}

const GadgetEntry* GadgetMap::find(const std::string& kind,
                                   int source_index) const {
  for (const GadgetEntry& entry : entries)
    if (entry.kind == kind && entry.source_index == source_index) return &entry;
  return nullptr;
}

std::string digest_hex(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

}  // namespace bghard
