#include "splitcount/matrix_set.hpp"

#include <algorithm>

#include "splitcount/errors.hpp"

namespace splitcount {

MatrixSet::MatrixSet(std::size_t n, std::size_t shards)
    : n_(n), shards_(std::max<std::size_t>(shards, 1)) {}

std::size_t MatrixSet::size() const noexcept {
  std::size_t s = 0;
  for (const auto &shard : shards_)
    s += shard.size();
  return s;
}

std::string MatrixSet::encode(std::span<const std::int64_t> entries) {
  std::string key(entries.size() * 8, '\0');
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto u = static_cast<std::uint64_t>(entries[i]);
    for (std::size_t b = 0; b < 8; ++b)
      key[i * 8 + b] = static_cast<char>((u >> (8 * b)) & 0xFFU);
  }
  return key;
}

std::vector<std::int64_t> MatrixSet::decode(const std::string &key) {
  std::vector<std::int64_t> out(key.size() / 8);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t u = 0;
    for (std::size_t b = 0; b < 8; ++b)
      u |= static_cast<std::uint64_t>(static_cast<unsigned char>(key[i * 8 + b]))
           << (8 * b);
    out[i] = static_cast<std::int64_t>(u);
  }
  return out;
}

std::size_t MatrixSet::shard_of(std::span<const std::int64_t> entries) const {
  // FNV-1a over the first row.
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t j = 0; j < n_ && j < entries.size(); ++j) {
    h ^= static_cast<std::uint64_t>(entries[j]);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h % shards_.size());
}

bool MatrixSet::insert(std::span<const std::int64_t> entries) {
  if (entries.size() != n_ * n_)
    throw Error(ErrorCode::DimensionMismatch, "MatrixSet::insert: wrong size");
  return shards_[shard_of(entries)].insert(encode(entries)).second;
}

bool MatrixSet::contains(std::span<const std::int64_t> entries) const {
  if (entries.size() != n_ * n_)
    return false;
  return shards_[shard_of(entries)].count(encode(entries)) > 0;
}

void MatrixSet::merge(MatrixSet &&other) {
  if (other.n_ != n_)
    throw Error(ErrorCode::DimensionMismatch, "MatrixSet::merge: dimension");
  if (other.shards_.size() == shards_.size()) {
    for (std::size_t s = 0; s < shards_.size(); ++s)
      shards_[s].merge(other.shards_[s]);
  } else {
    for (auto &shard : other.shards_)
      for (const auto &key : shard) {
        auto e = decode(key);
        insert(e);
      }
  }
  other.shards_.assign(other.shards_.size(), {});
}

void MatrixSet::for_each(
    const std::function<void(std::span<const std::int64_t>)> &fn) const {
  std::vector<std::vector<std::int64_t>> all;
  all.reserve(size());
  for (const auto &shard : shards_)
    for (const auto &key : shard)
      all.push_back(decode(key));
  std::sort(all.begin(), all.end());
  for (const auto &e : all)
    fn(e);
}

bool MatrixSet::is_subset_of(const MatrixSet &other) const {
  for (const auto &shard : shards_)
    for (const auto &key : shard)
      if (!other.contains(decode(key)))
        return false;
  return true;
}

std::size_t MatrixSet::intersection_size(const MatrixSet &other) const {
  std::size_t count = 0;
  for (const auto &shard : shards_)
    for (const auto &key : shard)
      if (other.contains(decode(key)))
        ++count;
  return count;
}

} // namespace splitcount
