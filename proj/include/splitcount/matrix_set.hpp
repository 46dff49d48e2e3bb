#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace splitcount {

/// Exact deduplicating set of small integer matrices.
///
/// Each matrix is encoded as n*n little-endian int64 words; the encoding is
/// injective, so set size is the number of distinct matrices. Keys are
/// sharded by a hash of the first row, which lets shards be deduplicated and
/// merged independently.
class MatrixSet {
public:
  explicit MatrixSet(std::size_t n, std::size_t shards = 16);

  std::size_t dim() const noexcept { return n_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  bool insert(std::span<const std::int64_t> entries);
  bool contains(std::span<const std::int64_t> entries) const;
  void merge(MatrixSet &&other);

  /// Visits matrices in sorted key order (deterministic).
  void for_each(
      const std::function<void(std::span<const std::int64_t>)> &fn) const;

  bool is_subset_of(const MatrixSet &other) const;
  std::size_t intersection_size(const MatrixSet &other) const;

  static std::string encode(std::span<const std::int64_t> entries);
  static std::vector<std::int64_t> decode(const std::string &key);

private:
  std::size_t shard_of(std::span<const std::int64_t> entries) const;

  std::size_t n_;
  std::vector<std::unordered_set<std::string>> shards_;
};

} // namespace splitcount
