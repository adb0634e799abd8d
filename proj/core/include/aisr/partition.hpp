#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aisr/errors.hpp"

namespace aisr {

// Equivalence relation on {0, ..., k-1} in canonical form: block ids are
// assigned in order of first occurrence, so equal relations compare equal as
// vectors and the vector order is a stable total order.
class Partition {
 public:
  // Canonicalizes an arbitrary block-id labeling.
  explicit Partition(std::vector<int> block_of);

  static Partition identity(int k);  // k singleton blocks
  static Partition total(int k);     // one block

  int size() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return block_count_; }
  int block(int a) const { return block_of_[a]; }
  bool same_block(int a, int b) const { return block_of_[a] == block_of_[b]; }
  bool is_identity() const { return block_count_ == size(); }
  bool is_total() const { return block_count_ == 1; }

  // Blocks listed by block id; elements ascending within each block.
  std::vector<std::vector<int>> blocks() const;

  // Relation inclusion: every block of *this lies inside a block of other.
  bool refines(const Partition& other) const;

  // Common refinement (intersection of the relations).
  static Partition meet(const Partition& p, const Partition& q);
  // Transitive closure of the union of the relations.
  static Partition join(const Partition& p, const Partition& q);

  // Induced partition on a subset of the carrier, in subset-position space.
  Partition restrict_to(const std::vector<int>& subset) const;

  const std::vector<int>& block_ids() const { return block_of_; }

  bool operator==(const Partition& o) const { return block_of_ == o.block_of_; }
  bool operator<(const Partition& o) const { return block_of_ < o.block_of_; }

 private:
  std::vector<int> block_of_;
  int block_count_;
};

// Text form "[{0,2},{1},{3}]".
std::string render_partition(const Partition& p);

// Parses "[{0,2},{1}]" into raw blocks; validation against a carrier is the
// caller's job.
std::vector<std::vector<int>> parse_blocks(std::string_view text);

// Builds a partition from blocks that must cover {0, ..., ground_size-1}
// exactly once; throws StructuralError otherwise.
Partition partition_from_blocks(const std::vector<std::vector<int>>& blocks,
                                int ground_size);

}  // namespace aisr
