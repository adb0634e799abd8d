#include "aisr/partition.hpp"

#include <algorithm>
#include <map>
#include <cctype>
#include <numeric>
#include <sstream>

namespace aisr {

namespace {

std::vector<int> canonicalize(std::vector<int> raw, int* count_out) {
  std::map<int, int> relabel;
  int next = 0;
  for (int& b : raw) {
    if (b < 0) throw StructuralError("negative partition block id");
    auto [it, inserted] = relabel.try_emplace(b, next);
    if (inserted) ++next;
    b = it->second;
  }
  *count_out = next;
  return raw;
}

}  // namespace

Partition::Partition(std::vector<int> block_of)
    : block_of_(canonicalize(std::move(block_of), &block_count_)) {
  if (block_of_.empty()) throw StructuralError("partition of empty carrier");
}

Partition Partition::identity(int k) {
  std::vector<int> ids(k);
  std::iota(ids.begin(), ids.end(), 0);
  return Partition(std::move(ids));
}

Partition Partition::total(int k) {
  return Partition(std::vector<int>(k, 0));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(block_count_);
  for (int a = 0; a < size(); ++a) out[block_of_[a]].push_back(a);
  return out;
}

bool Partition::refines(const Partition& other) const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (same_block(a, b) && !other.same_block(a, b)) return false;
  return true;
}

Partition Partition::meet(const Partition& p, const Partition& q) {
  const int k = p.size();
  std::vector<int> ids(k);
  for (int a = 0; a < k; ++a) ids[a] = p.block(a) * q.size() + q.block(a);
  // Pair codes may exceed k; renumber densely before constructing.
  std::vector<int> seen;
  for (int& id : ids) {
    auto it = std::find(seen.begin(), seen.end(), id);
    if (it == seen.end()) {
      seen.push_back(id);
      id = static_cast<int>(seen.size()) - 1;
    } else {
      id = static_cast<int>(it - seen.begin());
    }
  }
  return Partition(std::move(ids));
}

Partition Partition::join(const Partition& p, const Partition& q) {
  const int k = p.size();
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (p.same_block(a, b) || q.same_block(a, b)) unite(a, b);
  std::vector<int> ids(k);
  for (int a = 0; a < k; ++a) ids[a] = find(a);
  return Partition(std::move(ids));
}

Partition Partition::restrict_to(const std::vector<int>& subset) const {
  std::vector<int> ids(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    int e = subset[i];
    if (e < 0 || e >= size())
      throw StructuralError("restriction subset element out of range");
    ids[i] = block_of_[e];
  }
  // Renumber densely: block ids from the big carrier may exceed the subset.
  std::vector<int> seen;
  for (int& id : ids) {
    auto it = std::find(seen.begin(), seen.end(), id);
    if (it == seen.end()) {
      seen.push_back(id);
      id = static_cast<int>(seen.size()) - 1;
    } else {
      id = static_cast<int>(it - seen.begin());
    }
  }
  return Partition(std::move(ids));
}

std::string render_partition(const Partition& p) {
  std::ostringstream out;
  out << "[";
  auto blocks = p.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out << ",";
    out << "{";
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) out << ",";
      out << blocks[i][j];
    }
    out << "}";
  }
  out << "]";
  return out.str();
}

std::vector<std::vector<int>> parse_blocks(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto expect = [&](char c) {
    skip_space();
    if (i >= text.size() || text[i] != c)
      throw StructuralError(std::string("expected '") + c +
                            "' in partition text");
    ++i;
  };
  expect('[');
  skip_space();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      expect('{');
      std::vector<int> block;
      while (true) {
        skip_space();
        std::size_t start = i;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])))
          ++i;
        if (start == i) throw StructuralError("expected element index");
        block.push_back(std::stoi(std::string(text.substr(start, i - start))));
        skip_space();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        break;
      }
      expect('}');
      blocks.push_back(std::move(block));
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    expect(']');
  }
  skip_space();
  if (i != text.size())
    throw StructuralError("trailing characters after partition");
  return blocks;
}

Partition partition_from_blocks(const std::vector<std::vector<int>>& blocks,
                                int ground_size) {
  std::vector<int> ids(ground_size, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw StructuralError("empty partition block");
    for (int e : blocks[b]) {
      if (e < 0 || e >= ground_size)
        throw StructuralError("partition element " + std::to_string(e) +
                              " out of range");
      if (ids[e] != -1)
        throw StructuralError("element " + std::to_string(e) +
                              " appears in two blocks");
      ids[e] = static_cast<int>(b);
    }
  }
  for (int e = 0; e < ground_size; ++e)
    if (ids[e] == -1)
      throw StructuralError("element " + std::to_string(e) +
                            " missing from partition");
  return Partition(std::move(ids));
}

}  // namespace aisr
