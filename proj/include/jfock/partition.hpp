#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace jfock {

// Non-increasing multi-index m = (m_1 >= ... >= m_r >= 0) indexing K-types.
struct Partition {
  std::vector<int> parts;  // length r, padded with zeros

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {}
  static Partition zero(int r) { return Partition(std::vector<int>(r, 0)); }

  int rank() const { return int(parts.size()); }
  int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  bool valid() const {
    for (size_t i = 0; i + 1 < parts.size(); ++i)
      if (parts[i] < parts[i + 1]) return false;
    return parts.empty() || parts.back() >= 0;
  }
  // m_{k+1} = 0 in the paper's convention: parts k+1..r all vanish.
  // k = rank() imposes no restriction.
  bool admissible(int k) const {
    for (int i = k; i < rank(); ++i)
      if (parts[i] != 0) return false;
    return true;
  }
  bool operator<(const Partition& o) const { return parts < o.parts; }
  bool operator==(const Partition& o) const { return parts == o.parts; }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
  }
};

// All partitions with r parts and given weight.
inline void partitions_of_weight(int r, int w, std::vector<Partition>& out) {
  std::vector<int> cur(r, 0);
  auto rec = [&](auto&& self, int pos, int rem, int maxpart) -> void {
    if (pos == r) {
      if (rem == 0) out.push_back(Partition(cur));
      return;
    }
    for (int v = std::min(rem, maxpart); v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, rem - v, v);
    }
  };
  rec(rec, 0, w, w);
}

inline std::vector<Partition> partitions_up_to(int r, int max_weight) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) partitions_of_weight(r, w, out);
  return out;
}

}  // namespace jfock
