#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ksparse {

// Label 0 means "unassigned"; labels 1..k place an element into that part.
using Label = std::uint8_t;

// Ground set E = {0, ..., n-1} with k parts. The domain is (k+1)^E: every
// element carries one label, so part-disjointness is structural.
struct GroundSet {
  int n = 0;
  int k = 1;

  GroundSet() = default;
  GroundSet(int n_elements, int parts) : n(n_elements), k(parts) {
    if (n < 1) throw std::invalid_argument("GroundSet: n must be >= 1");
    if (k < 1) throw std::invalid_argument("GroundSet: k must be >= 1");
  }

  bool operator==(const GroundSet&) const = default;

  // (k+1)^n, throws on 64-bit overflow.
  std::uint64_t domain_size() const {
    std::uint64_t size = 1;
    const std::uint64_t base = static_cast<std::uint64_t>(k) + 1;
    for (int i = 0; i < n; ++i) {
      if (size > UINT64_MAX / base)
        throw std::overflow_error("GroundSet: domain size exceeds 2^64");
      size *= base;
    }
    return size;
  }

  // (k+1)^n without the overflow restriction; used for log-scale quantities.
  double domain_size_double() const {
    double size = 1.0;
    for (int i = 0; i < n; ++i) size *= static_cast<double>(k + 1);
    return size;
  }
};

// A point of (k+1)^E as a label vector.
struct Assignment {
  std::vector<Label> labels;

  Assignment() = default;
  explicit Assignment(int n) : labels(static_cast<std::size_t>(n), 0) {}
  explicit Assignment(std::vector<Label> l) : labels(std::move(l)) {}
  Assignment(std::initializer_list<Label> l) : labels(l) {}

  static Assignment empty(const GroundSet& g) { return Assignment(g.n); }

  int size() const { return static_cast<int>(labels.size()); }
  Label label(int e) const { return labels[static_cast<std::size_t>(e)]; }
  void set(int e, Label l) { labels[static_cast<std::size_t>(e)] = l; }
  bool assigned(int e) const { return label(e) != 0; }

  bool is_empty() const {
    for (Label l : labels)
      if (l != 0) return false;
    return true;
  }

  // Builds the k=1 assignment corresponding to a subset of E.
  static Assignment from_set(int n, const std::vector<int>& elements) {
    Assignment a(n);
    for (int e : elements) a.set(e, 1);
    return a;
  }

  bool operator==(const Assignment&) const = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(static_cast<int>(labels[i]));
    }
    return s + "]";
  }
};

inline void require_same_shape(const Assignment& a, const Assignment& b) {
  if (a.labels.size() != b.labels.size())
    throw std::invalid_argument("assignments live on different ground sets");
}

// Componentwise intersection: an element keeps its label iff both arguments
// agree on it.
inline Assignment meet(const Assignment& a, const Assignment& b) {
  require_same_shape(a, b);
  Assignment out(a.size());
  for (int e = 0; e < a.size(); ++e)
    if (a.label(e) != 0 && a.label(e) == b.label(e)) out.set(e, a.label(e));
  return out;
}

// Componentwise union with conflict removal: an element ends in part l iff it
// appears in part l of a or b and in no other part of either.
inline Assignment join(const Assignment& a, const Assignment& b) {
  require_same_shape(a, b);
  Assignment out(a.size());
  for (int e = 0; e < a.size(); ++e) {
    const Label la = a.label(e);
    const Label lb = b.label(e);
    if (la == 0 && lb == 0) continue;
    if (la == 0 || lb == 0 || la == lb) out.set(e, la != 0 ? la : lb);
    // conflicting labels: element dropped from every part
  }
  return out;
}

// True iff a_i is contained in b_i for every part i.
inline bool precedes(const Assignment& a, const Assignment& b) {
  require_same_shape(a, b);
  for (int e = 0; e < a.size(); ++e)
    if (a.label(e) != 0 && a.label(e) != b.label(e)) return false;
  return true;
}

// Mixed-radix codec between assignments and indices in [0, (k+1)^n).
// Element 0 is the least significant digit; explicit value tables use this
// order.
class DomainIndexer {
 public:
  explicit DomainIndexer(const GroundSet& g) : ground_(g), size_(g.domain_size()) {}

  const GroundSet& ground() const { return ground_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t encode(const Assignment& a) const {
    if (a.size() != ground_.n)
      throw std::invalid_argument("assignment length does not match ground set");
    const std::uint64_t base = static_cast<std::uint64_t>(ground_.k) + 1;
    std::uint64_t idx = 0;
    std::uint64_t mult = 1;
    for (int e = 0; e < ground_.n; ++e) {
      const Label l = a.label(e);
      if (l > ground_.k)
        throw std::invalid_argument("label out of range for ground set");
      idx += mult * l;
      mult *= base;
    }
    return idx;
  }

  Assignment decode(std::uint64_t idx) const {
    const std::uint64_t base = static_cast<std::uint64_t>(ground_.k) + 1;
    Assignment a(ground_.n);
    for (int e = 0; e < ground_.n; ++e) {
      a.set(e, static_cast<Label>(idx % base));
      idx /= base;
    }
    return a;
  }

  // In-place successor in index order; returns false after wrapping to empty.
  bool advance(Assignment& a) const {
    for (int e = 0; e < ground_.n; ++e) {
      if (a.label(e) < ground_.k) {
        a.set(e, static_cast<Label>(a.label(e) + 1));
        return true;
      }
      a.set(e, 0);
    }
    return false;
  }

  // Stride of element e: adding label l to an unassigned e moves the index by
  // l * stride(e).
  std::uint64_t stride(int e) const {
    const std::uint64_t base = static_cast<std::uint64_t>(ground_.k) + 1;
    std::uint64_t m = 1;
    for (int i = 0; i < e; ++i) m *= base;
    return m;
  }

 private:
  GroundSet ground_;
  std::uint64_t size_;
};

}  // namespace ksparse
