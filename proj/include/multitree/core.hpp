#ifndef MULTITREE_CORE_HPP
#define MULTITREE_CORE_HPP

// Value model for rooted tree-like multigraphs.
//
// A rooted tree-like multigraph is stored as its root's self-loop count plus
// the multiset of child attachments. Each attachment carries the child's
// descendant subgraph and the number of extra copies of the parent edge
// beyond the mandatory first one.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <tuple>
#include <vector>

namespace multitree {

using Size = std::uint32_t;

struct ChildAttachment;

struct LoopTree {
  Size rootLoops = 0;
  /// Sorted non-increasingly under compare_codes when canonical.
  std::vector<ChildAttachment> children;

  friend bool operator==(const LoopTree&, const LoopTree&) = default;
};

struct ChildAttachment {
  LoopTree subtree;
  Size extraMultiplicity = 0;

  friend bool operator==(const ChildAttachment&, const ChildAttachment&) = default;
};

/// (n, s, m): vertices, total self-loops, total extra edge copies.
struct GraphStats {
  Size n = 1;
  Size s = 0;
  Size m = 0;

  friend auto operator<=>(const GraphStats&, const GraphStats&) = default;
};

/// Lexicographically conditioned maxima over the root's children: the
/// largest (vertices, loops, internal extras, attachment extras) tuple.
struct ClassProfile {
  Size maxV = 0;
  Size maxS = 0;
  Size maxM = 0;
  Size maxL = 0;

  friend auto operator<=>(const ClassProfile&, const ClassProfile&) = default;
};

inline LoopTree leaf(Size loops = 0) { return LoopTree{loops, {}}; }

inline GraphStats stats_of(const LoopTree& t) {
  GraphStats out{1, t.rootLoops, 0};
  for (const auto& c : t.children) {
    const GraphStats sub = stats_of(c.subtree);
    out.n += sub.n;
    out.s += sub.s;
    out.m += sub.m + c.extraMultiplicity;
  }
  return out;
}

namespace detail {

inline std::strong_ordering compare_with_stats(const LoopTree& a, const GraphStats& sa,
                                               const LoopTree& b, const GraphStats& sb,
                                               Size ka, Size kb);

inline std::strong_ordering compare_attachments(const ChildAttachment& a,
                                                const ChildAttachment& b) {
  return compare_with_stats(a.subtree, stats_of(a.subtree), b.subtree, stats_of(b.subtree),
                            a.extraMultiplicity, b.extraMultiplicity);
}

inline std::strong_ordering compare_with_stats(const LoopTree& a, const GraphStats& sa,
                                               const LoopTree& b, const GraphStats& sb,
                                               Size ka, Size kb) {
  if (auto c = std::tie(sa.n, sa.s, sa.m, ka, a.rootLoops) <=>
               std::tie(sb.n, sb.s, sb.m, kb, b.rootLoops);
      c != 0)
    return c;
  const std::size_t common = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < common; ++i)
    if (auto c = compare_attachments(a.children[i], b.children[i]); c != 0) return c;
  return a.children.size() <=> b.children.size();
}

}  // namespace detail

/// Total order on attached subtrees. `greater` means `a` (attached with
/// multiplicity ka) precedes `b` in canonical child order. Keys in priority:
/// vertex count, loop count, internal extras, attachment extras, root loops,
/// then the children sequences lexicographically.
inline std::strong_ordering compare_codes(const LoopTree& a, const LoopTree& b, Size ka = 0,
                                          Size kb = 0) {
  return detail::compare_with_stats(a, stats_of(a), b, stats_of(b), ka, kb);
}

inline std::strong_ordering compare_codes(const ChildAttachment& a, const ChildAttachment& b) {
  return detail::compare_attachments(a, b);
}

inline bool is_canonical(const LoopTree& t) {
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (!is_canonical(t.children[i].subtree)) return false;
    if (i > 0 && compare_codes(t.children[i - 1], t.children[i]) < 0) return false;
  }
  return true;
}

inline LoopTree canonical_form(LoopTree t) {
  for (auto& c : t.children) c.subtree = canonical_form(std::move(c.subtree));
  std::stable_sort(t.children.begin(), t.children.end(),
                   [](const ChildAttachment& x, const ChildAttachment& y) {
                     return compare_codes(x, y) > 0;
                   });
  return t;
}

inline ClassProfile class_profile(const LoopTree& t) {
  ClassProfile best;
  for (const auto& c : t.children) {
    const GraphStats sub = stats_of(c.subtree);
    best = std::max(best, ClassProfile{sub.n, sub.s, sub.m, c.extraMultiplicity});
  }
  return best;
}

}  // namespace multitree

#endif  // MULTITREE_CORE_HPP
