#ifndef MULTITREE_ORACLE_HPP
#define MULTITREE_ORACLE_HPP

// Brute-force enumeration of rooted tree-like multigraphs.
//
// Generates every structure with a given (n, s, m) as a canonical LoopTree.
// Shares only the value model and ordering with the dynamic program, so it
// serves as independent ground truth.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bigcount.hpp"
#include "code.hpp"
#include "core.hpp"

namespace multitree {

struct EnumerationResult {
  GraphStats stats;
  /// Canonical trees in non-increasing canonical order.
  std::vector<LoopTree> codes;
  BigCount count = 0;
  /// Removed by the final dedup pass; zero when generation is sound.
  std::size_t duplicatesRemoved = 0;
};

/// Memoizes sub-enumerations by budget. Not thread-safe; confine an
/// instance to one thread.
class Enumerator {
 public:
  const std::vector<LoopTree>& trees(Size n, Size s, Size m) {
    const GraphStats key{n, s, m};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.codes;
    EnumerationResult r = generate(key);
    return memo_.emplace(key, std::move(r)).first->second.codes;
  }

  const EnumerationResult& enumerate(Size n, Size s, Size m) {
    trees(n, s, m);
    return memo_.at(GraphStats{n, s, m});
  }

 private:
  struct Candidate {
    ChildAttachment attachment;
    GraphStats stats;  // of the subtree, with the attachment extras folded into m
  };

  EnumerationResult generate(const GraphStats& budget) {
    EnumerationResult out;
    out.stats = budget;
    if (budget.n == 0) return out;

    std::vector<LoopTree> found;
    if (budget.n == 1) {
      if (budget.m == 0) found.push_back(leaf(budget.s));
    } else {
      const std::vector<Candidate> candidates = candidates_for(budget);
      std::vector<ChildAttachment> chosen;
      for (Size loops = 0; loops <= budget.s; ++loops) {
        const GraphStats rest{budget.n - 1, budget.s - loops, budget.m};
        extend(candidates, 0, rest, loops, chosen, found);
      }
    }

    std::set<std::string> seen;
    for (auto& t : found) {
      if (!seen.insert(serialize_code(t)).second) {
        ++out.duplicatesRemoved;
        continue;
      }
      out.codes.push_back(std::move(t));
    }
    std::sort(out.codes.begin(), out.codes.end(),
              [](const LoopTree& a, const LoopTree& b) { return compare_codes(a, b) > 0; });
    out.count = out.codes.size();
    return out;
  }

  // Every attachment that fits under the root of `budget`, sorted
  // non-increasingly.
  std::vector<Candidate> candidates_for(const GraphStats& budget) {
    std::vector<Candidate> out;
    for (Size n = 1; n < budget.n; ++n)
      for (Size s = 0; s <= budget.s; ++s)
        for (Size m = 0; m <= budget.m; ++m)
          for (const LoopTree& sub : trees(n, s, m))
            for (Size k = 0; m + k <= budget.m; ++k)
              out.push_back({ChildAttachment{sub, k}, GraphStats{n, s, m + k}});
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
      return compare_codes(a.attachment, b.attachment) > 0;
    });
    return out;
  }

  // Picks attachments at index >= start so the sequence is non-increasing.
  void extend(const std::vector<Candidate>& candidates, std::size_t start,
              const GraphStats& rest, Size rootLoops, std::vector<ChildAttachment>& chosen,
              std::vector<LoopTree>& found) {
    if (rest.n == 0) {
      if (rest.s == 0 && rest.m == 0) found.push_back(LoopTree{rootLoops, chosen});
      return;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      const Candidate& c = candidates[i];
      if (c.stats.n > rest.n || c.stats.s > rest.s || c.stats.m > rest.m) continue;
      chosen.push_back(c.attachment);
      extend(candidates, i, GraphStats{rest.n - c.stats.n, rest.s - c.stats.s, rest.m - c.stats.m},
             rootLoops, chosen, found);
      chosen.pop_back();
    }
  }

  std::map<GraphStats, EnumerationResult> memo_;
};

inline EnumerationResult enumerate_rooted(Size n, Size s, Size m) {
  Enumerator e;
  return e.enumerate(n, s, m);
}

inline BigCount oracle_count(Size n, Size s, Size m) { return enumerate_rooted(n, s, m).count; }

inline std::map<ClassProfile, BigCount> class_histogram(const EnumerationResult& r) {
  std::map<ClassProfile, BigCount> out;
  for (const auto& t : r.codes) out[class_profile(t)] += 1;
  return out;
}

inline std::map<ClassProfile, BigCount> class_histogram(Size n, Size s, Size m) {
  return class_histogram(enumerate_rooted(n, s, m));
}

}  // namespace multitree

#endif  // MULTITREE_ORACLE_HPP
