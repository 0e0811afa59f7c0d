#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "chaincolor/core.hpp"

namespace chaincolor {

/// A nested sequence of subsets of {1,...,m}:
///   {alpha} = A_0 <= A_1 <= ... <= A_f,
/// with length f and size |A_f|. Elements are stored 0-based; the text form
/// (`alpha|a,b|a,b,c`) is 1-based.
class Chain {
 public:
  Chain(int m, int alpha, std::vector<SmallSet> sets) : m_(m), alpha_(alpha), sets_(std::move(sets)) {
    require(m_ >= 1, Errc::OutOfUniverse, "universe must be positive");
    require(alpha_ >= 0 && alpha_ < m_, Errc::OutOfUniverse, "alpha " + std::to_string(alpha_ + 1));
    for (const SmallSet& s : sets_)
      require(s.universe() == m_, Errc::OutOfUniverse, "set universe mismatch");
    if (!sets_.empty()) {
      require(sets_.front().contains(alpha_), Errc::AlphaMissing,
              "alpha " + std::to_string(alpha_ + 1) + " not in first set");
      for (std::size_t i = 0; i + 1 < sets_.size(); ++i)
        require(sets_[i].subset_of(sets_[i + 1]), Errc::NotNested,
                "set " + std::to_string(i + 1) + " not contained in its successor");
    }
  }

  int universe() const { return m_; }
  int alpha() const { return alpha_; }
  int length() const { return static_cast<int>(sets_.size()); }
  /// |A_f|; equals 1 for a bare chain <alpha>.
  int size() const { return sets_.empty() ? 1 : sets_.back().size(); }

  /// A_k for 0 <= k <= length(); A_0 is the implicit singleton {alpha}.
  SmallSet level(int k) const {
    if (k == 0) return SmallSet::single(m_, alpha_);
    return sets_.at(static_cast<std::size_t>(k) - 1);
  }
  const std::vector<SmallSet>& sets() const { return sets_; }

  /// Removes the last set (the homomorphism used throughout: a chain of
  /// length f maps to its length f-1 prefix).
  Chain drop_last() const {
    require(!sets_.empty(), Errc::EmptyChain, "cannot drop from a length-0 chain");
    return Chain(m_, alpha_, std::vector<SmallSet>(sets_.begin(), sets_.end() - 1));
  }

  /// `alpha|a,b|a,b,c`, 1-based. Doubles as the canonical sort key: vertex
  /// enumerations order chains by comparing these strings.
  std::string text() const {
    std::string out = std::to_string(alpha_ + 1);
    for (const SmallSet& s : sets_) {
      out += '|';
      out += format_elements_1based(s);
    }
    return out;
  }

  static Chain parse(int m, const std::string& text) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : text) {
      if (c == '|') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    fields.push_back(cur);
    require(!fields.empty() && !fields[0].empty(), Errc::EmptyChain, "missing alpha field");
    int alpha = std::stoi(fields[0]) - 1;
    std::vector<SmallSet> sets;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      SmallSet s(m);
      std::string num;
      auto flush = [&] {
        if (!num.empty()) {
          s.insert(std::stoi(num) - 1);
          num.clear();
        }
      };
      for (char c : fields[i]) {
        if (c == ',')
          flush();
        else
          num += c;
      }
      flush();
      sets.push_back(s);
    }
    return Chain(m, alpha, std::move(sets));
  }

  bool operator==(const Chain& o) const {
    return m_ == o.m_ && alpha_ == o.alpha_ && sets_ == o.sets_;
  }
  bool operator!=(const Chain& o) const { return !(*this == o); }

 private:
  int m_;
  int alpha_;
  std::vector<SmallSet> sets_;
};

inline bool chain_canonical_less(const Chain& a, const Chain& b) { return a.text() < b.text(); }

/// In-place canonical (text-key) sort; keys are materialized once.
inline void sort_chains_canonically(std::vector<Chain>& chains) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(chains.size());
  for (std::size_t i = 0; i < chains.size(); ++i) keys.emplace_back(chains[i].text(), i);
  std::sort(keys.begin(), keys.end());
  std::vector<Chain> sorted;
  sorted.reserve(chains.size());
  for (auto& [k, i] : keys) sorted.push_back(std::move(chains[i]));
  chains = std::move(sorted);
}

struct ChainHash {
  std::size_t operator()(const Chain& c) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(c.alpha());
    for (const SmallSet& s : c.sets()) {
      h ^= s.bits() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    h ^= static_cast<std::uint64_t>(c.length()) << 32;
    return static_cast<std::size_t>(h);
  }
};

namespace detail {

inline void enum_supersets(const SmallSet& lower, const SmallSet& upper, int max_size,
                           const std::function<void(const SmallSet&)>& fn) {
  if (!lower.subset_of(upper) || lower.size() > max_size) return;
  std::uint64_t free = (upper - lower).bits();
  int budget = max_size - lower.size();
  // submask walk over the free elements, ascending
  std::uint64_t sub = 0;
  while (true) {
    if (std::popcount(sub) <= budget) fn(SmallSet::from_bits(upper.universe(), lower.bits() | sub));
    if (sub == free) break;
    sub = (sub - free) & free;
  }
}

}  // namespace detail

/// The chains one level down that interleave A: all chains <B_0,...,B_{f-1}>
/// with A_{k-1} <= B_k <= A_{k+1} (A_{-1} = empty). Members are valid chains,
/// so B_0 is a singleton and the B_k nest. Canonical (text) order.
inline std::vector<Chain> s1_members(const Chain& a, long long size_budget = kDefaultSizeBudget) {
  const int f = a.length();
  require(f >= 1, Errc::EmptyChain, "shift set needs length >= 1");
  const int m = a.universe();
  std::vector<Chain> out;
  std::vector<SmallSet> stack;
  std::function<void(int)> rec = [&](int k) {
    if (k == f) {
      out.emplace_back(m, stack[0].min(), std::vector<SmallSet>(stack.begin() + 1, stack.end()));
      require(static_cast<long long>(out.size()) <= size_budget, Errc::SizeBudget,
              "shift-set enumeration exceeds budget");
      return;
    }
    // B_k sandwiched between A_{k-1} (plus what the chain already forces) and A_{k+1}
    SmallSet lower = k == 0 ? SmallSet(m) : a.level(k - 1) | stack.back();
    SmallSet upper = a.level(k + 1);
    int cap = k == 0 ? 1 : m;
    detail::enum_supersets(lower, upper, cap, [&](const SmallSet& s) {
      if (k == 0 && s.size() != 1) return;
      stack.push_back(s);
      rec(k + 1);
      stack.pop_back();
    });
  };
  rec(0);
  sort_chains_canonically(out);
  return out;
}

/// Whether the shift sets of two equal-length chains share a member. Decided
/// by the sandwich constraints directly: the least candidate
/// C_k = {c} | A_0 | B_0 | ... | A_{k-1} | B_{k-1} works iff anything does.
inline bool s1_intersects(const Chain& a, const Chain& b) {
  require(a.length() == b.length(), Errc::LengthMismatch, "chain lengths differ");
  require(a.universe() == b.universe(), Errc::LengthMismatch, "chain universes differ");
  const int f = a.length();
  require(f >= 1, Errc::EmptyChain, "shift set needs length >= 1");
  SmallSet prefix(a.universe());                   // union of both chains' levels below k
  SmallSet candidates = SmallSet::all(a.universe());  // intersection of all uppers
  for (int k = 0; k < f; ++k) {
    SmallSet upper = a.level(k + 1) & b.level(k + 1);
    if (!prefix.subset_of(upper)) return false;
    candidates = candidates & upper;
    prefix = prefix | a.level(k) | b.level(k);
  }
  return !candidates.empty();
}

/// All chains over [m] with the given length and size at most max_size, in
/// canonical order. This is the vertex set of the codec's conflict graph and
/// the domain of shift-condition colorings.
inline std::vector<Chain> enumerate_chains(int m, int length, int max_size,
                                           long long size_budget = kDefaultSizeBudget) {
  require(length >= 0, Errc::DomainMismatch, "negative length");
  std::vector<Chain> out;
  std::vector<SmallSet> stack;
  std::function<void(int)> rec = [&](int k) {
    if (k == length + 1) {
      out.emplace_back(m, stack[0].min(), std::vector<SmallSet>(stack.begin() + 1, stack.end()));
      require(static_cast<long long>(out.size()) <= size_budget, Errc::SizeBudget,
              "chain enumeration exceeds budget");
      return;
    }
    SmallSet lower = k == 0 ? SmallSet(m) : stack.back();
    int cap = k == 0 ? 1 : max_size;
    detail::enum_supersets(lower, SmallSet::all(m), cap, [&](const SmallSet& s) {
      if (k == 0 && s.size() != 1) return;
      stack.push_back(s);
      rec(k + 1);
      stack.pop_back();
    });
  };
  rec(0);
  sort_chains_canonically(out);
  return out;
}

}  // namespace chaincolor
