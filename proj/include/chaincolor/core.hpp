#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace chaincolor {

/// Failure categories used across the library. Every thrown chaincolor::Error
/// carries one of these; the CLI prints the name on stderr and exits 1.
enum class Errc {
  // chain / family graphs
  NotNested,
  AlphaMissing,
  OutOfUniverse,
  EmptyChain,
  LengthMismatch,
  NotAVertex,
  SizeBudget,
  // graphs, homomorphisms, colorings
  NotAHomomorphism,
  NotComplete,
  NotProper,
  PartialColoring,
  // independent systems and families
  DomainMismatch,
  EmptyCandidateSet,
  PaletteTooSmall,
  NotIndependentFamily,
  PropertyViolation,
  FamilyUnavailable,
  // codec
  ZeroProbability,
  DeltaViolated,
  NoCandidate,
  BottomCode,
  ConditionViolated,
  // numerics
  DomainError,
  NoConvergence,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotNested: return "NotNested";
    case Errc::AlphaMissing: return "AlphaMissing";
    case Errc::OutOfUniverse: return "OutOfUniverse";
    case Errc::EmptyChain: return "EmptyChain";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotAVertex: return "NotAVertex";
    case Errc::SizeBudget: return "SizeBudget";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::NotComplete: return "NotComplete";
    case Errc::NotProper: return "NotProper";
    case Errc::PartialColoring: return "PartialColoring";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::EmptyCandidateSet: return "EmptyCandidateSet";
    case Errc::PaletteTooSmall: return "PaletteTooSmall";
    case Errc::NotIndependentFamily: return "NotIndependentFamily";
    case Errc::PropertyViolation: return "PropertyViolation";
    case Errc::FamilyUnavailable: return "FamilyUnavailable";
    case Errc::ZeroProbability: return "ZeroProbability";
    case Errc::DeltaViolated: return "DeltaViolated";
    case Errc::NoCandidate: return "NoCandidate";
    case Errc::BottomCode: return "BottomCode";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::DomainError: return "DomainError";
    case Errc::NoConvergence: return "NoConvergence";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

/// Default cap on enumerations (vertex sets, shift-set members, codec chains).
/// Exceeding a cap raises SizeBudget; nothing is ever silently truncated.
inline constexpr long long kDefaultSizeBudget = 10'000'000;

/// A subset of {0,...,n-1} for n <= 64, stored in one machine word.
/// Universes larger than 64 are rejected loudly; every desk-scale instance in
/// this library lives far below that.
class SmallSet {
 public:
  SmallSet() = default;
  explicit SmallSet(int universe) : n_(check_universe(universe)) {}
  SmallSet(int universe, std::initializer_list<int> elems) : SmallSet(universe) {
    for (int e : elems) insert(e);
  }

  static SmallSet from_bits(int universe, std::uint64_t bits) {
    SmallSet s(universe);
    require((bits & ~s.full_mask()) == 0, Errc::OutOfUniverse, "bit outside universe");
    s.bits_ = bits;
    return s;
  }
  static SmallSet all(int universe) {
    SmallSet s(universe);
    s.bits_ = s.full_mask();
    return s;
  }
  static SmallSet single(int universe, int e) {
    SmallSet s(universe);
    s.insert(e);
    return s;
  }

  int universe() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool contains(int e) const { return e >= 0 && e < n_ && (bits_ >> e & 1u); }
  void insert(int e) {
    require(e >= 0 && e < n_, Errc::OutOfUniverse, "element " + std::to_string(e + 1));
    bits_ |= std::uint64_t(1) << e;
  }
  void erase(int e) {
    if (e >= 0 && e < n_) bits_ &= ~(std::uint64_t(1) << e);
  }

  bool subset_of(const SmallSet& o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(const SmallSet& o) const { return (bits_ & o.bits_) != 0; }

  SmallSet operator|(const SmallSet& o) const { return with_bits(bits_ | o.bits_); }
  SmallSet operator&(const SmallSet& o) const { return with_bits(bits_ & o.bits_); }
  SmallSet operator-(const SmallSet& o) const { return with_bits(bits_ & ~o.bits_); }
  SmallSet complement() const { return with_bits(~bits_ & full_mask()); }

  bool operator==(const SmallSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const SmallSet& o) const { return !(*this == o); }

  /// Smallest element, or -1 when empty.
  int min() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  static int check_universe(int n) {
    require(n >= 0 && n <= 64, Errc::SizeBudget, "universe size " + std::to_string(n) + " exceeds 64");
    return n;
  }
  std::uint64_t full_mask() const { return n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1; }
  SmallSet with_bits(std::uint64_t b) const {
    SmallSet s(n_);
    s.bits_ = b;
    return s;
  }

  std::uint64_t bits_ = 0;
  int n_ = 0;
};

/// Ascending-element-list lexicographic order ({1,4} before {2,3}; a strict
/// prefix sorts first).
inline bool set_lex_less(const SmallSet& a, const SmallSet& b) {
  std::uint64_t x = a.bits() ^ b.bits();
  if (x == 0) return false;
  int p = std::countr_zero(x);
  if (a.bits() >> p & 1u) {
    return true;  // a diverges first with the smaller element p
  }
  // b owns bit p; a is smaller only if it has nothing at or above p
  return (a.bits() >> p) == 0;
}

/// Size first, then element-list lexicographic. This is the canonical order
/// used whenever "pick one subset deterministically" is needed.
inline bool set_size_lex_less(const SmallSet& a, const SmallSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return set_lex_less(a, b);
}

/// All k-element subsets of {0,...,n-1} as sorted index vectors, in
/// lexicographic order.
inline void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::string format_elements_1based(const SmallSet& s) {
  std::string out;
  for (int e : s.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e + 1);
  }
  return out;
}

inline int ceil_log2(long long x) {
  int k = 0;
  while ((1LL << k) < x) ++k;
  return k;
}

}  // namespace chaincolor
