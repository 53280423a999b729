#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "diffgraph/group.hpp"

namespace diffgraph {

/// A sorted set of distinct elements of a group. The group must outlive it.
class CandidateSet {
 public:
  /// Sorts the input; rejects duplicates, out-of-range indices and empty sets.
  CandidateSet(const Group& group, std::vector<Element> elements);

  const Group& group() const noexcept { return *group_; }
  std::span<const Element> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Element x) const;

  /// {t * g : t in S}
  CandidateSet right_translate(Element g) const;
  /// {g * t : t in S}
  CandidateSet left_translate(Element g) const;

  friend bool operator==(const CandidateSet& a, const CandidateSet& b) {
    return a.group_->order() == b.group_->order() && a.elements_ == b.elements_;
  }

 private:
  const Group* group_;
  std::vector<Element> elements_;
};

/// counts[g] = #{(i, j) : t_i * t_j^-1 = g}, diagonal included.
struct DifferenceProfile {
  std::size_t s = 0;
  std::vector<std::uint32_t> counts;

  /// multiplicity -> number of non-identity elements with that multiplicity
  std::map<std::uint32_t, std::size_t> histogram() const;
};

/// The s x s matrix of t_i * t_j^-1, row-major.
std::vector<Element> difference_matrix(const CandidateSet& set);

DifferenceProfile difference_profile(const CandidateSet& set);

enum class Verdict { kPerfect, kAlmost, kCovering, kNonCovering };

const char* to_string(Verdict v);

struct SetClassification {
  Verdict verdict = Verdict::kNonCovering;
  std::size_t n = 0;
  std::size_t s = 0;
  // Minimum non-identity multiplicity; 0 when some element is missed.
  std::uint32_t lambda = 0;
  // Non-identity elements at multiplicity lambda (meaningful for kAlmost).
  std::size_t t = 0;
  std::vector<Element> missing;
  std::vector<Element> repeated;  // non-identity elements with multiplicity >= 2
  std::map<std::uint32_t, std::size_t> histogram;

  bool covering() const noexcept { return verdict != Verdict::kNonCovering; }
  /// "Perfect(13,4,1)", "ADS(39,7,1,34)", "Covering(40,8,1)", "NonCovering(8,3)"
  std::string label() const;
};

/// Pure function of the profile. Perfect beats ADS beats plain covering; a
/// covering profile with more than two multiplicity levels, or with two levels
/// that are not consecutive, is plain covering. A uniform profile with
/// lambda >= 2 is an ordinary (n,s,lambda) difference set and is reported as
/// ADS with t = n - 1.
SetClassification classify_profile(const DifferenceProfile& profile);
SetClassification classify_set(const CandidateSet& set);

/// {t^-1 : t in S}, sorted.
CandidateSet inverse_set(const CandidateSet& set);

}  // namespace diffgraph
