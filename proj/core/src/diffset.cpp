#include "diffgraph/diffset.hpp"

#include <algorithm>

namespace diffgraph {

CandidateSet::CandidateSet(const Group& group, std::vector<Element> elements)
    : group_(&group), elements_(std::move(elements)) {
  if (elements_.empty()) throw_invalid("candidate set must be non-empty");
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] >= group.order()) {
      throw_invalid("element " + std::to_string(elements_[i]) + " out of range for " + group.name());
    }
    if (i > 0 && elements_[i] == elements_[i - 1]) {
      throw_invalid("duplicate element " + std::to_string(elements_[i]) + " in candidate set");
    }
  }
}

bool CandidateSet::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

CandidateSet CandidateSet::right_translate(Element g) const {
  std::vector<Element> out;
  out.reserve(elements_.size());
  for (Element t : elements_) out.push_back(group_->mul(t, g));
  return CandidateSet(*group_, std::move(out));
}

CandidateSet CandidateSet::left_translate(Element g) const {
  std::vector<Element> out;
  out.reserve(elements_.size());
  for (Element t : elements_) out.push_back(group_->mul(g, t));
  return CandidateSet(*group_, std::move(out));
}

std::map<std::uint32_t, std::size_t> DifferenceProfile::histogram() const {
  std::map<std::uint32_t, std::size_t> h;
  for (std::size_t g = 1; g < counts.size(); ++g) ++h[counts[g]];
  return h;
}

std::vector<Element> difference_matrix(const CandidateSet& set) {
  const Group& g = set.group();
  const auto el = set.elements();
  std::vector<Element> d;
  d.reserve(el.size() * el.size());
  for (Element ti : el) {
    for (Element tj : el) d.push_back(g.mul(ti, g.inv(tj)));
  }
  return d;
}

DifferenceProfile difference_profile(const CandidateSet& set) {
  const Group& g = set.group();
  DifferenceProfile p;
  p.s = set.size();
  p.counts.assign(g.order(), 0);
  for (Element ti : set.elements()) {
    for (Element tj : set.elements()) ++p.counts[g.mul(ti, g.inv(tj))];
  }
  return p;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPerfect:
      return "Perfect";
    case Verdict::kAlmost:
      return "ADS";
    case Verdict::kCovering:
      return "Covering";
    case Verdict::kNonCovering:
      return "NonCovering";
  }
  return "unknown";
}

std::string SetClassification::label() const {
  const std::string ns = std::to_string(n) + "," + std::to_string(s);
  switch (verdict) {
    case Verdict::kPerfect:
      return "Perfect(" + ns + ",1)";
    case Verdict::kAlmost:
      return "ADS(" + ns + "," + std::to_string(lambda) + "," + std::to_string(t) + ")";
    case Verdict::kCovering:
      return "Covering(" + ns + "," + std::to_string(lambda) + ")";
    case Verdict::kNonCovering:
      return "NonCovering(" + ns + ")";
  }
  return {};
}

SetClassification classify_profile(const DifferenceProfile& profile) {
  SetClassification c;
  c.n = profile.counts.size();
  c.s = profile.s;
  c.histogram = profile.histogram();
  for (std::size_t g = 1; g < c.n; ++g) {
    const auto k = profile.counts[g];
    if (k == 0) c.missing.push_back(static_cast<Element>(g));
    if (k >= 2) c.repeated.push_back(static_cast<Element>(g));
  }

  if (!c.missing.empty()) {
    c.verdict = Verdict::kNonCovering;
    c.lambda = 0;
    return c;
  }
  if (c.histogram.empty()) {
    // Trivial group: every (vacuous) non-identity element is covered once.
    c.verdict = c.s == 1 ? Verdict::kPerfect : Verdict::kCovering;
    c.lambda = 1;
    return c;
  }

  const auto lo = c.histogram.begin();
  c.lambda = lo->first;
  c.t = lo->second;
  if (c.histogram.size() == 1) {
    c.verdict = c.lambda == 1 ? Verdict::kPerfect : Verdict::kAlmost;
    return c;
  }
  const auto hi = std::next(lo);
  if (c.histogram.size() == 2 && hi->first == lo->first + 1) {
    c.verdict = Verdict::kAlmost;
    return c;
  }
  c.verdict = Verdict::kCovering;
  c.t = 0;
  return c;
}

SetClassification classify_set(const CandidateSet& set) {
  return classify_profile(difference_profile(set));
}

CandidateSet inverse_set(const CandidateSet& set) {
  std::vector<Element> out;
  out.reserve(set.size());
  for (Element t : set.elements()) out.push_back(set.group().inv(t));
  return CandidateSet(set.group(), std::move(out));
}

}  // namespace diffgraph
