#ifndef GPSC_CLASSIFY_HPP_
#define GPSC_CLASSIFY_HPP_

// Semicompleteness and completeness verdicts for graph products, each
// backed by per-condition evidence.

#include <optional>
#include <string>
#include <vector>

#include "gpsc/abelian.hpp"
#include "gpsc/graph.hpp"

namespace gpsc {

enum class Verdict { yes, no, undetermined };

std::string to_string(Verdict v);

struct Evidence {
  // "semicomplete" or "complete".
  std::string scope;
  std::string condition;
  bool holds = false;
  // Stable tag naming the criterion that the condition feeds.
  std::string citation;
  std::string witness;
  bool operator==(Evidence const&) const = default;
};

struct Decision {
  Verdict verdict = Verdict::undetermined;
  std::vector<Evidence> evidence;
};

struct ClassificationReport {
  Verdict semicomplete = Verdict::undetermined;
  Verdict complete = Verdict::undetermined;
  VertexSet center_delta;
  std::vector<Evidence> evidence;
  std::optional<ExpandedGraph> expansion;
};

// Vertices with st(v) = V(g) and an abelian label.
VertexSet center_delta(SimplicialGraph const& g, LabelMap const& labels);

Decision classify_semicomplete(SimplicialGraph const& g, LabelMap const& labels);
Decision classify_complete(SimplicialGraph const& g, LabelMap const& labels);

ClassificationReport classify(SimplicialGraph const& g, LabelMap const& labels);

// Verdict lines, then one evidence line per condition:
//   "[scope] condition: holds|fails | witness | citation".
std::string to_text(ClassificationReport const& r);

}  // namespace gpsc

#endif  // GPSC_CLASSIFY_HPP_
