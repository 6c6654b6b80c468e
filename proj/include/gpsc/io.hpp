#ifndef GPSC_IO_HPP_
#define GPSC_IO_HPP_

// JSON documents: labeled graphs in, reports out. Output is byte-stable for
// a fixed input.
//
// Input:
//   {"vertices": [{"id": "a", "group": {"free_rank": 1, "torsion": [2]}},
//                 {"id": "b", "group": {"non_abelian": "Sym(5)",
//                                       "known_semicomplete": "yes"}}],
//    "edges": [["a", "b"]]}

#include <filesystem>
#include <string>
#include <string_view>

#include "gpsc/abelian.hpp"
#include "gpsc/classify.hpp"
#include "gpsc/graph.hpp"
#include "gpsc/symmetry.hpp"

namespace gpsc {

struct InputDocument {
  SimplicialGraph graph;
  LabelMap labels;
};

// Throws InputError naming the offending field.
InputDocument parse_document(std::string_view text);
InputDocument load_document(std::filesystem::path const& path);

std::string document_json(SimplicialGraph const& g, LabelMap const& labels);
// Input-document form of an expansion; each vertex also records its origin.
std::string expanded_json(ExpandedGraph const& eg);
std::string report_json(ClassificationReport const& r);
std::string census_json(CensusReport const& r);

}  // namespace gpsc

#endif  // GPSC_IO_HPP_
