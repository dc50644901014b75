#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hsg/classifiers.hpp"
#include "hsg/enumeration.hpp"
#include "hsg/fuzzy.hpp"
#include "hsg/hyperop.hpp"

namespace hsg {

// The on-disk form of a table:
//
//   hypertable v1
//   order: 2
//   names: a b          (optional, display only)
//   0 0: 0
//   0 1: 0 1
//   1 0: 1
//   1 1: 0 1
//
// One line per cell, `x y: e1 e2 ...` with entries ascending and distinct.
// Blank lines and lines starting with '#' are ignored on input. Canonical
// output lists cells in row-major order, single-spaced, newline-terminated.
struct TableDocument {
  int version = 1;
  std::size_t order = 0;
  std::vector<std::string> names;
  // Row-major, order*order entries.
  std::vector<std::vector<Element>> cells;

  friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

// Throws ParseError naming the offending line.
TableDocument parse_table_document(std::string_view text);
HyperOp parse_table(std::string_view text);

std::string serialize_document(const TableDocument& doc);
std::string serialize_table(const HyperOp& h);

TableDocument document_of(const HyperOp& h);
HyperOp to_hyperop(const TableDocument& doc);

// Comma-separated rationals ("1/2,0,1"), one per carrier element.
FuzzySubset parse_fuzzy_subset(std::string_view text, std::size_t order);

std::string format_classification(const ClassificationReport& report);
std::string classification_json(const ClassificationReport& report);

std::string format_theorem_report(const TheoremReport& report);
std::string theorem_report_json(const TheoremReport& report);

std::string format_census(const CensusReport& report);
std::string census_json(const CensusReport& report);

std::string format_divergence(const DivergenceSearch& search);
std::string divergence_json(const DivergenceSearch& search);

}  // namespace hsg
