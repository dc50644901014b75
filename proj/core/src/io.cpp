#include "hsg/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace hsg {

namespace {

using nlohmann::json;

constexpr std::string_view kHeader = "hypertable v1";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> to_index(std::string_view token) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

std::size_t index_or_throw(std::string_view token, std::size_t line) {
  auto value = to_index(token);
  if (!value) {
    throw ParseError(line, "expected an element index, got '" +
                               std::string(token) + "'");
  }
  return *value;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

const char* const kWitnessLabels[] = {"x", "y", "z"};

std::string describe_witnesses(const std::vector<Witness>& witnesses) {
  std::ostringstream os;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const Witness& w = witnesses[i];
    if (i != 0) os << "; ";
    os << "a=" << w.element;
    if (!w.elements.empty()) {
      os << " (";
      for (std::size_t k = 0; k < w.elements.size(); ++k) {
        if (k != 0) os << ' ';
        os << kWitnessLabels[k] << '=' << w.elements[k];
      }
      os << ')';
    }
  }
  return os.str();
}

json witness_json(const Witness& w) {
  json j{{"element", w.element}, {"positive", w.positive}};
  if (!w.elements.empty()) j["elements"] = w.elements;
  if (w.failing_subset) j["failing_subset"] = w.failing_subset->to_string();
  return j;
}

json classification_to_json(const ClassificationReport& report) {
  json classes = json::array();
  for (const ClassEntry& e : report.entries) {
    json routes{{"definitional", e.elementwise},
                {"subset_singletons", e.subset_singletons},
                {"subset_all", e.subset_all ? json(*e.subset_all) : json()},
                {"fuzzy", e.fuzzy}};
    json entry{{"class", class_name(e.cls)},
               {"holds", e.holds()},
               {"routes", routes},
               {"routes_agree", e.routes_agree}};
    json ew = json::array();
    for (const auto& w : e.elementwise_witnesses) ew.push_back(witness_json(w));
    json fw = json::array();
    for (const auto& w : e.fuzzy_witnesses) fw.push_back(witness_json(w));
    entry["definitional_witnesses"] = ew;
    entry["fuzzy_witnesses"] = fw;
    classes.push_back(entry);
  }
  return json{{"order", report.order},
              {"classes", classes},
              {"all_routes_agree", report.all_routes_agree()}};
}

std::string mode_label(const CensusReport& r) {
  if (r.mode == PopulationMode::Exhaustive) return "exhaustive";
  return "sampled";
}

std::string combination_label(std::size_t mask) {
  std::string s;
  for (std::size_t i = 0; i < kAllClasses.size(); ++i) {
    s += ((mask >> i) & 1U) ? '1' : '0';
  }
  return s;
}

}  // namespace

TableDocument parse_table_document(std::string_view text) {
  TableDocument doc;
  enum class Stage { Header, Order, Body } stage = Stage::Header;
  std::vector<bool> seen;
  std::size_t cell_count = 0;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    last_line = line_no;

    switch (stage) {
      case Stage::Header:
        if (line != kHeader) {
          if (line.starts_with("hypertable")) {
            throw ParseError(line_no, "unknown version tag '" +
                                          std::string(line) + "'");
          }
          throw ParseError(line_no, "expected header 'hypertable v1'");
        }
        stage = Stage::Order;
        break;

      case Stage::Order: {
        if (!line.starts_with("order:")) {
          throw ParseError(line_no, "expected 'order: n'");
        }
        const auto value = to_index(trim(line.substr(6)));
        if (!value || *value == 0 || *value > kMaxOrder) {
          throw ParseError(line_no, "order must be an integer in 1.." +
                                        std::to_string(kMaxOrder));
        }
        doc.order = *value;
        doc.cells.assign(doc.order * doc.order, {});
        seen.assign(doc.order * doc.order, false);
        stage = Stage::Body;
        break;
      }

      case Stage::Body: {
        if (line.starts_with("names:")) {
          if (cell_count != 0 || !doc.names.empty()) {
            throw ParseError(line_no, "names must precede the cells");
          }
          for (auto token : split_ws(line.substr(6))) {
            doc.names.emplace_back(token);
          }
          if (doc.names.size() != doc.order) {
            throw ParseError(line_no, "expected " + std::to_string(doc.order) +
                                          " names, got " +
                                          std::to_string(doc.names.size()));
          }
          break;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
          throw ParseError(line_no, "expected a cell line 'x y: ...'");
        }
        const auto operands = split_ws(line.substr(0, colon));
        if (operands.size() != 2) {
          throw ParseError(line_no, "a cell line starts with two operands");
        }
        const std::size_t x = index_or_throw(operands[0], line_no);
        const std::size_t y = index_or_throw(operands[1], line_no);
        if (x >= doc.order || y >= doc.order) {
          throw ParseError(line_no, "element out of range");
        }
        const std::size_t slot = x * doc.order + y;
        if (seen[slot]) {
          throw ParseError(line_no, "duplicate cell (" + std::to_string(x) +
                                        "," + std::to_string(y) + ")");
        }
        std::vector<Element> entries;
        for (auto token : split_ws(line.substr(colon + 1))) {
          const std::size_t e = index_or_throw(token, line_no);
          if (e >= doc.order) throw ParseError(line_no, "element out of range");
          if (!entries.empty() && e <= entries.back()) {
            throw ParseError(line_no,
                             "cell entries must be ascending and distinct");
          }
          entries.push_back(e);
        }
        if (entries.empty()) {
          throw ParseError(line_no, "empty hyperproduct at (" +
                                        std::to_string(x) + "," +
                                        std::to_string(y) + ")");
        }
        doc.cells[slot] = std::move(entries);
        seen[slot] = true;
        ++cell_count;
        break;
      }
    }
  }

  if (stage == Stage::Header) throw ParseError(0, "empty document");
  if (stage == Stage::Order) throw ParseError(last_line, "missing 'order: n'");
  if (cell_count != doc.order * doc.order) {
    throw ParseError(last_line, "wrong cell count: expected " +
                                    std::to_string(doc.order * doc.order) +
                                    ", got " + std::to_string(cell_count));
  }
  return doc;
}

HyperOp parse_table(std::string_view text) {
  return to_hyperop(parse_table_document(text));
}

std::string serialize_document(const TableDocument& doc) {
  std::ostringstream os;
  os << kHeader << '\n' << "order: " << doc.order << '\n';
  if (!doc.names.empty()) {
    os << "names:";
    for (const auto& name : doc.names) os << ' ' << name;
    os << '\n';
  }
  for (std::size_t i = 0; i < doc.cells.size(); ++i) {
    os << i / doc.order << ' ' << i % doc.order << ':';
    for (Element e : doc.cells[i]) os << ' ' << e;
    os << '\n';
  }
  return os.str();
}

std::string serialize_table(const HyperOp& h) {
  return serialize_document(document_of(h));
}

TableDocument document_of(const HyperOp& h) {
  TableDocument doc;
  doc.order = h.order();
  for (ElementSet cell : h.cells()) doc.cells.push_back(cell.members());
  return doc;
}

HyperOp to_hyperop(const TableDocument& doc) {
  std::vector<ElementSet> cells;
  cells.reserve(doc.cells.size());
  for (const auto& entries : doc.cells) {
    ElementSet cell;
    for (Element e : entries) cell.insert(e);
    cells.push_back(cell);
  }
  return HyperOp(doc.order, std::move(cells));
}

FuzzySubset parse_fuzzy_subset(std::string_view text, std::size_t order) {
  std::vector<FuzzyValue> values;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    values.push_back(FuzzyValue::parse(text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (values.size() != order) {
    throw InputError("expected " + std::to_string(order) +
                     " fuzzy values, got " + std::to_string(values.size()));
  }
  return FuzzySubset(std::move(values));
}

std::string format_classification(const ClassificationReport& report) {
  std::ostringstream os;
  os << "hypersemigroup of order " << report.order << '\n';
  for (const ClassEntry& e : report.entries) {
    os << class_name(e.cls) << ": " << (e.holds() ? "holds" : "fails")
       << " (definitional=" << yes_no(e.elementwise)
       << " subset-1=" << yes_no(e.subset_singletons)
       << " subset-2=" << (e.subset_all ? yes_no(*e.subset_all) : "skipped")
       << " fuzzy=" << yes_no(e.fuzzy)
       << ", routes " << (e.routes_agree ? "agree" : "DISAGREE") << ")\n";
    if (e.elementwise) {
      os << "  witnesses: " << describe_witnesses(e.elementwise_witnesses)
         << '\n';
    } else {
      os << "  failing element: " << e.elementwise_witnesses.front().element
         << '\n';
    }
    if (!e.fuzzy) {
      const Witness& w = e.fuzzy_witnesses.front();
      os << "  fuzzy failure: a=" << w.element
         << " f=" << w.failing_subset->to_string() << '\n';
    }
  }
  os << "all routes agree: " << yes_no(report.all_routes_agree()) << '\n';
  return os.str();
}

std::string classification_json(const ClassificationReport& report) {
  return classification_to_json(report).dump(2) + "\n";
}

std::string format_theorem_report(const TheoremReport& report) {
  std::ostringstream os;
  os << "theorem check, order " << report.order << ", " << report.trials
     << " random fuzzy subsets per class, seed " << report.seed << '\n';
  for (const TheoremCheck& c : report.checks) {
    os << class_name(c.cls) << ": " << (c.passed() ? "pass" : "FAIL")
       << " (class " << (c.verdict ? "holds" : "fails")
       << ", routes " << (c.routes_agree ? "agree" : "DISAGREE") << ", "
       << c.satisfied << "/" << c.trials << " random f satisfy the inequality";
    if (!c.verdict) {
      os << ", point-set violation "
         << (c.point_set_consistent ? "confirmed" : "NOT confirmed");
    }
    os << ")\n";
    if (c.counterexample) {
      os << "  counterexample f=" << c.counterexample->to_string() << '\n';
    }
  }
  os << (report.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string theorem_report_json(const TheoremReport& report) {
  json checks = json::array();
  for (const TheoremCheck& c : report.checks) {
    checks.push_back(json{
        {"class", class_name(c.cls)},
        {"holds", c.verdict},
        {"routes_agree", c.routes_agree},
        {"trials", c.trials},
        {"satisfied", c.satisfied},
        {"point_set_consistent", c.point_set_consistent},
        {"counterexample",
         c.counterexample ? json(c.counterexample->to_string()) : json()},
        {"passed", c.passed()}});
  }
  json j{{"order", report.order},
         {"trials", report.trials},
         {"seed", report.seed},
         {"checks", checks},
         {"passed", report.passed()}};
  return j.dump(2) + "\n";
}

std::string format_census(const CensusReport& r) {
  std::ostringstream os;
  os << "census order " << r.order << ' ' << mode_label(r);
  if (r.mode == PopulationMode::Sampled) {
    os << " count " << r.sample_count << " seed " << r.seed;
  }
  os << '\n';
  os << "tables: " << r.tables_seen << '\n';
  os << "hypersemigroups: " << r.hypersemigroups << '\n';
  for (RegularityClass c : kAllClasses) {
    os << class_name(c) << ": " << r.class_counts[index_of(c)] << '\n';
  }
  os << "combinations (regular, intra-regular, left-quasi-regular, "
        "right-quasi-regular, semisimple):\n";
  for (std::size_t m = 0; m < r.combination_counts.size(); ++m) {
    if (r.combination_counts[m] != 0) {
      os << "  " << combination_label(m) << ": " << r.combination_counts[m]
         << '\n';
    }
  }
  os << "left and right quasi-regular but not semisimple: "
     << r.quasi_regular_not_semisimple << '\n';
  os << "route disagreements: " << r.route_disagreements << '\n';
  if (r.first_disagreement) {
    os << "first disagreement at table #" << *r.first_disagreement << '\n';
  }
  return os.str();
}

std::string census_json(const CensusReport& r) {
  json combos = json::object();
  for (std::size_t m = 0; m < r.combination_counts.size(); ++m) {
    if (r.combination_counts[m] != 0) {
      combos[combination_label(m)] = r.combination_counts[m];
    }
  }
  json classes = json::object();
  for (RegularityClass c : kAllClasses) {
    classes[std::string(class_name(c))] = r.class_counts[index_of(c)];
  }
  json j{{"order", r.order},
         {"mode", mode_label(r)},
         {"tables", r.tables_seen},
         {"hypersemigroups", r.hypersemigroups},
         {"classes", classes},
         {"combinations", combos},
         {"quasi_regular_not_semisimple", r.quasi_regular_not_semisimple},
         {"route_disagreements", r.route_disagreements},
         {"first_disagreement", r.first_disagreement
                                    ? json(*r.first_disagreement)
                                    : json()}};
  if (r.mode == PopulationMode::Sampled) {
    j["sample_count"] = r.sample_count;
    j["seed"] = r.seed;
  }
  return j.dump(2) + "\n";
}

std::string format_divergence(const DivergenceSearch& search) {
  std::ostringstream os;
  os << "tables examined: " << search.tables_examined << '\n'
     << "non-associative examined: " << search.nonassociative_examined << '\n';
  if (!search.finding) {
    os << "budget exhausted, none found\n";
    return os.str();
  }
  const DivergenceFinding& f = *search.finding;
  os << "divergence: " << class_name(f.cls) << " at a=" << f.element
     << " (definitional=" << yes_no(f.definitional)
     << " fuzzy=" << yes_no(f.fuzzy) << ")\n"
     << serialize_table(f.table);
  return os.str();
}

std::string divergence_json(const DivergenceSearch& search) {
  json j{{"tables_examined", search.tables_examined},
         {"nonassociative_examined", search.nonassociative_examined}};
  if (search.finding) {
    const DivergenceFinding& f = *search.finding;
    j["finding"] = json{{"class", class_name(f.cls)},
                        {"element", f.element},
                        {"definitional", f.definitional},
                        {"fuzzy", f.fuzzy},
                        {"table", serialize_table(f.table)}};
  } else {
    j["finding"] = nullptr;
  }
  return j.dump(2) + "\n";
}

}  // namespace hsg
