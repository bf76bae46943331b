#pragma once

// JSON interchange for labelings:
//   {"family": "P"|"D", "n": int, "k": int, "center": int,
//    "rings": [[...outermost ring, positions q = 1..], [...], ...]}

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "magicpoly/properties.hpp"
#include "magicpoly/search.hpp"
#include "magicpoly/structure.hpp"
#include "magicpoly/verify.hpp"

namespace magicpoly {

class MalformedDocument : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LabelingDocument {
  StructureSpec spec;
  std::int64_t center = 0;
  std::vector<std::vector<std::int64_t>> rings;

  friend bool operator==(const LabelingDocument&, const LabelingDocument&) = default;
};

inline LabelingDocument to_document(const StructureSpec& spec, const Labeling& l) {
  return {spec, l[0], rings_of(spec, l)};
}

inline Labeling to_labeling(const LabelingDocument& doc) {
  return make_labeling(doc.spec, doc.center, doc.rings);
}

inline nlohmann::json to_json(const LabelingDocument& doc) {
  return nlohmann::json{{"family", family_name(doc.spec.family)},
                        {"n", doc.spec.n},
                        {"k", doc.spec.k},
                        {"center", doc.center},
                        {"rings", doc.rings}};
}

/// Parses and validates a document; ring shapes must match the structure.
inline LabelingDocument document_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw MalformedDocument("document must be a JSON object");
    LabelingDocument doc;
    const auto family = j.at("family").get<std::string>();
    if (family == "P") {
      doc.spec.family = Family::MagicP;
    } else if (family == "D") {
      doc.spec.family = Family::DegenerateD;
    } else {
      throw MalformedDocument("family must be \"P\" or \"D\", got \"" + family + "\"");
    }
    doc.spec.n = j.at("n").get<int>();
    doc.spec.k = j.at("k").get<int>();
    doc.center = j.at("center").get<std::int64_t>();
    doc.rings = j.at("rings").get<std::vector<std::vector<std::int64_t>>>();
    // Shape check.
    (void)to_labeling(doc);
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedDocument(e.what());
  } catch (const std::invalid_argument& e) {  // InvalidSpec, DomainMismatch
    throw MalformedDocument(e.what());
  }
}

inline LabelingDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedDocument(e.what());
  }
  return document_from_json(j);
}

/// Integral values as JSON numbers, others as "p/q" strings.
inline nlohmann::json exact_json(const Rational& r) {
  if (is_integral(r)) return r.numerator();
  return to_string(r);
}

inline nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) {
    violations.push_back(
        {{"segment", v.segment}, {"actual", v.actual}, {"expected", exact_json(v.expected)}});
  }
  return nlohmann::json{{"is_magic", r.is_magic},
                        {"bijective", r.bijective},
                        {"duplicates", r.duplicates},
                        {"out_of_range", r.out_of_range},
                        {"violations", violations},
                        {"center_value", r.center_value},
                        {"layer_sums", r.layer_sums}};
}

inline nlohmann::json to_json(const StructureSpec& spec, const MagicConstants& mc) {
  nlohmann::json sums = nlohmann::json::array();
  for (const auto& s : mc.layer_sums) sums.push_back(exact_json(s));
  nlohmann::json j{{"family", family_name(spec.family)},
                   {"n", spec.n},
                   {"k", spec.k},
                   {"points", point_count(spec)},
                   {"u", exact_json(mc.u)},
                   {"c", exact_json(mc.c)},
                   {"layer_sums", sums}};
  if (mc.stated_uniform_layer_sum) {
    j["stated_uniform_layer_sum"] = exact_json(*mc.stated_uniform_layer_sum);
  }
  return j;
}

inline nlohmann::json to_json(const StructureSpec& spec, const SearchResult& r,
                              bool with_solutions) {
  nlohmann::json j{{"status", to_string(r.status)},
                   {"count", r.count},
                   {"nodes_explored", r.nodes_explored}};
  if (with_solutions) {
    nlohmann::json sols = nlohmann::json::array();
    for (const auto& l : r.solutions) sols.push_back(to_json(to_document(spec, l)));
    j["solutions"] = sols;
  }
  return j;
}

}  // namespace magicpoly
