#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "shiftlab/complex.hpp"

namespace shiftlab {

// Vertex names: internal vertex i is printed as names[i].
class Labels {
 public:
  Labels() = default;
  explicit Labels(std::vector<std::string> names);
  // "0", "1", ..., "n-1".
  static Labels identity(int n);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
  // Throws ParseError for unknown labels.
  int index(const std::string& label) const;
  bool numeric() const { return numeric_; }

  std::string format(Face f) const;  // "{1,2,3}"
  nlohmann::ordered_json to_json(Face f) const;
  nlohmann::ordered_json label_json(int v) const;
  nlohmann::ordered_json order_json() const;

 private:
  std::vector<std::string> names_;
  bool numeric_ = false;
};

// Sets as read from a facet or family file, before labels are resolved.
struct RawSets {
  std::optional<std::vector<std::string>> order;
  std::optional<int> rank;  // "!r k"
  std::vector<std::vector<std::string>> sets;
};

// '#' comments, blank lines skipped, "!order ..." and "!r k" directives before the first set.
RawSets parse_sets_text(std::string_view text);
// {"order": [...], "facets": [[...], ...]} with an optional "r"; labels may be strings or integers.
RawSets parse_sets_json(std::string_view text);
// JSON when the first non-blank character is '{'.
RawSets parse_sets(std::string_view text);
RawSets read_sets(const std::string& path);

// Explicit order when given, else labels sorted (numerically when all are integers).
Labels resolve_labels(const RawSets& raw);

struct LabeledComplex {
  Complex complex;
  Labels labels;
};

LabeledComplex build_complex(const RawSets& raw);
LabeledComplex read_complex(const std::string& path);
// Family members map through the complex's labels; "!r k" makes the family k-uniform.
SetFamily build_family(const RawSets& raw, const Labels& labels);

std::string complex_to_text(const Complex& complex, const Labels& labels);
nlohmann::ordered_json complex_to_json(const Complex& complex, const Labels& labels);
std::string family_to_text(const SetFamily& family, const Labels& labels);
nlohmann::ordered_json faces_json(const std::vector<Face>& faces, const Labels& labels);
nlohmann::ordered_json family_json(const SetFamily& family, const Labels& labels);

// Writes through a temporary file renamed into place. Throws ParseError on I/O failure.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace shiftlab
