#include "shiftlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

bool is_integer(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i >= s.size() || s.size() - i > 18) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string label_of(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorCode::ParseError, "labels must be strings or integers, got " + j.dump());
}

Face face_of(const std::vector<std::string>& set, const Labels& labels) {
  Face f;
  for (const auto& s : set) {
    const int v = labels.index(s);
    if (f.contains(v)) throw Error(ErrorCode::ParseError, "label " + s + " repeated in one set");
    f = f.with(v);
  }
  return f;
}

}  // namespace

Labels::Labels(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw Error(ErrorCode::ParseError, "label " + n + " listed twice");
  if (names_.size() > static_cast<std::size_t>(kMaxVertices))
    throw Error(ErrorCode::VertexOutOfRange, std::to_string(names_.size()) + " vertices exceed the limit");
  numeric_ = std::all_of(names_.begin(), names_.end(), is_integer);
}

Labels Labels::identity(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Labels(std::move(names));
}

int Labels::index(const std::string& label) const {
  const auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) throw Error(ErrorCode::ParseError, "unknown vertex label " + label);
  return static_cast<int>(it - names_.begin());
}

std::string Labels::format(Face f) const {
  std::string s = "{";
  bool first = true;
  f.for_each_vertex([&](int v) {
    s += (first ? "" : ",") + name(v);
    first = false;
  });
  return s + "}";
}

nlohmann::ordered_json Labels::label_json(int v) const {
  if (numeric_) return std::stoll(name(v));
  return name(v);
}

nlohmann::ordered_json Labels::to_json(Face f) const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  f.for_each_vertex([&](int v) { out.push_back(label_json(v)); });
  return out;
}

nlohmann::ordered_json Labels::order_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int v = 0; v < size(); ++v) out.push_back(label_json(v));
  return out;
}

RawSets parse_sets_text(std::string_view text) {
  RawSets raw;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto words = split_words(line);
    if (words.empty() || words[0][0] == '#') continue;
    if (words[0][0] == '!') {
      if (!raw.sets.empty())
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": directive after the first set");
      if (words[0] == "!order") {
        raw.order = std::vector<std::string>(words.begin() + 1, words.end());
      } else if (words[0] == "!r" && words.size() == 2 && is_integer(words[1])) {
        raw.rank = std::stoi(words[1]);
      } else {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": unknown directive " + words[0]);
      }
      continue;
    }
    raw.sets.push_back(words);
  }
  return raw;
}

RawSets parse_sets_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
    throw Error(ErrorCode::ParseError, "expected an object with a \"facets\" array");
  RawSets raw;
  if (j.contains("order")) {
    if (!j["order"].is_array()) throw Error(ErrorCode::ParseError, "\"order\" must be an array");
    raw.order.emplace();
    for (const auto& l : j["order"]) raw.order->push_back(label_of(l));
  }
  if (j.contains("r")) {
    if (!j["r"].is_number_integer()) throw Error(ErrorCode::ParseError, "\"r\" must be an integer");
    raw.rank = j["r"].get<int>();
  }
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) throw Error(ErrorCode::ParseError, "each facet must be an array");
    std::vector<std::string> set;
    for (const auto& l : f) set.push_back(label_of(l));
    raw.sets.push_back(std::move(set));
  }
  return raw;
}

RawSets parse_sets(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return parse_sets_json(text);
  return parse_sets_text(text);
}

RawSets read_sets(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_sets(buf.str());
}

Labels resolve_labels(const RawSets& raw) {
  if (raw.order) {
    Labels labels(*raw.order);
    for (const auto& set : raw.sets)
      for (const auto& s : set) labels.index(s);
    return labels;
  }
  std::set<std::string> seen;
  for (const auto& set : raw.sets) seen.insert(set.begin(), set.end());
  std::vector<std::string> names(seen.begin(), seen.end());
  if (std::all_of(names.begin(), names.end(), is_integer))
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) { return std::stoll(a) < std::stoll(b); });
  return Labels(std::move(names));
}

LabeledComplex build_complex(const RawSets& raw) {
  if (raw.sets.empty()) throw Error(ErrorCode::EmptyInput, "no facets");
  Labels labels = resolve_labels(raw);
  std::vector<Face> facets;
  for (const auto& set : raw.sets) facets.push_back(face_of(set, labels));
  return {Complex::from_facets(std::move(facets), labels.size()), labels};
}

LabeledComplex read_complex(const std::string& path) { return build_complex(read_sets(path)); }

SetFamily build_family(const RawSets& raw, const Labels& labels) {
  if (raw.order) {
    if (*raw.order != labels.names()) throw Error(ErrorCode::ParseError, "family order differs from the complex's order");
  }
  std::vector<Face> sets;
  for (const auto& set : raw.sets) sets.push_back(face_of(set, labels));
  if (raw.rank) return SetFamily::uniform(std::move(sets), *raw.rank, labels.size());
  return SetFamily(std::move(sets), labels.size());
}

std::string complex_to_text(const Complex& complex, const Labels& labels) {
  std::string out = "!order";
  for (const auto& n : labels.names()) out += " " + n;
  out += "\n";
  for (Face f : complex.facets()) {
    std::string line;
    f.for_each_vertex([&](int v) { line += (line.empty() ? "" : " ") + labels.name(v); });
    out += line + "\n";
  }
  return out;
}

nlohmann::ordered_json faces_json(const std::vector<Face>& faces, const Labels& labels) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (Face f : faces) out.push_back(labels.to_json(f));
  return out;
}

nlohmann::ordered_json complex_to_json(const Complex& complex, const Labels& labels) {
  return {{"n", complex.n_vertices()}, {"order", labels.order_json()}, {"facets", faces_json(complex.facets(), labels)}};
}

std::string family_to_text(const SetFamily& family, const Labels& labels) {
  std::string out = "!order";
  for (const auto& n : labels.names()) out += " " + n;
  out += "\n";
  if (family.is_uniform() && !family.empty()) out += "!r " + std::to_string(family.rank()) + "\n";
  for (Face f : family) {
    std::string line;
    f.for_each_vertex([&](int v) { line += (line.empty() ? "" : " ") + labels.name(v); });
    out += line + "\n";
  }
  return out;
}

nlohmann::ordered_json family_json(const SetFamily& family, const Labels& labels) { return faces_json(family.sets(), labels); }

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + tmp);
    out << contents;
    if (!out.flush()) throw Error(ErrorCode::ParseError, "cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error(ErrorCode::ParseError, "cannot move " + tmp + " to " + path);
  }
}

}  // namespace shiftlab
