// shiftlab: invariants, shifting and intersecting-family verifiers for simplicial complexes.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/ekr.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/generators.hpp"
#include "shiftlab/homology.hpp"
#include "shiftlab/io.hpp"
#include "shiftlab/shift_properties.hpp"
#include "shiftlab/shifting.hpp"

using namespace shiftlab;
using Json = nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kViolation = 1, kInputError = 2, kLimit = 3 };

struct RunConfig {
  std::uint32_t prime = kDefaultPrime;
  std::string seeds_text;
  std::vector<std::uint64_t> seeds;
  std::size_t limit_faces = SearchLimits{}.max_faces;
  std::size_t limit_cross = SearchLimits{}.cross_max_faces;
  std::uint64_t budget = SearchLimits{}.node_budget;
  std::string format = "text";
  std::string out;

  SearchLimits limits() const { return {limit_faces, budget, limit_cross}; }
  PrimeField field() const { return PrimeField(prime); }
};

struct Result {
  Json json;
  int exit_code = kOk;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, "bad " + what + " '" + s + "'");
}

void resolve_seeds(RunConfig& cfg) {
  if (!cfg.seeds_text.empty()) {
    for (const auto& s : split_list(cfg.seeds_text)) cfg.seeds.push_back(parse_u64(s, "seed"));
    if (cfg.seeds.empty()) throw Error(ErrorCode::ParseError, "empty seed list");
    return;
  }
  std::uint64_t base = 1;
  if (const char* env = std::getenv("SHIFTLAB_SEED"); env && *env) base = parse_u64(env, "SHIFTLAB_SEED");
  cfg.seeds = {base, base + 1, base + 2};
}

VertexPrefix parse_prefix(const std::string& text, const Labels& labels, int default_length) {
  if (text.empty()) {
    if (default_length > labels.size()) throw Error(ErrorCode::HypothesisViolated, "not enough vertices for the prefix");
    return VertexPrefix::first(default_length);
  }
  std::vector<int> vs;
  for (const auto& l : split_list(text)) vs.push_back(labels.index(l));
  return VertexPrefix(vs);
}

Json prefix_json(const VertexPrefix& p, const Labels& labels) {
  Json out = Json::array();
  for (int v : p.vertices()) out.push_back(labels.label_json(v));
  return out;
}

Json vertices_json(const std::vector<int>& vs, const Labels& labels) {
  Json out = Json::array();
  for (int v : vs) out.push_back(labels.label_json(v));
  return out;
}

Json header(const std::string& command, const LabeledComplex& lc) {
  Json j;
  j["command"] = command;
  j["n"] = lc.complex.n_vertices();
  j["order"] = lc.labels.order_json();
  return j;
}

Json steps_json(const std::vector<ShiftStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) out.push_back({{"tag", s.tag}, {"family_size", s.family_size}, {"changed", s.changed}});
  return out;
}

// ---- text rendering ------------------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool all_scalars(const Json& a) {
  for (const auto& e : a)
    if (e.is_structured()) return false;
  return true;
}

std::string set_text(const Json& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + scalar_text(a[i]);
  return s + "}";
}

void render(std::ostream& os, const Json& j, const std::string& indent) {
  for (const auto& [key, v] : j.items()) {
    os << indent << key << ":";
    if (v.is_object()) {
      os << "\n";
      render(os, v, indent + "  ");
    } else if (v.is_array() && all_scalars(v)) {
      for (const auto& e : v) os << " " << scalar_text(e);
      os << "\n";
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_array() && all_scalars(e); })) {
      for (const auto& e : v) os << " " << set_text(e);
      os << "\n";
    } else if (v.is_array()) {
      os << "\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          os << indent << "  -\n";
          render(os, e, indent + "    ");
        } else if (e.is_array()) {
          os << indent << "  -";
          for (const auto& x : e) os << " " << (x.is_array() ? set_text(x) : scalar_text(x));
          os << "\n";
        } else {
          os << indent << "  - " << scalar_text(e) << "\n";
        }
      }
    } else {
      os << " " << scalar_text(v) << "\n";
    }
  }
}

// ---- commands ------------------------------------------------------------------------

Result cmd_info(const RunConfig&, const std::string& path) {
  const auto lc = read_complex(path);
  const Complex& c = lc.complex;
  Json j = header("info", lc);
  j["facets"] = faces_json(c.facets(), lc.labels);
  j["dim"] = c.dim();
  j["f_vector"] = c.f_vector();
  j["min_facet_size"] = c.min_facet_size();
  j["near_cone_apexes"] = vertices_json(near_cone_apexes(c), lc.labels);
  j["shifted_prefix"] = prefix_json(VertexPrefix::first(maximal_shifted_prefix(c)), lc.labels);
  j["is_shifted"] = is_shifted(c);
  j["verdict"] = "ok";
  return {j};
}

Result cmd_depth(const RunConfig& cfg, const std::string& path) {
  const auto lc = read_complex(path);
  const auto rep = depth(lc.complex, cfg.field(), true);
  Json j = header("depth", lc);
  j["depth"] = rep.depth;
  j["is_cm"] = rep.is_cm;
  j["min_facet_dim"] = rep.min_facet_dim;
  j["has_facet_depth"] = rep.has_facet_depth;
  j["reduced_betti"] = reduced_betti_numbers(lc.complex, cfg.field());
  if (rep.witness)
    j["witness"] = {{"face", lc.labels.to_json(rep.witness->face)}, {"index", rep.witness->index}};
  else
    j["witness"] = nullptr;
  j["verdict"] = rep.is_cm ? "cohen-macaulay" : "not-cohen-macaulay";
  return {j};
}

Result cmd_vd(const RunConfig&, const std::string& path) {
  const auto lc = read_complex(path);
  const auto res = is_vertex_decomposable(lc.complex);
  Json j = header("vd", lc);
  Json cert = Json::array();
  for (int v : res.certificate) cert.push_back(v == VdResult::kSimplexLeaf ? Json(nullptr) : lc.labels.label_json(v));
  j["decomposable"] = res.decomposable;
  j["certificate"] = cert;
  j["certificate_verified"] = res.decomposable ? verify_vd_certificate(lc.complex, res.certificate) : false;
  j["verdict"] = res.decomposable ? "decomposable" : "not-decomposable";
  return {j, res.decomposable && !j["certificate_verified"].get<bool>() ? kViolation : kOk};
}

ShiftPair parse_pair(const std::string& text, const Labels& labels) {
  const auto parts = split_list(text);
  if (parts.size() != 2) throw Error(ErrorCode::ParseError, "--pair takes two labels v,w");
  return {labels.index(parts[0]), labels.index(parts[1])};
}

Result cmd_shift(const RunConfig& cfg, const std::string& path, const std::string& mode, const std::string& family_path,
                 const std::string& pair_text) {
  const auto lc = read_complex(path);
  const Labels& labels = lc.labels;
  const int n = lc.complex.n_vertices();
  Json j = header("shift", lc);
  j["mode"] = mode;
  std::vector<ShiftStep> steps;

  if (!family_path.empty()) {
    const SetFamily family = build_family(read_sets(family_path), labels);
    SetFamily shifted;
    if (mode == "alg") {
      const auto res = alg_shift_family_consensus(family, cfg.seeds, cfg.field());
      shifted = res.value;
      j["seeds_used"] = res.seeds_used;
      j["unanimous"] = res.unanimous;
      for (auto s : res.seeds_used) steps.push_back({"algebraic(" + std::to_string(s) + ")", family.size(), 0});
    } else if (!pair_text.empty()) {
      const auto [v, w] = parse_pair(pair_text, labels);
      shifted = comb_shift(family, v, w);
      steps.push_back({"Shift_{" + labels.name(v) + "<-" + labels.name(w) + "}", family.size(), 0});
    } else {
      auto trace = stabilize(family, all_increasing_pairs(n), false);
      shifted = trace.outcome;
      steps = trace.steps;
    }
    j["family"] = family_json(shifted, labels);
    j["is_shifted"] = is_shifted(shifted);
  } else {
    Complex shifted = lc.complex;
    if (mode == "alg") {
      const auto res = alg_shift_complex_consensus(lc.complex, cfg.seeds, cfg.field());
      shifted = res.value;
      j["seeds_used"] = res.seeds_used;
      j["unanimous"] = res.unanimous;
      for (auto s : res.seeds_used) steps.push_back({"algebraic(" + std::to_string(s) + ")", lc.complex.all_faces().size(), 0});
    } else if (!pair_text.empty()) {
      const auto [v, w] = parse_pair(pair_text, labels);
      const auto res = comb_shift_complex(lc.complex, v, w);
      shifted = res.complex;
      j["reclosed"] = res.reclosed;
    } else {
      // Sweep every Shift_{v<-w} with v < w until nothing moves.
      bool moved = true;
      while (moved) {
        moved = false;
        for (auto [v, w] : all_increasing_pairs(n)) {
          const Complex next = comb_shift_complex(shifted, v, w).complex;
          if (next == shifted) continue;
          std::size_t changed = 0;
          for (Face f : next.all_faces()) changed += shifted.contains(f) ? 0 : 1;
          steps.push_back({"Shift_{" + labels.name(v) + "<-" + labels.name(w) + "}", next.all_faces().size(), changed});
          shifted = next;
          moved = true;
        }
      }
    }
    j["facets"] = faces_json(shifted.facets(), labels);
    j["f_vector"] = shifted.f_vector();
    j["is_shifted"] = is_shifted(shifted);
  }
  j["trace"] = steps_json(steps);
  j["verdict"] = "ok";
  return {j};
}

Result cmd_shift_props(const RunConfig& cfg, const std::string& path, const std::string& family_path) {
  const auto lc = read_complex(path);
  std::optional<SetFamily> family;
  if (!family_path.empty()) family = build_family(read_sets(family_path), lc.labels);
  const auto rep = verify_shift_properties(lc.complex, family, cfg.seeds, cfg.field());
  Json j = header("shift-props", lc);
  Json items = Json::array();
  for (const auto& i : rep.items)
    items.push_back({{"id", i.id}, {"summary", i.summary}, {"status", to_string(i.status)}, {"detail", i.detail}});
  j["seeds"] = cfg.seeds;
  j["items"] = items;
  j["seeds_agree"] = rep.seeds_agree;
  if (rep.shifted) j["facets"] = faces_json(rep.shifted->facets(), lc.labels);
  const bool ok = rep.all_passed();
  j["verdict"] = ok ? "pass" : "fail";
  return {j, ok ? kOk : kViolation};
}

Result cmd_ekr(const RunConfig& cfg, const std::string& path, int r, bool strict) {
  const auto lc = read_complex(path);
  const auto rep = check_ekr(lc.complex, r, strict, cfg.limits());
  Json j = header("ekr", lc);
  j["r"] = r;
  j["max_size"] = rep.max_size;
  j["star_bound"] = rep.star_bound;
  j["best_star_vertex"] = rep.best_star_vertex >= 0 ? lc.labels.label_json(rep.best_star_vertex) : Json(nullptr);
  j["holds_ekr"] = rep.holds_ekr;
  j["strict"] = rep.strict ? Json(*rep.strict) : Json(nullptr);
  j["nonstar_max_size"] = rep.nonstar_max_size ? Json(*rep.nonstar_max_size) : Json(nullptr);
  Json witness = Json::array();
  for (const auto& w : rep.witnesses) witness.push_back(family_json(w, lc.labels));
  j["witness"] = witness;
  int code = kOk;
  if (!rep.holds_ekr) {
    j["verdict"] = "violated";
    code = kViolation;
  } else if (rep.strict && !*rep.strict) {
    j["verdict"] = "not-strict";
    code = kViolation;
  } else {
    j["verdict"] = "holds";
  }
  return {j, code};
}

Result cmd_hm(const RunConfig& cfg, const std::string& path, int r, const std::string& prefix_text, bool unchecked) {
  const auto lc = read_complex(path);
  const VertexPrefix prefix = parse_prefix(prefix_text, lc.labels, r + 1);
  const auto rep = check_stability(lc.complex, r, prefix, cfg.limits(), !unchecked);
  Json j = header("hm", lc);
  j["r"] = r;
  j["prefix"] = prefix_json(prefix, lc.labels);
  j["hypotheses_hold"] = rep.hypotheses_hold;
  j["violated_hypotheses"] = rep.violated;
  j["beta"] = rep.beta;
  j["hm_bound"] = rep.hm_bound;
  j["observed_max_nonstar"] = rep.observed_max_nonstar;
  j["witness"] = family_json(rep.observed_witness, lc.labels);
  j["extremal_family"] = family_json(rep.extremal_family, lc.labels);
  j["extremal_size"] = rep.extremal_family.size();
  j["extremal_valid"] = rep.extremal_valid;
  int code = kOk;
  if (!rep.hypotheses_hold) {
    j["verdict"] = "unchecked";
  } else if (!rep.holds()) {
    j["verdict"] = "violated";
    code = kViolation;
  } else {
    j["verdict"] = "holds";
  }
  return {j, code};
}

Result cmd_cross(const RunConfig& cfg, const std::string& path, int r, const std::string& prefix_text, bool shadow,
                 bool unchecked) {
  const auto lc = read_complex(path);
  const VertexPrefix prefix = parse_prefix(prefix_text, lc.labels, r);
  const auto rep = shadow ? check_cross_shadow(lc.complex, r, prefix, cfg.limits(), !unchecked)
                          : check_cross_classic(lc.complex, r, prefix, cfg.limits(), !unchecked);
  Json j = header("cross", lc);
  j["r"] = r;
  j["variant"] = shadow ? "shadow" : "classic";
  j["prefix"] = prefix_json(prefix, lc.labels);
  j["hypotheses_hold"] = rep.hypotheses_hold;
  j["violated_hypotheses"] = rep.violated;
  j["gamma"] = rep.gamma;
  j["bound"] = rep.bound;
  j["observed_max_sum"] = rep.observed_max_sum;
  j["witness"] = {{"a", family_json(rep.witness_a, lc.labels)}, {"b", family_json(rep.witness_b, lc.labels)}};
  int code = kOk;
  if (!rep.hypotheses_hold) {
    j["verdict"] = "unchecked";
  } else if (!rep.holds()) {
    j["verdict"] = "violated";
    code = kViolation;
  } else {
    j["verdict"] = "holds";
  }
  return {j, code};
}

Result cmd_hibi(const RunConfig&, const std::string& path, int s, int r) {
  const auto lc = read_complex(path);
  const auto res = hibi_injection(lc.complex, s, r);
  const int d = lc.complex.min_facet_size();
  const bool guaranteed = s <= r && r <= d - s;
  Json j = header("hibi", lc);
  j["s"] = s;
  j["r"] = r;
  j["min_facet_size"] = d;
  j["guaranteed"] = guaranteed;
  if (res.injection) {
    Json map = Json::array();
    for (const auto& [a, b] : *res.injection) map.push_back(Json::array({lc.labels.to_json(a), lc.labels.to_json(b)}));
    j["injection"] = map;
    j["verdict"] = "injection";
    return {j};
  }
  j["injection"] = nullptr;
  j["witness"] = {{"left", faces_json(res.violator->left, lc.labels)},
                  {"neighbourhood", faces_json(res.violator->neighbourhood, lc.labels)}};
  j["verdict"] = guaranteed ? "violated" : "no-injection";
  return {j, guaranteed ? kViolation : kOk};
}

Result cmd_reduce(const RunConfig& cfg, const std::string& path, const std::string& family_path, const std::string& apex) {
  const auto lc = read_complex(path);
  const Labels& labels = lc.labels;
  const SetFamily family = build_family(read_sets(family_path), labels);
  const auto trace = reduction_trace(lc.complex, family, labels.index(apex), cfg.seeds, cfg.field());
  Json j = header("reduce", lc);
  j["apex"] = apex;
  j["trace"] = steps_json(trace.shifting.steps);
  j["stabilized"] = family_json(trace.shifting.outcome, labels);
  if (trace.outcome == ReductionOutcome::BoundarySpanned) {
    j["outcome"] = "boundary-spanned";
    j["boundary_witness"] = trace.boundary_witness ? labels.to_json(*trace.boundary_witness) : Json(nullptr);
    if (trace.algebraic_shift) j["algebraic_shift"] = family_json(*trace.algebraic_shift, labels);
    j["algebraic_shift_keeps_empty_common"] = trace.algebraic_shift_keeps_empty_common;
  } else {
    j["outcome"] = "blocked-shift";
    j["blocking_pair"] = Json::array({labels.label_json(trace.blocking_pair->first), labels.label_json(trace.blocking_pair->second)});
    Json phi = Json::array();
    for (const auto& [a, b] : trace.phi) phi.push_back(Json::array({labels.to_json(a), labels.to_json(b)}));
    j["phi"] = phi;
    j["phi_injective"] = trace.phi_injective;
    j["phi_into_link"] = trace.phi_into_link;
    j["link_face_count"] = trace.link_face_count;
    j["facet"] = trace.facet ? labels.to_json(*trace.facet) : Json(nullptr);
    j["witness"] = trace.missing_subset ? labels.to_json(*trace.missing_subset) : Json(nullptr);
    j["b_t_size"] = trace.b_t_size;
    j["c_t_size"] = trace.c_t_size;
    j["b_t_c_t_cross_intersecting"] = trace.b_t_c_t_cross_intersecting;
  }
  const bool ok = trace.verified();
  j["verdict"] = ok ? "verified" : "failed";
  return {j, ok ? kOk : kViolation};
}

// ---- generators ----------------------------------------------------------------------

struct GenParams {
  std::string kind;
  int n = 0, k = 0, t = 0, dim = 1, isolated = 0, coloops = 0;
  double density = 0.5;
  std::uint64_t seed = 1;
  std::string parts, word, sizes, input;
};

std::string edges_text(const Graph& g) {
  std::string s;
  for (auto [u, v] : g.edges()) s += (s.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
  return s.empty() ? "(none)" : s;
}

std::vector<int> parse_ints(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const auto& s : split_list(text)) out.push_back(static_cast<int>(parse_u64(s, what)));
  return out;
}

// Returns the complex, its labels and certificate lines.
std::tuple<Complex, Labels, Json> generate(const GenParams& p) {
  Json meta;
  meta["kind"] = p.kind;
  auto plain = [](const Complex& c) { return Labels::identity(c.n_vertices()); };
  if (p.kind == "chordal") {
    const auto g = gen_chordal(p.n, p.isolated, p.seed);
    meta["edges"] = edges_text(g.graph);
    meta["elimination_order"] = g.elimination_order;
    const Complex c = independence_complex(g.graph);
    return {c, plain(c), meta};
  }
  if (p.kind == "union") {
    std::vector<GraphPart> parts;
    for (const auto& item : split_list(p.parts)) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "part '" + item + "' needs kind:size");
      const std::string kind = item.substr(0, colon);
      const int size = static_cast<int>(parse_u64(item.substr(colon + 1), "part size"));
      if (kind == "path") parts.push_back({PartKind::Path, size});
      else if (kind == "cycle") parts.push_back({PartKind::Cycle, size});
      else if (kind == "complete") parts.push_back({PartKind::Complete, size});
      else throw Error(ErrorCode::ParseError, "unknown part kind " + kind);
    }
    const Graph g = gen_disjoint_union(parts);
    meta["edges"] = edges_text(g);
    const Complex c = independence_complex(g);
    return {c, plain(c), meta};
  }
  if (p.kind == "threshold") {
    std::vector<ThresholdStep> word;
    for (char ch : p.word) {
      if (ch == 'i') word.push_back(ThresholdStep::Isolated);
      else if (ch == 'd') word.push_back(ThresholdStep::Dominating);
      else throw Error(ErrorCode::ParseError, "threshold words use i and d");
    }
    if (word.empty()) throw Error(ErrorCode::BadSize, "empty creation word");
    const auto g = gen_threshold(word);
    meta["edges"] = edges_text(g.graph);
    meta["creation_word"] = p.word;
    meta["label"] = g.label;
    const Complex c = independence_complex(g.graph);
    return {c, plain(c), meta};
  }
  if (p.kind == "matroid") {
    const Complex c = gen_uniform_matroid(p.n, p.k, p.coloops);
    meta["coloops"] = p.coloops;
    return {c, plain(c), meta};
  }
  if (p.kind == "borg") {
    const Complex c = gen_borg_shape(p.t, parse_ints(p.sizes, "simplex size"));
    return {c, plain(c), meta};
  }
  if (p.kind == "cone") {
    if (p.input.empty()) throw Error(ErrorCode::ParseError, "cone needs --input");
    const auto base = read_complex(p.input);
    std::vector<std::string> names;
    for (int i = 0; i < p.t; ++i) names.push_back("c" + std::to_string(i));
    for (const auto& l : base.labels.names()) names.push_back(l);
    const Complex c = gen_cone(base.complex, p.t);
    return {c, Labels(names), meta};
  }
  if (p.kind == "random") {
    const Complex c = gen_random_complex(p.n, p.dim, p.density, p.seed);
    return {c, plain(c), meta};
  }
  if (p.kind == "simplex") {
    const Complex c = Complex::simplex(p.n);
    return {c, plain(c), meta};
  }
  if (p.kind == "boundary") {
    const Complex c = Complex::simplex_boundary(p.n);
    return {c, plain(c), meta};
  }
  throw Error(ErrorCode::ParseError, "unknown generator " + p.kind);
}

std::string generated_text(const Complex& c, const Labels& labels, const Json& meta) {
  std::string out;
  for (const auto& [key, v] : meta.items()) out += "# " + key + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return out + complex_to_text(c, labels);
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ResourceLimit:
    case ErrorCode::GenericityFailure:
    case ErrorCode::NonTerminating:
      return kLimit;
    default:
      return kInputError;
  }
}

void emit(const RunConfig& cfg, const std::string& contents) {
  if (cfg.out.empty()) {
    std::cout << contents;
    std::cout.flush();
  } else {
    write_file_atomic(cfg.out, contents);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial complex invariants, shifting and intersecting-family verifiers"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--prime", cfg.prime, "Field characteristic (odd prime below 2^31)")->default_val(kDefaultPrime);
  app.add_option("--seeds", cfg.seeds_text, "Comma-separated seeds (default: SHIFTLAB_SEED, +1, +2)");
  app.add_option("--limit-faces", cfg.limit_faces, "Face limit for intersecting-family searches")->default_val(cfg.limit_faces);
  app.add_option("--limit-cross", cfg.limit_cross, "Face limit for cross-intersecting enumeration")->default_val(cfg.limit_cross);
  app.add_option("--budget", cfg.budget, "Search node budget")->default_val(cfg.budget);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}))->default_val("text");
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");

  std::string path, family_path, mode = "alg", pair, prefix, apex;
  int r = 0, s = 0;
  bool strict = false, shadow = false, unchecked = false;
  GenParams gen;

  auto* info = app.add_subcommand("info", "Basic invariants");
  info->add_option("complex", path)->required();
  auto* dep = app.add_subcommand("depth", "Depth, Cohen-Macaulayness and reduced Betti numbers");
  dep->add_option("complex", path)->required();
  auto* vd = app.add_subcommand("vd", "Vertex decomposability with a shedding certificate");
  vd->add_option("complex", path)->required();
  auto* shift = app.add_subcommand("shift", "Combinatorial or algebraic shifting");
  shift->add_option("complex", path)->required();
  shift->add_option("--mode", mode)->check(CLI::IsMember({"comb", "alg"}))->default_val("alg");
  shift->add_option("--family", family_path, "Shift this family of faces instead of the complex");
  shift->add_option("--pair", pair, "Single Shift_{v<-w} as v,w (comb mode)");
  auto* props = app.add_subcommand("shift-props", "Algebraic-shifting property suite");
  props->add_option("complex", path)->required();
  props->add_option("--family", family_path);
  auto* ekr = app.add_subcommand("ekr", "Maximum intersecting families against the star bound");
  ekr->add_option("complex", path)->required();
  ekr->add_option("--r", r)->required();
  ekr->add_flag("--strict", strict, "Also decide strictness");
  auto* hm = app.add_subcommand("hm", "Stability bound for families with empty common intersection");
  hm->add_option("complex", path)->required();
  hm->add_option("--r", r)->required();
  hm->add_option("--prefix", prefix, "v_1,...,v_{r+1} (default: first r+1 vertices)");
  hm->add_flag("--unchecked", unchecked, "Run even when the hypotheses fail; asserts nothing");
  auto* cross = app.add_subcommand("cross", "Cross-intersecting pair bounds");
  cross->add_option("complex", path)->required();
  cross->add_option("--r", r)->required();
  cross->add_option("--prefix", prefix, "v_1,...,v_r (default: first r vertices)");
  cross->add_flag("--shadow", shadow, "A of (r-1)-faces containing the shadow of B");
  cross->add_flag("--unchecked", unchecked, "Run even when the hypotheses fail; asserts nothing");
  auto* hibi = app.add_subcommand("hibi", "Inclusion matching F_s -> F_r");
  hibi->add_option("complex", path)->required();
  hibi->add_option("--s", s)->required();
  hibi->add_option("--r", r)->required();
  auto* reduce = app.add_subcommand("reduce", "Reduction trace towards the shifted case");
  reduce->add_option("complex", path)->required();
  reduce->add_option("family", family_path)->required();
  reduce->add_option("--apex", apex)->required();
  auto* g = app.add_subcommand("gen", "Generate a complex");
  g->add_option("kind", gen.kind)
      ->required()
      ->check(CLI::IsMember({"chordal", "union", "threshold", "matroid", "borg", "cone", "random", "simplex", "boundary"}));
  g->add_option("--n", gen.n);
  g->add_option("--k", gen.k);
  g->add_option("--t", gen.t);
  g->add_option("--dim", gen.dim);
  g->add_option("--isolated", gen.isolated);
  g->add_option("--coloops", gen.coloops);
  g->add_option("--density", gen.density);
  g->add_option("--seed", gen.seed);
  g->add_option("--parts", gen.parts, "e.g. path:4,cycle:5,complete:3");
  g->add_option("--word", gen.word, "threshold creation word over {i,d}");
  g->add_option("--sizes", gen.sizes, "simplex vertex counts, e.g. 3,3");
  g->add_option("--input", gen.input, "base complex for cone");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    resolve_seeds(cfg);
    (void)cfg.field();  // rejects a non-prime --prime before any work
    if (*g) {
      auto [c, labels, meta] = generate(gen);
      if (cfg.format == "json") {
        Json j = complex_to_json(c, labels);
        j["metadata"] = meta;
        emit(cfg, j.dump(2) + "\n");
      } else {
        emit(cfg, generated_text(c, labels, meta));
      }
      return kOk;
    }
    Result res;
    if (*info) res = cmd_info(cfg, path);
    else if (*dep) res = cmd_depth(cfg, path);
    else if (*vd) res = cmd_vd(cfg, path);
    else if (*shift) res = cmd_shift(cfg, path, mode, family_path, pair);
    else if (*props) res = cmd_shift_props(cfg, path, family_path);
    else if (*ekr) res = cmd_ekr(cfg, path, r, strict);
    else if (*hm) res = cmd_hm(cfg, path, r, prefix, unchecked);
    else if (*cross) res = cmd_cross(cfg, path, r, prefix, shadow, unchecked);
    else if (*hibi) res = cmd_hibi(cfg, path, s, r);
    else if (*reduce) res = cmd_reduce(cfg, path, family_path, apex);
    std::ostringstream os;
    if (cfg.format == "json")
      os << res.json.dump(2) << "\n";
    else
      render(os, res.json, "");
    emit(cfg, os.str());
    return res.exit_code;
  } catch (const Error& e) {
    if (cfg.format == "json") {
      Json j = {{"verdict", "error"}, {"error", to_string(e.code())}, {"message", e.what()}};
      std::cout << j.dump(2) << "\n";
    }
    std::cerr << "shiftlab: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::logic_error& e) {
    std::cerr << "shiftlab: internal check failed: " << e.what() << "\n";
    return kViolation;
  }
}
