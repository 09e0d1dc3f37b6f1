#pragma once

// Command-line front end. run() is callable in-process so the corpus runner
// and the tests drive exactly the code the executable uses.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minlines/json_io.hpp"
#include "minlines/minlines.hpp"

#ifndef MINLINES_CORPUS_PATH
#define MINLINES_CORPUS_PATH "data/corpus.txt"
#endif

namespace minlines::cli {

using Json = nlohmann::ordered_json;

struct Options {
  std::string type;
  std::string levi;
  bool has_levi = false;
  int node = 0;
  std::string word;
  bool has_word = false;
  std::string peak_order = "standard";
  std::string blocks;
  std::string compare;
  std::string filter;
  std::string file = MINLINES_CORPUS_PATH;
  std::string kind = "all";
  bool all_curves = false;
  bool table = false;
};

struct Outcome {
  Json body;
  int code = 0;
};

/// "3", "a3", "s3" or "alpha3" -> 3.
inline int parse_node_name(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  std::size_t p = 0;
  while (p < t.size() && std::isalpha(static_cast<unsigned char>(t[p]))) ++p;
  const std::string prefix = t.substr(0, p);
  detail::require(prefix.empty() || prefix == "a" || prefix == "s" || prefix == "alpha",
                  "bad simple root name '" + text + "'");
  detail::require(p < t.size() && t.size() - p <= 3, "bad simple root name '" + text + "'");
  for (std::size_t q = p; q < t.size(); ++q)
    detail::require(std::isdigit(static_cast<unsigned char>(t[q])), "bad simple root name '" + text + "'");
  return std::stoi(t.substr(p));
}

inline std::vector<int> parse_node_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(parse_node_name(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

inline ParabolicSet parse_levi(const std::string& text, const RootSystem& R) {
  ParabolicSet s(R.rank());
  if (text == "none" || text == "{}") return s;
  for (int k : parse_node_list(text)) {
    R.check_node(k);
    s.insert(k);
  }
  return s;
}

/// Whitespace tokenizer with double-quote grouping.
inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, any = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      any = true;
    } else if (!quoted && std::isspace(static_cast<unsigned char>(c))) {
      if (any) out.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += c;
      any = true;
    }
  }
  detail::require(!quoted, "unterminated quote in '" + line + "'");
  if (any) out.push_back(cur);
  return out;
}

class Context {
 public:
  explicit Context(const Options& o) : opt(o) {
    detail::require(!o.type.empty(), "--type is required");
    sys = RootSystem::build(o.type);
  }

  FlagSpace space() const {
    detail::require(opt.node != 0 || opt.has_levi, "give the parabolic with --node or --levi");
    detail::require(opt.node == 0 || !opt.has_levi, "--node and --levi are mutually exclusive");
    if (opt.node != 0) return FlagSpace::maximal(sys, opt.node);
    return FlagSpace(sys, parse_levi(opt.levi, *sys));
  }

  Word word() const {
    detail::require(opt.has_word, "--word is required");
    Word w = parse_word(opt.word);
    for (int k : w) sys->check_node(k);
    return w;
  }

  Word reduced_word() const {
    Word w = word();
    require_reduced(sys, w);
    return w;
  }

  /// Validates w against --node when given (w must lie in W^{P^node}).
  void check_node_space(const WeylElement& w) const {
    if (opt.node == 0) return;
    const FlagSpace sp = FlagSpace::maximal(sys, opt.node);
    detail::require(is_min_coset_rep(w, sp.levi()),
                    "w is not a minimal coset representative for P^" + std::to_string(opt.node));
  }

  std::vector<int> peak_order(const Quiver& q) const {
    if (opt.peak_order == "standard") return standard_peak_order(q);
    return parse_node_list(opt.peak_order);
  }

  const Options& opt;
  RootSystemPtr sys;
};

inline Outcome cmd_root_system(const Context& c) {
  const RootSystem& R = *c.sys;
  Json j;
  j["type"] = R.type().to_string();
  j["rank"] = R.rank();
  j["cartan"] = R.cartan_matrix();
  j["num_positive_roots"] = R.num_positive_roots();
  Json roots = Json::array();
  for (const auto& b : R.positive_roots()) roots.push_back(json::coeffs(b));
  j["positive_roots"] = roots;
  if (R.irreducible()) {
    const Root top = R.highest_root();
    j["highest_root"] = json::coeffs(top);
    j["highest_root_height"] = height(R.coroot(top));
    std::vector<int> mins;
    for (int i = 1; i <= R.rank(); ++i)
      if (R.is_minuscule_node(i)) mins.push_back(i);
    j["minuscule_nodes"] = mins;
  }
  return {j, 0};
}

inline Outcome cmd_weyl(const Context& c) {
  const Word word = c.word();
  auto [w, reduced] = evaluate_word(c.sys, word);
  const auto inv = parabolic_invariants(w);
  Json j;
  j["word"] = word;
  j["reduced"] = reduced;
  j["element"] = json::element(w);
  j["length"] = w.length();
  Json invs = Json::array();
  for (const auto& g : w.inversion_set()) invs.push_back(json::coeffs(g));
  j["inversion_set"] = invs;
  j["left_descents"] = json::nodes(left_descents(w));
  j["right_descents"] = json::nodes(upper_set(w).complement());
  j["support"] = json::nodes(support(w));
  j["I_upper"] = json::nodes(inv.upper);
  j["I_lower"] = json::nodes(inv.lower);
  j["perp"] = json::nodes(inv.perp);
  if (c.sys->irreducible() && c.sys->simply_laced())
    j["minuscule"] = is_minuscule_element(w);
  else
    j["minuscule"] = nullptr;
  j["minuscule_in_support"] = c.sys->simply_laced() ? Json(is_minuscule_in_support(w)) : Json(nullptr);
  if (c.opt.has_levi || c.opt.node != 0) j["min_coset_rep"] = json::element(min_coset_rep(w, c.space().levi()));
  if (!c.opt.compare.empty()) {
    Word uw = parse_word(c.opt.compare);
    for (int k : uw) c.sys->check_node(k);
    const WeylElement u = WeylElement::from_word(c.sys, uw);
    j["bruhat"] = {{"u", json::element(u)}, {"u_leq_w", bruhat_leq(u, w)}, {"w_leq_u", bruhat_leq(w, u)}};
  }
  return {j, 0};
}

inline Outcome cmd_curves(const Context& c) {
  const FlagSpace sp = c.space();
  const Word word = c.reduced_word();
  const WeylElement w = WeylElement::from_word(c.sys, word);
  std::vector<TStableCurve> curves;
  if (c.opt.all_curves) {
    curves = t_curves_through_flag(sp, w);
  } else {
    curves = t_curves_through_schubert(SchubertVariety::make(sp, w));
  }
  Json list = Json::array();
  for (const auto& cv : curves) list.push_back(json::curve(sp, cv));
  Json j;
  j["w"] = json::element(w);
  j["levi"] = json::nodes(sp.levi());
  j["scope"] = c.opt.all_curves ? "flag" : "schubert";
  j["count"] = curves.size();
  j["curves"] = list;
  return {j, 0};
}

inline Outcome cmd_lines(const Context& c) {
  detail::require(c.opt.node != 0, "lines needs --node");
  const FlagSpace sp = c.space();
  Json j = json::lines_report(lines_through_point_space(sp));
  if (c.opt.has_word) {
    const SchubertVariety X = SchubertVariety::make(sp, WeylElement::from_word(c.sys, c.reduced_word()));
    j["w"] = json::element(X.w);
    j["covered"] = covered_by_schubert_line(X, sp.node());
    Json fams = Json::array();
    for (const auto& f : line_families_on_schubert(X))
      fams.push_back({{"v", json::element(f.v)}, {"root", json::coeffs(f.root)}, {"dimension", f.dimension}});
    j["families"] = fams;
  }
  return {j, 0};
}

inline Outcome cmd_smooth(const Context& c) {
  const FlagSpace sp = c.space();
  const SchubertVariety X = SchubertVariety::make(sp, WeylElement::from_word(c.sys, c.reduced_word()));
  const auto inv = parabolic_invariants(X.w);
  Json j;
  j["w"] = json::element(X.w);
  j["smooth"] = is_smooth_minuscule(X);
  j["support"] = json::nodes(support(X.w));
  j["I_upper"] = json::nodes(inv.upper);
  j["I_lower"] = json::nodes(inv.lower);
  j["perp"] = json::nodes(inv.perp);
  return {j, 0};
}

inline Outcome cmd_bs(const Context& c) {
  const BSVariety X = BSVariety::make(c.space(), c.word());
  Json rows = Json::array();
  Json minimal = Json::array();
  Json betas = Json::array();
  for (const auto& r : bs_report(X)) {
    rows.push_back({{"j", r.j},
                    {"beta", json::coeffs(r.beta)},
                    {"antican", r.antican},
                    {"is_line", r.is_line},
                    {"minimal", r.minimal},
                    {"target", r.target ? Json(*r.target) : Json(nullptr)}});
    betas.push_back(json::coeffs(r.beta));
    if (r.minimal) minimal.push_back(r.j);
  }
  Json pic = Json::array();
  for (int k = 1; k <= X.length(); ++k) {
    Json row = Json::array();
    for (int jj = 1; jj <= X.length(); ++jj) row.push_back(pic_degree(X, k, jj));
    pic.push_back(row);
  }
  Json j;
  j["w"] = json::element(X.product());
  j["word"] = X.word();
  j["beta"] = betas;
  j["antican"] = Json::array();
  for (const auto& r : rows) j["antican"].push_back(r["antican"]);
  j["minimal"] = minimal;
  j["curves"] = rows;
  j["pic"] = pic;
  return {j, 0};
}

inline Outcome cmd_quiver(const Context& c) {
  const Word word = c.word();
  const Quiver q = build_quiver(c.sys, word);
  c.check_node_space(WeylElement::from_word(c.sys, word));
  Json order = Json::array();
  for (int i = 1; i <= q.size(); ++i)
    for (int k = i + 1; k <= q.size(); ++k)
      if (q.precedes(i, k)) order.push_back({i, k});
  Json j;
  j["word"] = word;
  j["peaks"] = q.peaks();
  j["peak_colors"] = q.peak_colors();
  j["order"] = order;
  return {j, 0};
}

inline GeneralizedDecomposition decomposition_from(const Context& c) {
  const Word word = c.word();
  if (!c.opt.blocks.empty()) {
    std::vector<Word> blocks;
    std::string cur;
    for (char ch : c.opt.blocks + "|") {
      if (ch == '|') {
        blocks.push_back(parse_word(cur));
        for (int k : blocks.back()) c.sys->check_node(k);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    GeneralizedDecomposition d = make_decomposition(c.sys, blocks);
    detail::require(d.product() == WeylElement::from_word(c.sys, word), "blocks do not multiply to the word");
    c.check_node_space(d.product());
    return d;
  }
  const Quiver q = build_quiver(c.sys, word);
  c.check_node_space(WeylElement::from_word(c.sys, word));
  return construction1(c.sys, word, c.peak_order(q));
}

inline Json decomposition_json(const GeneralizedDecomposition& d) {
  Json j;
  j["w"] = json::element(d.product());
  j["peak_order"] = d.peak_order;
  j["blocks"] = json::block_strings(d);
  j["boundaries"] = d.boundaries;
  j["letter_block"] = d.letter_block;
  return j;
}

inline Outcome cmd_decompose(const Context& c) {
  const GeneralizedDecomposition d = decomposition_from(c);
  Json j = decomposition_json(d);
  j["peaks"] = build_quiver(c.sys, d.word).peaks();
  j["goodness"] = json::goodness(goodness_check(d));
  return {j, 0};
}

inline Outcome cmd_check5(const Context& c) {
  const GeneralizedDecomposition d = decomposition_from(c);
  const BlockCheckReport rep = section5_checks(d);
  const Root b1 = c.sys->simple_root(rep.beta1);
  Json j = decomposition_json(d);
  j["beta1"] = rep.beta1;
  j["roots"] = {{"block", json::coeffs(d.blocks.front().act_inverse(b1))},
                {"whole", json::coeffs(d.product().act_inverse(b1))}};
  Json checks;
  for (const auto& ch : rep.checks) checks[ch.name] = {{"passed", ch.passed}, {"detail", ch.detail}};
  j["checks"] = checks;
  j["stabilizers"] = {{"at_w", json::elements(rep.stabilizers.at_w)},
                      {"at_block", json::elements(rep.stabilizers.at_block)},
                      {"equal", rep.stabilizers.equal}};
  j["all_passed"] = rep.all_passed();
  return {j, rep.all_passed() ? 0 : 1};
}

inline Outcome cmd_families(const Context& c) {
  const GeneralizedDecomposition d = decomposition_from(c);
  Json j = decomposition_json(d);
  Json fams = Json::array();
  for (const auto& r : minimal_families_generalized(d)) fams.push_back(json::family(r));
  j["families"] = fams;
  return {j, 0};
}

/// Runs the sweep checks over every element of W^{P^node}.
inline Outcome cmd_sweep(const Context& c) {
  detail::require(c.opt.node != 0, "sweep needs --node");
  const FlagSpace sp = c.space();
  sp.require_minuscule();
  const std::vector<std::string> known = {"curves", "smooth", "bs", "check5"};
  std::vector<std::string> kinds;
  if (c.opt.kind == "all")
    kinds = known;
  else
    kinds = {c.opt.kind};
  for (const auto& k : kinds)
    detail::require(std::find(known.begin(), known.end(), k) != known.end(), "unknown sweep kind '" + k + "'");
  const auto elems = enumerate_min_coset_reps(c.sys, sp.levi());
  std::map<std::string, std::pair<long, long>> tally;  // instances, failures
  auto want = [&](const std::string& k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };
  const Weight ample = sp.ample_weight();
  for (const auto& w : elems) {
    const SchubertVariety X = SchubertVariety::make(sp, w);
    if (want("curves")) {
      for (const auto& cv : t_curves_through_schubert(X)) {
        auto& t = tally["curves"];
        ++t.first;
        anticanonical_degree(sp, cv);
        if (curve_degree(sp, cv, ample) != 1) ++t.second;
      }
    }
    if (want("smooth")) {
      auto& t = tally["smooth"];
      ++t.first;
      int through_base = 0;
      for (const auto& b : c.sys->positive_roots()) {
        if (support_of(b).subset_of(sp.levi())) continue;
        if (bruhat_leq(min_coset_rep(WeylElement::reflection(c.sys, b), sp.levi()), w)) ++through_base;
      }
      if (is_smooth_minuscule(X) != (through_base == w.length())) ++t.second;
    }
    if (want("bs") && !w.is_identity()) {
      for (const auto& word : all_reduced_words(w)) {
        auto& t = tally["bs"];
        ++t.first;
        const BSVariety B = BSVariety::make(sp, word);
        bool ok = true;
        for (int jj = 1; jj <= B.length(); ++jj) {
          const bool simple = c.sys->is_simple_root(suffix_root(B, jj));
          if (simple != exchange_target(B, jj).has_value()) ok = false;
        }
        const auto mins = minimal_curves_bs(B);
        if (mins.size() != 1 || mins.front().j != B.length()) ok = false;
        if (!ok) ++t.second;
      }
    }
    if (want("check5") && !w.is_identity()) {
      const Word word = w.reduced_word();
      auto order = build_quiver(c.sys, word).peak_colors();
      std::sort(order.begin(), order.end());
      do {
        auto& t = tally["check5"];
        ++t.first;
        if (!section5_checks(construction1(c.sys, word, order)).all_passed()) ++t.second;
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  Json j;
  j["type"] = c.sys->type().to_string();
  j["node"] = c.opt.node;
  j["elements"] = elems.size();
  Json ks;
  long failures = 0;
  for (const auto& k : kinds) {
    ks[k] = {{"instances", tally[k].first}, {"failures", tally[k].second}};
    failures += tally[k].second;
  }
  j["kinds"] = ks;
  return {j, failures == 0 ? 0 : 1};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CorpusCase {
  std::string id;
  std::string source;
  std::string description;
  struct Step {
    std::vector<std::string> args;
    int exit_code = 0;
    std::vector<std::pair<std::string, Json>> expects;
  };
  std::vector<Step> steps;
  int line = 0;
};

/// Case blocks: "case <id> <published|derived|trivial> [description]", then
/// one or more "run <args>" each followed by "exit <code>" and
/// "expect <json-pointer> <json>" lines, closed by "end".
inline std::vector<CorpusCase> parse_corpus(std::istream& in) {
  std::vector<CorpusCase> out;
  std::optional<CorpusCase> cur;
  std::string line;
  int n = 0;
  auto fail = [&](const std::string& msg) {
    throw PreconditionError("corpus line " + std::to_string(n) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++n;
    std::size_t p = line.find_first_not_of(" \t");
    if (p == std::string::npos || line[p] == '#') continue;
    line = line.substr(p);
    std::size_t sp = line.find(' ');
    const std::string head = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
    if (head == "case") {
      if (cur) fail("case inside case");
      std::istringstream ss(rest);
      CorpusCase c;
      c.line = n;
      ss >> c.id >> c.source;
      std::getline(ss, c.description);
      if (c.id.empty()) fail("case without id");
      if (c.source != "published" && c.source != "derived" && c.source != "trivial")
        fail("case " + c.id + " lacks a source (published, derived or trivial)");
      auto d0 = c.description.find_first_not_of(' ');
      c.description = d0 == std::string::npos ? "" : c.description.substr(d0);
      if (c.source == "published" && c.description.empty()) fail("published case " + c.id + " needs a citation");
      cur = c;
    } else if (!cur) {
      fail("'" + head + "' outside a case");
    } else if (head == "run") {
      cur->steps.push_back({tokenize(rest), 0, {}});
    } else if (head == "exit") {
      if (cur->steps.empty()) fail("exit before run");
      cur->steps.back().exit_code = std::stoi(rest);
    } else if (head == "expect") {
      if (cur->steps.empty()) fail("expect before run");
      std::size_t s2 = rest.find(' ');
      if (s2 == std::string::npos) fail("expect needs a pointer and a value");
      try {
        cur->steps.back().expects.emplace_back(rest.substr(0, s2), Json::parse(rest.substr(s2 + 1)));
      } catch (const nlohmann::json::parse_error&) {
        fail("bad JSON in expect");
      }
    } else if (head == "end") {
      if (cur->steps.empty()) fail("case " + cur->id + " has no run");
      out.push_back(*cur);
      cur.reset();
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (cur) fail("unterminated case " + cur->id);
  return out;
}

inline Outcome cmd_corpus(const Options& o) {
  std::ifstream in(o.file);
  detail::require(static_cast<bool>(in), "cannot open corpus file '" + o.file + "'");
  std::vector<CorpusCase> cases;
  for (auto& cc : parse_corpus(in))
    if (o.filter.empty() || cc.id.find(o.filter) != std::string::npos) cases.push_back(std::move(cc));
  detail::require(!cases.empty(), "no corpus case matches '" + o.filter + "'");
  Json failures = Json::array();
  int passed = 0;
  for (const auto& cc : cases) {
    std::string problem;
    for (const auto& step : cc.steps) {
      std::ostringstream so, se;
      const int code = run(step.args, so, se);
      if (code != step.exit_code) {
        problem = "exit " + std::to_string(code) + ", expected " + std::to_string(step.exit_code) + ": " + se.str();
        break;
      }
      if (step.expects.empty()) continue;
      Json got;
      try {
        got = Json::parse(so.str());
      } catch (const nlohmann::json::parse_error&) {
        problem = "output is not JSON";
        break;
      }
      for (const auto& [ptr, want] : step.expects) {
        const nlohmann::ordered_json::json_pointer jp(ptr);
        if (!got.contains(jp)) {
          problem = ptr + ": missing";
          break;
        }
        if (got.at(jp) != want) {
          problem = ptr + ": got " + got.at(jp).dump() + ", expected " + want.dump();
          break;
        }
      }
      if (!problem.empty()) break;
    }
    if (problem.empty())
      ++passed;
    else
      failures.push_back({{"id", cc.id}, {"source", cc.source}, {"message", problem}});
  }
  Json j;
  j["file"] = o.file;
  j["filter"] = o.filter;
  j["cases"] = cases.size();
  Json ids = Json::array();
  for (const auto& cc : cases) ids.push_back(cc.id);
  j["ids"] = ids;
  j["passed"] = passed;
  j["failures"] = failures;
  return {j, failures.empty() ? 0 : 1};
}

/// Flat rendering for --table: one "key: value" line per field, array rows of
/// objects one per line.
inline void print_table(const Json& j, std::ostream& out) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << k << ":\n";
      for (const auto& row : v) out << "  " << row.dump() << "\n";
    } else {
      out << k << ": " << v.dump() << "\n";
    }
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Minimal rational curves on Schubert varieties: root data, curves, lines and decompositions"};
  app.name("minlines");
  app.require_subcommand(1, 1);

  auto add_type = [&](CLI::App* s) { s->add_option("--type", o.type, "Dynkin type, e.g. A4, D5, E7, A2xA1")->required(); };
  auto add_space = [&](CLI::App* s) {
    s->add_option("--levi", o.levi, "Levi set I as a comma list (or 'none')");
    s->add_option("--node", o.node, "maximal parabolic P^node");
  };
  auto add_word = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--word", o.word, "word, e.g. \"2 1 4 3 2\"");
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* s) {
    s->add_flag("--json", "JSON output (default)");
    s->add_flag("--table", o.table, "flat text output");
  };

  auto* rs = app.add_subcommand("root-system", "Cartan matrix, positive roots, highest root");
  add_type(rs);
  add_format(rs);
  auto* wy = app.add_subcommand("weyl", "length, descents, support and parabolic invariants of a word");
  add_type(wy);
  add_space(wy);
  add_word(wy, true);
  wy->add_option("--compare", o.compare, "second word u for a Bruhat comparison");
  add_format(wy);
  auto* cv = app.add_subcommand("curves", "T-stable curves through wx in X(w), with degrees");
  add_type(cv);
  add_space(cv);
  add_word(cv, true);
  cv->add_flag("--all", o.all_curves, "all T-stable curves of G/P through wx");
  add_format(cv);
  auto* ln = app.add_subcommand("lines", "lines through the base point; line families on X(w)");
  add_type(ln);
  add_space(ln);
  add_word(ln, false);
  add_format(ln);
  auto* sm = app.add_subcommand("smooth", "smoothness of a minuscule Schubert variety");
  add_type(sm);
  add_space(sm);
  add_word(sm, true);
  add_format(sm);
  auto* bs = app.add_subcommand("bs", "Bott-Samelson curves of a reduced word");
  add_type(bs);
  add_space(bs);
  add_word(bs, true);
  add_format(bs);
  auto* qv = app.add_subcommand("quiver", "quiver order and peaks of a minuscule word");
  add_type(qv);
  add_space(qv);
  add_word(qv, true);
  add_format(qv);
  auto* dc = app.add_subcommand("decompose", "split a minuscule word into blocks along a peak ordering");
  auto* c5 = app.add_subcommand("check5", "block-level checks of a peak-ordering decomposition");
  auto* fm = app.add_subcommand("families", "minimal families on a generalized Bott-Samelson variety");
  for (auto* s : {dc, c5, fm}) {
    add_type(s);
    add_space(s);
    add_word(s, true);
    s->add_option("--peak-order", o.peak_order, "comma list of peak colors, or 'standard'");
    s->add_option("--blocks", o.blocks, "explicit blocks, e.g. \"1|3 2\"");
    add_format(s);
  }
  auto* co = app.add_subcommand("corpus", "run the bundled example corpus");
  co->add_option("--file", o.file, "corpus file");
  co->add_option("--filter", o.filter, "run only cases whose id contains this text");
  add_format(co);
  auto* sw = app.add_subcommand("sweep", "property sweep over W^{P^node}");
  add_type(sw);
  sw->add_option("--node", o.node, "maximal parabolic P^node")->required();
  sw->add_option("--kind", o.kind, "curves, smooth, bs, check5 or all");
  add_format(sw);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  for (auto* s : app.get_subcommands()) {
    if (const auto* opt = s->get_option_no_throw("--levi"); opt && opt->count() > 0) o.has_levi = true;
    if (const auto* opt = s->get_option_no_throw("--word"); opt && opt->count() > 0) o.has_word = true;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Outcome r;
    if (name == "corpus") {
      r = cmd_corpus(o);
    } else {
      const Context c(o);
      if (name == "root-system") r = cmd_root_system(c);
      else if (name == "weyl") r = cmd_weyl(c);
      else if (name == "curves") r = cmd_curves(c);
      else if (name == "lines") r = cmd_lines(c);
      else if (name == "smooth") r = cmd_smooth(c);
      else if (name == "bs") r = cmd_bs(c);
      else if (name == "quiver") r = cmd_quiver(c);
      else if (name == "decompose") r = cmd_decompose(c);
      else if (name == "check5") r = cmd_check5(c);
      else if (name == "families") r = cmd_families(c);
      else if (name == "sweep") r = cmd_sweep(c);
    }
    if (o.table)
      print_table(r.body, out);
    else
      out << r.body.dump(2) << "\n";
    return r.code;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace minlines::cli
