#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphfp/cumulant.hpp"
#include "graphfp/element.hpp"
#include "graphfp/errors.hpp"
#include "graphfp/fock.hpp"
#include "graphfp/freeness.hpp"
#include "graphfp/graph.hpp"
#include "graphfp/lattice_path.hpp"
#include "graphfp/noncrossing.hpp"
#include "graphfp/serialization.hpp"
#include "graphfp/word.hpp"

using nlohmann::json;
using namespace graphfp;

namespace {

struct TableDoc {
  std::vector<std::string> notes;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void print_table(const TableDoc& t) {
  for (const auto& note : t.notes) {
    std::cout << note << "\n";
  }
  if (t.header.empty()) {
    return;
  }
  std::vector<std::size_t> width(t.header.size(), 0);
  auto widen = [&width](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  };
  widen(t.header);
  for (const auto& row : t.rows) {
    widen(row);
  }
  auto print_row = [&width](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) {
        line += "  ";
      }
      line += row[i];
      if (i + 1 < row.size()) {
        line.append(width[i] - row[i].size(), ' ');
      }
    }
    std::cout << line << "\n";
  };
  print_row(t.header);
  for (const auto& row : t.rows) {
    print_row(row);
  }
}

void print_csv(const TableDoc& t) {
  auto emit_row = [](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) {
        line += ',';
      }
      line += csv_field(row[i]);
    }
    std::cout << line << "\n";
  };
  if (!t.header.empty()) {
    emit_row(t.header);
  }
  for (const auto& row : t.rows) {
    emit_row(row);
  }
}

void emit(const std::string& format, const json& j, const TableDoc& t) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    print_csv(t);
  } else {
    print_table(t);
  }
}

int parse_int_str(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) {
      throw std::invalid_argument(s);
    }
    return v;
  } catch (const std::exception&) {
    throw ValidationError("bad " + what + ": '" + s + "'");
  }
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError("bad " + what + " json: " + e.what());
  }
}

json parse_json_arg(const std::string& arg, const std::string& what) {
  if (!arg.empty() && (arg[0] == '[' || arg[0] == '{')) {
    return parse_json_text(arg, what);
  }
  std::ifstream in(arg);
  if (!in) {
    throw ValidationError("cannot open " + what + " file '" + arg + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), what);
}

DirectedGraph load_graph(const std::string& spec) {
  if (spec.empty()) {
    throw ValidationError("this command needs --graph");
  }
  if (spec.rfind("loops:", 0) == 0) {
    return make_one_vertex_loops(parse_int_str(spec.substr(6), "loop count"));
  }
  if (spec.rfind("circulant:", 0) == 0) {
    return make_circulant(parse_int_str(spec.substr(10), "circulant size"));
  }
  return DirectedGraph::from_json(parse_json_arg(spec, "graph"));
}

EMode parse_mode(const std::string& s) {
  if (s == "fock") {
    return EMode::Fock;
  }
  if (s == "paper") {
    return EMode::Paper;
  }
  throw ValidationError("mode must be 'fock' or 'paper'");
}

std::string mode_name(EMode m) { return m == EMode::Fock ? "fock" : "paper"; }

std::string diag_display(const DirectedGraph& g, const DiagonalElement& d) {
  if (d.values().empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [v, c] : d.values()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += g.vertex_id(v) + ":" + coeff_to_display(c);
  }
  return out;
}

std::vector<Letter> term_letters(const CanonicalTerm& t) {
  std::vector<Letter> out;
  if (t.beta.is_vertex()) {
    out.push_back(Letter{t.alpha, Exp::One});
  } else if (t.alpha.is_vertex()) {
    out.push_back(Letter{t.beta, Exp::Star});
  } else {
    out.push_back(Letter{t.alpha, Exp::One});
    out.push_back(Letter{t.beta, Exp::Star});
  }
  return out;
}

TableDoc diag_table(const DirectedGraph& g, const DiagonalElement& d,
                    std::vector<std::string> notes) {
  TableDoc t;
  t.notes = std::move(notes);
  t.header = {"vertex", "value"};
  for (const auto& [v, c] : d.values()) {
    t.rows.push_back({g.vertex_id(v), coeff_to_display(c)});
  }
  return t;
}

// Letter sequences over path words with total edge length up to max_len,
// visited in deterministic order.
void scan_letter_words(const DirectedGraph& g, int max_len,
                       const std::function<void(const std::vector<Letter>&)>& visit) {
  auto words = enumerate_paths(g, max_len);
  std::vector<Letter> current;
  std::function<void(int)> rec = [&](int remaining) {
    for (const auto& w : words) {
      if (w.length() > remaining) {
        break;  // words are ordered by length
      }
      for (Exp e : {Exp::One, Exp::Star}) {
        current.push_back(Letter{w, e});
        visit(current);
        rec(remaining - w.length());
        current.pop_back();
      }
    }
  };
  rec(max_len);
}

double count_letter_words(const DirectedGraph& g, int max_len) {
  auto words = enumerate_paths(g, max_len);
  std::vector<double> per_len(max_len + 1, 0.0);
  for (const auto& w : words) {
    per_len[w.length()] += 2;  // both exponents
  }
  std::vector<double> f(max_len + 1, 0.0);
  f[0] = 1;
  double total = 0;
  for (int n = 1; n <= max_len; ++n) {
    for (int l = 1; l <= n; ++l) {
      f[n] += per_len[l] * f[n - l];
    }
    total += f[n];
  }
  return total;
}

struct Options {
  std::string format = "table";
  std::string graph_spec;
  std::string mode = "paper";
  int max_nc = -1;

  std::string letters;
  std::string element;
  std::string route = "word";
  int order = 0;
  std::string word;
  int n = 0;
  std::string part_p;
  std::string part_q;
  std::string filter = "all";
  bool list = false;
  bool with_mobius = false;
  std::string w1;
  std::string w2;
  std::string element_a;
  std::string element_b;
  int max_order = 4;
  int closure_degree = 3;
  bool stop_on_first = false;
  int trunc = 6;
  int demo_n = 0;
  int demo_order = 0;
  int scan_len = 4;
  int samples = 5;
};

void apply_max_nc(const Options& o) {
  if (o.max_nc >= 0) {
    set_nc_bound_override(o.max_nc);
  }
}

Element element_input(const DirectedGraph& g, const Options& o) {
  bool has_letters = !o.letters.empty();
  bool has_element = !o.element.empty();
  if (has_letters == has_element) {
    throw ValidationError("give exactly one of --letters and --element");
  }
  if (has_letters) {
    return letters_product(g, letters_from_string(g, o.letters), false);
  }
  return element_from_json(g, parse_json_arg(o.element, "element"));
}

void run_reduce(const Options& o) {
  DirectedGraph g = load_graph(o.graph_spec);
  Element r = element_input(g, o);
  TableDoc t;
  t.notes = {"terms: " + std::to_string(r.term_count())};
  t.header = {"alpha", "beta", "coeff"};
  for (const auto& [term, c] : r.terms()) {
    t.rows.push_back(
        {word_to_string(g, term.alpha), word_to_string(g, term.beta), coeff_to_display(c)});
  }
  emit(o.format, element_to_json(g, r), t);
}

void run_expect(const Options& o) {
  DirectedGraph g = load_graph(o.graph_spec);
  EMode mode = parse_mode(o.mode);
  DiagonalElement d;
  if (o.route == "word") {
    if (!o.letters.empty()) {
      d = word_expectation(g, letters_from_string(g, o.letters), mode);
    } else {
      Element e = element_input(g, o);
      for (const auto& [term, c] : e.terms()) {
        d += word_expectation(g, term_letters(term), mode).scaled(c);
      }
    }
  } else if (o.route == "reduce") {
    d = expectation(g, element_input(g, o), mode);
  } else {
    throw ValidationError("route must be 'word' or 'reduce'");
  }
  json j = {{"mode", mode_name(mode)}, {"route", o.route}, {"value", diagonal_to_json(g, d)}};
  emit(o.format, j,
       diag_table(g, d, {"mode: " + mode_name(mode), "route: " + o.route}));
}

void run_moment(const Options& o) {
  DirectedGraph g = load_graph(o.graph_spec);
  EMode mode = parse_mode(o.mode);
  if (o.order < 1) {
    throw ValidationError("--order must be at least 1");
  }
  Element e = element_input(g, o);
  std::vector<Element> args(o.order, e);
  DiagonalElement d = moment(g, args, mode);
  auto central = central_scalar(g, d);
  json j = {{"order", o.order},
            {"mode", mode_name(mode)},
            {"value", diagonal_to_json(g, d)},
            {"central", central ? json(rational_to_string(central->re)) : json(nullptr)}};
  std::vector<std::string> notes = {"order: " + std::to_string(o.order),
                                    "mode: " + mode_name(mode)};
  notes.push_back(central ? "central: " + coeff_to_display(*central) : "central: no");
  emit(o.format, j, diag_table(g, d, notes));
}

void run_cumulant(const Options& o) {
  apply_max_nc(o);
  DirectedGraph g = load_graph(o.graph_spec);
  EMode mode = parse_mode(o.mode);
  if (!o.word.empty()) {
    auto letters = letters_from_string(g, o.word);
    LetterCumulant lc = cumulant_letters(g, letters, mode);
    json j = {{"order", static_cast<int>(letters.size())},
              {"mode", mode_name(mode)},
              {"value", diagonal_to_json(g, lc.value)},
              {"connected_set_size", lc.contributing},
              {"mu", lc.mu_sum}};
    emit(o.format, j,
         diag_table(g, lc.value,
                    {"order: " + std::to_string(letters.size()), "mode: " + mode_name(mode),
                     "connected_set_size: " + std::to_string(lc.contributing),
                     "mu: " + std::to_string(lc.mu_sum)}));
    return;
  }
  if (o.order < 1) {
    throw ValidationError("--order must be at least 1");
  }
  Element e = element_input(g, o);
  std::vector<Element> args(o.order, e);
  DiagonalElement d = cumulant(g, args, mode);
  json j = {{"order", o.order}, {"mode", mode_name(mode)}, {"value", diagonal_to_json(g, d)}};
  emit(o.format, j,
       diag_table(g, d, {"order: " + std::to_string(o.order), "mode: " + mode_name(mode)}));
}

void run_mu(const Options& o) {
  apply_max_nc(o);
  bool have_pair = !o.part_p.empty() || !o.part_q.empty();
  if (have_pair) {
    if (o.part_p.empty() || o.part_q.empty()) {
      throw ValidationError("give both --p and --q");
    }
    auto p = NoncrossingPartition::from_json(parse_json_arg(o.part_p, "partition"));
    auto q = NoncrossingPartition::from_json(parse_json_arg(o.part_q, "partition"));
    std::int64_t m = mobius(p, q);
    TableDoc t;
    t.header = {"mu"};
    t.rows.push_back({std::to_string(m)});
    emit(o.format, json{{"mu", m}}, t);
    return;
  }
  if (o.n < 1) {
    throw ValidationError("--n must be at least 1");
  }
  MuCoefficient mc = mu_coefficient(o.n);
  json j = {{"n", o.n}, {"mu", mc.mu}, {"connected_set_size", mc.connected_set_size}};
  TableDoc t;
  t.header = {"n", "mu", "connected_set_size"};
  t.rows.push_back(
      {std::to_string(o.n), std::to_string(mc.mu), std::to_string(mc.connected_set_size)});
  emit(o.format, j, t);
}

void run_lattice(const Options& o) {
  DirectedGraph g = load_graph(o.graph_spec);
  if (o.letters.empty()) {
    throw ValidationError("lattice needs --letters");
  }
  LatticePath p = lattice_path(g, letters_from_string(g, o.letters));
  json points = json::array();
  for (const auto& [x, y] : p.points) {
    points.push_back({x, y});
  }
  json j = {{"empty", p.is_empty},
            {"points", points},
            {"vertex_letter_count", p.vertex_letter_count},
            {"star_axis", p.star_axis}};
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (o.format == "csv") {
    TableDoc t;
    t.header = {"x", "y"};
    if (!p.is_empty) {
      for (const auto& [x, y] : p.points) {
        t.rows.push_back({std::to_string(x), std::to_string(y)});
      }
    }
    print_csv(t);
    return;
  }
  if (p.is_empty) {
    std::cout << "EMPTY\n";
    return;
  }
  std::cout << render_lattice(p);
  std::cout << "final-height: " << p.points.back().second << "\n";
  std::cout << "vertex-letters: " << p.vertex_letter_count << "\n";
  std::cout << "star-axis: " << (p.star_axis ? "yes" : "no") << "\n";
}

void run_nc(const Options& o) {
  apply_max_nc(o);
  if (o.n < 1) {
    throw ValidationError("--n must be at least 1");
  }
  NcFilter f = NcFilter::All;
  if (o.filter == "pairings") {
    f = NcFilter::Pairings;
  } else if (o.filter == "even") {
    f = NcFilter::EvenBlocks;
  } else if (o.filter != "all") {
    throw ValidationError("filter must be all, pairings or even");
  }
  auto parts = enumerate_nc(o.n, f);
  NoncrossingPartition top = NoncrossingPartition::full(o.n);
  json j = {{"n", o.n}, {"filter", o.filter}, {"count", parts.size()}};
  TableDoc t;
  t.notes = {"count: " + std::to_string(parts.size())};
  if (o.list) {
    json plist = json::array();
    t.header = o.with_mobius ? std::vector<std::string>{"partition", "mu"}
                             : std::vector<std::string>{"partition"};
    for (const auto& pi : parts) {
      json entry = pi.to_json();
      std::vector<std::string> row{pi.to_string()};
      if (o.with_mobius) {
        std::int64_t m = mobius(pi, top);
        entry["mu"] = m;
        row.push_back(std::to_string(m));
      }
      plist.push_back(std::move(entry));
      t.rows.push_back(std::move(row));
    }
    j["partitions"] = std::move(plist);
  }
  emit(o.format, j, t);
}

void run_freeness(const Options& o) {
  apply_max_nc(o);
  DirectedGraph g = load_graph(o.graph_spec);
  EMode mode = parse_mode(o.mode);
  bool word_mode = !o.w1.empty() || !o.w2.empty();
  bool element_mode = !o.element_a.empty() || !o.element_b.empty();
  if (word_mode == element_mode) {
    throw ValidationError("give either --w1/--w2 or --element-a/--element-b");
  }
  Element a;
  Element b;
  bool structural = false;
  if (word_mode) {
    if (o.w1.empty() || o.w2.empty()) {
      throw ValidationError("give both --w1 and --w2");
    }
    Word w1 = word_from_string(g, o.w1);
    Word w2 = word_from_string(g, o.w2);
    structural = generators_free(g, w1, w2);
    a = letter_element(g, Letter{w1, Exp::One});
    b = letter_element(g, Letter{w2, Exp::One});
  } else {
    if (o.element_a.empty() || o.element_b.empty()) {
      throw ValidationError("give both --element-a and --element-b");
    }
    a = element_from_json(g, parse_json_arg(o.element_a, "element-a"));
    b = element_from_json(g, parse_json_arg(o.element_b, "element-b"));
    structural = supports_free_sufficient(g, a, b);
  }
  FreenessOptions fo;
  fo.max_order = o.max_order;
  fo.closure_degree = o.closure_degree;
  fo.stop_on_first = o.stop_on_first;
  MixedCumulantReport report = mixed_cumulant_report(g, a, b, mode, fo);

  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"order", w.order},
                         {"labels", w.labels},
                         {"forced_vertices", w.forced_vertices},
                         {"value", w.value}});
  }
  json j = {{"structural_free", structural},
            {"all_vanishing", report.all_vanishing},
            {"max_order", report.max_order},
            {"tuples_evaluated", report.tuples_evaluated},
            {"witnesses", std::move(witnesses)}};
  TableDoc t;
  t.notes = {std::string("structural: ") + (structural ? "free" : "not free"),
             report.all_vanishing
                 ? "mixed cumulants: all vanish through order " + std::to_string(report.max_order)
                 : "mixed cumulants: nonvanishing",
             "tuples evaluated: " + std::to_string(report.tuples_evaluated)};
  if (!report.witnesses.empty()) {
    t.header = {"order", "probes", "vertices", "value"};
    for (const auto& w : report.witnesses) {
      std::string labels;
      std::string verts;
      for (std::size_t i = 0; i < w.labels.size(); ++i) {
        if (i) {
          labels += ' ';
          verts += ' ';
        }
        labels += w.labels[i];
        verts += w.forced_vertices[i];
      }
      t.rows.push_back({std::to_string(w.order), labels, verts, w.value.dump()});
    }
  }
  emit(o.format, j, t);
}

void run_oracle(const Options& o) {
  DirectedGraph g = load_graph(o.graph_spec);
  if (o.letters.empty()) {
    throw ValidationError("oracle needs --letters");
  }
  TruncatedFockSpace f(g, o.trunc);
  DiagonalElement d = oracle_expectation(f, letters_from_string(g, o.letters));
  json j = {{"trunc", o.trunc}, {"dim", f.dim()}, {"value", diagonal_to_json(g, d)}};
  emit(o.format, j,
       diag_table(g, d, {"trunc: " + std::to_string(o.trunc), "dim: " + std::to_string(f.dim())}));
}

void run_demo_gn(const Options& o) {
  apply_max_nc(o);
  int order = o.demo_order > 0 ? o.demo_order : 8;
  if (order > 12) {
    throw ValidationError("demo order is capped at 12");
  }
  DirectedGraph g = make_one_vertex_loops(o.demo_n);
  Element t = generating_operator(g);
  DiagonalElement k2 = cumulant(g, {t, t}, EMode::Paper);
  auto k2c = central_scalar(g, k2);
  std::map<int, Coeff> chain_input;
  chain_input[2] = *k2c;  // one vertex, always central

  json rows = json::array();
  TableDoc doc;
  doc.notes = {"graph: loops:" + std::to_string(o.demo_n),
               "k2: " + coeff_to_display(*k2c)};
  doc.header = {"order", "chain", "direct", "match"};
  for (int n = 1; n <= order; ++n) {
    Coeff chain = moments_from_cumulants(chain_input, n);
    std::vector<Element> args(n, t);
    DiagonalElement direct = moment(g, args, EMode::Paper);
    Coeff direct_c = *central_scalar(g, direct);
    bool match = chain == direct_c;
    rows.push_back({{"order", n},
                    {"chain", rational_to_string(chain.re)},
                    {"direct", rational_to_string(direct_c.re)},
                    {"match", match}});
    doc.rows.push_back({std::to_string(n), coeff_to_display(chain), coeff_to_display(direct_c),
                        match ? "yes" : "no"});
  }
  json j = {{"graph", "loops:" + std::to_string(o.demo_n)},
            {"k2", rational_to_string(k2c->re)},
            {"rows", std::move(rows)}};
  emit(o.format, j, doc);
}

void run_demo_circulant(const Options& o) {
  apply_max_nc(o);
  int order = o.demo_order > 0 ? o.demo_order : 4;
  if (order > 6) {
    throw ValidationError("demo order is capped at 6");
  }
  if (std::pow(2.0 * o.demo_n, order) > 5e5) {
    throw ResourceGuardError("demo cumulants would enumerate too many letter tuples");
  }
  DirectedGraph g = make_circulant(o.demo_n);
  Element t = generating_operator(g);

  json jmu = json::array();
  TableDoc mu_doc;
  mu_doc.notes = {"graph: circulant:" + std::to_string(o.demo_n)};
  mu_doc.header = {"n", "mu", "connected_set_size"};
  std::vector<MuCoefficient> mus(order + 1);
  for (int n = 1; n <= order; ++n) {
    mus[n] = mu_coefficient(n);
    jmu.push_back({{"n", n}, {"mu", mus[n].mu}, {"connected_set_size", mus[n].connected_set_size}});
    mu_doc.rows.push_back({std::to_string(n), std::to_string(mus[n].mu),
                           std::to_string(mus[n].connected_set_size)});
  }

  json jcum = json::array();
  TableDoc cum_doc;
  cum_doc.header = {"n", "k_n", "expected", "central_match", "reconstruction_match"};
  std::map<int, Coeff> chain_input;
  std::vector<DiagonalElement> ks(order + 1);
  for (int n = 1; n <= order; ++n) {
    std::vector<Element> args(n, t);
    ks[n] = cumulant(g, args, EMode::Paper);
    auto central = central_scalar(g, ks[n]);
    Coeff expected = n % 2 == 0 ? Coeff(2 * mus[n].mu) : Coeff(0);
    bool central_match = central && *central == expected;
    if (central) {
      chain_input[n] = *central;
    }
    // Edgewise reconstruction: mu_n per edge on its two endpoints.
    DiagonalElement rebuilt;
    for (int e = 0; e < g.edge_count(); ++e) {
      rebuilt.add(g.edge_src(e), Coeff(mus[n].mu));
      rebuilt.add(g.edge_dst(e), Coeff(mus[n].mu));
    }
    bool reconstruction = n % 2 == 0 ? rebuilt == ks[n] : ks[n].is_zero();
    jcum.push_back({{"n", n},
                    {"k", diagonal_to_json(g, ks[n])},
                    {"expected", rational_to_string(expected.re)},
                    {"central_match", central_match},
                    {"reconstruction_match", reconstruction}});
    cum_doc.rows.push_back({std::to_string(n), diag_display(g, ks[n]),
                            coeff_to_display(expected), central_match ? "yes" : "no",
                            reconstruction ? "yes" : "no"});
  }

  json jmom = json::array();
  TableDoc mom_doc;
  mom_doc.header = {"n", "chain", "direct", "match"};
  for (int n = 1; n <= order; ++n) {
    Coeff chain = moments_from_cumulants(chain_input, n);
    std::vector<Element> args(n, t);
    auto direct = central_scalar(g, moment(g, args, EMode::Paper));
    bool match = direct && chain == *direct;
    jmom.push_back({{"n", n},
                    {"chain", rational_to_string(chain.re)},
                    {"direct", direct ? json(rational_to_string(direct->re)) : json(nullptr)},
                    {"match", match}});
    mom_doc.rows.push_back({std::to_string(n), coeff_to_display(chain),
                            direct ? coeff_to_display(*direct) : "-", match ? "yes" : "no"});
  }

  json j = {{"graph", "circulant:" + std::to_string(o.demo_n)},
            {"mu", std::move(jmu)},
            {"cumulants", std::move(jcum)},
            {"moments", std::move(jmom)}};
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  auto print = o.format == "csv" ? print_csv : print_table;
  print(mu_doc);
  std::cout << "\n";
  print(cum_doc);
  std::cout << "\n";
  print(mom_doc);
}

void run_discrepancy(const Options& oin) {
  Options o = oin;
  if (o.order == 0) {
    o.order = 4;
  }
  apply_max_nc(o);
  DirectedGraph g = load_graph(o.graph_spec);
  if (o.order < 1 || o.order > 6) {
    throw ValidationError("--order must be between 1 and 6");
  }
  if (o.order > o.trunc) {
    throw ValidationError("--trunc must be at least the moment order");
  }
  Element t = generating_operator(g);
  if (std::pow(static_cast<double>(t.term_count()), o.order) > 5e5) {
    throw ResourceGuardError("cumulant tuple space is too large for the discrepancy report");
  }

  // Engine cumulants; the chain column needs them central.
  std::map<int, Coeff> chain_input;
  bool all_central = true;
  for (int m = 1; m <= o.order; ++m) {
    std::vector<Element> args(m, t);
    auto central = central_scalar(g, cumulant(g, args, EMode::Paper));
    if (central) {
      chain_input[m] = *central;
    } else {
      all_central = false;
    }
  }

  TruncatedFockSpace f(g, o.trunc);
  json jmom = json::array();
  TableDoc mom_doc;
  mom_doc.notes = {"operator: sum of L_e + L_e* over all edges"};
  mom_doc.header = {"n", "chain", "direct_paper", "direct_fock", "oracle"};
  for (int n = 1; n <= o.order; ++n) {
    std::vector<Element> args(n, t);
    DiagonalElement paper = moment(g, args, EMode::Paper);
    DiagonalElement fock = moment(g, args, EMode::Fock);
    DiagonalElement oracle;
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::map<int, Coeff> vec{{v, Coeff(1)}};
      for (int step = 0; step < n; ++step) {
        std::map<int, Coeff> next;
        for (const auto& [i, c] : vec) {
          for (const auto& [target, c2] : apply_element(f, t, i)) {
            auto [it, inserted] = next.emplace(target, c * c2);
            if (!inserted) {
              it->second += c * c2;
            }
          }
        }
        vec = std::move(next);
      }
      auto it = vec.find(v);
      if (it != vec.end()) {
        oracle.add(v, it->second);
      }
    }
    std::string chain_txt = "-";
    json chain_json = nullptr;
    if (all_central) {
      Coeff chain = moments_from_cumulants(chain_input, n);
      chain_txt = coeff_to_display(chain);
      chain_json = rational_to_string(chain.re);
    }
    jmom.push_back({{"n", n},
                    {"chain", chain_json},
                    {"direct_paper", diagonal_to_json(g, paper)},
                    {"direct_fock", diagonal_to_json(g, fock)},
                    {"oracle", diagonal_to_json(g, oracle)}});
    mom_doc.rows.push_back({std::to_string(n), chain_txt, diag_display(g, paper),
                            diag_display(g, fock), diag_display(g, oracle)});
  }

  if (count_letter_words(g, o.scan_len) > 1e6) {
    throw ResourceGuardError("star-axis scan space is too large; lower --len");
  }
  long long scanned = 0;
  long long nonzero_paper = 0;
  long long star_axis_count = 0;
  long long converse_failures = 0;
  std::vector<std::string> samples;
  scan_letter_words(g, o.scan_len, [&](const std::vector<Letter>& letters) {
    ++scanned;
    LatticePath p = lattice_path(g, letters);
    bool nonzero = !word_expectation(g, letters, EMode::Paper).is_zero();
    if (nonzero) {
      ++nonzero_paper;
    }
    if (p.star_axis) {
      ++star_axis_count;
      if (!nonzero) {
        ++converse_failures;
        if (static_cast<int>(samples.size()) < o.samples) {
          samples.push_back(letters_to_string(g, letters));
        }
      }
    }
  });

  json j = {{"moments", std::move(jmom)},
            {"scan",
             {{"max_len", o.scan_len},
              {"words_scanned", scanned},
              {"nonzero_paper", nonzero_paper},
              {"star_axis", star_axis_count},
              {"converse_failures", converse_failures},
              {"samples", samples}}}};
  TableDoc scan_doc;
  scan_doc.notes = {"scan max_len: " + std::to_string(o.scan_len),
                    "words scanned: " + std::to_string(scanned),
                    "nonzero paper expectation: " + std::to_string(nonzero_paper),
                    "star-axis words: " + std::to_string(star_axis_count),
                    "star-axis with zero expectation: " + std::to_string(converse_failures)};
  scan_doc.header = {"sample"};
  for (const auto& s : samples) {
    scan_doc.rows.push_back({s});
  }
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  auto print = o.format == "csv" ? print_csv : print_table;
  print(mom_doc);
  std::cout << "\n";
  print(scan_doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic expectations, cumulants and freeness probes over directed-graph operator algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub, bool with_graph, bool with_mode) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--max-nc", o.max_nc, "bound for noncrossing enumerations");
    if (with_graph) {
      sub->add_option("--graph", o.graph_spec, "graph json file, loops:N or circulant:N");
    }
    if (with_mode) {
      sub->add_option("--mode", o.mode, "expectation mode")
          ->check(CLI::IsMember({"fock", "paper"}));
    }
  };

  auto* reduce = app.add_subcommand("reduce", "multiply a letter word or normalize an element");
  add_common(reduce, true, false);
  reduce->add_option("--letters", o.letters, "letter sequence like [(e1,1),(e1,*)]");
  reduce->add_option("--element", o.element, "element json or file");
  reduce->callback([&o] { run_reduce(o); });

  auto* expect = app.add_subcommand("expect", "diagonal expectation of a word or element");
  add_common(expect, true, true);
  expect->add_option("--letters", o.letters, "letter sequence");
  expect->add_option("--element", o.element, "element json or file");
  expect->add_option("--route", o.route, "word (stepwise) or reduce (multiply out first)")
      ->check(CLI::IsMember({"word", "reduce"}));
  expect->callback([&o] { run_expect(o); });

  auto* moment_cmd = app.add_subcommand("moment", "expectation of a power of an element");
  add_common(moment_cmd, true, true);
  moment_cmd->add_option("--letters", o.letters, "letter sequence defining the element");
  moment_cmd->add_option("--element", o.element, "element json or file");
  moment_cmd->add_option("--order", o.order, "power")->required();
  moment_cmd->callback([&o] { run_moment(o); });

  auto* cumulant_cmd = app.add_subcommand("cumulant", "free cumulant of an element or letter word");
  add_common(cumulant_cmd, true, true);
  cumulant_cmd->add_option("--word", o.word, "letter sequence; one cumulant of these letters");
  cumulant_cmd->add_option("--element", o.element, "element json or file");
  cumulant_cmd->add_option("--letters", o.letters, "letter sequence defining the element");
  cumulant_cmd->add_option("--order", o.order, "cumulant order for --element/--letters input");
  cumulant_cmd->callback([&o] { run_cumulant(o); });

  auto* mu_cmd = app.add_subcommand("mu", "alternating-pattern weight or lattice Moebius value");
  add_common(mu_cmd, false, false);
  mu_cmd->add_option("--n", o.n, "order of the alternating pattern");
  mu_cmd->add_option("--p", o.part_p, "lower partition json");
  mu_cmd->add_option("--q", o.part_q, "upper partition json");
  mu_cmd->callback([&o] { run_mu(o); });

  auto* lattice_cmd = app.add_subcommand("lattice", "height profile of a letter word");
  add_common(lattice_cmd, true, false);
  lattice_cmd->add_option("--letters", o.letters, "letter sequence");
  lattice_cmd->callback([&o] { run_lattice(o); });

  auto* nc_cmd = app.add_subcommand("nc", "noncrossing partitions of an ordered set");
  add_common(nc_cmd, false, false);
  nc_cmd->add_option("--n", o.n, "set size")->required();
  nc_cmd->add_option("--filter", o.filter, "all, pairings or even");
  nc_cmd->add_flag("--list", o.list, "list the partitions");
  nc_cmd->add_flag("--mobius", o.with_mobius, "include mu(pi, full)");
  nc_cmd->callback([&o] { run_nc(o); });

  auto* free_cmd = app.add_subcommand("freeness", "structural check plus mixed-cumulant probe");
  add_common(free_cmd, true, true);
  free_cmd->add_option("--w1", o.w1, "first path word");
  free_cmd->add_option("--w2", o.w2, "second path word");
  free_cmd->add_option("--element-a", o.element_a, "first element json or file");
  free_cmd->add_option("--element-b", o.element_b, "second element json or file");
  free_cmd->add_option("--max-order", o.max_order, "highest cumulant order to probe");
  free_cmd->add_option("--closure-degree", o.closure_degree, "power depth of the probe sets");
  free_cmd->add_flag("--stop-on-first", o.stop_on_first, "stop at the first witness");
  free_cmd->callback([&o] { run_freeness(o); });

  auto* oracle_cmd = app.add_subcommand("oracle", "expectation against the truncated path space");
  add_common(oracle_cmd, true, false);
  oracle_cmd->add_option("--letters", o.letters, "letter sequence");
  oracle_cmd->add_option("--trunc", o.trunc, "truncation length");
  oracle_cmd->callback([&o] { run_oracle(o); });

  auto* demo_gn = app.add_subcommand("demo-gn", "moment chain on the one-vertex loop graphs");
  add_common(demo_gn, false, false);
  demo_gn->add_option("n", o.demo_n, "number of loops")->required()->check(CLI::Range(1, 6));
  demo_gn->add_option("--order", o.demo_order, "highest moment order");
  demo_gn->callback([&o] { run_demo_gn(o); });

  auto* demo_circ = app.add_subcommand("demo-circulant", "cumulant structure on a directed cycle");
  add_common(demo_circ, false, false);
  demo_circ->add_option("n", o.demo_n, "cycle size")->required()->check(CLI::Range(1, 6));
  demo_circ->add_option("--order", o.demo_order, "highest order");
  demo_circ->callback([&o] { run_demo_circulant(o); });

  auto* disc = app.add_subcommand("discrepancy", "route comparison and star-axis scan");
  add_common(disc, true, false);
  disc->add_option("--order", o.order, "highest moment order, default 4");
  disc->add_option("--len", o.scan_len, "scan length bound");
  disc->add_option("--trunc", o.trunc, "oracle truncation");
  disc->add_option("--samples", o.samples, "sample cap for the scan table");
  disc->callback([&o] { run_discrepancy(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
