// SPDX-License-Identifier: Apache-2.0
// finapp: command-line front end for finite approach spaces.
//
// Exit codes: 0 pass / exponentiable, 1 check failed / not exponentiable,
// 2 unreadable input, invalid space, or bad arguments.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finapp/approach.hpp"
#include "finapp/expcheck.hpp"
#include "finapp/exponential.hpp"
#include "finapp/generate.hpp"
#include "finapp/io.hpp"

namespace fs = std::filesystem;
using namespace finapp;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

struct Loaded {
  InputFile file;
  json doc;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.file.name = fs::path(path).filename().string();
  l.file.bytes = read_file(path);
  l.doc = parse_json(l.file.bytes);
  return l;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<Cost> parse_cost_list(const std::string& text) {
  std::vector<Cost> out;
  for (const auto& item : split_list(text)) out.push_back(parse_cost(item));
  return out;
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    std::cout << line << '\n';
  }
}

void print_matrix(const NumRel& m) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{""};
  for (const auto& l : m.target().labels()) head.push_back(l);
  rows.push_back(head);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> r{m.source().label(i)};
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m.at(i, j)));
    rows.push_back(r);
  }
  print_table(rows);
}

void emit_json(const json& doc) { std::cout << doc.dump(2) << '\n'; }

Subset parse_subset(const PointSet& pts, const std::string& text) {
  Subset a = 0;
  for (const auto& label : split_list(text)) a |= singleton(pts.index_of(label));
  return a;
}

// ------------------------------------------------------------------ commands

struct Options {
  std::vector<std::string> files;
  std::string output;
  bool json = false;
  bool pseudo = false;
  std::string set;
  std::string at;
  std::string z;
  std::string x0;
  std::string u = "0";
  std::string v = "0";
  std::string psi;
  std::string phi;
  std::string method = "exact";
  std::string grid;
  std::size_t points = 3;
  std::string values = "0,1/2,1,inf";
  std::uint64_t seed = kDefaultSeed;
};

int cmd_check_axioms(const Options& o) {
  Loaded in = load(o.files.at(0));
  NumRel m = space_matrix_from_json(in.doc);
  AxiomReport r = o.pseudo ? check_reflexive(m) : check_axioms(m);
  if (o.json) {
    json res = to_json(r, m.source());
    res["pseudo"] = o.pseudo;
    emit_json(envelope("check-axioms", {in.file}, res));
  } else {
    print_matrix(m);
    std::cout << '\n';
    print_table({{"space", in.file.name + " (" + std::to_string(m.rows()) + " points)"},
                 {"axioms", o.pseudo ? "reflexivity" : "reflexivity, transitivity"},
                 {"verdict", r.ok() ? "valid" : "invalid"}});
    if (!r.ok()) std::cout << r.describe(m.source()) << '\n';
  }
  return r.ok() ? kPass : kFail;
}

int cmd_dist(const Options& o) {
  Loaded in = load(o.files.at(0));
  ApproachSpace s = space_from_json(in.doc, o.pseudo);
  const Subset a = parse_subset(s.points(), o.set);
  const std::size_t x = s.points().index_of(o.at);
  const Cost d = dist_from_conv(s, a, x);
  if (o.json) {
    emit_json(envelope("dist", {in.file},
                       {{"set", split_list(o.set)}, {"at", o.at}, {"distance", to_string(d)}}));
  } else {
    print_table({{"set", "{" + o.set + "}"}, {"at", o.at}, {"distance", to_string(d)}});
  }
  return kPass;
}

int cmd_product(const Options& o) {
  Loaded a = load(o.files.at(0));
  Loaded b = load(o.files.at(1));
  ApproachSpace sa = space_from_json(a.doc, o.pseudo);
  ApproachSpace sb = space_from_json(b.doc, o.pseudo);
  ApproachSpace p = product(sa, sb);
  const std::string text = space_to_json(p).dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
    return kPass;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + o.output + "'");
  out << text;
  if (!o.json) {
    print_table({{"product", a.file.name + " x " + b.file.name},
                 {"points", std::to_string(p.size())},
                 {"written", fs::path(o.output).filename().string()}});
  }
  return kPass;
}

int cmd_phi(const Options& o) {
  Loaded in = load(o.files.at(0));
  ApproachSpace s = space_from_json(in.doc);
  const std::size_t z = s.points().index_of(o.z);
  const Cost u = parse_cost(o.u);
  const Cost v = parse_cost(o.v);
  auto values = phi_uv(s, z, u, v);
  const bool certified = contraction_certificate(s, values);
  if (o.json) {
    json res = function_to_json(s.points(), values);
    res["z"] = o.z;
    res["u"] = to_string(u);
    res["v"] = to_string(v);
    res["contraction"] = certified;
    emit_json(envelope("phi", {in.file}, res));
  } else {
    std::vector<std::vector<std::string>> rows{{"x", "phi(x)"}};
    for (std::size_t x = 0; x < s.size(); ++x) rows.push_back({s.points().label(x), to_string(values[x])});
    print_table(rows);
    std::cout << "\ncontraction into [0,inf]: " << (certified ? "yes" : "no") << '\n';
  }
  return certified ? kPass : kFail;
}

int cmd_exp_d(const Options& o) {
  Loaded in = load(o.files.at(0));
  Loaded fpsi = load(o.psi);
  Loaded fphi = load(o.phi);
  ApproachSpace s = space_from_json(in.doc);
  auto psi = ContractionFn::certify(s, function_from_json(fpsi.doc, s.points()));
  auto phi = ContractionFn::certify(s, function_from_json(fphi.doc, s.points()));
  const Cost d = d_principal(s, psi, phi);
  if (o.json) {
    emit_json(envelope("exp-d", {in.file, fpsi.file, fphi.file}, {{"d", to_string(d)}}));
  } else {
    print_table({{"psi", fpsi.file.name}, {"phi", fphi.file.name}, {"d(psi,phi)", to_string(d)}});
  }
  return kPass;
}

int cmd_replay(const Options& o) {
  Loaded in = load(o.files.at(0));
  ApproachSpace s = space_from_json(in.doc);
  const std::size_t z = s.points().index_of(o.z);
  const std::size_t x0 = s.points().index_of(o.x0);
  ReplayReport r = replay_theorem(s, z, x0, parse_cost(o.u), parse_cost(o.v));
  if (o.json) {
    emit_json(envelope("replay", {in.file}, to_json(r, s.points())));
  } else {
    print_table({{"X", r.big_x}, {"p", r.p}, {"P", r.big_p}, {"Q", r.big_q}});
    std::cout << '\n';
    std::vector<std::vector<std::string>> rows{{"step", "lhs", "rel", "rhs", "holds", "statement"}};
    for (const auto& st : r.steps) {
      rows.push_back({st.name, to_string(st.lhs), st.relation, to_string(st.rhs),
                      st.holds ? "yes" : "NO", st.statement});
    }
    print_table(rows);
    std::cout << '\n';
    for (const auto& line : r.log) std::cout << line << '\n';
    std::cout << "\nfacts (1)-(3): " << (r.facts_hold() ? "hold" : "FAIL") << '\n';
    std::cout << "first failure: " << (r.first_failure ? *r.first_failure : "none") << '\n';
  }
  return r.chain_holds() ? kPass : kFail;
}

int cmd_check_exponentiable(const Options& o) {
  Loaded in = load(o.files.at(0));
  ApproachSpace s = space_from_json(in.doc);
  ExpReport r;
  if (o.method == "exact") {
    r = check_exponentiable_exact(s);
  } else if (o.method == "grid") {
    const std::vector<Cost> grid = o.grid.empty() ? dense_grid(s) : parse_cost_list(o.grid);
    r = check_exponentiable_grid(s, grid);
  } else {
    r = classify_finite(s);
  }
  const PointSet& pts = s.points();
  if (o.json) {
    emit_json(envelope("check-exponentiable", {in.file}, to_json(r, pts)));
  } else {
    std::vector<std::vector<std::string>> rows{
        {"space", in.file.name + " (" + std::to_string(s.size()) + " points)"},
        {"method", to_string(r.method)},
        {"verdict", r.exponentiable ? "exponentiable" : "not exponentiable"}};
    if (r.witness) {
      const auto& w = *r.witness;
      rows.push_back({"witness", "z=" + pts.label(w.z) + "  x0=" + pts.label(w.x0) +
                                     "  u=" + to_string(w.u) + "  v=" + to_string(w.v)});
      rows.push_back({"lhs", "(u+v) v a(z,x0) = " + to_string(w.lhs)});
      rows.push_back({"rhs", "min_y (u v a(y,x0)) + (v v a(z,y)) = " + to_string(w.rhs) +
                                 "  at y=" + pts.label(w.argmin_y)});
    }
    if (r.offending_entry) {
      rows.push_back({"entry", "a(" + pts.label(r.offending_entry->first) + "," +
                                   pts.label(r.offending_entry->second) + ") = " +
                                   to_string(s.conv(r.offending_entry->first,
                                                    r.offending_entry->second))});
    }
    rows.push_back({"examined", std::to_string(r.pairs_examined) + " pairs, " +
                                    std::to_string(r.candidates_examined) + " candidates"});
    print_table(rows);
  }
  return r.exponentiable ? kPass : kFail;
}

int cmd_gen(const Options& o) {
  const std::vector<Cost> values = parse_cost_list(o.values);
  if (values.empty()) throw FormatError("--values needs at least one cost");
  std::mt19937_64 rng(o.seed);
  ApproachSpace s = random_space(o.points, values, rng);
  const std::string text = space_to_json(s).dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + o.output + "'");
    out << text;
  }
  return kPass;
}

std::string error_position(std::size_t pos) {
  return " (at byte " + std::to_string(pos) + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite approach spaces: axioms, products, exponentials and exponentiability"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> run;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "Emit the full JSON report"); };

  auto* ca = app.add_subcommand("check-axioms", "Check the convergence axioms of a space file");
  ca->add_option("file", o.files, "Space file")->required()->expected(1);
  ca->add_flag("--pseudo", o.pseudo, "Only require reflexivity");
  add_json(ca);
  ca->callback([&] { run = cmd_check_axioms; });

  auto* di = app.add_subcommand("dist", "Distance from a subset to a point");
  di->add_option("file", o.files, "Space file")->required()->expected(1);
  di->add_option("--set", o.set, "Comma-separated labels (may be empty)")->required();
  di->add_option("--at", o.at, "Point label")->required();
  di->add_flag("--pseudo", o.pseudo, "Admit reflexive structures");
  add_json(di);
  di->callback([&] { run = cmd_dist; });

  auto* pr = app.add_subcommand("product", "Product of two spaces");
  pr->add_option("files", o.files, "Two space files")->required()->expected(2);
  pr->add_option("-o,--output", o.output, "Output space file");
  pr->add_flag("--pseudo", o.pseudo, "Admit reflexive structures");
  pr->callback([&] { run = cmd_product; });

  auto* ph = app.add_subcommand("phi", "Evaluate phi_{u,v} at the iterated ultrafilter of z");
  ph->add_option("file", o.files, "Space file")->required()->expected(1);
  ph->add_option("--z", o.z, "Point label")->required();
  ph->add_option("--u", o.u, "Cost");
  ph->add_option("--v", o.v, "Cost");
  add_json(ph);
  ph->callback([&] { run = cmd_phi; });

  auto* ed = app.add_subcommand("exp-d", "Exponential structure d(psi^, phi)");
  ed->add_option("space", o.files, "Space file")->required()->expected(1);
  ed->add_option("--psi", o.psi, "Function file")->required();
  ed->add_option("--phi", o.phi, "Function file")->required();
  add_json(ed);
  ed->callback([&] { run = cmd_exp_d; });

  auto* rp = app.add_subcommand("replay", "Replay the necessity argument at (z, x0, u, v)");
  rp->add_option("space", o.files, "Space file")->required()->expected(1);
  rp->add_option("--z", o.z, "Point label")->required();
  rp->add_option("--x0", o.x0, "Point label")->required();
  rp->add_option("--u", o.u, "Cost");
  rp->add_option("--v", o.v, "Cost");
  add_json(rp);
  rp->callback([&] { run = cmd_replay; });

  auto* ce = app.add_subcommand("check-exponentiable", "Decide the exponentiability criterion");
  ce->add_option("space", o.files, "Space file")->required()->expected(1);
  ce->add_option("--method", o.method, "exact, grid or classify")
      ->check(CLI::IsMember({"exact", "grid", "classify"}));
  ce->add_option("--grid", o.grid, "Comma-separated costs for --method grid");
  add_json(ce);
  ce->callback([&] { run = cmd_check_exponentiable; });

  auto* ge = app.add_subcommand("gen", "Generate a random valid space");
  ge->add_option("--points", o.points, "Number of points")->check(CLI::Range(1, 64));
  ge->add_option("--values", o.values, "Comma-separated costs to draw from");
  ge->add_option("--seed", o.seed, "64-bit seed");
  ge->add_option("-o,--output", o.output, "Output space file");
  ge->callback([&] { run = cmd_gen; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kError;
  }

  try {
    return run(o);
  } catch (const CostParseError& e) {
    std::cerr << "error: " << e.what() << error_position(e.position()) << '\n';
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << error_position(e.position()) << '\n';
  } catch (const InvalidSpace& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kError;
}
