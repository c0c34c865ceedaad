// Command-line front end: batch-oriented queries over Stallings core graphs,
// fringe posets, primitivity ranks, exact fixed-point expectations, and
// Monte Carlo cross-checks. Outputs are deterministic given inputs and seed.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stallings/expectation.hpp"
#include "stallings/montecarlo.hpp"

using json = nlohmann::json;
using namespace stallings;

namespace {

// '@file' arguments name a file with one word per line
std::vector<std::string> expand_word_args(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    if (!a.empty() && a[0] == '@') {
      std::ifstream in(a.substr(1));
      if (!in) throw std::invalid_argument("cannot open word file: " + a.substr(1));
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
      }
    } else {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<Word> parse_words(const std::vector<std::string>& args, int k) {
  std::vector<Word> out;
  for (const auto& text : expand_word_args(args)) out.push_back(Word::parse(text, k));
  return out;
}

CoreGraph subgroup_graph(const std::vector<std::string>& args, int k) {
  return CoreGraph::from_generators(parse_words(args, k), k);
}

// F_k gets its usual name; other subgroups list a spanning basis
std::string subgroup_name(const CoreGraph& g) {
  if (g.num_vertices() == 1 && g.num_edges() == g.rank_alphabet())
    return "F_" + std::to_string(g.rank_alphabet());
  std::string out = "<";
  auto basis = g.spanning_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) out += ", ";
    out += basis[i].str();
  }
  return out + ">";
}

std::string rat_str(const BigRat& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

json series_json(const LaurentSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(rat_str(c));
  return json{{"series", s.str()},
              {"leading_exponent", s.leading_exponent()},
              {"order", s.order()},
              {"coefficients", coeffs}};
}

json rational_json(const RationalFunction& f) {
  auto poly_coeffs = [](const Polynomial& p) {
    json a = json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(p.coeff(i).str());
    return a;
  };
  return json{{"text", f.str()},
              {"valid_from", f.validity_threshold()},
              {"numerator", poly_coeffs(f.numerator())},
              {"denominator", poly_coeffs(f.denominator())}};
}

json profile_json(const AlgebraicProfile& p) {
  json crit = json::array();
  for (const CoreGraph& g : p.critical_graphs())
    crit.push_back(json{{"name", subgroup_name(g)}, {"graph", g.serialize()}});
  json out{{"critical", crit}};
  if (p.primitivity_rank)
    out["pi"] = *p.primitivity_rank;
  else
    out["pi"] = nullptr;
  return out;
}

std::string crit_list(const AlgebraicProfile& p) {
  std::string out = "[";
  auto graphs = p.critical_graphs();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i) out += ", ";
    out += subgroup_name(graphs[i]);
  }
  return out + "]";
}

struct FringeFlags {
  std::vector<char> algebraic;
  std::vector<char> critical;
};

FringeFlags flags_of(const AlgebraicProfile& p) {
  FringeFlags f;
  f.algebraic.assign(p.fringe.size(), 0);
  f.critical.assign(p.fringe.size(), 0);
  for (int i : p.algebraic) f.algebraic[i] = 1;
  for (int i : p.critical) f.critical[i] = 1;
  return f;
}

void print_fringe_listing(const AlgebraicProfile& p, bool as_json, bool only_algebraic) {
  FringeFlags flags = flags_of(p);
  const FringePoset& poset = p.fringe;
  if (as_json) {
    json nodes = json::array();
    for (int i = 0; i < poset.size(); ++i) {
      if (only_algebraic && !flags.algebraic[i]) continue;
      nodes.push_back(json{{"index", i},
                           {"rank", poset.rank(i)},
                           {"distance", poset.distance(i)},
                           {"algebraic", static_cast<bool>(flags.algebraic[i])},
                           {"critical", static_cast<bool>(flags.critical[i])},
                           {"name", subgroup_name(poset.node(i))},
                           {"graph", poset.node(i).serialize()}});
    }
    std::cout << json{{"nodes", nodes}}.dump(2) << "\n";
    return;
  }
  int shown = 0;
  for (int i = 0; i < poset.size(); ++i)
    if (!only_algebraic || flags.algebraic[i]) ++shown;
  std::cout << "nodes " << shown << "\n";
  for (int i = 0; i < poset.size(); ++i) {
    if (only_algebraic && !flags.algebraic[i]) continue;
    std::cout << "node " << i << " rank=" << poset.rank(i) << " dist=" << poset.distance(i)
              << " algebraic=" << int(flags.algebraic[i])
              << " critical=" << int(flags.critical[i]) << "\n"
              << poset.node(i).serialize() << "\n";
  }
}

void print_report(const EstimateReport& r, const std::string& model, bool as_json, bool csv) {
  if (as_json) {
    json out{{"n", r.degree},       {"trials", r.trials}, {"seed", r.seed},
             {"mean", r.mean},      {"stderr", r.stderr_}, {"model", model}};
    out["exact"] = r.exact ? json(rat_str(*r.exact)) : json(nullptr);
    out["z"] = r.z_score ? json(*r.z_score) : json(nullptr);
    std::cout << out.dump(2) << "\n";
    return;
  }
  if (csv) {
    std::cout << "n,trials,mean,stderr,exact,z\n";
    std::cout << r.degree << "," << r.trials << "," << r.mean << "," << r.stderr_ << ",";
    if (r.exact) std::cout << rat_str(*r.exact);
    std::cout << ",";
    if (r.z_score) std::cout << *r.z_score;
    std::cout << "\n";
    return;
  }
  std::cout << "n=" << r.degree << " trials=" << r.trials << " mean=" << r.mean
            << " stderr=" << r.stderr_;
  if (r.exact) std::cout << " exact=" << rat_str(*r.exact);
  if (r.z_score) std::cout << " z=" << *r.z_score;
  std::cout << " seed=" << r.seed << " model=" << model << "\n";
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Exact toolkit for subgroups of free groups via Stallings core graphs"};
  app.require_subcommand(1);

  int k = 0;
  bool as_json = false;
  std::vector<std::string> words;
  std::vector<std::string> in_words;
  std::vector<std::string> target_words;
  long long degree = 0;
  long long trials = 100000;
  std::uint64_t seed = 0;
  int order = -1;
  std::string model = "hom";
  bool csv = false;

  auto add_common = [&](CLI::App* cmd, bool needs_words = true) {
    cmd->add_option("-k,--rank", k, "ambient rank of the free group")->required();
    cmd->add_flag("--json", as_json, "structured JSON output");
    if (needs_words)
      cmd->add_option("words", words, "generators (one word per argument; @file reads lines)")
          ->required();
  };

  auto* fold_cmd = app.add_subcommand("fold", "core graph of a subgroup, serialized");
  add_common(fold_cmd);

  auto* member_cmd =
      app.add_subcommand("member", "is the first word in the subgroup of the rest?");
  add_common(member_cmd);

  auto* fringe_cmd = app.add_subcommand("fringe", "all quotients, with distances and flags");
  add_common(fringe_cmd);

  auto* dist_cmd = app.add_subcommand("dist", "covering distance from root to target");
  add_common(dist_cmd);
  dist_cmd->add_option("--target", target_words, "generators of the target subgroup")->required();

  auto* ff_cmd = app.add_subcommand("freefactor", "is H a free factor of J (default F_k)?");
  add_common(ff_cmd);
  ff_cmd->add_option("--in", in_words, "generators of J (default: the whole free group)");

  auto* algext_cmd = app.add_subcommand("algext", "algebraic extensions of a subgroup");
  add_common(algext_cmd);

  auto* pirank_cmd = app.add_subcommand("pirank", "primitivity rank and critical subgroups");
  add_common(pirank_cmd);

  auto* prim_cmd = app.add_subcommand("primitive", "is a word primitive?");
  add_common(prim_cmd);

  auto* phi_cmd = app.add_subcommand("phi", "exact expected common fixed points, as a function of n");
  add_common(phi_cmd);
  phi_cmd->add_option("--in", in_words, "generators of J (default: the whole free group)");
  phi_cmd->add_option("--n", degree, "also evaluate at this point");

  auto* derive_cmd = app.add_subcommand("derive", "L/R/C/phi tables over the fringe poset");
  add_common(derive_cmd);
  derive_cmd->add_option("--top", target_words, "restrict to the interval up to this subgroup");

  auto* expand_cmd = app.add_subcommand("expand", "Laurent expansion of phi(H, F_k)");
  add_common(expand_cmd);
  expand_cmd->add_option("--order", order, "truncation depth (default: enough to see Crit)");

  auto* verify_cmd = app.add_subcommand("verify", "Monte Carlo check of phi at a point");
  add_common(verify_cmd);
  verify_cmd->add_option("--in", in_words, "generators of J (default: the whole free group)");
  verify_cmd->add_option("--n", degree, "covering degree")->required();
  verify_cmd->add_option("--trials", trials, "number of trials");
  verify_cmd->add_option("--seed", seed, "random seed (required for reproducibility)")->required();
  verify_cmd->add_option("--model", model, "sampling model")
      ->check(CLI::IsMember({"hom", "covering"}));
  verify_cmd->add_flag("--csv", csv, "CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto target_graph = [&](const std::vector<std::string>& args) {
      return args.empty() ? CoreGraph::bouquet(k) : subgroup_graph(args, k);
    };

    if (fold_cmd->parsed()) {
      CoreGraph g = subgroup_graph(words, k);
      if (as_json)
        std::cout << json{{"graph", g.serialize()},
                          {"vertices", g.num_vertices()},
                          {"edges", g.num_edges()},
                          {"rank", g.rank()}}
                         .dump(2)
                  << "\n";
      else
        std::cout << g.serialize();
    } else if (member_cmd->parsed()) {
      auto all = parse_words(words, k);
      if (all.empty()) throw std::invalid_argument("member needs a word to test");
      Word w = all.front();
      CoreGraph g = CoreGraph::from_generators({all.begin() + 1, all.end()}, k);
      bool member = g.contains(w);
      if (as_json)
        std::cout << json{{"member", member}}.dump(2) << "\n";
      else
        std::cout << (member ? "true" : "false") << "\n";
    } else if (fringe_cmd->parsed()) {
      print_fringe_listing(primitivity_profile(subgroup_graph(words, k)), as_json, false);
    } else if (dist_cmd->parsed()) {
      FringePoset poset(subgroup_graph(words, k));
      int d = distance(poset, subgroup_graph(target_words, k));
      if (as_json)
        std::cout << json{{"distance", d}}.dump(2) << "\n";
      else
        std::cout << d << "\n";
    } else if (ff_cmd->parsed()) {
      bool ff = is_free_factor(subgroup_graph(words, k), target_graph(in_words));
      if (as_json)
        std::cout << json{{"free_factor", ff}}.dump(2) << "\n";
      else
        std::cout << (ff ? "true" : "false") << "\n";
    } else if (algext_cmd->parsed()) {
      print_fringe_listing(primitivity_profile(subgroup_graph(words, k)), as_json, true);
    } else if (pirank_cmd->parsed()) {
      AlgebraicProfile p = primitivity_profile(subgroup_graph(words, k));
      if (as_json) {
        std::cout << profile_json(p).dump(2) << "\n";
      } else {
        std::cout << "pi=" << (p.primitivity_rank ? std::to_string(*p.primitivity_rank) : "inf")
                  << "; crit=" << crit_list(p) << "\n";
      }
    } else if (prim_cmd->parsed()) {
      auto all = parse_words(words, k);
      if (all.size() != 1) throw std::invalid_argument("primitive takes exactly one word");
      AlgebraicProfile p = primitivity_profile(CoreGraph::from_generators(all, k));
      if (as_json) {
        json out = profile_json(p);
        out["primitive"] = p.is_primitive();
        std::cout << out.dump(2) << "\n";
      } else if (p.is_primitive()) {
        std::cout << "primitive; pi=inf; crit=[]\n";
      } else {
        std::cout << "not primitive; pi=" << *p.primitivity_rank << "; crit=" << crit_list(p)
                  << "\n";
      }
    } else if (phi_cmd->parsed()) {
      RationalFunction f = phi(subgroup_graph(words, k), target_graph(in_words));
      json out = rational_json(f);
      std::ostringstream value_line;
      if (phi_cmd->count("--n")) {
        BigRat v = f.evaluate_at(degree);
        out["value_at"] = json{{"n", degree}, {"value", rat_str(v)}};
        value_line << "phi(" << degree << ") = " << rat_str(v) << "\n";
      }
      if (as_json)
        std::cout << out.dump(2) << "\n";
      else
        std::cout << f.str_with_validity() << "\n" << value_line.str();
    } else if (derive_cmd->parsed()) {
      FringePoset poset(subgroup_graph(words, k));
      DerivationTables t = derive_tables(poset);
      int top = -1;
      if (!target_words.empty()) {
        top = poset.find(subgroup_graph(target_words, k));
        if (top < 0) throw std::invalid_argument("--top is not in the fringe");
      }
      auto in_scope = [&](int i, int j) {
        if (!poset.covers(i, j)) return false;
        return top < 0 || poset.covers(j, top);
      };
      if (as_json) {
        json nodes = json::array();
        for (int i = 0; i < poset.size(); ++i)
          nodes.push_back(json{{"index", i},
                               {"rank", poset.rank(i)},
                               {"distance", poset.distance(i)},
                               {"graph", poset.node(i).serialize()}});
        json pairs = json::array();
        for (int i = 0; i < poset.size(); ++i)
          for (int j = 0; j < poset.size(); ++j)
            if (in_scope(i, j))
              pairs.push_back(json{{"from", i},
                                   {"to", j},
                                   {"L", t.L[i][j].str()},
                                   {"R", t.R[i][j].str()},
                                   {"C", t.C[i][j].str()},
                                   {"phi", t.Phi[i][j].str()}});
        std::cout << json{{"nodes", nodes}, {"pairs", pairs}}.dump(2) << "\n";
      } else {
        std::cout << "nodes " << poset.size() << "\n";
        for (int i = 0; i < poset.size(); ++i)
          std::cout << "node " << i << " rank=" << poset.rank(i)
                    << " dist=" << poset.distance(i) << "\n";
        for (int i = 0; i < poset.size(); ++i)
          for (int j = 0; j < poset.size(); ++j)
            if (in_scope(i, j)) {
              std::cout << "L\t" << i << "\t" << j << "\t" << t.L[i][j].str() << "\n";
              std::cout << "R\t" << i << "\t" << j << "\t" << t.R[i][j].str() << "\n";
              std::cout << "C\t" << i << "\t" << j << "\t" << t.C[i][j].str() << "\n";
              std::cout << "phi\t" << i << "\t" << j << "\t" << t.Phi[i][j].str() << "\n";
            }
      }
    } else if (expand_cmd->parsed()) {
      CoreGraph h = subgroup_graph(words, k);
      AlgebraicProfile p = primitivity_profile(h);
      RationalFunction f = phi(h, CoreGraph::bouquet(k));
      int depth = order;
      if (depth < 0)
        depth = p.primitivity_rank
                    ? (p.reduced_primitivity_rank() - h.reduced_rank()) + 2
                    : 2;
      LaurentSeries s = laurent_expand(f, depth);
      if (as_json) {
        json out = series_json(s);
        out["phi"] = rational_json(f);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << s.str() << "\n";
      }
    } else if (verify_cmd->parsed()) {
      CoreGraph h = subgroup_graph(words, k);
      CoreGraph j = target_graph(in_words);
      EstimateReport r = model == "hom"
                             ? estimate_phi(h, j, static_cast<int>(degree), trials, seed)
                             : estimate_phi_covering(h, j, static_cast<int>(degree), trials, seed);
      print_report(r, model, as_json, csv);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
