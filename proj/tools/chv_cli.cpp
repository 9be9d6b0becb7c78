// Command-line surface: root systems, Weyl word utilities, certificate
// verification, the sign solver, and the small-group oracle.  Exit codes:
// 0 success, 1 verification failure, 2 usage or data error.
#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <iostream>
#include <random>
#include <thread>

#include "chv/certificates.hpp"
#include "chv/conjsearch.hpp"
#include "chv/datapath.hpp"
#include "chv/registry.hpp"
#include "chv/reeoracle.hpp"

using namespace chv;
using nlohmann::json;

namespace {

struct E8Context {
  RootSystem rs = RootSystem::of("E8");
  WeylGroup wg{rs};
  EtaTables eta{rs};
  ClassCatalog cat;
  LusztigMap map;
  E8Context()
      : cat(ClassCatalog::from_file(wg, data_file("weyl_classes_e8.dat"))),
        map(LusztigMap::from_file(data_file("lusztig_map_e8.dat"))) {}
};

int cmd_roots(const std::string& type) {
  RootSystem rs = RootSystem::of(type);
  std::cout << rs.dump();
  return 0;
}

int cmd_weyl(const std::string& mode, const std::vector<int>& word) {
  E8Context ctx;
  WeylElement w = ctx.wg.word_to_element(word);
  if (mode == "reduce") {
    std::cout << "length " << w.length() << "\nreduced";
    for (int l : ctx.wg.reduced_word(w)) std::cout << ' ' << l;
    std::cout << "\n";
    return 0;
  }
  IdentifyResult r = ctx.cat.identify(w);
  switch (r.status) {
    case IdentifyStatus::Match:
      std::cout << "class " << r.label->name << " (min length " << r.label->min_length
                << ")\n";
      return 0;
    case IdentifyStatus::NoMatch:
      std::cout << "no match in the shipped catalog\n";
      return 1;
    default:
      std::cout << "ambiguous: orbit budget exhausted\n";
      return 1;
  }
}

int cmd_lusztig_map(const std::string& cls, int p) {
  E8Context ctx;
  auto pre = ctx.map.preimages(cls, p);
  if (pre.empty()) {
    std::cerr << "unknown unipotent class: " << cls << "\n";
    return 2;
  }
  int global = 1 << 20;
  for (const auto& name : pre) {
    const ClassLabel* cl = ctx.cat.find(name);
    std::cout << name << " -> " << cls << "  (min length "
              << (cl ? std::to_string(cl->min_length) : "?") << ")\n";
    if (cl) global = std::min(global, cl->min_length);
  }
  std::cout << "global minimal length: " << global << "\n";
  return 0;
}

int cmd_hooks(const std::string& cls, int p, const std::vector<int>& word) {
  E8Context ctx;
  bool ok = hooks_into(ctx.wg, ctx.cat, ctx.map, ctx.wg.word_to_element(word), cls, p);
  std::cout << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

int cmd_tables(const std::string& label, bool as_json) {
  CycField f(std::lcm(value_conductor(label), 4));
  FiniteGroupTable t = table_for(label, &f);
  if (as_json) {
    json j;
    j["group"] = label;
    j["order"] = t.order;
    json cls = json::array(), chars = json::array();
    for (const auto& c : t.classes)
      cls.push_back({{"name", c.name}, {"size", c.size}, {"central", c.central}});
    for (const auto& ch : t.chars) {
      json vals = json::array();
      for (const auto& v : ch.values) vals.push_back(v.str());
      chars.push_back({{"name", ch.name}, {"degree", ch.degree}, {"values", vals}});
    }
    j["classes"] = cls;
    j["characters"] = chars;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  size_t w = 8;
  for (const auto& c : t.classes) w = std::max(w, c.name.size() + 2);
  std::cout << label << " (order " << t.order << ")\n" << std::string(w, ' ');
  for (const auto& c : t.classes) std::cout << c.name << std::string(w - c.name.size(), ' ');
  std::cout << "\n" << std::string(w, ' ');
  for (const auto& c : t.classes) {
    std::string s = "|" + std::to_string(c.size) + "|";
    std::cout << s << std::string(w - s.size(), ' ');
  }
  std::cout << "\n";
  for (const auto& ch : t.chars) {
    std::cout << ch.name << std::string(w - ch.name.size(), ' ');
    for (const auto& v : ch.values) {
      std::string s = v.str();
      std::cout << s << std::string(s.size() < w ? w - s.size() : 1, ' ');
    }
    std::cout << "\n";
  }
  return 0;
}

json cert_report_json(const Certificate& c, const CertificateReport& r) {
  json j;
  j["name"] = c.mizuno_name;
  j["class"] = c.class_name;
  j["p"] = c.p;
  j["status"] = c.status == Certificate::Cert
                    ? "cert"
                    : (c.status == Certificate::Lookup ? "lookup" : "unproven");
  if (c.status == Certificate::Cert) {
    j["conj_exact"] = r.conj_exact;
    j["conj_up_to_twist"] = r.conj_twist;
    if (!r.twist.empty()) j["twist"] = r.twist;
    j["reduced"] = r.reduced;
    j["hooks"] = r.hooks;
    j["good"] = r.good;
  }
  return j;
}

int cmd_verify_cert(const std::string& file, const std::string& only, int only_p,
                    bool as_json) {
  E8Context ctx;
  CertificateSet set = CertificateSet::from_file(file);
  CertificateVerifier ver(ctx.rs, ctx.wg, ctx.eta, ctx.cat, ctx.map);
  std::vector<const Certificate*> todo;
  for (const auto& c : set.certs) {
    if (!only.empty() && c.mizuno_name != only) continue;
    if (only_p && c.p != only_p) continue;
    todo.push_back(&c);
  }
  // independent items verified in parallel over read-only tables
  std::vector<CertificateReport> reports(todo.size());
  {
    size_t nthreads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (size_t t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (size_t i = next++; i < todo.size(); i = next++)
          reports[i] = ver.verify(*todo[i]);
      });
    for (auto& th : pool) th.join();
  }
  int failures = 0;
  json out = json::array();
  for (size_t i = 0; i < todo.size(); ++i) {
    const Certificate& c = *todo[i];
    const CertificateReport& r = reports[i];
    if (as_json) {
      out.push_back(cert_report_json(c, r));
    } else if (c.status != Certificate::Cert) {
      std::cout << c.mizuno_name << " " << c.class_name << " p=" << c.p << "  "
                << (c.status == Certificate::Lookup ? "LOOKUP (not checkable here)"
                                                    : "UNPROVEN")
                << "\n";
    } else {
      std::cout << c.mizuno_name << " " << c.class_name << " p=" << c.p << "  CONJ="
                << (r.conj_exact ? "exact" : (r.conj_twist ? "up-to-twist" : "FAIL"))
                << " REDUCED=" << r.reduced << " HOOKS=" << r.hooks << " GOOD=" << r.good
                << "\n";
    }
    if (c.status == Certificate::Cert && !r.good) ++failures;
  }
  for (const auto& rec : set.invconj) {
    if (!only.empty() && rec.name != only) continue;
    if (only_p && rec.p != only_p) continue;
    InverseConjReport r = ver.verify_inverse(rec);
    if (as_json) {
      json j;
      j["name"] = rec.name;
      j["class"] = rec.class_name;
      j["p"] = rec.p;
      j["inverse_conjugacy"] = r.twist_found;
      j["exact"] = r.exact;
      out.push_back(j);
    } else {
      std::cout << rec.name << " " << rec.class_name << " p=" << rec.p << "  INVCONJ="
                << (r.exact ? "exact" : (r.twist_found ? "up-to-twist" : "FAIL")) << "\n";
    }
    if (!r.twist_found) ++failures;
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return failures ? 1 : 0;
}

int cmd_search_good(const std::string& name, const std::string& cls, size_t budget) {
  E8Context ctx;
  CertificateSet set = CertificateSet::from_file(data_file("certificates_e8.dat"));
  const Certificate* c = set.find(name);
  if (!c || c->mizuno_text.empty()) {
    std::cerr << "no stored word for " << name << "\n";
    return 2;
  }
  AdjointRep ad(ctx.rs, 2);
  GoodConjugatorSearch search(ctx.rs, ctx.wg, ctx.cat, ctx.map, ad);
  GroupWord z = parse_word(ctx.rs, c->mizuno_text, 2);
  SearchResult r = search.run(z, cls, budget);
  std::cout << "states explored: " << r.states_explored << "\n";
  if (!r.found) {
    std::cout << "not found within budget\n";
    return 1;
  }
  std::cout << "conjugator [";
  for (int j : r.conjugator) std::cout << j;
  std::cout << "] ~> ";
  for (size_t i = 0; i < r.word.size(); ++i) std::cout << (i ? " " : "") << r.word[i];
  std::cout << "\n";
  return 0;
}

json report_json(const SolverReport& rep, const std::vector<std::string>& rows) {
  json j;
  j["verdict"] = rep.verdict;
  j["solutions"] = rep.solutions.size();
  j["orbits"] = rep.orbit_count;
  if (rep.canonical >= 0) {
    j["positive_row_value"] = rep.canonical_value.str();
    json vals = json::object();
    for (size_t r = 0; r < rows.size(); ++r)
      vals[rows[r]] = rep.solutions[rep.canonical].row_values[r].str();
    j["canonical_rows"] = vals;
  }
  if (!rep.undetermined.empty()) j["undetermined"] = rep.undetermined;
  return j;
}

void print_report(const SolverReport& rep, const std::string& prefactor,
                  const std::vector<std::string>& rows) {
  std::cout << "  verdict " << rep.verdict << "; solutions " << rep.solutions.size()
            << " in " << rep.orbit_count << " orbit(s)\n";
  if (rep.canonical >= 0) {
    const Solution& s = rep.solutions[rep.canonical];
    std::cout << "  canonical solution rows (times " << prefactor << "):\n";
    for (size_t r = 0; r < rows.size(); ++r)
      std::cout << "    " << rows[r] << " : " << s.row_values[r].str() << "\n";
    std::cout << "  good classes:";
    for (const auto& g : s.good_rows) std::cout << ' ' << g;
    std::cout << "\n";
  }
  if (!rep.undetermined.empty()) {
    std::cout << "  no information on:";
    for (const auto& u : rep.undetermined) std::cout << ' ' << u;
    std::cout << "\n";
  }
}

// the symbolic table, one row per conjugacy class of A_G(u)
void print_symbolic(const SolverCase& c) {
  CaseRunner runner;
  CycField f(std::lcm(std::lcm(value_conductor(c.group), 2), 24));
  FiniteGroupTable g = table_for(c.group, &f);
  std::vector<UnknownSpec> us;
  for (const auto& u : c.unknowns) {
    UnknownSpec s;
    s.char_name = u.char_name;
    s.kind = u.kind == "fixed1" ? UnknownSpec::FixedOne : UnknownSpec::Sign;
    s.name = u.kind == "fixed1"
                 ? "1"
                 : (u.kind == "delta" ? "delta[" : (u.kind == "xi" ? "xi[" : "zg[")) +
                       u.char_name + "]";
    us.push_back(s);
  }
  MExpressionTable t = c.pattern == "regular"
                           ? build_regular_expressions(g, us, c.prefactor)
                           : build_irregular_expressions(g, us, c.pattern, c.prefactor);
  std::cout << "  m((u_O)_a, w) / " << c.prefactor << ":\n";
  for (size_t r = 0; r < t.row_labels.size(); ++r) {
    std::cout << "    " << t.row_labels[r] << " : ";
    bool first = true;
    for (size_t u = 0; u < us.size(); ++u) {
      const Cyc& co = t.coeff[r][u];
      if (co.is_zero()) continue;
      std::string cs = co.str();
      std::string term = (cs == "1" ? "" : cs == "-1" ? "-" : cs + "*") + us[u].name;
      if (!first && term[0] != '-') std::cout << " + ";
      else if (!first) {
        std::cout << " - ";
        term = term.substr(1);
      }
      std::cout << term;
      first = false;
    }
    std::cout << "\n";
  }
}

int cmd_solve(const std::string& cls, int p, int qmod3, bool as_json) {
  CaseRegistry reg = CaseRegistry::from_file(data_file("solver_cases_e8.dat"));
  const SolverCase* c = reg.find(cls, p);
  if (!c) {
    std::cerr << "no registry case for " << cls << " at p=" << p << "\n";
    return 2;
  }
  CaseRunner runner;
  CaseOutcome out = runner.run(*c, qmod3);
  if (as_json) {
    json j;
    j["class"] = cls;
    j["p"] = p;
    j["verdict"] = out.verdict;
    j["prefactor"] = out.prefactor;
    j["report"] = report_json(out.report, out.row_labels);
    if (out.branch_qm2) j["q_mod_3_eq_2"] = report_json(*out.branch_qm2, out.row_labels);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << cls << " p=" << p << ": " << out.verdict << "\n";
    print_symbolic(*c);
    if (out.branch_qm2) std::cout << " q = 1 mod 3:\n";
    print_report(out.report, out.prefactor, out.row_labels);
    if (out.branch_qm2) {
      std::cout << " q = -1 mod 3:\n";
      print_report(*out.branch_qm2, out.prefactor, out.row_labels);
    }
  }
  return 0;
}

int cmd_solve_all(int p, bool as_json) {
  CaseRegistry reg = CaseRegistry::from_file(data_file("solver_cases_e8.dat"));
  CaseRunner runner;
  json arr = json::array();
  int mismatches = 0;
  std::vector<std::string> exceptions;
  for (const SolverCase* c : reg.for_p(p)) {
    CaseOutcome out = runner.run(*c);
    std::string want = c->expect == "unique"
                           ? "UNIQUE_GOOD"
                           : (c->expect == "allgood" ? "ALL_GOOD" : "CONDITIONAL");
    bool ok = out.verdict == want;
    if (!ok) ++mismatches;
    if (out.verdict != "UNIQUE_GOOD")
      exceptions.push_back(c->uni_class + " (" + out.verdict + ")");
    if (as_json) {
      json j;
      j["class"] = c->uni_class;
      j["verdict"] = out.verdict;
      j["expected"] = want;
      arr.push_back(j);
    } else {
      std::cout << c->uni_class << " : " << out.verdict << (ok ? "" : "  [UNEXPECTED]")
                << "\n";
    }
  }
  if (as_json) {
    json j;
    j["p"] = p;
    j["cases"] = arr;
    j["exceptions"] = exceptions;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "classes without a unique good class at p=" << p << ":";
    for (const auto& e : exceptions) std::cout << "  " << e;
    std::cout << "\n";
  }
  return mismatches ? 1 : 0;
}

int cmd_ree(const std::string& type, int q, bool as_json) {
  SmallGroupModel m = build_model(type, q);
  int pairs = 0;
  bool all = true;
  for (size_t c = 0; c < m.uni_classes.size(); ++c)
    for (int w = 0; w < m.weyl_size; ++w) {
      ReeCheck r = check_ree(m, static_cast<int>(c), w);
      ++pairs;
      if (!r.equal) all = false;
    }
  if (as_json) {
    json j;
    j["type"] = type;
    j["q"] = q;
    j["group_order"] = m.elements.size();
    j["pairs_checked"] = pairs;
    j["all_equal"] = all;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << type << " q=" << q << "  |G|=" << m.elements.size() << "  pairs=" << pairs
              << "  all-equal=" << (all ? "yes" : "NO") << "\n";
  }
  return all ? 0 : 1;
}

int cmd_selftest() {
  int failed = 0;
  auto report = [&](const char* what, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
    if (!ok) ++failed;
  };

  RootSystem rs = RootSystem::of("E8");  // constructor verifies the constants
  report("structure constants (antisymmetry, Jacobi, +-1)", true);
  bool invol = true;
  for (int j = 0; j < rs.rank(); ++j)
    for (int r = 0; r < rs.nroots(); ++r)
      if (rs.simple_reflection(rs.simple_reflection(r, j), j) != r) invol = false;
  report("simple reflections are involutions on all roots", invol);

  WeylGroup wg(rs);
  report("l(w0) = 120", wg.longest_element().length() == 120);

  bool ortho = true;
  for (const char* label : {"Z2", "Z3", "Z4", "Z5", "Z6", "S3", "S5", "D8", "Z2xZ2", "S3xZ2"}) {
    CycField f(value_conductor(label) * 4);
    try {
      table_for(label, &f);
    } catch (...) {
      ortho = false;
    }
  }
  report("character table orthogonality", ortho);

  EtaTables eta(rs);
  std::mt19937_64 rng(2024);
  bool cross = true;
  std::uniform_int_distribution<int> picklen(0, 30);
  for (int p : {2, 3, 5}) {
    AdjointRep ad(rs, p);
    BruhatEngine eng(rs, wg, eta, p);
    std::uniform_int_distribution<int> pickroot(0, rs.nroots() - 1);
    std::uniform_int_distribution<int> pickj(0, rs.rank() - 1);
    std::uniform_int_distribution<int> pickc(1, p - 1);
    for (int t = 0; t < 40 && cross; ++t) {
      GroupWord w;
      w.p = p;
      int len = picklen(rng);
      for (int i = 0; i < len; ++i) {
        switch (rng() % (p == 2 ? 2 : 3)) {
          case 0:
            w.tokens.push_back(GeneratorToken::root_elt(pickroot(rng), pickc(rng)));
            break;
          case 1:
            w.tokens.push_back(GeneratorToken::omega(pickj(rng), rng() % 2 == 0));
            break;
          default:
            w.tokens.push_back(GeneratorToken::torus(rs.simple_root(pickj(rng)), pickc(rng)));
        }
      }
      if (ad.evaluate(eng.to_word(eng.normal_form(w))) != ad.evaluate(w)) cross = false;
    }
  }
  report("cross-engine normal-form reconstruction", cross);

  bool lemma = true;
  std::uniform_int_distribution<int> pickl(1, 8);
  for (int p : {2, 3, 5}) {
    BruhatEngine eng(rs, wg, eta, p);
    std::uniform_int_distribution<int> pickc(1, p - 1);
    int done = 0;
    while (done < 8 && lemma) {
      std::vector<int> word;
      int len = 1 + static_cast<int>(rng() % 12);
      for (int i = 0; i < len; ++i) word.push_back(pickl(rng));
      if (!wg.is_reduced(word)) continue;
      std::vector<int> coeffs;
      for (int i = 0; i < len; ++i) coeffs.push_back(pickc(rng));
      if (!eng.lemma_bwb_check(word, coeffs)) lemma = false;
      ++done;
    }
  }
  report("Bruhat-cell lemma property", lemma);

  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chevalley-group certificates and sign solver for E8"};
  app.require_subcommand(1);

  std::string type_label = "E8", cls, only, file, mode, name;
  std::string format = "text";
  std::vector<int> word;
  int p = 2, q = 2, qmod3 = 0, vc_p = 0;
  size_t budget = 100000;
  bool json_flag = false;

  auto* roots = app.add_subcommand("roots", "dump a root system");
  roots->add_option("type", type_label)->required();

  auto* weyl = app.add_subcommand("weyl", "reduce or classify a Weyl word");
  weyl->add_option("mode", mode)->check(CLI::IsMember({"reduce", "classify"}))->required();
  weyl->add_option("word", word, "simple-reflection letters");

  auto* lmap = app.add_subcommand("lusztig-map", "preimages of a unipotent class");
  lmap->add_option("class", cls)->required();
  lmap->add_option("--p", p)->required();

  auto* hooks = app.add_subcommand("hooks", "does the word hook into the class?");
  hooks->add_option("class", cls)->required();
  hooks->add_option("--p", p)->required();
  hooks->add_option("word", word)->required();

  auto* vc = app.add_subcommand("verify-cert", "verify certificates from a file");
  vc->add_option("file", file)->required();
  vc->add_option("--only", only);
  vc->add_option("--p", vc_p, "restrict to one characteristic");
  vc->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  vc->add_flag("--json", json_flag);

  auto* sg = app.add_subcommand("search-good", "search for a conjugation certificate");
  sg->add_option("name", name)->required();
  sg->add_option("--class", cls)->required();
  sg->add_option("--budget", budget);

  auto* solve = app.add_subcommand("solve", "run the sign solver on one case");
  solve->add_option("class", cls)->required();
  solve->add_option("--p", p)->required();
  solve->add_option("--qmod3", qmod3)->check(CLI::IsMember({1, 2}));
  solve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  solve->add_flag("--json", json_flag);

  auto* sa = app.add_subcommand("solve-all", "verdicts for every case at one p");
  sa->add_option("--p", p)->required();
  sa->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  sa->add_flag("--json", json_flag);

  auto* ree = app.add_subcommand("ree-check", "brute-force cell formula check");
  ree->add_option("--type", type_label)->check(CLI::IsMember({"A1", "A2"}))->required();
  ree->add_option("--q", q)->required();
  ree->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  ree->add_flag("--json", json_flag);

  auto* tbl = app.add_subcommand("tables", "print a component-group character table");
  tbl->add_option("group", name, "Z1..Z6, S3, S5, D8, Z2xZ2, S3xZ2")->required();
  tbl->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  tbl->add_flag("--json", json_flag);

  auto* st = app.add_subcommand("selftest", "run the property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  bool as_json = json_flag || format == "json";
  try {
    if (roots->parsed()) return cmd_roots(type_label);
    if (weyl->parsed()) return cmd_weyl(mode, word);
    if (lmap->parsed()) return cmd_lusztig_map(cls, p);
    if (hooks->parsed()) return cmd_hooks(cls, p, word);
    if (vc->parsed()) return cmd_verify_cert(file, only, vc_p, as_json);
    if (sg->parsed()) return cmd_search_good(name, cls, budget);
    if (solve->parsed()) return cmd_solve(cls, p, qmod3, as_json);
    if (sa->parsed()) return cmd_solve_all(p, as_json);
    if (ree->parsed()) return cmd_ree(type_label, q, as_json);
    if (tbl->parsed()) return cmd_tables(name, as_json);
    if (st->parsed()) return cmd_selftest();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
