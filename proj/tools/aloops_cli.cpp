// Command-line front end: construct loops, analyze tables, test isomorphism
// and isotopy, run the enumeration pipelines, and verify the reproduction
// checklist.
//
// Exit codes: 0 success / verdict "yes", 1 verification failure / verdict
// "no", 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aloops/analysis.hpp"
#include "aloops/catalog.hpp"
#include "aloops/construct.hpp"
#include "aloops/family_iso.hpp"
#include "aloops/group_tables.hpp"
#include "aloops/io.hpp"
#include "aloops/iso.hpp"
#include "aloops/pipelines.hpp"
#include "aloops/verify.hpp"

using nlohmann::json;
using namespace aloops;

namespace {

json fingerprint_json(const Fingerprint& f) {
  json orders = json::array();
  for (auto [o, c] : f.element_orders) orders.push_back({{"order", o}, {"count", c}});
  json j{{"order", f.order},
         {"power_associative", f.power_associative},
         {"element_orders", orders},
         {"nucleus_left", f.nucleus_left},
         {"nucleus_middle", f.nucleus_middle},
         {"nucleus_right", f.nucleus_right},
         {"center", f.center_size},
         {"inn_order", f.inn_order},
         {"mlt_order", f.mlt_order},
         {"squares", f.squares_count}};
  if (f.aut_order) j["aut_order"] = *f.aut_order;
  return j;
}

json table_rows(const LoopTable& L) {
  json rows = json::array();
  for (int i = 0; i < L.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < L.order(); ++j) row.push_back(L.mul(static_cast<Elem>(i), static_cast<Elem>(j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json record_json(const CatalogRecord& r) {
  return json{{"id", r.id},
              {"order", r.order},
              {"provenance", r.provenance},
              {"nonassociative", r.nonassociative},
              {"exponent", r.exp},
              {"center", r.center_size},
              {"fingerprint", fingerprint_json(r.fp)},
              {"table", table_rows(r.table)}};
}

LoopTable load_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::ParseError, "cannot open " + path);
  std::string head;
  std::getline(f, head);
  f.seekg(0);
  if (!head.empty() && head[0] == '{') {
    json j;
    try {
      f >> j;
    } catch (const json::exception& ex) {
      throw Error(Errc::ParseError, std::string("bad JSON: ") + ex.what());
    }
    if (!j.contains("n") || !j.contains("rows")) throw Error(Errc::ParseError, "JSON table needs fields n and rows");
    const int n = j["n"].get<int>();
    std::vector<std::vector<int>> rows;
    for (const auto& row : j["rows"]) rows.push_back(row.get<std::vector<int>>());
    if (static_cast<int>(rows.size()) != n) throw Error(Errc::ParseError, "row count does not match n");
    try {
      return LoopTable::from_rows(n, rows);
    } catch (const Error& e) {
      if (e.code() == Errc::NotLatin || e.code() == Errc::OutOfRange)
        throw Error(Errc::ParseError, std::string("invalid Cayley table: ") + e.what());
      throw;
    }
  }
  return read_aloop(f);
}

std::vector<int> parse_moduli(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw Error(Errc::InvalidParameters, "empty moduli list");
  return out;
}

Permutation parse_perm(const std::string& s, int degree) {
  Permutation p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) p.img.push_back(static_cast<Elem>(std::stoi(item)));
  if (p.degree() != degree || !p.is_bijection())
    throw Error(Errc::NotBijection, "expected a permutation of 0.." + std::to_string(degree - 1));
  return p;
}

void emit_analysis(const LoopTable& L, const std::string& format, std::ostream& os) {
  const Fingerprint fp = fingerprint(L);
  const bool assoc = is_associative(L);
  const bool comm = is_commutative(L);
  const bool aloop = is_A_loop(L);
  if (format == "json") {
    json j{{"order", L.order()},        {"commutative", comm},
           {"associative", assoc},      {"a_loop", aloop},
           {"fingerprint", fingerprint_json(fp)}};
    if (fp.power_associative) j["exponent"] = exponent(L);
    os << j.dump(2) << "\n";
    return;
  }
  os << "order:            " << L.order() << "\n";
  os << "commutative:      " << (comm ? "yes" : "no") << "\n";
  os << "associative:      " << (assoc ? "yes" : "no") << "\n";
  os << "A-loop:           " << (aloop ? "yes" : "no") << "\n";
  os << "power-assoc:      " << (fp.power_associative ? "yes" : "no") << "\n";
  if (fp.power_associative) os << "exponent:         " << exponent(L) << "\n";
  os << "element orders:   ";
  for (auto [o, c] : fp.element_orders) os << o << "x" << c << " ";
  os << "\n";
  os << "nuclei (l/m/r):   " << fp.nucleus_left << "/" << fp.nucleus_middle << "/" << fp.nucleus_right << "\n";
  os << "center:           " << fp.center_size << "\n";
  os << "|Inn| / |Mlt|:    " << fp.inn_order << " / " << fp.mlt_order << "\n";
  os << "distinct squares: " << fp.squares_count << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"finite commutative A-loop workbench"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")->check(CLI::IsMember({"text", "json"}));

  // construct
  auto* c = app.add_subcommand("construct", "build a loop from a named family");
  std::string family, moduli_str, g_str, f_str, theta_file, base_file, out_file;
  int n_arg = 0, a_arg = 0, b_arg = 0, t_arg = 0, modulus = 2;
  c->add_option("--family", family, "gf|qn|trilinear|terg|ter-ring|extension")->required();
  c->add_option("--n", n_arg, "dimension / modulus parameter");
  c->add_option("--a", a_arg, "Terg parameter a");
  c->add_option("--b", b_arg, "Terg parameter b");
  c->add_option("--moduli", moduli_str, "comma-separated cyclic factors, e.g. 4,2");
  c->add_option("--g", g_str, "automorphism as comma-separated images");
  c->add_option("--f", f_str, "bijection as comma-separated images");
  c->add_option("--t", t_arg, "translation element index");
  c->add_option("--base", base_file, "base loop table file (extension family)");
  c->add_option("--modulus", modulus, "central factor order (extension family)");
  c->add_option("--theta", theta_file, "cocycle file: |K| lines of |K| residues");
  c->add_option("--out,-o", out_file, "write the ALOOP v1 table here");

  // analyze
  auto* an = app.add_subcommand("analyze", "invariant report for a table file");
  std::string an_file;
  an->add_option("file", an_file)->required();

  // iso / isotopic
  auto* is = app.add_subcommand("iso", "isomorphism test for two table files");
  std::string iso_a, iso_b;
  is->add_option("first", iso_a)->required();
  is->add_option("second", iso_b)->required();
  auto* it = app.add_subcommand("isotopic", "isotopy test for two table files");
  std::string itp_a, itp_b;
  it->add_option("first", itp_a)->required();
  it->add_option("second", itp_b)->required();

  // convert
  auto* cv = app.add_subcommand("convert", "convert between ALOOP v1 and JSON");
  std::string cv_in, cv_out, cv_to = "aloop";
  cv->add_option("input", cv_in)->required();
  cv->add_option("output", cv_out)->required();
  cv->add_option("--to", cv_to, "aloop|json")->check(CLI::IsMember({"aloop", "json"}));

  // enumerate
  auto* en = app.add_subcommand("enumerate", "classify loops of a supported order");
  int en_order = 0, jobs = 1, exp_filter = 0;
  std::string center = "", en_out;
  en->add_option("--order", en_order)->required();
  en->add_option("--center", center, "nontrivial: restrict to loops with nontrivial center");
  en->add_option("--exponent", exp_filter, "exponent filter (only 2 is supported, for order 32)");
  en->add_option("--jobs,-j", jobs, "worker count (default 1)");
  en->add_option("--out", en_out, "write the catalog as JSON lines");

  // classify-p3
  auto* cp = app.add_subcommand("classify-p3", "isomorphism classes of Terg(Z_p,a,b)");
  int p_arg = 3;
  cp->add_option("--p", p_arg, "prime in {2,3,5,7}")->required();

  // verify-paper
  auto* vp = app.add_subcommand("verify-paper", "run the reproduction checklist");
  std::string suite = "quick";
  int vp_jobs = 1;
  vp->add_option("--suite", suite, "quick|table1|p3|full");
  vp->add_option("--jobs,-j", vp_jobs, "worker count");

  CLI11_PARSE(app, argc, argv);

  if (c->parsed()) {
    LoopTable L;
    if (family == "terg") {
      if (c->count("--n") == 0) throw Error(Errc::InvalidParameters, "terg needs --n");
      L = build_terg({n_arg, a_arg, b_arg});
    } else if (family == "qn") {
      if (c->count("--n") == 0) throw Error(Errc::InvalidParameters, "qn needs --n");
      L = build_qn(n_arg);
    } else if (family == "trilinear") {
      if (c->count("--n") == 0) throw Error(Errc::InvalidParameters, "trilinear needs --n");
      L = build_trilinear_extension(symmetrize_13(newforms_form(n_arg)));
    } else if (family == "ter-ring") {
      if (moduli_str.empty()) throw Error(Errc::InvalidParameters, "ter-ring needs --moduli");
      L = build_ter_ring(parse_moduli(moduli_str));
    } else if (family == "gf") {
      if (moduli_str.empty()) throw Error(Errc::InvalidParameters, "gf needs --moduli for the group");
      const LoopTable G = abelian_group(parse_moduli(moduli_str));
      if (!f_str.empty()) {
        L = build_gf({G, parse_perm(f_str, G.order()), std::nullopt});
      } else if (!g_str.empty()) {
        const Permutation g = parse_perm(g_str, G.order());
        Permutation f;
        f.img.resize(G.order());
        for (Elem x = 0; x < G.order(); ++x) f.img[x] = G.mul(g.img[x], static_cast<Elem>(t_arg));
        L = build_gf({G, f, std::make_pair(g, static_cast<Elem>(t_arg))});
      } else {
        throw Error(Errc::InvalidParameters, "gf needs --f or --g (with optional --t)");
      }
    } else if (family == "extension") {
      if (base_file.empty() || theta_file.empty())
        throw Error(Errc::InvalidParameters, "extension needs --base and --theta");
      const LoopTable K = load_table(base_file);
      std::ifstream tf(theta_file);
      if (!tf) throw Error(Errc::ParseError, "cannot open " + theta_file);
      CocycleVec theta = CocycleVec::zero(K.order(), modulus);
      for (int x = 0; x < K.order(); ++x)
        for (int y = 0; y < K.order(); ++y) {
          int v;
          if (!(tf >> v)) throw Error(Errc::ParseError, "theta file: expected |K|^2 residues");
          if (x == 0 || y == 0) {
            if (v != 0) throw Error(Errc::InvalidParameters, "theta must vanish on the neutral row/column");
          } else {
            theta.set(static_cast<Elem>(x), static_cast<Elem>(y), static_cast<std::uint8_t>(((v % modulus) + modulus) % modulus));
          }
        }
      L = build_central_extension({K, modulus, theta});
    } else {
      throw Error(Errc::InvalidParameters, "unknown family " + family);
    }
    if (!out_file.empty()) {
      write_aloop_file(L, out_file);
      emit_analysis(L, "json", std::cout);
    } else if (format == "json") {
      json j{{"format", "aloop-json-v1"}, {"n", L.order()}, {"rows", table_rows(L)}, {"fingerprint", fingerprint_json(fingerprint(L))}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << write_aloop(L);
    }
    return 0;
  }

  if (an->parsed()) {
    emit_analysis(load_table(an_file), format, std::cout);
    return 0;
  }

  if (is->parsed()) {
    const LoopTable A = load_table(iso_a), B = load_table(iso_b);
    const auto phi = find_isomorphism(A, B);
    if (format == "json") {
      json j{{"isomorphic", phi.has_value()}};
      if (phi) j["certificate"] = phi->img;
      std::cout << j.dump(2) << "\n";
    } else if (phi) {
      std::cout << "isomorphic\ncertificate:";
      for (Elem v : phi->img) std::cout << ' ' << v;
      std::cout << "\n";
    } else {
      std::cout << "not isomorphic\n";
    }
    return phi ? 0 : 1;
  }

  if (it->parsed()) {
    const LoopTable A = load_table(itp_a), B = load_table(itp_b);
    const auto tr = find_isotopism(A, B);
    if (format == "json") {
      json j{{"isotopic", tr.has_value()}};
      if (tr) j["certificate"] = {{"alpha", tr->alpha.img}, {"beta", tr->beta.img}, {"gamma", tr->gamma.img}};
      std::cout << j.dump(2) << "\n";
    } else if (tr) {
      std::cout << "isotopic\n";
    } else {
      std::cout << "not isotopic\n";
    }
    return tr ? 0 : 1;
  }

  if (cv->parsed()) {
    const LoopTable L = load_table(cv_in);
    std::ofstream out(cv_out, std::ios::binary);
    if (!out) throw Error(Errc::ParseError, "cannot open " + cv_out);
    if (cv_to == "json") {
      json j{{"format", "aloop-json-v1"}, {"n", L.order()}, {"rows", table_rows(L)}, {"fingerprint", fingerprint_json(fingerprint(L))}};
      out << j.dump(2) << "\n";
    } else {
      out << write_aloop(L);
    }
    return 0;
  }

  if (en->parsed()) {
    if (!center.empty() && center != "nontrivial")
      throw Error(Errc::InvalidParameters, "--center accepts only 'nontrivial'");
    if (exp_filter != 0 && exp_filter != 2) throw Error(Errc::InvalidParameters, "--exponent supports only 2");
    const EnumerationResult r = run_enumeration(en_order, center == "nontrivial", exp_filter == 2, jobs);
    if (!en_out.empty()) {
      std::ofstream out(en_out, std::ios::binary);
      if (!out) throw Error(Errc::ParseError, "cannot open " + en_out);
      for (const auto& rec : r.records) out << record_json(rec).dump() << "\n";
    }
    if (format == "json") {
      json j{{"order", r.order},
             {"classes", r.counts.classes},
             {"isotopy_classes", r.counts.isotopy_classes},
             {"nontrivial_center", r.counts.nontrivial_center},
             {"nontrivial_center_isotopy", r.counts.nontrivial_center_isotopy},
             {"exponent_p", r.counts.exponent_p},
             {"exponent_p_center", r.counts.exponent_p_center},
             {"pre_classification", r.pre_classification},
             {"cross_check_ok", r.cross_check_ok}};
      json bases = json::array();
      for (const auto& br : r.base_reports)
        bases.push_back({{"base", br.base_name},
                         {"dim_C", br.dim_c},
                         {"dim_B", br.dim_b},
                         {"dim_D", br.dim_d},
                         {"orbits", br.orbit_count},
                         {"extensions", br.extensions_built},
                         {"nonassociative", br.extensions_nonassociative}});
      j["bases"] = bases;
      json ids = json::array();
      for (const auto& rec : r.records) ids.push_back(rec.id);
      j["ids"] = ids;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "order " << r.order << ": " << r.counts.classes << " nonassociative classes (" << r.counts.isotopy_classes
                << " up to isotopism)\n";
      std::cout << "  with nontrivial center: " << r.counts.nontrivial_center << " (" << r.counts.nontrivial_center_isotopy
                << " up to isotopism)\n";
      std::cout << "  exponent " << (r.order == 27 ? 3 : 2) << ": " << r.counts.exponent_p
                << ", of those with nontrivial center: " << r.counts.exponent_p_center << "\n";
      for (const auto& br : r.base_reports)
        std::cout << "  " << br.base_name << ": dim C=" << br.dim_c << " B=" << br.dim_b << " D=" << br.dim_d
                  << " orbits=" << br.orbit_count << " nonassoc=" << br.extensions_nonassociative << "\n";
      if (r.order == 27) std::cout << "  cocycle/Terg cross-check: " << (r.cross_check_ok ? "ok" : "FAILED") << "\n";
      if (r.order == 32) std::cout << "  pre-classification extensions: " << r.pre_classification << "\n";
      if (!en_out.empty()) std::cout << "catalog written to " << en_out << "\n";
    }
    return 0;
  }

  if (cp->parsed()) {
    const TergClassification t = classify_p3(p_arg);
    if (format == "json") {
      json classes = json::array();
      for (size_t i = 0; i < t.classes.size(); ++i) {
        json members = json::array();
        for (auto [a, b] : t.classes[i]) members.push_back({{"a", a}, {"b", b}});
        classes.push_back({{"members", members},
                           {"representative", record_json(t.representatives[i])["fingerprint"]},
                           {"exponent", t.representatives[i].exp}});
      }
      json j{{"p", t.p},
             {"classes", classes},
             {"certified_maps", t.certified_maps},
             {"refuted_pairs", t.refuted_pairs},
             {"all_pairs_verified", t.all_pairs_verified}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "Terg(Z_" << t.p << ",a,b): " << t.classes.size() << " isomorphism classes\n";
      for (size_t i = 0; i < t.classes.size(); ++i) {
        std::cout << "  class " << i + 1 << " (exponent " << t.representatives[i].exp << ", |Mlt| "
                  << t.representatives[i].fp.mlt_order << "):";
        for (auto [a, b] : t.classes[i]) std::cout << " (" << a << "," << b << ")";
        std::cout << "\n";
      }
      std::cout << "  certified maps: " << t.certified_maps << ", refuted representative pairs: " << t.refuted_pairs;
      if (t.all_pairs_verified) std::cout << ", full pairwise search cross-checked";
      std::cout << "\n";
    }
    return 0;
  }

  if (vp->parsed()) {
    VerifyContext ctx;
    ctx.jobs = vp_jobs;
    bool all_ok = true;
    for (int id : suite_criteria(suite)) {
      const CheckResult r = run_criterion(id, ctx, suite == "full");
      const char* tag = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
      std::cout << tag << " criterion " << r.id << ": " << r.name;
      if (!r.skipped) std::cout << " [" << r.detail << "] (" << r.seconds << "s)";
      else std::cout << " [" << r.detail << "]";
      std::cout << "\n";
      if (!r.skipped) all_ok &= r.pass;
    }
    return all_ok ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
