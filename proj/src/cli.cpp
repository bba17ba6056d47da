#include "ctlhom/cli.hpp"

#include "ctlhom/chainalg.hpp"
#include "ctlhom/corpus.hpp"
#include "ctlhom/errors.hpp"
#include "ctlhom/laws.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <climits>
#include <iomanip>
#include <ostream>

namespace ctlhom::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

json big_json(const BigInt& v) {
  if (v >= LLONG_MIN && v <= LLONG_MAX) return v.convert_to<long long>();
  return v.str();
}

json counts_json(const sset::FiniteSimplicialSet& x) {
  json out = json::array();
  for (auto c : x.counts()) out.push_back(c);
  return out;
}

std::string counts_text(const sset::FiniteSimplicialSet& x) {
  std::string out = "(";
  const auto c = x.counts();
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? ", " : "") + std::to_string(c[i]);
  return out + ")";
}

struct Common {
  std::string space;
  std::string coeff = "z";
  int max_dim = corpus::kDefaultMaxDim;
  int window = 3;
  int max_depth = 25;
  bool as_json = false;
};

// Throws when the space is not locally finite.
void require_locally_finite(const corpus::Space& s) {
  if (s.is_finite()) return;
  const auto r = sset::is_locally_finite(*s.exhaustion);
  if (!r.locally_finite) throw ValidationError(s.name + " is not locally finite: " + r.detail);
}

int theory_command(chain::Theory theory, const std::string& command, const Common& c, std::ostream& out,
                   std::ostream& err) {
  const auto coeffs = Coefficients::parse(c.coeff);
  const auto space = corpus::resolve(c.space, c.max_dim);
  require_locally_finite(space);
  chain::StabilizationOptions opts;
  opts.window = c.window;
  opts.max_depth = c.max_depth;
  const auto r = chain::compute(theory, *space.exhaustion, coeffs, opts);

  if (c.as_json) {
    json groups = json::array();
    for (const auto& d : r.degrees) {
      json torsion = json::array();
      for (const auto& t : d.group.torsion) torsion.push_back(big_json(t));
      groups.push_back(json{{"degree", d.degree},
                            {"free_rank", d.group.free_rank},
                            {"torsion", std::move(torsion)},
                            {"stable", d.stable},
                            {"depth", d.depth}});
    }
    json doc{{"schema_version", kSchemaVersion},
             {"command", command},
             {"space", space.name},
             {"theory", chain::theory_tag(theory)},
             {"coefficients", coeffs.to_string()},
             {"groups", std::move(groups)},
             {"stabilization",
              json{{"stable", r.stable}, {"depth", r.depth}, {"window", r.window}, {"max_depth", r.max_depth}}},
             {"caveats", r.caveats}};
    out << doc.dump(2) << '\n';
  } else {
    out << chain::theory_tag(theory) << " of " << space.name << " with coefficients " << coeffs.to_string();
    if (!space.is_finite()) out << " (window " << r.window << ", max depth " << r.max_depth << ")";
    out << "\n  degree  group" << std::string(14, ' ') << "stable  depth\n";
    for (const auto& d : r.degrees)
      out << "  " << std::left << std::setw(8) << d.degree << std::setw(19) << d.group.to_string(coeffs)
          << std::setw(8) << (d.stable ? "yes" : "no") << d.depth << '\n';
    for (const auto& cav : r.caveats) out << "caveat: " << cav << '\n';
  }
  if (!r.stable) {
    err << "not stable within max depth " << r.max_depth << "; the groups shown are the last computed\n";
    return kUnstable;
  }
  return kOk;
}

int spaces_command(bool as_json, std::ostream& out) {
  if (as_json) {
    json list = json::array();
    for (const auto& d : corpus::descriptors())
      list.push_back(json{{"descriptor", d.syntax}, {"description", d.description},
                          {"kind", d.finite ? "finite" : "exhaustion"}});
    out << json{{"schema_version", kSchemaVersion}, {"command", "spaces"}, {"spaces", std::move(list)}}.dump(2) << '\n';
    return kOk;
  }
  for (const auto& d : corpus::descriptors())
    out << std::left << std::setw(11) << d.syntax << std::setw(12) << (d.finite ? "finite" : "exhaustion")
        << d.description << '\n';
  return kOk;
}

int check_command(const Common& c, std::ostream& out, std::ostream& err) {
  const auto space = corpus::resolve(c.space, c.max_dim);
  const auto& x = *space.exhaustion;
  std::vector<std::string> violations = x.base().identity_violations();
  if (!x.is_finite())
    for (auto& v : x.slab().identity_violations()) violations.push_back("slab: " + v);
  const auto lf = space.is_finite() ? sset::is_locally_finite(x.base()) : sset::is_locally_finite(x);
  constexpr int kShownDepths = 3;

  if (c.as_json) {
    json doc{{"schema_version", kSchemaVersion},
             {"command", "check"},
             {"space", space.name},
             {"kind", space.is_finite() ? "finite" : "exhaustion"}};
    if (space.is_finite()) {
      doc["counts"] = counts_json(x.base());
    } else {
      doc["base_counts"] = counts_json(x.base());
      doc["slab_counts"] = counts_json(x.slab());
      doc["attachments"] = x.attachments().size();
      json trunc = json::array();
      for (int d = 0; d <= kShownDepths; ++d)
        trunc.push_back(json{{"depth", d}, {"counts", counts_json(x.truncate(d)->complex)}});
      doc["truncations"] = std::move(trunc);
    }
    doc["simplicial_identities"] = json{{"ok", violations.empty()}, {"violations", violations}};
    json stars = json::array();
    for (const auto& s : lf.stars) stars.push_back(json{{"vertex", s.vertex}, {"size", s.size}});
    doc["local_finiteness"] = json{{"locally_finite", lf.locally_finite},
                                   {"max_star", lf.max_star},
                                   {"witness", lf.witness ? json(*lf.witness) : json(nullptr)},
                                   {"detail", lf.detail},
                                   {"stars", std::move(stars)}};
    out << doc.dump(2) << '\n';
  } else {
    out << "space: " << space.name << (space.is_finite() ? " (finite)" : " (exhaustion)") << '\n';
    if (space.is_finite()) {
      out << "nondegenerate simplices per dimension: " << counts_text(x.base()) << '\n';
    } else {
      out << "base " << counts_text(x.base()) << ", slab " << counts_text(x.slab()) << ", "
          << x.attachments().size() << " attachment(s)\n";
      for (int d = 0; d <= kShownDepths; ++d)
        out << "K_" << d << ": " << counts_text(x.truncate(d)->complex) << '\n';
    }
    out << "simplicial identities: " << (violations.empty() ? "ok" : "violated") << '\n';
    for (const auto& v : violations) out << "  " << v << '\n';
    out << "locally finite: " << (lf.locally_finite ? "yes" : "no") << " (" << lf.detail << ")\n";
    out << "largest vertex star: " << lf.max_star << '\n';
    out << "stars:";
    for (const auto& s : lf.stars) out << ' ' << s.vertex << '=' << s.size;
    out << '\n';
  }
  if (!violations.empty() || !lf.locally_finite) {
    err << space.name << ": "
        << (violations.empty() ? "not locally finite" + (lf.witness ? " (witness " + *lf.witness + ")" : std::string())
                               : std::string("simplicial identities violated"))
        << '\n';
    return kValidation;
  }
  return kOk;
}

int laws_command(int max_carrier, bool as_json, std::ostream& out, std::ostream& err) {
  const auto r = laws::run_laws(max_carrier);
  if (as_json) {
    json sections = json::array();
    for (const auto& s : r.sections)
      sections.push_back(json{{"key", s.key},
                              {"title", s.title},
                              {"checked", s.checked},
                              {"counterexamples", s.counterexamples}});
    out << json{{"schema_version", kSchemaVersion},
                {"command", "laws"},
                {"max_carrier", max_carrier},
                {"ok", r.ok()},
                {"sections", std::move(sections)}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& s : r.sections) {
      out << '(' << s.key << ") " << std::left << std::setw(44) << s.title << std::right << std::setw(10) << s.checked
          << " checks  " << (s.counterexamples.empty() ? "ok" : "FAILED") << std::fixed << std::setprecision(2)
          << "  " << s.seconds << "s\n";
      for (const auto& w : s.counterexamples) out << "    counterexample: " << w << '\n';
    }
    out << "total " << std::fixed << std::setprecision(2) << r.seconds << "s\n";
  }
  if (!r.ok()) {
    err << "law suite found counterexamples\n";
    return kCounterexample;
  }
  return kOk;
}

json chain_json(const std::map<std::string, BigInt>& terms) {
  json o = json::object();
  for (const auto& [id, v] : terms) o[id] = big_json(v);
  return o;
}

std::string chain_text(const std::map<std::string, BigInt>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [id, v] : terms) {
    if (!out.empty()) out += v < 0 ? " - " : " + ";
    else if (v < 0) out += "-";
    const BigInt a = abs(v);
    if (a != 1) out += a.str() + "*";
    out += id;
  }
  return out;
}

int pairing_command(const Common& c, int degree, std::ostream& out, std::ostream& err) {
  const auto space = corpus::resolve(c.space, c.max_dim);
  require_locally_finite(space);
  chain::StabilizationOptions opts;
  opts.window = c.window;
  opts.max_depth = c.max_depth;
  const auto p = chain::generator_pairing(*space.exhaustion, degree, opts);
  if (c.as_json) {
    json matrix = json::array();
    for (std::size_t r = 0; r < p.matrix.rows(); ++r) {
      json row = json::array();
      for (std::size_t k = 0; k < p.matrix.cols(); ++k) row.push_back(big_json(p.matrix(r, k)));
      matrix.push_back(std::move(row));
    }
    json cocycles = json::array();
    for (const auto& a : p.cocycles) cocycles.push_back(chain_json(a.terms));
    json cycles = json::array();
    for (const auto& s : p.cycles) cycles.push_back(chain_json(s.terms));
    out << json{{"schema_version", kSchemaVersion},
                {"command", "pairing"},
                {"space", space.name},
                {"degree", degree},
                {"stable", p.stable},
                {"depth", p.depth},
                {"cohomology_generators", std::move(cocycles)},
                {"homology_generators", std::move(cycles)},
                {"matrix", std::move(matrix)}}
               .dump(2)
        << '\n';
  } else {
    out << "pairing H^" << degree << "_c x H_" << degree << "^BM of " << space.name << " at depth " << p.depth << '\n';
    for (std::size_t k = 0; k < p.cocycles.size(); ++k)
      out << "  alpha" << k << " = " << chain_text(p.cocycles[k].terms) << '\n';
    for (std::size_t k = 0; k < p.cycles.size(); ++k)
      out << "  sigma" << k << " = " << chain_text(p.cycles[k].terms) << '\n';
    out << "matrix (rows alpha, columns sigma):\n";
    if (p.matrix.rows() == 0 || p.matrix.cols() == 0) out << "  (empty)\n";
    for (std::size_t r = 0; r < p.matrix.rows(); ++r) {
      out << " ";
      for (std::size_t k = 0; k < p.matrix.cols(); ++k) out << ' ' << p.matrix(r, k);
      out << '\n';
    }
  }
  if (!p.stable) {
    err << "not stable within max depth " << c.max_depth << '\n';
    return kUnstable;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homology theories of finite and locally finite simplicial sets, and controlled-set law checks",
               "ctlhom"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Common c;
  c.max_depth = chain::default_max_depth();
  int max_carrier = 3;
  int degree = 0;

  auto* spaces = app.add_subcommand("spaces", "List corpus descriptors");
  spaces->add_flag("--json", c.as_json, "Machine-readable output");

  struct TheoryCommand {
    const char* name;
    const char* help;
    chain::Theory theory;
    CLI::App* sub = nullptr;
  };
  std::vector<TheoryCommand> theories{
      {"homology", "Ordinary homology (colimit over truncations for exhaustions)", chain::Theory::Homology},
      {"bm-homology", "Borel-Moore homology", chain::Theory::BorelMoore},
      {"cohomology", "Ordinary cohomology", chain::Theory::Cohomology},
      {"cohomology-c", "Compactly supported cohomology", chain::Theory::CompactCohomology},
  };
  for (auto& t : theories) {
    t.sub = app.add_subcommand(t.name, t.help);
    t.sub->add_option("space", c.space, "Space descriptor or file")->required();
    t.sub->add_option("--coeff", c.coeff, "Coefficients: z, z/M or q")->capture_default_str();
    t.sub->add_option("--max-dim", c.max_dim, "Largest dimension accepted in descriptors")->capture_default_str();
    t.sub->add_option("--window", c.window, "Consecutive isomorphic transitions required")->capture_default_str();
    t.sub->add_option("--max-depth", c.max_depth, "Deepest truncation computed")->capture_default_str();
    t.sub->add_flag("--json", c.as_json, "Machine-readable output");
  }

  auto* check = app.add_subcommand("check", "Structure validation and local finiteness report");
  check->add_option("space", c.space, "Space descriptor or file")->required();
  check->add_option("--max-dim", c.max_dim, "Largest dimension accepted in descriptors")->capture_default_str();
  check->add_flag("--json", c.as_json, "Machine-readable output");

  auto* laws = app.add_subcommand("laws", "Run the exhaustive law suite");
  laws->add_option("--max-carrier", max_carrier, "Largest carrier size enumerated")->capture_default_str();
  laws->add_flag("--json", c.as_json, "Machine-readable output");

  auto* pairing = app.add_subcommand("pairing", "Pairing matrix between H^n_c and H_n^BM generators");
  pairing->add_option("space", c.space, "Space descriptor or file")->required();
  pairing->add_option("--degree", degree, "Degree n")->required();
  pairing->add_option("--max-dim", c.max_dim, "Largest dimension accepted in descriptors")->capture_default_str();
  pairing->add_option("--window", c.window, "Consecutive isomorphic transitions required")->capture_default_str();
  pairing->add_option("--max-depth", c.max_depth, "Deepest truncation computed")->capture_default_str();
  pairing->add_flag("--json", c.as_json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (spaces->parsed()) return spaces_command(c.as_json, out);
    for (const auto& t : theories)
      if (t.sub->parsed()) return theory_command(t.theory, t.name, c, out, err);
    if (check->parsed()) return check_command(c, out, err);
    if (laws->parsed()) return laws_command(max_carrier, c.as_json, out, err);
    if (pairing->parsed()) return pairing_command(c, degree, out, err);
  } catch (const DescriptorError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kUsage;
}

}  // namespace ctlhom::cli
