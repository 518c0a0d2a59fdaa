#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "bftorus/invariants.hpp"
#include "json.hpp"

namespace bftorus::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  unsigned bound = 4;
  bool debug_assert = false;
  std::vector<std::string> matrices;
  std::vector<std::string> ideals;
  std::string poly;
  std::string order;
  std::string method = "auto";
  unsigned k = 1;
  bool presentation = false;
};

// An argument is an inline literal when it contains whitespace or starts with
// '{'; anything else names a file.
bool is_literal(const std::string& s) {
  if (!s.empty() && s.front() == '{') return true;
  return s.find_first_of(" \t\n") != std::string::npos;
}

std::string read_input(const std::string& arg) {
  if (is_literal(arg)) return arg;
  std::ifstream in(arg);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string label(const std::string& arg) { return is_literal(arg) ? std::string("<inline>") : arg; }

IntMatrix load_matrix(const std::string& arg) { return parse_matrix(read_input(arg)); }

FractionalIdeal load_ideal(const Options& o, std::size_t i) {
  if (i < o.ideals.size()) return FractionalIdeal(lattice_from_json(read_input(o.ideals[i])));
  return matrix_to_ideal(load_matrix(o.matrices[i - o.ideals.size()]));
}

// Ideal inputs: --ideal files first, then ideals of --matrix files.
std::vector<std::string> ideal_inputs(const Options& o) {
  std::vector<std::string> v = o.ideals;
  v.insert(v.end(), o.matrices.begin(), o.matrices.end());
  if (v.empty()) throw Error(ErrorKind::InvalidArgument, "give at least one --ideal or --matrix");
  return v;
}

void require_matrices(const Options& o, std::size_t at_least) {
  if (o.matrices.size() < at_least)
    throw Error(ErrorKind::InvalidArgument, "give at least " + std::to_string(at_least) + " --matrix input(s)");
}

Json lattice_json(const ZLattice& l) { return Json::parse(lattice_to_json(l)); }

std::string rational_vector(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

struct Report {
  Json json = Json::object();
  std::ostringstream text;
};

void cmd_bf(const Options& o, Report& r) {
  require_matrices(o, 1);
  RatPoly g = parse_poly(o.poly);
  r.json["command"] = "bf";
  r.json["poly"] = to_string(g);
  Json results = Json::array();
  for (const auto& m : o.matrices) {
    AbelianGroup grp = bf_group(load_matrix(m), g);
    results.push_back({{"input", label(m)}, {"group", to_string(grp)}});
    r.text << label(m) << ": BF_{" << to_string(g) << "} = " << to_string(grp) << '\n';
  }
  r.json["results"] = results;
}

void cmd_bfk(const Options& o, Report& r) {
  require_matrices(o, 1);
  r.json["command"] = "bfk";
  r.json["k"] = o.k;
  Json results = Json::array();
  for (const auto& m : o.matrices) {
    AbelianGroup grp = bf_k(load_matrix(m), o.k);
    results.push_back({{"input", label(m)}, {"group", to_string(grp)}});
    r.text << label(m) << ": BF_" << o.k << " = " << to_string(grp) << '\n';
  }
  r.json["results"] = results;
}

void cmd_periodic(const Options& o, Report& r) {
  require_matrices(o, 1);
  r.json["command"] = "periodic";
  r.json["k"] = o.k;
  Json results = Json::array();
  for (const auto& m : o.matrices) {
    PeriodicStructure ps = periodic_structure(load_matrix(m), o.k);
    Json gens = Json::array();
    r.text << label(m) << ": Per_" << o.k << " = " << to_string(ps.group) << '\n';
    for (std::size_t i = 0; i < ps.generators.size(); ++i) {
      Json coords = Json::array();
      for (const auto& c : ps.generators[i]) coords.push_back(c.get_str());
      gens.push_back({{"order", ps.invariant_factors[i].get_str()}, {"point", coords}});
      r.text << "  x" << i + 1 << " of order " << ps.invariant_factors[i].get_str() << ": "
             << rational_vector(ps.generators[i]) << '\n';
    }
    results.push_back({{"input", label(m)}, {"group", to_string(ps.group)}, {"generators", gens}});
  }
  r.json["results"] = results;
}

void cmd_lattice(const Options& o, Report& r) {
  NumberField k(parse_int_poly(o.poly));
  OrderLattice l = enumerate_order_lattice(k);
  r.json = Json::parse(order_lattice_to_json(l));
  r.json["hasse"] = render_hasse(l);
  r.text << "orders above Z[b] for " << to_string(k.polynomial()) << ": " << l.nodes.size() << '\n'
         << render_hasse(l);
}

void cmd_ideal(const Options& o, Report& r) {
  r.json["command"] = "ideal";
  Json results = Json::array();
  for (const auto& m : o.matrices) {
    FractionalIdeal i = matrix_to_ideal(load_matrix(m));
    results.push_back({{"input", label(m)}, {"ideal", lattice_json(i)}, {"basis", to_string(i)}});
    r.text << label(m) << ": " << to_string(i) << '\n';
  }
  for (const auto& f : o.ideals) {
    IntMatrix a = ideal_to_matrix(FractionalIdeal(lattice_from_json(read_input(f))));
    Json rows = Json::parse(format_matrix_json(a));
    results.push_back({{"input", label(f)}, {"matrix", rows}});
    r.text << label(f) << ":\n" << format_matrix_text(a);
  }
  if (results.empty()) throw Error(ErrorKind::InvalidArgument, "give at least one --matrix or --ideal");
  r.json["results"] = results;
}

void cmd_coeffring(const Options& o, Report& r) {
  r.json["command"] = "coeffring";
  Json results = Json::array();
  const auto inputs = ideal_inputs(o);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Order c = coefficient_ring(load_ideal(o, i));
    results.push_back({{"input", label(inputs[i])}, {"order", lattice_json(c)}, {"basis", to_string(c)}});
    r.text << label(inputs[i]) << ": C(I) = " << to_string(c) << '\n';
  }
  r.json["results"] = results;
}

void cmd_invertible(const Options& o, Report& r) {
  r.json["command"] = "invertible";
  Json results = Json::array();
  const auto inputs = ideal_inputs(o);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    FractionalIdeal ideal = load_ideal(o, i);
    Order ring = o.order.empty() ? coefficient_ring(ideal) : Order(lattice_from_json(read_input(o.order)));
    const bool inv = is_invertible(ideal, ring);
    const bool div = is_divisorial(ideal, ring);
    results.push_back({{"input", label(inputs[i])},
                       {"order", to_string(ring)},
                       {"invertible", inv},
                       {"divisorial", div}});
    r.text << label(inputs[i]) << ": " << (inv ? "invertible" : "not invertible") << ", "
           << (div ? "divisorial" : "not divisorial") << " in " << to_string(ring) << '\n';
  }
  r.json["results"] = results;
}

void cmd_dual(const Options& o, Report& r) {
  r.json["command"] = "dual";
  Json results = Json::array();
  const auto inputs = ideal_inputs(o);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    FractionalIdeal d = trace_dual(load_ideal(o, i));
    results.push_back({{"input", label(inputs[i])}, {"dual", lattice_json(d)}, {"basis", to_string(d)}});
    r.text << label(inputs[i]) << ": I* = " << to_string(d) << '\n';
  }
  r.json["results"] = results;
}

EquivalenceVerdict decide(const Options& o, const IntMatrix& a, const IntMatrix& b) {
  if (o.method == "refute") return bf_refute(a, b, o.bound);
  if (o.method == "certify") return bf_certify(a, b);
  if (o.method == "strong") return strong_bf_refute(a, b, o.bound);
  if (o.method == "l") return l_equivalent(a, b);
  // auto: a witness wins, then a certificate, else the refuter's inconclusive.
  EquivalenceVerdict ref = bf_refute(a, b, o.bound);
  if (ref.kind == VerdictKind::BFDistinguished) return ref;
  EquivalenceVerdict cert = bf_certify(a, b);
  if (cert.kind != VerdictKind::Inconclusive) return cert;
  return ref;
}

void cmd_equiv(const Options& o, Report& r) {
  if (o.matrices.size() != 2) throw Error(ErrorKind::InvalidArgument, "equiv needs exactly two --matrix inputs");
  EquivalenceVerdict v = decide(o, load_matrix(o.matrices[0]), load_matrix(o.matrices[1]));
  r.json = Json::parse(verdict_to_json(v));
  r.text << verdict_to_text(v);
}

void cmd_suspension(const Options& o, Report& r) {
  require_matrices(o, 1);
  r.json["command"] = "suspension";
  Json results = Json::array();
  for (const auto& m : o.matrices) {
    IntMatrix a = load_matrix(m);
    AbelianGroup h = suspension_h1(a);
    Json entry = {{"input", label(m)}, {"h1", to_string(h)}};
    r.text << label(m) << ": H1 = " << to_string(h) << '\n';
    if (o.presentation) {
      Presentation p = pi1_presentation(a);
      entry["pi1"] = to_string(p);
      entry["abelianization"] = to_string(abelianize(p));
      r.text << "  pi1 = " << to_string(p) << '\n' << "  abelianization = " << to_string(abelianize(p)) << '\n';
    }
    results.push_back(entry);
  }
  r.json["results"] = results;
}

void cmd_flowpair(const Options& o, Report& r) {
  require_matrices(o, 1);
  r.json["command"] = "flowpair";
  Json results = Json::array();
  for (const auto& m : o.matrices) {
    auto [det, grp] = flow_invariant_pair(load_matrix(m));
    results.push_back({{"input", label(m)}, {"det", det.get_str()}, {"group", to_string(grp)}});
    r.text << label(m) << ": det(I-A) = " << det.get_str() << ", BF_1 = " << to_string(grp) << '\n';
  }
  r.json["results"] = results;
}

bool is_precondition(ErrorKind k) { return k != ErrorKind::ParseError && k != ErrorKind::IoError; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bowen-Franks groups, ideals and orders for toral automorphisms", "bftorus"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--bound", o.bound, "Search bound for the refuters");
  app.add_flag("--debug-assert", o.debug_assert, "Enable cross-check assertions");

  auto add_matrix = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--matrix", o.matrices, "Matrix file or inline literal (repeatable)");
    if (required) opt->required();
  };
  auto add_ideal = [&](CLI::App* c) { c->add_option("--ideal", o.ideals, "Ideal JSON file or inline literal (repeatable)"); };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--bound", o.bound, "Search bound for the refuters");
    c->add_flag("--debug-assert", o.debug_assert, "Enable cross-check assertions");
  };

  std::map<std::string, std::function<void(const Options&, Report&)>> handlers;
  auto sub = [&](const char* name, const char* desc, std::function<void(const Options&, Report&)> h) {
    CLI::App* c = app.add_subcommand(name, desc);
    add_common(c);
    handlers[name] = std::move(h);
    return c;
  };

  auto* bf = sub("bf", "BF_g(A) = Z^n / g(A) Z^n", cmd_bf);
  add_matrix(bf, true);
  bf->add_option("--poly", o.poly, "Polynomial g in x")->required();
  auto* bfk = sub("bfk", "BF_k(A) = Z^n / (A^k - I) Z^n", cmd_bfk);
  add_matrix(bfk, true);
  bfk->add_option("--k", o.k, "Period")->required()->check(CLI::PositiveNumber);
  auto* per = sub("periodic", "Points of period k and their generators", cmd_periodic);
  add_matrix(per, true);
  per->add_option("--k", o.k, "Period")->required()->check(CLI::PositiveNumber);
  auto* lat = sub("lattice", "Orders between Z[b] and the maximal order", cmd_lattice);
  lat->add_option("--poly", o.poly, "Monic irreducible polynomial in x")->required();
  auto* ideal = sub("ideal", "Matrix to ideal (--matrix) or ideal to matrix (--ideal)", cmd_ideal);
  add_matrix(ideal, false);
  add_ideal(ideal);
  auto* cr = sub("coeffring", "Coefficient ring C(I)", cmd_coeffring);
  add_matrix(cr, false);
  add_ideal(cr);
  auto* inv = sub("invertible", "Invertibility and divisoriality in an order (default C(I))", cmd_invertible);
  add_matrix(inv, false);
  add_ideal(inv);
  inv->add_option("--order", o.order, "Order as ideal JSON file or inline literal");
  auto* dual = sub("dual", "Trace dual I*", cmd_dual);
  add_matrix(dual, false);
  add_ideal(dual);
  auto* eq = sub("equiv", "Compare two matrices with the same characteristic polynomial", cmd_equiv);
  add_matrix(eq, true);
  eq->add_option("--method", o.method, "auto, refute, certify, strong or l")
      ->check(CLI::IsMember({"auto", "refute", "certify", "strong", "l"}));
  auto* sus = sub("suspension", "H1 of the suspension flow", cmd_suspension);
  add_matrix(sus, true);
  sus->add_flag("--presentation", o.presentation, "Also print the fundamental group and its abelianization");
  auto* fp = sub("flowpair", "(det(I - A), BF_1(A))", cmd_flowpair);
  add_matrix(fp, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  const bool debug_before = debug_asserts_enabled();
  if (o.debug_assert) set_debug_asserts(true);
  Report report;
  try {
    handlers.at(verb)(o, report);
    set_debug_asserts(debug_before);
  } catch (const Error& e) {
    set_debug_asserts(debug_before);
    if (o.format == "json") {
      out << Json{{"error", std::string(e.name())}, {"message", e.what()}}.dump() << '\n';
    } else {
      out << "error: " << e.what() << '\n';
    }
    err << e.what() << '\n';
    return is_precondition(e.kind()) ? 2 : 1;
  }
  if (o.format == "json")
    out << report.json.dump() << '\n';
  else
    out << report.text.str();
  return 0;
}

}  // namespace bftorus::cli
