#include "mmlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mmlab/certificates.hpp"
#include "mmlab/mayr_meyer.hpp"
#include "mmlab/parse.hpp"

namespace mmlab::cli {

namespace {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw CliError("cannot write file: " + path);
  out << content;
}

FieldSpec field_of(unsigned long characteristic) {
  return characteristic == 0 ? FieldSpec::rationals()
                             : FieldSpec::prime_field(characteristic);
}

MonomialOrder order_by_name(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  throw CliError("unknown order: " + name);
}

Ideal named_ideal(const SessionFile& session, const std::string& name) {
  const auto* gens = session.find_ideal(name);
  if (!gens) throw CliError("unknown ideal: " + name);
  return Ideal(session.ring, *gens);
}

Polynomial named_poly(const SessionFile& session, const std::string& name,
                      const std::string& expr) {
  if (!name.empty()) {
    const auto* p = session.find_poly(name);
    if (!p) throw CliError("unknown poly: " + name);
    return *p;
  }
  if (!expr.empty()) return parse_polynomial(expr, session.ring);
  throw CliError("need --poly or --expr");
}

std::vector<int> var_indices(const RingPtr& ring, const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(int(ring->var_index_checked(item)));
  return out;
}

ComponentMode mode_by_name(const std::string& m) {
  if (m == "combined") return ComponentMode::Combined;
  if (m == "split") return ComponentMode::Split;
  throw CliError("unknown mode: " + m);
}

int report_result(const VerificationReport& report, const std::string& json_path,
                  std::ostream& out) {
  for (const auto& c : report.claims) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.claim;
    if (c.params.contains("d")) out << " d=" << c.params["d"];
    if (c.params.contains("char")) out << " char=" << c.params["char"];
    if (c.params.contains("mode"))
      out << " mode=" << c.params["mode"].get<std::string>();
    if (!c.pass && !c.witness.is_null()) out << "  witness: " << c.witness;
    out << "\n";
  }
  if (!json_path.empty()) write_file(json_path, emit_report(report));
  return report.all_pass() ? 0 : 1;
}

struct MmArgs {
  int d = 1;
  unsigned long characteristic = 0;
  std::string mode = "combined";
  std::string claim = "all";
  int d_max = -1;
  unsigned jobs = 1;
  int full_check = -1;  // -1 auto, 0 off, 1 on
  std::string json_path;
  std::string what = "J";
};

int do_mm_verify(const MmArgs& a, std::ostream& out) {
  MayrMeyerInstance inst = make_instance(a.d, field_of(a.characteristic));
  VerifyOptions opts;
  opts.mode = mode_by_name(a.mode);
  opts.d_max = a.d_max;
  if (a.full_check >= 0) opts.full_ring_check = (a.full_check == 1);
  std::vector<Claim> claims;
  if (a.claim == "all") {
    claims = all_claims();
  } else {
    auto c = claim_from_name(a.claim);
    if (!c) throw CliError("unknown claim: " + a.claim);
    claims.push_back(*c);
  }
  VerificationReport report = verify_claims(claims, inst, opts, a.jobs);
  return report_result(report, a.json_path, out);
}

int do_mm_gen(const MmArgs& a, std::ostream& out) {
  MayrMeyerInstance inst = make_instance(a.d, field_of(a.characteristic));
  ComponentMode mode = mode_by_name(a.mode);
  out << "ring " << inst.ring->to_string() << ";\n";
  auto print_ideal = [&](const std::string& name, const Ideal& ideal) {
    out << "ideal " << name << " = " << render_ideal(ideal.gens()) << ";\n";
  };
  if (a.what == "J" || a.what == "all")
    print_ideal("J", build_J(inst, RingProfile::Full));
  if (a.what == "components" || a.what == "all") {
    int k = 0;
    for (const auto& c : build_components(inst, mode, RingProfile::Full)) {
      std::string name = "Q" + std::to_string(++k) + "_row" +
                         std::to_string(c.row);
      if (c.alpha) name += "_alpha" + render(*c.alpha);
      print_ideal(name, c.ideal);
    }
  }
  if (a.what == "minimal" || a.what == "all")
    print_ideal("Jmin", build_minimal_intersection(inst, RingProfile::Full));
  if (a.what == "radical" || a.what == "all")
    print_ideal("Jrad", build_radical(inst, RingProfile::Full));
  if (a.what == "primes" || a.what == "all") {
    int k = 0;
    for (const auto& p : associated_primes(inst, Scalar(1)))
      print_ideal("P" + std::to_string(++k), p);
  }
  return 0;
}

int do_cert(const MmArgs& a, const std::string& target_text,
            const std::string& gens_name, const std::string& restriction_name,
            std::ostream& out) {
  MayrMeyerInstance inst = make_instance(a.d, field_of(a.characteristic));
  Polynomial target = parse_polynomial(target_text, inst.ring);
  std::vector<Polynomial> gens;
  if (gens_name == "J")
    gens = build_J(inst, RingProfile::Full).gens();
  else if (gens_name == "radical")
    gens = build_radical(inst, RingProfile::Full).gens();
  else if (gens_name == "minimal")
    gens = build_minimal_intersection(inst, RingProfile::Full).gens();
  else
    throw CliError("unknown generator list: " + gens_name +
                   " (expected J, radical or minimal)");

  Restriction restriction;
  if (restriction_name == "fullring") {
    restriction = Restriction::full_ring();
  } else if (restriction_name == "subring-b" ||
             restriction_name == "subring-b-bihom") {
    std::vector<int> b_vars;
    for (const char* b : {"b1", "b2", "b3", "b4"})
      b_vars.push_back(int(inst.ring->var_index_checked(b)));
    restriction = Restriction::subring(b_vars);
    if (restriction_name == "subring-b-bihom") {
      std::vector<std::vector<int>> blocks(2);
      for (const char* v : {"s", "f"})
        blocks[0].push_back(int(inst.ring->var_index_checked(v)));
      for (const char* v : {"c1", "c2", "c3", "c4"})
        blocks[1].push_back(int(inst.ring->var_index_checked(v)));
      restriction = restriction.with_blocks(blocks);
    }
  } else {
    throw CliError("unknown restriction: " + restriction_name);
  }

  int d_max = a.d_max < 0 ? 2 * a.d - 1 : a.d_max;
  auto result = min_certificate_degree(target, gens, d_max, restriction);

  VerificationReport report;
  report.ring = inst.ring->to_string();
  ClaimResult cr;
  cr.claim = "cert";
  cr.params["d"] = a.d;
  cr.params["char"] = a.characteristic;
  cr.params["target"] = target_text;
  cr.params["gens"] = gens_name;
  cr.params["restriction"] = restriction.describe();
  cr.params["max_deg"] = d_max;
  if (result) {
    auto& [dstar, cert] = *result;
    out << "D* = " << dstar << "\n";
    CertificateQuery q{target, gens, dstar, restriction};
    LinearSystem sys = build_system(q);
    out << "matrix: " << sys.n_rows() << " x " << sys.n_unknowns() << "\n";
    Json coeffs = Json::array();
    for (size_t i = 0; i < cert.coefficients.size(); ++i) {
      out << "r" << (i + 1) << " = " << render(cert.coefficients[i]) << "\n";
      coeffs.push_back(render(cert.coefficients[i]));
    }
    cr.pass = true;
    Json w;
    w["dstar"] = dstar;
    w["max_degree"] = cert.max_degree;
    w["matrix"] = {{"rows", sys.n_rows()}, {"cols", sys.n_unknowns()}};
    w["certificate"] = std::move(coeffs);
    cr.witness = std::move(w);
  } else {
    out << "no certificate up to degree " << d_max << "\n";
    cr.pass = true;  // a completed search is a result, not a failure
    Json w;
    w["dstar"] = nullptr;
    w["note"] = "no certificate up to degree " + std::to_string(d_max);
    cr.witness = std::move(w);
  }
  report.claims.push_back(std::move(cr));
  if (!a.json_path.empty()) write_file(a.json_path, emit_report(report));
  return 0;
}

int do_run_session(const std::string& path, const std::string& json_path,
                   unsigned jobs, std::ostream& out) {
  SessionFile session = parse_session(slurp(path));
  VerificationReport report;
  bool ring_set = false;
  for (const auto& task : session.tasks) {
    if (task.kind != "verify") throw CliError("unknown task: " + task.kind);
    MmArgs a;
    auto get = [&](const char* key, const std::string& fallback) {
      auto it = task.params.find(key);
      return it == task.params.end() ? fallback : it->second;
    };
    a.d = std::stoi(get("d", "1"));
    a.characteristic = std::stoul(get("char", "0"));
    a.mode = get("mode", "combined");
    MayrMeyerInstance inst = make_instance(a.d, field_of(a.characteristic));
    if (!ring_set) {
      report.ring = inst.ring->to_string();
      ring_set = true;
    }
    VerifyOptions opts;
    opts.mode = mode_by_name(a.mode);
    std::vector<Claim> claims;
    if (task.claim == "all") {
      claims = all_claims();
    } else {
      auto c = claim_from_name(task.claim);
      if (!c) throw CliError("unknown claim: " + task.claim);
      claims.push_back(*c);
    }
    VerificationReport sub = verify_claims(claims, inst, opts, jobs);
    for (auto& cr : sub.claims) report.claims.push_back(std::move(cr));
  }
  return report_result(report, json_path, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Mayr-Meyer ideal laboratory"};
  app.require_subcommand(1);

  // gb
  auto* gb_cmd = app.add_subcommand("gb", "print a reduced Groebner basis");
  std::string gb_session, gb_ideal, gb_order = "grevlex", gb_json;
  gb_cmd->add_option("session", gb_session, "session file")->required();
  gb_cmd->add_option("--ideal", gb_ideal, "ideal name")->required();
  gb_cmd->add_option("--order", gb_order, "grevlex|lex");
  gb_cmd->add_option("--json", gb_json, "write JSON result");

  // nf
  auto* nf_cmd = app.add_subcommand("nf", "normal form modulo an ideal");
  std::string nf_session, nf_ideal, nf_poly, nf_expr, nf_order = "grevlex";
  nf_cmd->add_option("session", nf_session)->required();
  nf_cmd->add_option("--ideal", nf_ideal)->required();
  nf_cmd->add_option("--poly", nf_poly, "declared polynomial name");
  nf_cmd->add_option("--expr", nf_expr, "inline polynomial");
  nf_cmd->add_option("--order", nf_order, "grevlex|lex");

  // ideal ops
  auto* ideal_cmd = app.add_subcommand("ideal", "ideal-level operations");
  ideal_cmd->require_subcommand(1);
  std::string id_session, id_left, id_right, id_ideal, id_poly, id_expr,
      id_vars;
  auto add_common = [&](CLI::App* sub, bool lr, bool own, bool poly,
                        bool vars) {
    sub->add_option("session", id_session)->required();
    if (lr) {
      sub->add_option("--left", id_left)->required();
      sub->add_option("--right", id_right)->required();
    }
    if (own) sub->add_option("--ideal", id_ideal)->required();
    if (poly) {
      sub->add_option("--poly", id_poly);
      sub->add_option("--expr", id_expr);
    }
    if (vars) sub->add_option("--vars", id_vars, "comma-separated variables");
  };
  auto* op_intersect = ideal_cmd->add_subcommand("intersect");
  add_common(op_intersect, true, false, false, false);
  auto* op_equal = ideal_cmd->add_subcommand("equal");
  add_common(op_equal, true, false, false, false);
  auto* op_colon = ideal_cmd->add_subcommand("colon");
  add_common(op_colon, false, true, true, false);
  auto* op_member = ideal_cmd->add_subcommand("member");
  add_common(op_member, false, true, true, false);
  auto* op_radmember = ideal_cmd->add_subcommand("radical-member");
  add_common(op_radmember, false, true, true, false);
  auto* op_eliminate = ideal_cmd->add_subcommand("eliminate");
  add_common(op_eliminate, false, true, false, true);
  auto* op_dim = ideal_cmd->add_subcommand("dim");
  add_common(op_dim, false, true, false, false);

  // mm
  auto* mm_cmd = app.add_subcommand("mm", "Mayr-Meyer constructions");
  mm_cmd->require_subcommand(1);
  MmArgs mm;
  auto* mm_gen = mm_cmd->add_subcommand("gen", "print the named ideals");
  mm_gen->add_option("--d", mm.d)->required()->check(CLI::PositiveNumber);
  mm_gen->add_option("--char", mm.characteristic);
  mm_gen->add_option("--mode", mm.mode, "combined|split");
  mm_gen->add_option("--what", mm.what,
                     "J|components|minimal|radical|primes|all");
  auto* mm_verify = mm_cmd->add_subcommand("verify", "verify the decomposition claims");
  mm_verify->add_option("--claim", mm.claim,
                        "theorem1|prop4|prop5|lemma2|lemma3|prop6|heights|"
                        "identities|all");
  mm_verify->add_option("--d", mm.d)->required()->check(CLI::PositiveNumber);
  mm_verify->add_option("--char", mm.characteristic);
  mm_verify->add_option("--mode", mm.mode, "combined|split");
  mm_verify->add_option("--dmax", mm.d_max, "prop6 search cap");
  mm_verify->add_option("--jobs", mm.jobs, "parallel claims");
  mm_verify->add_flag(
      "--full,!--no-full",
      [&mm](int64_t v) { mm.full_check = v > 0 ? 1 : 0; },
      "force the full 12-variable checks on or off");
  mm_verify->add_option("--json", mm.json_path, "write mmlab-report-v1 JSON");

  // cert
  auto* cert_cmd =
      app.add_subcommand("cert", "degree-bounded membership certificate");
  std::string cert_target, cert_gens = "J", cert_restriction = "fullring";
  cert_cmd->add_option("--d", mm.d)->required()->check(CLI::PositiveNumber);
  cert_cmd->add_option("--char", mm.characteristic);
  cert_cmd->add_option("--target", cert_target)->required();
  cert_cmd->add_option("--gens", cert_gens, "J|radical|minimal");
  cert_cmd->add_option("--max-deg", mm.d_max);
  cert_cmd->add_option("--restriction", cert_restriction,
                       "fullring|subring-b|subring-b-bihom");
  cert_cmd->add_option("--json", mm.json_path);

  // run
  auto* run_cmd = app.add_subcommand("run", "execute session task directives");
  std::string run_session, run_json;
  unsigned run_jobs = 1;
  run_cmd->add_option("session", run_session)->required();
  run_cmd->add_option("--json", run_json);
  run_cmd->add_option("--jobs", run_jobs);

  std::vector<std::string> argv_storage = args;
  std::vector<const char*> argv;
  argv.push_back("mmlab");
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*gb_cmd) {
      SessionFile session = parse_session(slurp(gb_session));
      Ideal I = named_ideal(session, gb_ideal);
      const GroebnerBasis& basis = I.groebner(order_by_name(gb_order));
      for (const auto& e : basis.elements) out << render(e) << "\n";
      if (!gb_json.empty()) {
        Json doc;
        doc["schema"] = "mmlab-report-v1";
        doc["ring"] = session.ring->to_string();
        Json els = Json::array();
        for (const auto& e : basis.elements) els.push_back(render(e));
        doc["basis"] = std::move(els);
        write_file(gb_json, doc.dump(2) + "\n");
      }
      return 0;
    }
    if (*nf_cmd) {
      SessionFile session = parse_session(slurp(nf_session));
      Ideal I = named_ideal(session, nf_ideal);
      Polynomial p = named_poly(session, nf_poly, nf_expr);
      out << render(normal_form(p, I.groebner(order_by_name(nf_order))))
          << "\n";
      return 0;
    }
    if (*ideal_cmd) {
      SessionFile session = parse_session(slurp(id_session));
      if (*op_intersect) {
        Ideal r = intersect(named_ideal(session, id_left),
                            named_ideal(session, id_right));
        out << render_ideal(r.gens()) << "\n";
      } else if (*op_equal) {
        out << (ideal_equal(named_ideal(session, id_left),
                            named_ideal(session, id_right))
                    ? "true"
                    : "false")
            << "\n";
      } else if (*op_colon) {
        Ideal r = colon(named_ideal(session, id_ideal),
                        named_poly(session, id_poly, id_expr));
        out << render_ideal(r.gens()) << "\n";
      } else if (*op_member) {
        out << (contains(named_ideal(session, id_ideal),
                         named_poly(session, id_poly, id_expr))
                    ? "true"
                    : "false")
            << "\n";
      } else if (*op_radmember) {
        out << (radical_member(named_ideal(session, id_ideal),
                               named_poly(session, id_poly, id_expr))
                    ? "true"
                    : "false")
            << "\n";
      } else if (*op_eliminate) {
        Ideal r = eliminate(named_ideal(session, id_ideal),
                            var_indices(session.ring, id_vars));
        out << render_ideal(r.gens()) << "\n";
      } else if (*op_dim) {
        out << dimension(named_ideal(session, id_ideal)) << "\n";
      }
      return 0;
    }
    if (*mm_cmd) {
      if (*mm_gen) return do_mm_gen(mm, out);
      return do_mm_verify(mm, out);
    }
    if (*cert_cmd)
      return do_cert(mm, cert_target, cert_gens, cert_restriction, out);
    if (*run_cmd) return do_run_session(run_session, run_json, run_jobs, out);
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace mmlab::cli
