#include "gwf/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "gwf/character_expansion.hpp"
#include "gwf/error.hpp"
#include "gwf/gamma_reduction.hpp"
#include "gwf/io.hpp"
#include "gwf/kl_engine.hpp"
#include "gwf/langlands.hpp"
#include "gwf/nilpotent_orbits.hpp"

namespace gwf {

namespace {

using io::json;

struct Options {
  bool json_out = false;

  std::string ms, ms2, convention = "langlands";
  std::string support_text;

  std::string type = "A", partition, numeral;
  int k = 0;

  int kl_n = 0;
  std::string kl_x, kl_w;

  std::string alpha, nu, backend = "kl";
  bool wavefront_only = false;

  int n = 0, m = 0, e = 0, f = 0;
  std::string depth = "0", s_label = "s";
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

RepLabel read_label(const Options& o) { return {io::parse_multisegment(o.ms), parse_convention(o.convention)}; }

void cmd_az(const Options& o, std::ostream& out) {
  RepLabel r = az(read_label(o));
  if (o.json_out)
    emit(out, io::to_json(r));
  else
    out << io::format_multisegment(r.m) << "\n";
}

void cmd_wf(const Options& o, std::ostream& out) {
  RepLabel l = read_label(o);
  Partition w = wavefront(l);
  if (o.json_out)
    emit(out, {{"label", io::to_json(l)}, {"wavefront", io::to_json(w)}});
  else
    out << w.to_string() << "\n";
}

void cmd_param(const Options& o, std::ostream& out) {
  RepLabel l = read_label(o);
  WeilDeligneParameter p = parameter_of(l);
  Partition nil = nilpotent_partition(p);
  if (o.json_out) {
    emit(out, {{"label", io::to_json(l)}, {"parameter", io::to_json(p)}, {"nilpotent", io::to_json(nil)}});
  } else {
    out << "summands: " << io::format_parameter(p) << "\n";
    out << "nilpotent: " << nil.to_string() << "\n";
  }
}

void cmd_inertia(const Options& o, std::ostream& out) {
  Multisegment m = io::parse_multisegment(o.ms);
  InertiaClass c = inertia_class(m);
  if (o.json_out)
    emit(out, {{"inertia", io::to_json(c)}, {"gamma", gamma_of_inertia(m)}});
  else
    out << io::format_inertia(c) << "\n";
}

void cmd_duality(const Options& o, std::ostream& out) {
  Partition p = io::parse_partition(o.partition);
  SimpleOrbitLabel src = SimpleOrbitLabel::type_a(Partition{1});
  if (o.type == "A") {
    if (!o.numeral.empty()) throw DomainError("type A orbits carry no numeral");
    if (o.k != 0 && o.k != p.size()) throw DomainError("--k does not match the partition size");
    src = SimpleOrbitLabel::type_a(p);
  } else if (o.type == "D") {
    int k = o.k != 0 ? o.k : p.size() / 2;
    Numeral x = Numeral::None;
    if (o.numeral == "I") x = Numeral::I;
    else if (o.numeral == "II") x = Numeral::II;
    else if (!o.numeral.empty()) throw ParseError("numeral must be I or II");
    src = SimpleOrbitLabel::type_d(k, p, x);
  } else {
    throw ParseError("--type must be A or D");
  }
  SimpleOrbitLabel d = spaltenstein(src);
  if (o.json_out)
    emit(out, {{"orbit", io::to_json(src)}, {"dual", io::to_json(d)}, {"special", is_special(src)}});
  else
    out << d.to_string() << "\n";
}

void cmd_closure(const Options& o, std::ostream& out) {
  Multisegment a = io::parse_multisegment(o.ms), b = io::parse_multisegment(o.ms2);
  bool leq = closure_leq_graded(a, b);
  if (o.json_out)
    emit(out, {{"first", io::to_json(a)}, {"second", io::to_json(b)}, {"leq", leq}});
  else
    out << (leq ? "true" : "false") << "\n";
}

void cmd_enumerate(const Options& o, std::ostream& out) {
  SupportMultiset s;
  if (!o.support_text.empty())
    s = io::parse_support(o.support_text);
  else if (!o.ms.empty())
    s = support(io::parse_multisegment(o.ms));
  else
    throw ParseError("enumerate needs --support or a multisegment");
  auto all = enumerate_multisegments(s);
  if (o.json_out) {
    json arr = json::array();
    for (const auto& m : all) arr.push_back(io::to_json(m));
    emit(out, {{"count", all.size()}, {"multisegments", arr}});
  } else {
    for (const auto& m : all) out << io::format_multisegment(m) << "\n";
  }
}

void cmd_kl(const Options& o, std::ostream& out) {
  Permutation x = Permutation::parse(o.kl_x), w = Permutation::parse(o.kl_w);
  if (x.size() != o.kl_n || w.size() != o.kl_n) throw DomainError("permutations must have N entries");
  KLPolynomial p = kl_polynomial(x, w);
  if (o.json_out) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
    emit(out, {{"N", o.kl_n}, {"x", x.to_string()}, {"w", w.to_string()}, {"polynomial", p.to_string()},
               {"coefficients", coeffs}});
  } else {
    out << p.to_string() << "\n";
  }
}

void cmd_expansion(const Options& o, std::ostream& out) {
  Composition alpha(io::parse_int_list(o.alpha));
  std::vector<Rational> nu = o.nu.empty() ? std::vector<Rational>(alpha.length(), Rational(0))
                                          : io::parse_rational_list(o.nu);
  MultiplicityBackend b = parse_backend(o.backend);
  MultiplicityEngine engine;
  ExpansionVector v = hch_expansion_of_az(alpha, nu, b, engine);
  std::vector<Partition> wf = wavefront_from_expansion(v);
  if (o.json_out) {
    json nus = json::array(), wfs = json::array();
    for (const auto& r : nu) nus.push_back(io::to_json(r));
    for (const auto& p : wf) wfs.push_back(io::to_json(p));
    emit(out, {{"alpha", alpha.parts()}, {"nu", nus}, {"backend", to_string(b)}, {"expansion", io::to_json(v)},
               {"wavefront", wfs}});
  } else if (o.wavefront_only) {
    for (const auto& p : wf) out << p.to_string() << "\n";
  } else {
    out << io::format_expansion(v);
  }
}

void cmd_reduce(const Options& o, std::ostream& out) {
  PureTypeDescriptor d(o.n, o.m, o.e == 0 ? 1 : o.e, o.f == 0 ? (o.e == 0 ? o.m : o.m / o.e) : o.f,
                       parse_rational(o.depth), o.s_label);
  CuspidalLine line{"1", o.m};
  Multisegment m = io::parse_multisegment(o.ms, line);
  Multisegment reduced = reduce(m, d);
  GammaOrbitLabel g = gamma_wavefront(m, d);
  MultiplicityEngine engine;
  ExpansionVector ev = hch_expansion(RepLabel{reduced, Convention::langlands}, parse_backend(o.backend), engine);
  GammaExpansion ge = transfer_expansion(ev, d);
  if (o.json_out) {
    emit(out, {{"descriptor", io::to_json(d)},
               {"multisegment", io::to_json(m)},
               {"reduced", io::to_json(reduced)},
               {"gamma_wavefront", io::to_json(g)},
               {"expansion", io::to_json(ge)}});
    return;
  }
  out << "descriptor: n=" << d.n << " m=" << d.m << " e=" << d.e << " f=" << d.f << " depth=" << to_string(d.depth)
      << " s=" << d.s_label << "\n";
  out << "reduced: " << io::format_multisegment(reduced) << "\n";
  out << "gamma-wavefront: " << g.s_label << " " << g.partition.to_string() << "\n";
  out << "expansion:\n";
  for (const auto& [label, c] : ge) out << label.s_label << " " << label.partition.to_string() << ":" << c.to_string() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multisegment, orbit and wavefront calculator for GL_n", "gwf"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "Write one JSON document");

  auto label_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("multisegment", o.ms, "e.g. \"(0,1)+(1,1)\"")->required();
    c->add_option("--convention", o.convention, "langlands or zelevinsky")->capture_default_str();
    c->add_flag("--json", o.json_out);
    return c;
  };
  auto* az_c = label_cmd("az", "Aubert-Zelevinsky dual");
  auto* wf_c = label_cmd("wf", "Wavefront orbit");
  auto* param_c = label_cmd("param", "Weil-Deligne parameter and nilpotent orbit");

  auto* inertia_c = app.add_subcommand("inertia", "Bernstein inertia class");
  inertia_c->add_option("multisegment", o.ms)->required();
  inertia_c->add_flag("--json", o.json_out);

  auto* dual_c = app.add_subcommand("duality", "Spaltenstein duality in type A or D");
  dual_c->add_option("--type", o.type)->check(CLI::IsMember({"A", "D"}));
  dual_c->add_option("--k", o.k);
  dual_c->add_option("--partition", o.partition)->required();
  dual_c->add_option("--numeral", o.numeral)->check(CLI::IsMember({"I", "II"}));
  dual_c->add_flag("--json", o.json_out);

  auto* closure_c = app.add_subcommand("closure", "Graded orbit closure order");
  closure_c->add_option("first", o.ms)->required();
  closure_c->add_option("second", o.ms2)->required();
  closure_c->add_flag("--json", o.json_out);

  auto* enum_c = app.add_subcommand("enumerate", "All multisegments with a given support");
  enum_c->add_option("multisegment", o.ms);
  enum_c->add_option("--support", o.support_text, "e.g. \"0:2,1:2\"");
  enum_c->add_flag("--json", o.json_out);

  auto* kl_c = app.add_subcommand("kl-poly", "Kazhdan-Lusztig polynomial P_{x,w}");
  kl_c->add_option("N", o.kl_n)->required()->check(CLI::Range(1, 8));
  kl_c->add_option("x", o.kl_x)->required();
  kl_c->add_option("w", o.kl_w)->required();
  kl_c->add_flag("--json", o.json_out);

  auto* exp_c = app.add_subcommand("expansion", "Local character expansion of AZ(pi(alpha;nu))");
  exp_c->add_option("--alpha", o.alpha)->required();
  exp_c->add_option("--nu", o.nu);
  exp_c->add_option("--backend", o.backend)->check(CLI::IsMember({"kl", "closure", "kl_zelevinsky", "closure01"}));
  exp_c->add_flag("--wavefront", o.wavefront_only, "Print only the maximal orbits");
  exp_c->add_flag("--json", o.json_out);

  auto* red_c = app.add_subcommand("reduce", "Reduction to the twisted Levi GL_{n/m}(E)");
  red_c->add_option("--n", o.n)->required();
  red_c->add_option("--m", o.m)->required();
  red_c->add_option("--e", o.e);
  red_c->add_option("--f", o.f);
  red_c->add_option("--depth", o.depth);
  red_c->add_option("--s", o.s_label);
  red_c->add_option("--multisegment", o.ms)->required();
  red_c->add_option("--backend", o.backend)->check(CLI::IsMember({"kl", "closure", "kl_zelevinsky", "closure01"}));
  red_c->add_flag("--json", o.json_out);

  std::vector<std::string> argv_store{"gwf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (az_c->parsed()) cmd_az(o, out);
    else if (wf_c->parsed()) cmd_wf(o, out);
    else if (param_c->parsed()) cmd_param(o, out);
    else if (inertia_c->parsed()) cmd_inertia(o, out);
    else if (dual_c->parsed()) cmd_duality(o, out);
    else if (closure_c->parsed()) cmd_closure(o, out);
    else if (enum_c->parsed()) cmd_enumerate(o, out);
    else if (kl_c->parsed()) cmd_kl(o, out);
    else if (exp_c->parsed()) cmd_expansion(o, out);
    else if (red_c->parsed()) cmd_reduce(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace gwf
