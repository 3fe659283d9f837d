#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "ualg/birkhoff.hpp"
#include "ualg/closure.hpp"
#include "ualg/entail.hpp"
#include "ualg/eqlogic.hpp"
#include "ualg/free.hpp"
#include "ualg/hom.hpp"
#include "ualg/io.hpp"

namespace ualg::cli {

namespace {

/// Input problem reported on stderr with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Loaded {
  Signature sig;
  std::vector<FiniteAlgebra> algebras;
};

Loaded load_file(const std::string& path) {
  if (!std::filesystem::exists(path)) throw UsageError("no such file: " + path);
  auto parsed = parse_algebra_file(read_file(path), path);
  return {std::move(parsed.signature), std::move(parsed.algebras)};
}

// FILE or FILE:NAME
FiniteAlgebra load_algebra(const std::string& ref, const std::string& flag) {
  std::string path = ref;
  std::string name;
  if (!std::filesystem::exists(ref)) {
    if (auto colon = ref.rfind(':'); colon != std::string::npos) {
      path = ref.substr(0, colon);
      name = ref.substr(colon + 1);
    }
  }
  auto file = load_file(path);
  if (name.empty()) {
    if (file.algebras.size() != 1) {
      throw UsageError(flag + ": " + path + " holds " + std::to_string(file.algebras.size()) +
                       " algebras; name one as FILE:NAME");
    }
    return file.algebras.front();
  }
  for (auto& a : file.algebras) {
    if (a.name() == name) return a;
  }
  throw UsageError(flag + ": no algebra '" + name + "' in " + path);
}

std::vector<FiniteAlgebra> load_class(const std::vector<std::string>& files) {
  std::vector<FiniteAlgebra> k;
  for (const auto& f : files) {
    auto file = load_file(f);
    if (!k.empty() && !file.algebras.empty() && file.sig != k.front().signature()) {
      throw UsageError(f + ": signature differs from earlier files");
    }
    for (auto& a : file.algebras) k.push_back(std::move(a));
  }
  if (k.empty()) throw UsageError("no algebras given");
  return k;
}

std::vector<std::string> parse_vars(const std::string& spec) {
  if (!spec.empty() && std::all_of(spec.begin(), spec.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return numbered_variables(std::stoul(spec));
  }
  std::vector<std::string> vars;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty() && item.front() == '?') item.erase(0, 1);
    if (item.empty()) throw UsageError("--vars: empty variable name");
    vars.push_back(item);
  }
  return vars;
}

CarrierMap parse_map(const std::string& text, std::size_t domain, std::size_t codomain,
                     const std::string& flag) {
  std::vector<Elem> img;
  std::stringstream ss(text);
  long long v = 0;
  while (ss >> v) {
    if (v < 0 || static_cast<std::size_t>(v) >= codomain) {
      throw UsageError(flag + ": value " + std::to_string(v) + " outside target carrier");
    }
    img.push_back(static_cast<Elem>(v));
  }
  if (!ss.eof()) throw UsageError(flag + ": expected space-separated integers");
  if (img.size() != domain) {
    throw UsageError(flag + ": expected " + std::to_string(domain) + " values, got " +
                     std::to_string(img.size()));
  }
  return CarrierMap(std::move(img), codomain);
}

void infer_symbols(const Term& t, Signature& sig) {
  if (t.is_var()) return;
  if (auto op = sig.find(t.name())) {
    if (sig[*op].arity != t.children().size()) {
      throw UsageError("symbol '" + t.name() + "' used with inconsistent arities");
    }
  } else {
    sig.add(t.name(), t.children().size());
  }
  for (const auto& c : t.children()) infer_symbols(c, sig);
}

Signature entail_signature(const std::string& sig_file, std::span<const Equation> axioms,
                           const Equation& goal) {
  if (!sig_file.empty()) return load_file(sig_file).sig;
  Signature sig;
  for (const auto& e : axioms) {
    infer_symbols(e.lhs, sig);
    infer_symbols(e.rhs, sig);
  }
  infer_symbols(goal.lhs, sig);
  infer_symbols(goal.rhs, sig);
  return sig;
}

std::vector<Equation> load_equations(const std::string& path) {
  if (!std::filesystem::exists(path)) throw UsageError("no such file: " + path);
  return parse_equation_file(read_file(path), path);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct Options {
  std::string file;
  std::vector<std::string> algebras;
  std::vector<std::string> files;
  std::string equation;
  std::string src, dst, map;
  std::string g, h, g_dst, h_dst;
  std::string vars = "2";
  std::size_t depth = 2;
  bool surjective = false;
  bool injective = false;
  std::size_t limit = static_cast<std::size_t>(-1);
  bool skip_trivial = false;
  std::string out_path, sidecar_path;
  std::string axioms, goal, proof, sig_file;
  std::size_t max_size = 16;
  std::size_t budget = 100'000;
  std::size_t pool_bound = 2;
  std::string format = "text";
};

int cmd_validate(const Options& o, std::ostream& out) {
  if (!std::filesystem::exists(o.file)) throw UsageError("no such file: " + o.file);
  try {
    auto parsed = parse_algebra_file(read_file(o.file), o.file);
    out << "ok " << parsed.algebras.size() << " algebra(s)\n";
    return kHolds;
  } catch (const ValidationError& e) {
    out << "invalid\n";
    for (const auto& v : e.violations()) out << "WITNESS " << v.to_string() << "\n";
    return kFails;
  }
}

int cmd_sat(const Options& o, const Caps& caps, std::ostream& out) {
  auto alg = load_algebra(o.algebras.front(), "--algebra");
  auto eq = parse_equation(o.equation, "--equation");
  auto r = satisfies(alg, eq, caps.search);
  if (r.holds) {
    out << "holds\n";
    return kHolds;
  }
  out << "fails\nWITNESS " << r.counterexample->to_string() << "\n";
  return kFails;
}

int cmd_class_sat(const Options& o, const Caps& caps, std::ostream& out) {
  std::vector<FiniteAlgebra> k;
  for (const auto& ref : o.algebras) k.push_back(load_algebra(ref, "--algebra"));
  for (const auto& f : o.files) {
    for (auto& a : load_file(f).algebras) k.push_back(std::move(a));
  }
  auto eq = parse_equation(o.equation, "--equation");
  auto r = class_satisfies(k, eq, caps.search);
  if (r.holds) {
    out << "holds in all " << k.size() << " algebra(s)\n";
    return kHolds;
  }
  out << "fails\nWITNESS algebra=" << k[*r.failing_algebra].name() << " "
      << r.counterexample->to_string() << "\n";
  return kFails;
}

int cmd_theory(const Options& o, const Caps& caps, std::ostream& out) {
  auto k = load_class(o.files);
  auto vars = parse_vars(o.vars);
  for (const auto& eq : theory_upto(k.front().signature(), k, vars, o.depth, caps)) {
    if (o.skip_trivial && eq.lhs == eq.rhs) continue;
    out << eq.to_string() << "\n";
  }
  return kHolds;
}

int cmd_hom(const Options& o, std::ostream& out) {
  auto src = load_algebra(o.src, "--src");
  auto dst = load_algebra(o.dst, "--dst");
  if (src.signature() != dst.signature()) throw UsageError("--src and --dst signatures differ");
  auto m = parse_map(o.map, src.size(), dst.size(), "--map");
  auto c = classify(src, dst, m);
  out << (c.is_hom ? "hom" : "not-hom") << " injective=" << (c.injective ? "yes" : "no")
      << " surjective=" << (c.surjective ? "yes" : "no") << "\n";
  if (!c.is_hom) {
    out << "WITNESS " << c.witness->to_string() << "\n";
    return kFails;
  }
  return kHolds;
}

int cmd_hom_find(const Options& o, const Caps& caps, std::ostream& out) {
  auto src = load_algebra(o.src, "--src");
  auto dst = load_algebra(o.dst, "--dst");
  if (src.signature() != dst.signature()) throw UsageError("--src and --dst signatures differ");
  HomSearch opts;
  opts.surjective = o.surjective;
  opts.injective = o.injective;
  opts.max_results = o.limit;
  opts.cap = caps.search;
  auto found = find_homs(src, dst, opts);
  for (const auto& m : found) out << m.to_string() << "\n";
  if (found.empty()) {
    out << "WITNESS none\n";
    return kFails;
  }
  return kHolds;
}

int cmd_factor(const Options& o, std::ostream& out) {
  auto a = load_algebra(o.src, "--src");
  auto b = load_algebra(o.h_dst, "--h-dst");
  auto c = load_algebra(o.g_dst, "--g-dst");
  auto g = parse_map(o.g, a.size(), c.size(), "--g");
  auto h = parse_map(o.h, a.size(), b.size(), "--h");
  if (a.signature() != b.signature() || a.signature() != c.signature()) {
    throw UsageError("algebra signatures differ");
  }
  try {
    auto phi = hom_factor(a, b, c, g, h);
    out << phi.to_string() << "\n";
    return kHolds;
  } catch (const KernelInclusionError& e) {
    out << "kernel-inclusion-fails\nWITNESS " << e.pair().first << " " << e.pair().second << "\n";
  } catch (const NotHomError& e) {
    out << "not-hom\nWITNESS " << e.witness().to_string() << "\n";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSurjective) throw;
    out << "not-surjective\nWITNESS " << e.what() << "\n";
  }
  return kFails;
}

int cmd_free(const Options& o, const Caps& caps, std::ostream& out) {
  auto k = load_class(o.files);
  auto vars = parse_vars(o.vars);
  auto f = build_free(k, vars, k.front().signature(), caps);
  FiniteAlgebra alg = f.algebra();
  alg.set_name("F");
  const FiniteAlgebra one[] = {alg};
  const auto text = emit_algebra_file(alg.signature(), one);
  const auto sidecar = emit_free_sidecar(f);
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_file(o.out_path, text);
  }
  if (!o.sidecar_path.empty()) {
    write_file(o.sidecar_path, sidecar);
  } else if (!o.out_path.empty()) {
    write_file(o.out_path + ".sidecar", sidecar);
  } else {
    // Inline as comments so stdout stays a loadable algebra file.
    std::istringstream lines(sidecar);
    std::string line;
    out << "\n";
    while (std::getline(lines, line)) out << "# " << line << "\n";
  }
  return kHolds;
}

int cmd_entail_check(const Options& o, std::ostream& out) {
  auto axioms = load_equations(o.axioms);
  auto goal = parse_equation(o.goal, "--goal");
  if (!std::filesystem::exists(o.proof)) throw UsageError("no such file: " + o.proof);
  auto proof = parse_proof(read_file(o.proof), o.proof);
  auto sig = entail_signature(o.sig_file, axioms, goal);
  std::optional<Equation> checked;
  try {
    checked = check_proof(sig, axioms, proof);
  } catch (const TransMismatchError& e) {
    out << "invalid-proof\nWITNESS trans " << e.left_middle().to_string() << " "
        << e.right_middle().to_string() << "\n";
    return kFails;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BadHypothesis && e.kind() != ErrorKind::ArityMismatch &&
        e.kind() != ErrorKind::UnknownSymbol) {
      throw;
    }
    out << "invalid-proof\nWITNESS " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kFails;
  }
  const Equation& concl = *checked;
  if (concl != goal) {
    out << "proves-other\nWITNESS " << concl.to_string() << "\n";
    return kFails;
  }
  out << "proves " << concl.to_string() << "\n";
  return kHolds;
}

int cmd_entail_search(const Options& o, std::ostream& out) {
  auto axioms = load_equations(o.axioms);
  auto goal = parse_equation(o.goal, "--goal");
  auto sig = entail_signature(o.sig_file, axioms, goal);
  SearchLimits limits{o.depth, o.max_size, o.budget};
  auto r = search_proof(sig, axioms, goal, limits);
  if (r.status == SearchStatus::Found) {
    out << emit_proof(*r.proof) << "\n";
    return kHolds;
  }
  out << "not-found\nWITNESS " << to_string(r.status) << "\n";
  return kFails;
}

void render(const std::string& title, const PipelineReport& report, const std::string& prefix,
            const std::string& format, std::ostream& out, bool& all_pass) {
  all_pass = all_pass && report.overall;
  if (format == "machine") {
    for (const auto& st : report.stages) {
      out << "STAGE " << prefix << ":" << st.name << (st.pass ? " PASS" : " FAIL");
      if (!st.witness.empty()) out << " " << st.witness;
      out << "\n";
    }
  } else {
    out << title << "\n" << report.to_text();
  }
}

int cmd_birkhoff_demo(const Options& o, const Caps& caps, std::ostream& out) {
  auto k = load_class(o.files);
  const auto& sig = k.front().signature();
  auto vars = parse_vars(o.vars);
  bool all_pass = true;

  {
    PipelineReport r;
    auto f = build_free(k, vars, sig, caps);
    r.add("build", true, "size " + std::to_string(f.algebra().size()));
    const auto th = theory_upto(sig, k, vars, o.depth, caps);
    auto m = mod_check(f.algebra(), th, caps.search);
    r.add("models-theory", m.holds,
          m.holds ? std::to_string(th.size()) + " identities"
                  : th[*m.failing_equation].to_string() + " env " + m.counterexample->to_string());
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < f.elements().size(); ++i) {
      distinct += f.find(f.elements()[i].tuple) == static_cast<Elem>(i);
    }
    r.add("embedding-injective", distinct == f.elements().size());
    render("free algebra on " + std::to_string(vars.size()) + " generators", r, "free",
           o.format, out, all_pass);
  }

  for (std::size_t i = 0; i < k.size(); ++i) {
    const auto& a = k[i];
    render("hard direction: " + a.name() + " in V(K)",
           var_to_eqcl_check(k, a, HspCertificate::trivial(a, i), caps),
           "var-to-eqcl:" + a.name(), o.format, out, all_pass);
    if (a.size() < 2) continue;
    // The subalgebra of A x A generated by (0,1) and (1,0), certified as itself.
    const FiniteAlgebra square[] = {a, a};
    auto sub = subalgebra_generate(product(square, caps).alg,
                                   std::vector<Elem>{1, static_cast<Elem>(a.size())});
    if (sub.alg.size() > 4) continue;  // free algebra on |sub| generators grows fast
    HspCertificate cert;
    cert.factors = {i, i};
    cert.generators = {{0, 1}, {1, 0}};
    cert.image.resize(sub.alg.size());
    for (Elem e = 0; e < sub.alg.size(); ++e) cert.image[e] = e;
    sub.alg.set_name(a.name() + "^2");
    render("hard direction: subalgebra of " + a.name() + "^2 generated by (0,1),(1,0)",
           var_to_eqcl_check(k, sub.alg, cert, caps), "var-to-eqcl:" + a.name() + "^2", o.format,
           out, all_pass);
  }

  {
    const std::vector<std::string> two{"x", "y"};
    std::vector<Equation> e;
    for (auto& eq : theory_upto(sig, k, two, 1, caps)) {
      if (eq.lhs != eq.rhs) e.push_back(std::move(eq));
    }
    PipelineReport r;
    try {
      r = eqcl_to_var_check(sig, e, o.pool_bound, caps);
    } catch (const CapExceededError& ex) {
      r.add("pool", false, ex.what());
    }
    render("easy direction: Mod of the depth-1 identities of K", r, "eqcl-to-var", o.format, out,
           all_pass);
  }
  return all_pass ? kHolds : kFails;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite universal algebra workbench", "ualg"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Parse and validate an algebra file");
  validate->add_option("file", o.file, "Algebra file")->required();

  auto* sat = app.add_subcommand("sat", "Check an identity in one algebra");
  sat->add_option("--algebra", o.algebras, "FILE[:NAME]")->required()->expected(1);
  sat->add_option("--equation", o.equation, "\"p = q\"")->required();

  auto* class_sat = app.add_subcommand("class-sat", "Check an identity in a class of algebras");
  class_sat->add_option("--algebra", o.algebras, "FILE[:NAME], repeatable");
  class_sat->add_option("files", o.files, "Algebra files; every algebra joins the class");
  class_sat->add_option("--equation", o.equation, "\"p = q\"")->required();

  auto* theory = app.add_subcommand("theory", "Identities of bounded depth holding in a class");
  theory->add_option("--depth", o.depth, "Maximum term depth")->required();
  theory->add_option("--vars", o.vars, "Variable count or comma-separated names")->required();
  theory->add_flag("--skip-trivial", o.skip_trivial, "Omit p = p");
  theory->add_option("files", o.files, "Algebra files")->required();

  auto* hom = app.add_subcommand("hom", "Classify a carrier map");
  hom->add_option("--src", o.src, "FILE[:NAME]")->required();
  hom->add_option("--dst", o.dst, "FILE[:NAME]")->required();
  hom->add_option("--map", o.map, "\"i0 i1 ...\"")->required();

  auto* hom_find = app.add_subcommand("hom-find", "Enumerate homomorphisms");
  hom_find->add_option("--src", o.src, "FILE[:NAME]")->required();
  hom_find->add_option("--dst", o.dst, "FILE[:NAME]")->required();
  hom_find->add_flag("--surjective", o.surjective);
  hom_find->add_flag("--injective", o.injective);
  hom_find->add_option("--limit", o.limit, "Stop after this many maps");

  auto* factor = app.add_subcommand("factor", "Factor g through a surjective h");
  factor->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  factor->add_option("--src", o.src, "Common domain A, FILE[:NAME]")->required();
  factor->add_option("--h-dst", o.h_dst, "Codomain of h, FILE[:NAME]")->required();
  factor->add_option("--g-dst", o.g_dst, "Codomain of g, FILE[:NAME]")->required();
  factor->add_option("--g", o.g, "\"i0 i1 ...\"")->required();
  factor->add_option("--h", o.h, "\"i0 i1 ...\"")->required();

  auto* free = app.add_subcommand("free", "Relatively free algebra of a class");
  free->add_option("--vars", o.vars, "Variable count or comma-separated names")->required();
  free->add_option("--out", o.out_path, "Write the algebra file here (sidecar to OUT.sidecar)");
  free->add_option("--sidecar", o.sidecar_path, "Write the element sidecar here");
  free->add_option("files", o.files, "Algebra files")->required();

  auto* entail_check = app.add_subcommand("entail-check", "Check a proof against a goal");
  entail_check->add_option("--axioms", o.axioms, "Equation file")->required();
  entail_check->add_option("--goal", o.goal, "\"p = q\"")->required();
  entail_check->add_option("--proof", o.proof, "Proof s-expression file")->required();
  entail_check->add_option("--sig", o.sig_file, "Algebra file providing the signature");

  auto* entail_search = app.add_subcommand("entail-search", "Search for a proof");
  entail_search->add_option("--axioms", o.axioms, "Equation file")->required();
  entail_search->add_option("--goal", o.goal, "\"p = q\"")->required();
  entail_search->add_option("--depth", o.depth, "Maximum proof height")->required();
  entail_search->add_option("--max-size", o.max_size, "Largest intermediate term (nodes)");
  entail_search->add_option("--budget", o.budget, "Search node budget");
  entail_search->add_option("--sig", o.sig_file, "Algebra file providing the signature");

  auto* demo = app.add_subcommand("birkhoff-demo", "Run the HSP pipelines on a class");
  demo->add_option("--vars", o.vars, "Variable count or comma-separated names")->required();
  demo->add_option("--depth", o.depth, "Theory depth for the free-algebra check");
  demo->add_option("--pool-bound", o.pool_bound, "Largest algebra in the easy-direction pool");
  demo->add_option("--format", o.format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
  demo->add_option("files", o.files, "Algebra files forming K")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kUsage;
  }

  try {
    const Caps caps = caps_from_environment();
    if (*validate) return cmd_validate(o, out);
    if (*sat) return cmd_sat(o, caps, out);
    if (*class_sat) {
      if (o.algebras.empty() && o.files.empty()) throw UsageError("class-sat: no algebras given");
      return cmd_class_sat(o, caps, out);
    }
    if (*theory) return cmd_theory(o, caps, out);
    if (*hom) return cmd_hom(o, out);
    if (*hom_find) return cmd_hom_find(o, caps, out);
    if (*factor) return cmd_factor(o, out);
    if (*free) return cmd_free(o, caps, out);
    if (*entail_check) return cmd_entail_check(o, out);
    if (*entail_search) return cmd_entail_search(o, out);
    if (*demo) return cmd_birkhoff_demo(o, caps, out);
  } catch (const UsageError& e) {
    err << "ualg: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "ualg: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ualg::cli
