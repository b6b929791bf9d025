#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include <CLI11.hpp>

#include "hopfcoh/cli/cli.hpp"
#include "hopfcoh/cli/report.hpp"
#include "hopfcoh/errors.hpp"
#include "hopfcoh/extcat/coherence.hpp"
#include "hopfcoh/monoidal/monoidal.hpp"
#include "hopfcoh/resolve/resolve.hpp"

namespace hopfcoh::cli {

using exactla::Ring;

namespace {

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  bool timing = false;

  std::vector<std::string> defs;
  std::size_t max_degree = 3;
  std::string ring;
  std::string method = "gs";
  std::size_t samples = 0;
  int tensor = 1;
  bool coherence = false;
  int central_sign = 1;
  bool no_classes = false;
  std::size_t dim = 1;
  std::size_t internal_degree = 0;
};

std::string kind_name(LoadedObject::Kind k) {
  switch (k) {
    case LoadedObject::Kind::Bialgebra:
      return "bialgebra";
    case LoadedObject::Kind::Algebra:
      return "algebra";
    case LoadedObject::Kind::Module:
      return "module";
    case LoadedObject::Kind::Extension:
      return "extension";
  }
  return "?";
}

Base bialgebra_base(const Options& o, Report& r) {
  Base b = load_base(o.defs.at(0), r.inputs);
  if (b.algebra_only) throw InputError(o.defs[0] + " is an algebra; this command needs a bialgebra");
  return b;
}

Ring ring_option(const Options& o, const Base& b) { return o.ring.empty() ? b.bialgebra->ring : Ring::parse(o.ring); }

void cmd_check(const Options& o, Report& r) {
  Table t{"objects", {"name", "kind", "dim", "checks"}, {}};
  for (const auto& ref : o.defs) {
    auto l = load(ref);
    for (const auto& s : l.sources) r.inputs.push_back(s);
    for (const auto& obj : l.objects) {
      std::size_t dim = obj.base.bialgebra->dim;
      if (obj.kind == LoadedObject::Kind::Module) dim = obj.module.dim;
      if (obj.kind == LoadedObject::Kind::Extension) dim = obj.extension->degree();
      t.rows.push_back({obj.name, kind_name(obj.kind) + (obj.kind == LoadedObject::Kind::Extension ? " (degree)" : ""),
                        std::to_string(dim), std::to_string(obj.checks.checks.size())});
      r.add_verdict(obj.name, obj.checks);
    }
  }
  r.tables.push_back(std::move(t));
}

void cmd_gs(const Options& o, Report& r) {
  Base b = bialgebra_base(o, r);
  auto rep = gs::gs_cohomology(*b.bialgebra, o.max_degree, ring_option(o, b));
  r.tables.push_back(cohomology_table(rep));
  r.add_verdict("", rep.checks);
}

void cmd_hochschild(const Options& o, Report& r) {
  Base b = load_base(o.defs.at(0), r.inputs);
  Ring ring = ring_option(o, b);
  if (ring.is_prime_field()) throw InputError("hochschild: --ring must be q or z");
  auto rep = gs::hochschild_cohomology(b.algebra(), o.max_degree, ring);
  r.tables.push_back(cohomology_table(rep));
  r.add_verdict("", rep.checks);
}

void cmd_ext(const Options& o, Report& r) {
  Base b = bialgebra_base(o, r);
  const auto& bp = b.bialgebra;
  if (o.method == "gs") {
    auto rep = gs::gs_cohomology(*bp, o.max_degree);
    r.tables.push_back(cohomology_table(rep));
    r.add_verdict("", rep.checks);
    return;
  }
  if (!bp->ring.is_field())
    throw PreconditionError("ext --method " + o.method + ": resolutions over " + bp->ring.tag() +
                            " carry no flat or projective certificates; use --method gs");
  if (o.method == "pq") {
    auto p = resolve::bar_resolution(bp, std::max<std::size_t>(o.max_degree, 1));
    auto q = resolve::injective_coinduced_resolution(bp, std::max<std::size_t>(o.max_degree, 1), o.seed);
    r.add_verdict("bar", p.checks);
    r.add_verdict("injective", q.checks);
    auto rep = resolve::ext_via_pq(p, q, o.max_degree);
    r.tables.push_back(cohomology_table(rep));
    r.add_verdict("", rep.checks);
    Table dims{"injective resolution", {"position", "dim I", "dim Q"}, {}};
    for (std::size_t j = 0; j < q.objects.size(); ++j)
      dims.rows.push_back({std::to_string(j), std::to_string(q.cores[j].dim), std::to_string(q.objects[j].dim)});
    r.tables.push_back(std::move(dims));
  } else if (o.method == "projective") {
    auto rep = resolve::ext_tetra(bp, o.max_degree);
    r.tables.push_back(cohomology_table(rep));
    r.add_verdict("", rep.checks);
  } else {
    throw InputError("unknown method '" + o.method + "' (gs, pq or projective)");
  }
}

void cmd_verify_monoidal(const Options& o, Report& r) {
  auto all = load_modules(o.defs, r.inputs);
  std::vector<Tetramodule> corpus;
  for (auto& m : all)
    if (m.is_tetra()) corpus.push_back(std::move(m));
  if (corpus.empty()) throw InputError("verify-monoidal: no tetramodules among the definitions");
  monoidal::TwoFoldOptions opts;
  opts.seed = o.seed;
  if (o.samples) opts.sample = o.samples;
  Table t{"corpus", {"module", "dim"}, {}};
  for (const auto& m : corpus) t.rows.push_back({m.name, std::to_string(m.dim)});
  r.tables.push_back(std::move(t));
  r.add_verdict("", monoidal::verify_two_fold(corpus, opts));
}

void cmd_eta_check(const Options& o, Report& r) {
  auto corpus = load_extensions(o.defs, r.inputs);
  if (o.tensor != 1 && o.tensor != 2) throw InputError("--tensor must be 1 or 2");
  const auto pr = o.tensor == 1 ? extcat::Product::One : extcat::Product::Two;
  for (const auto& e : corpus)
    if (e->category == extcat::Category::Bimodules && pr == extcat::Product::Two)
      throw PreconditionError("eta-check: bimodule extensions only carry the first tensor product");
  const std::size_t n = o.samples ? o.samples : 20;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  Table t{"eta on extensions", {"sample", "M", "N", "P", "Q", "positions", "ok"}, {}};
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<ExtPtr> four;
    for (int k = 0; k < 4; ++k) four.push_back(corpus[pick(rng)]);
    if (!tetra::same_base(four[0]->unit, four[1]->unit) || !tetra::same_base(four[0]->unit, four[2]->unit) ||
        !tetra::same_base(four[0]->unit, four[3]->unit))
      throw InputError("eta-check: extensions over different bases");
    auto eta = extcat::eta_ext(four[0], four[1], four[2], four[3], pr);
    Verdict v = eta.checks;
    v.merge("morphism", extcat::check_morphism(eta.map));
    const std::string tag = "sample " + std::to_string(s);
    r.add_verdict(tag, v);
    t.rows.push_back({std::to_string(s), four[0]->name, four[1]->name, four[2]->name, four[3]->name,
                      std::to_string(eta.map.components.size()), v.ok() ? "yes" : "no"});
  }
  r.tables.push_back(std::move(t));
  if (o.coherence) {
    extcat::ExtCoherenceOptions opts;
    opts.seed = o.seed;
    r.add_verdict("coherence", extcat::verify_ext_coherence(corpus, opts));
  }
}

void cmd_octahedron(const Options& o, Report& r) {
  auto corpus = load_extensions(o.defs, r.inputs);
  Table t{"octahedra", {"M", "N", "faces", "commuting"}, {}};
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i; j < corpus.size(); ++j) {
      auto oct = extcat::octahedron(corpus[i], corpus[j]);
      std::size_t good = 0;
      for (const auto& f : oct.faces) good += f.checks.ok();
      t.rows.push_back({corpus[i]->name, corpus[j]->name, std::to_string(oct.faces.size()), std::to_string(good)});
      r.add_verdict(corpus[i]->name + " / " + corpus[j]->name, oct.checks);
    }
  r.tables.push_back(std::move(t));
}

void cmd_splice(const Options& o, Report& r) {
  if (o.defs.size() != 2) throw InputError("splice takes exactly two extensions");
  auto e = load_extensions({o.defs[0]}, r.inputs), f = load_extensions({o.defs[1]}, r.inputs);
  if (e.size() != 1 || f.size() != 1) throw InputError("splice: each argument must name a single extension");
  if (o.central_sign != 1 && o.central_sign != -1) throw InputError("--central-sign must be 1 or -1");
  auto s = extcat::yoneda_splice(*e[0], *f[0], o.central_sign);
  r.add_verdict("splice", extcat::check_extension(s));
  Table t{"splice " + e[0]->name + " # " + f[0]->name, {"position", "dim"}, {}};
  for (std::size_t p = 0; p < s.positions(); ++p) t.rows.push_back({std::to_string(p), std::to_string(s.dim(p))});
  r.tables.push_back(std::move(t));
  if (o.no_classes) return;
  if (!s.ring().is_field()) throw PreconditionError("splice: classes need a field; pass --no-classes");
  resolve::ClassOracle oracle(s.category, s.unit.base, s.degree());
  Table c{"classes", {"extension", "degree", "coordinates"}, {}};
  const extcat::ExtensionComplex* whole = &s;
  for (const extcat::ExtensionComplex* x : {e[0].get(), f[0].get(), whole}) {
    auto cls = oracle.of(*x);
    std::string coords;
    for (const auto& v : cls.coords) coords += (coords.empty() ? "" : " ") + v.str();
    c.rows.push_back({x == whole ? std::string("splice") : x->name, std::to_string(cls.degree), coords});
  }
  r.tables.push_back(std::move(c));
}

void cmd_koszul(const Options& o, Report& r) {
  auto k = resolve::koszul_sv(o.dim, o.internal_degree ? o.internal_degree : o.dim + 1);
  r.tables.push_back(cohomology_table(k.cohomology));
  Table cores{"Koszul cores", {"i", "dim Λ^i V", "dim Λ^i V*"}, {}};
  for (std::size_t i = 0; i < k.p_cores.size() && i < k.q_cores.size(); ++i)
    cores.rows.push_back(
        {std::to_string(i), std::to_string(k.p_cores[i].basis.size()), std::to_string(k.q_cores[i].basis.size())});
  r.tables.push_back(std::move(cores));
  r.add_verdict("", k.checks);
  r.add_verdict("cohomology", k.cohomology.checks);
}

std::string echo(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Gerstenhaber-Schack and Ext computations for finite-dimensional bialgebras", "hopfcoh"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", o.seed, "seed for every sampling step");
  app.add_flag("--timing", o.timing, "append wall-clock time (reports stop being reproducible)");

  std::function<void(const Options&, Report&)> action;
  auto sub = [&](const std::string& name, const std::string& help, auto fn) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->callback([&action, fn] { action = fn; });
    return s;
  };

  auto* check = sub("check", "load definitions and run every checker", cmd_check);
  check->add_option("defs", o.defs, "files or builtins")->required();

  auto* gsc = sub("gs", "Gerstenhaber-Schack cohomology", cmd_gs);
  gsc->add_option("def", o.defs, "bialgebra")->required()->expected(1);
  gsc->add_option("--max-degree", o.max_degree);
  gsc->add_option("--ring", o.ring, "q, z or f<p>");

  auto* hh = sub("hochschild", "Hochschild cohomology of the underlying algebra", cmd_hochschild);
  hh->add_option("def", o.defs, "bialgebra or algebra")->required()->expected(1);
  hh->add_option("--max-degree", o.max_degree);
  hh->add_option("--ring", o.ring, "q or z");

  auto* ext = sub("ext", "Ext_Tetra(A, A) by the chosen method", cmd_ext);
  ext->add_option("def", o.defs, "bialgebra")->required()->expected(1);
  ext->add_option("--method", o.method)->check(CLI::IsMember({"gs", "pq", "projective"}));
  ext->add_option("--max-degree", o.max_degree);

  auto* vm = sub("verify-monoidal", "2-fold monoidal identities on a corpus of tetramodules", cmd_verify_monoidal);
  vm->add_option("defs", o.defs)->required();
  vm->add_option("--samples", o.samples);

  auto* eta = sub("eta-check", "eta on sampled 4-tuples of extensions", cmd_eta_check);
  eta->add_option("defs", o.defs)->required();
  eta->add_option("--tensor", o.tensor);
  eta->add_option("--samples", o.samples);
  eta->add_flag("--coherence", o.coherence, "also run the coherence diagrams");

  auto* oct = sub("octahedron", "octahedron faces for every pair of extensions", cmd_octahedron);
  oct->add_option("defs", o.defs)->required();

  auto* sp = sub("splice", "Yoneda splice of two extensions and its class", cmd_splice);
  sp->add_option("defs", o.defs)->required()->expected(2);
  sp->add_option("--central-sign", o.central_sign);
  sp->add_flag("--no-classes", o.no_classes);

  auto* kz = sub("koszul-sv", "GS cohomology of S(V) through Koszul resolutions", cmd_koszul);
  kz->add_option("--dim", o.dim)->required();
  kz->add_option("--max-internal-degree", o.internal_degree);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  Report report;
  report.command = echo(args);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    action(o, report);
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (o.timing) report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  render(report, parse_format(o.format), out);
  return report.ok() ? 0 : 1;
}

}  // namespace hopfcoh::cli
