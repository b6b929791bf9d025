#include "hopfcoh/cli/definitions.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hopfcoh/errors.hpp"

namespace hopfcoh::cli {

using exactla::Rational;
using exactla::Ring;
using json = nlohmann::ordered_json;

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

class Document {
 public:
  Document(std::string origin, json doc) : origin_(std::move(origin)), doc_(std::move(doc)) {
    if (!doc_.is_object()) throw InputError(origin_ + ": top level must be an object of named definitions");
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (auto it = doc_.begin(); it != doc_.end(); ++it) out.push_back(it.key());
    return out;
  }

  const LoadedObject& get(const std::string& name) {
    if (auto it = done_.find(name); it != done_.end()) return it->second;
    if (!doc_.contains(name)) throw InputError(origin_ + ": no object named '" + name + "'");
    if (!active_.insert(name).second) throw InputError(origin_ + ": circular reference through '" + name + "'");
    LoadedObject o = build(name, doc_.at(name));
    active_.erase(name);
    return done_.emplace(name, std::move(o)).first->second;
  }

 private:
  std::string origin_;
  json doc_;
  std::map<std::string, LoadedObject> done_;
  std::set<std::string> active_;

  [[noreturn]] void fail(const std::string& obj, const std::string& field, const std::string& msg) const {
    std::string where = origin_ + ": object '" + obj + "'";
    if (!field.empty()) where += ", field '" + field + "'";
    throw InputError(where + ": " + msg);
  }

  const json& field(const std::string& obj, const json& o, const std::string& key) const {
    if (!o.contains(key)) fail(obj, key, "missing");
    return o.at(key);
  }

  std::size_t count(const std::string& obj, const json& o, const std::string& key) const {
    const json& v = field(obj, o, key);
    if (!v.is_number_unsigned()) fail(obj, key, "expected a nonnegative integer");
    return v.get<std::size_t>();
  }

  std::string text(const std::string& obj, const json& o, const std::string& key) const {
    const json& v = field(obj, o, key);
    if (!v.is_string()) fail(obj, key, "expected a string");
    return v.get<std::string>();
  }

  // entries [out..., in..., "p/q"] of a map ⊗in -> ⊗out
  Matrix tensor(const std::string& obj, const std::string& key, const json& entries, const std::vector<std::size_t>& out,
                const std::vector<std::size_t>& in, const Ring& ring) const {
    std::size_t rows = 1, cols = 1;
    for (auto d : out) rows *= d;
    for (auto d : in) cols *= d;
    if (!entries.is_array()) fail(obj, key, "expected an array of entries");
    const std::size_t arity = out.size() + in.size();
    std::map<std::pair<std::size_t, std::size_t>, Rational> seen;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const json& entry = entries[e];
      const std::string at = "entry " + std::to_string(e) + ": ";
      if (!entry.is_array() || entry.size() != arity + 1)
        fail(obj, key, at + "expected " + std::to_string(arity) + " indices and a coefficient");
      std::size_t r = 0, c = 0;
      for (std::size_t s = 0; s < arity; ++s) {
        if (!entry[s].is_number_unsigned()) fail(obj, key, at + "indices must be nonnegative integers");
        const auto idx = entry[s].get<std::size_t>();
        const std::size_t bound = s < out.size() ? out[s] : in[s - out.size()];
        if (idx >= bound)
          fail(obj, key, at + "index " + std::to_string(idx) + " out of range in slot " + std::to_string(s));
        if (s < out.size())
          r = r * bound + idx;
        else
          c = c * bound + idx;
      }
      if (!entry[arity].is_string()) fail(obj, key, at + "coefficients are \"p/q\" strings");
      Rational v;
      try {
        v = Rational::parse(entry[arity].get<std::string>());
      } catch (const std::exception& ex) {
        fail(obj, key, at + ex.what());
      }
      if (ring.kind == Ring::Kind::Integers && !v.is_integer()) fail(obj, key, at + "non-integral coefficient over z");
      if (!seen.emplace(std::pair{r, c}, v).second) fail(obj, key, at + "duplicate index");
    }
    exactla::MatrixBuilder m(rows, cols);
    for (const auto& [rc, v] : seen) m.add(rc.first, rc.second, v);
    return exactla::reduce(m.finish(), ring);
  }

  Base base_ref(const std::string& obj, const std::string& ref) {
    if (doc_.contains(ref)) {
      const auto& o = get(ref);
      if (o.kind != LoadedObject::Kind::Bialgebra && o.kind != LoadedObject::Kind::Algebra)
        fail(obj, "base", "'" + ref + "' is not a bialgebra or algebra");
      return o.base;
    }
    try {
      return base_alias(ref);
    } catch (const InputError& ex) {
      fail(obj, "base", ex.what());
    }
  }

  Tetramodule module_ref(const std::string& obj, const std::string& ref, const Base& base) {
    Tetramodule m;
    if (ref == "A") {
      m = unit_object(base);
    } else if (doc_.contains(ref)) {
      const auto& o = get(ref);
      if (o.kind != LoadedObject::Kind::Module) fail(obj, "terms", "'" + ref + "' is not a module");
      m = o.module;
    } else {
      try {
        m = module_alias(ref);
      } catch (const InputError& ex) {
        fail(obj, "terms", ex.what());
      }
    }
    if (!tetra::same_base(m, unit_object(base))) fail(obj, "terms", "'" + ref + "' lives over a different base");
    return m;
  }

  void require(const std::string& obj, const Verdict& v) const {
    if (v.ok()) return;
    const auto* f = v.first_failure();
    fail(obj, "", "check failed: " + f->name + (f->detail.empty() ? "" : " (" + f->detail + ")"));
  }

  LoadedObject build(const std::string& name, const json& o) {
    if (!o.is_object()) fail(name, "", "expected an object");
    const std::string kind = text(name, o, "kind");
    LoadedObject out;
    out.name = name;
    if (kind == "bialgebra" || kind == "algebra") {
      Ring ring = Ring::rationals();
      if (o.contains("ring")) {
        try {
          ring = Ring::parse(text(name, o, "ring"));
        } catch (const InputError& ex) {
          fail(name, "ring", ex.what());
        }
      }
      const std::size_t d = count(name, o, "dim");
      if (d == 0) fail(name, "dim", "must be positive");
      std::vector<std::string> labels;
      if (o.contains("labels")) {
        const json& l = o.at("labels");
        if (!l.is_array() || l.size() != d) fail(name, "labels", "expected one string per basis vector");
        for (const auto& s : l) {
          if (!s.is_string()) fail(name, "labels", "expected strings");
          labels.push_back(s.get<std::string>());
        }
      }
      auto t = [&](const std::string& key, std::vector<std::size_t> out_d, std::vector<std::size_t> in_d) {
        return tensor(name, key, field(name, o, key), out_d, in_d, ring);
      };
      if (kind == "algebra") {
        bialg::FinAlgebra a{name, ring, d, labels, t("mult", {d}, {d, d}), t("unit", {d}, {})};
        out.checks = bialg::check_algebra(a);
        require(name, out.checks);
        out.kind = LoadedObject::Kind::Algebra;
        out.base = Base{extcat::algebra_base(a), true};
        return out;
      }
      bialg::FinBialgebra b;
      b.name = name;
      b.ring = ring;
      b.dim = d;
      b.labels = labels;
      b.mult = t("mult", {d}, {d, d});
      b.comult = t("comult", {d, d}, {d});
      b.unit = t("unit", {d}, {});
      b.counit = t("counit", {}, {d});
      if (o.contains("antipode")) b.antipode = t("antipode", {d}, {d});
      out.checks = bialg::check_axioms(b);
      require(name, out.checks);
      out.kind = LoadedObject::Kind::Bialgebra;
      out.base = Base{tetra::share(std::move(b)), false};
      return out;
    }
    if (kind == "tetramodule" || kind == "bimodule" || kind == "bicomodule") {
      out.base = base_ref(name, text(name, o, "base"));
      const auto& b = out.base.bialgebra;
      if (out.base.algebra_only && kind != "bimodule") fail(name, "kind", "an algebra base only carries bimodules");
      const std::size_t d = count(name, o, "dim"), da = b->dim;
      Tetramodule m;
      m.base = b;
      m.dim = d;
      m.name = name;
      const bool acts = kind != "bicomodule", coacts = kind != "bimodule";
      auto t = [&](const std::string& key, std::vector<std::size_t> out_d, std::vector<std::size_t> in_d) {
        return tensor(name, key, field(name, o, key), out_d, in_d, b->ring);
      };
      for (const char* key : {"m_left", "m_right", "delta_left", "delta_right"}) {
        const bool wanted = std::string(key).rfind("m_", 0) == 0 ? acts : coacts;
        if (!wanted && o.contains(key)) fail(name, key, "not part of a " + kind);
      }
      if (acts) {
        m.m_left = t("m_left", {d}, {da, d});
        m.m_right = t("m_right", {d}, {d, da});
      }
      if (coacts) {
        m.delta_left = t("delta_left", {da, d}, {d});
        m.delta_right = t("delta_right", {d, da}, {d});
      }
      out.checks = tetra::check_tetramodule(m);
      require(name, out.checks);
      out.kind = LoadedObject::Kind::Module;
      out.module = std::move(m);
      return out;
    }
    if (kind == "extension") {
      out.base = base_ref(name, text(name, o, "base"));
      auto cat = unit_category(out.base);
      if (o.contains("category")) {
        const std::string c = text(name, o, "category");
        if (c == "bimodules")
          cat = extcat::Category::Bimodules;
        else if (c != "tetramodules")
          fail(name, "category", "expected bimodules or tetramodules");
        else if (out.base.algebra_only)
          fail(name, "category", "an algebra base has no tetramodules");
      }
      Tetramodule unit = unit_object(out.base);
      if (cat == extcat::Category::Bimodules) unit = tetra::forget_to_bimodule(unit);
      const json& terms = field(name, o, "terms");
      if (!terms.is_array() || terms.empty()) fail(name, "terms", "expected a nonempty list");
      std::vector<Tetramodule> mids;
      std::vector<std::size_t> dims{unit.dim};
      for (const auto& t : terms) {
        if (!t.is_string()) fail(name, "terms", "expected names");
        Tetramodule m = module_ref(name, t.get<std::string>(), out.base);
        if (cat == extcat::Category::Bimodules) m = tetra::forget_to_bimodule(m);
        dims.push_back(m.dim);
        mids.push_back(std::move(m));
      }
      dims.push_back(unit.dim);
      const json& maps = field(name, o, "maps");
      if (!maps.is_array() || maps.size() != mids.size() + 1)
        fail(name, "maps", "expected " + std::to_string(mids.size() + 1) + " maps");
      std::vector<Matrix> ms;
      for (std::size_t s = 0; s < maps.size(); ++s)
        ms.push_back(tensor(name, "maps[" + std::to_string(s) + "]", maps[s], {dims[s + 1]}, {dims[s]},
                            out.base.bialgebra->ring));
      auto e = extcat::make_extension(cat, unit, mids, ms, name);
      out.checks = extcat::check_extension(e);
      require(name, out.checks);
      out.kind = LoadedObject::Kind::Extension;
      out.extension = extcat::share(std::move(e));
      return out;
    }
    fail(name, "kind", "unknown kind '" + kind + "'");
  }
};

LoadedObject alias_object(const std::string& ref) {
  LoadedObject o;
  o.name = ref;
  if (is_base_alias(ref)) {
    o.base = base_alias(ref);
    o.kind = o.base.algebra_only ? LoadedObject::Kind::Algebra : LoadedObject::Kind::Bialgebra;
    o.checks = o.base.algebra_only ? bialg::check_algebra(o.base.algebra()) : bialg::check_axioms(*o.base.bialgebra);
  } else if (is_module_alias(ref)) {
    o.kind = LoadedObject::Kind::Module;
    o.module = module_alias(ref);
    o.base = Base{o.module.base, !o.module.has_coactions()};
    o.checks = tetra::check_tetramodule(o.module);
  } else if (is_extension_alias(ref)) {
    o.kind = LoadedObject::Kind::Extension;
    o.extension = extension_alias(ref);
    o.base = Base{o.extension->unit.base, o.extension->category == extcat::Category::Bimodules};
    o.checks = extcat::check_extension(*o.extension);
  } else {
    throw InputError("'" + ref + "' is neither a file nor a builtin");
  }
  if (!o.checks.ok()) throw InputError("builtin '" + ref + "' fails " + o.checks.first_failure()->name);
  return o;
}

}  // namespace

Loaded load_text(const std::string& text, const std::string& origin, const std::string& only) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    // locate the byte offset
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < ex.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = ex.what();
    throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": parse error: " + msg);
  }
  Document d(origin, std::move(doc));
  Loaded out;
  out.sources.push_back({origin, digest(text)});
  if (!only.empty()) {
    out.objects.push_back(d.get(only));
    return out;
  }
  for (const auto& n : d.names()) out.objects.push_back(d.get(n));
  return out;
}

Loaded load(const std::string& ref) {
  std::string path = ref, only;
  if (auto k = ref.find('#'); k != std::string::npos) {
    path = ref.substr(0, k);
    only = ref.substr(k + 1);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (!only.empty()) throw InputError(path + ": cannot open");
    Loaded out;
    out.objects.push_back(alias_object(ref));
    out.sources.push_back({ref, digest(ref)});
    return out;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return load_text(ss.str(), path, only);
}

namespace {

void append(std::vector<Source>& all, const std::vector<Source>& more) {
  for (const auto& s : more) {
    bool dup = false;
    for (const auto& t : all) dup = dup || (t.ref == s.ref && t.digest == s.digest);
    if (!dup) all.push_back(s);
  }
}

}  // namespace

Base load_base(const std::string& ref, std::vector<Source>& sources) {
  auto l = load(ref);
  append(sources, l.sources);
  std::vector<Base> found;
  for (const auto& o : l.objects)
    if (o.kind == LoadedObject::Kind::Bialgebra || o.kind == LoadedObject::Kind::Algebra) found.push_back(o.base);
  if (found.size() != 1)
    throw InputError(ref + ": expected exactly one bialgebra or algebra (use file#name), found " +
                     std::to_string(found.size()));
  return found[0];
}

std::vector<Tetramodule> load_modules(const std::vector<std::string>& refs, std::vector<Source>& sources) {
  std::vector<Tetramodule> out;
  for (const auto& r : refs) {
    auto l = load(r);
    append(sources, l.sources);
    for (const auto& o : l.objects) {
      if (o.kind == LoadedObject::Kind::Module) out.push_back(o.module);
      if (o.kind == LoadedObject::Kind::Bialgebra || o.kind == LoadedObject::Kind::Algebra)
        for (auto& m : standard_modules(o.base)) out.push_back(std::move(m));
    }
  }
  if (out.empty()) throw InputError("no modules among the definitions");
  return out;
}

std::vector<ExtPtr> load_extensions(const std::vector<std::string>& refs, std::vector<Source>& sources) {
  std::vector<ExtPtr> out;
  for (const auto& r : refs) {
    auto l = load(r);
    append(sources, l.sources);
    for (const auto& o : l.objects)
      if (o.kind == LoadedObject::Kind::Extension) out.push_back(o.extension);
  }
  if (out.empty()) throw InputError("no extensions among the definitions");
  return out;
}

}  // namespace hopfcoh::cli
