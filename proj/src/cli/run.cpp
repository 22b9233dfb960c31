#include "sweedler/cli.hpp"

#include <json.hpp>

#include "sweedler/document.hpp"
#include "sweedler/graded.hpp"
#include "sweedler/hopfcore.hpp"
#include "sweedler/linalg.hpp"
#include "sweedler/measuring.hpp"
#include "sweedler/reconstruct.hpp"
#include "sweedler/tambara.hpp"

namespace sweedler {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

json matrix_json(const LinMap& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.cod(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dom(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const LinMap& column) {
  json v = json::array();
  for (const auto& s : column.column(0)) v.push_back(s.to_string());
  return v;
}

json failures_json(const ValidationReport& report) {
  json out = json::array();
  for (const auto& f : report.failures) {
    json entry{{"axiom", f.axiom}, {"witness", f.witness}};
    if (!f.component.empty()) entry["component"] = f.component;
    out.push_back(std::move(entry));
  }
  return out;
}

struct Context {
  const CommandRequest& request;
  json report;
  std::optional<std::string> document;  // emitted under --format document
  int status = exit_code::ok;

  void arity(std::size_t lo, std::size_t hi) const {
    const std::size_t n = request.inputs.size();
    if (n < lo || n > hi)
      throw UsageError(lo == hi ? "expected " + std::to_string(lo) + " input document(s)"
                                : "expected between " + std::to_string(lo) + " and " +
                                      std::to_string(hi) + " input documents");
  }
  Document load(std::size_t i, bool validate = true) const {
    return load_document(request.inputs.at(i), validate);
  }
  std::size_t dim() const {
    if (!request.dim) throw UsageError("this command needs --dim");
    return *request.dim;
  }
  void emit(const Document& doc) {
    document = serialize(doc);
    report["document"] = *document;
  }
};

AlgebraData as_algebra(const Document& doc) {
  if (auto* a = std::get_if<AlgebraData>(&doc.value)) return *a;
  if (auto* b = std::get_if<BialgebraData>(&doc.value)) return b->alg;
  if (auto* h = std::get_if<HopfData>(&doc.value)) return h->bialg.alg;
  throw UsageError("expected an algebra, got a " + kind_name(doc) + " document");
}

CoalgebraData as_coalgebra(const Document& doc) {
  if (auto* c = std::get_if<CoalgebraData>(&doc.value)) return *c;
  if (auto* b = std::get_if<BialgebraData>(&doc.value)) return b->coalg;
  if (auto* h = std::get_if<HopfData>(&doc.value)) return h->bialg.coalg;
  if (auto* g = std::get_if<GeneratedSubcoalgebra>(&doc.value)) return g->d;
  throw UsageError("expected a coalgebra, got a " + kind_name(doc) + " document");
}

BialgebraData as_bialgebra(const Document& doc) {
  if (auto* b = std::get_if<BialgebraData>(&doc.value)) return *b;
  if (auto* h = std::get_if<HopfData>(&doc.value)) return h->bialg;
  throw UsageError("expected a bialgebra, got a " + kind_name(doc) + " document");
}

Measuring as_measuring(const Document& doc) {
  if (auto* m = std::get_if<Measuring>(&doc.value)) return *m;
  throw UsageError("expected a measuring, got a " + kind_name(doc) + " document");
}

GradedAlgebraData as_graded_algebra(const Document& doc) {
  if (!doc.degrees) throw UsageError("expected a document with degrees");
  return make_graded(as_algebra(doc), *doc.degrees);
}

FieldSpec structure_field(const Document& doc) {
  if (auto* c = std::get_if<CoalgebraData>(&doc.value)) return c->field;
  return as_algebra(doc).field;
}

json validation_json(const Document& doc, const ValidationReport& r) {
  return {{"kind", kind_name(doc)}, {"valid", r.ok()}, {"failures", failures_json(r)}};
}

void cmd_validate(Context& ctx) {
  ctx.arity(1, 1);
  const Document doc = ctx.load(0, false);
  const auto r = validate_document(doc);
  ctx.report.update(validation_json(doc, r));
  if (!r.ok()) ctx.status = exit_code::validation;
}

void cmd_dual(Context& ctx) {
  ctx.arity(1, 1);
  const Document doc = ctx.load(0);
  std::optional<std::vector<long>> degrees;
  if (doc.degrees) {
    degrees.emplace();
    for (long d : *doc.degrees) degrees->push_back(-d);
  }
  Document out = std::visit(
      [&](const auto& v) -> Document {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AlgebraData>) {
          const auto d = dual_coalgebra(v);
          ctx.report["commutative"] = is_commutative(v);
          ctx.report["cocommutative"] = is_cocommutative(d);
          ctx.report["coopposite_matches_dual_of_opposite"] =
              same_structure(coopposite(d), dual_coalgebra(opposite(v)));
          return {d, degrees};
        } else if constexpr (std::is_same_v<T, CoalgebraData>) {
          return {dual_algebra(v), degrees};
        } else if constexpr (std::is_same_v<T, BialgebraData>) {
          auto b = make_bialgebra(dual_algebra(v.coalg), dual_coalgebra(v.alg));
          const auto r = validate_bialgebra(b);
          if (!r.ok()) throw ValidationError(r);
          return {std::move(b), degrees};
        } else if constexpr (std::is_same_v<T, HopfData>) {
          return {dual_hopf_check(v), degrees};
        } else {
          throw UsageError("dual needs an algebra, coalgebra, bialgebra or hopf document");
        }
      },
      doc.value);
  ctx.report["kind"] = kind_name(out);
  ctx.report["valid"] = validate_document(out).ok();
  ctx.emit(out);
}

void cmd_convolution(Context& ctx) {
  ctx.arity(2, 2);
  const auto c = as_coalgebra(ctx.load(0));
  const auto b = as_algebra(ctx.load(1));
  const auto conv = convolution_algebra(c, b);
  ctx.report["dim"] = conv.dim;
  ctx.report["commutative"] = is_commutative(conv);
  ctx.emit({conv, std::nullopt});
}

void cmd_fusion(Context& ctx) {
  ctx.arity(1, 1);
  const auto b = as_bialgebra(ctx.load(0));
  const auto ops = fusion_operators(b);
  auto entry = [](const LinMap& f) { return json{{"rank", rank(f)}, {"invertible", is_invertible(f)}}; };
  ctx.report["h"] = entry(ops.h);
  ctx.report["h_prime"] = entry(ops.h_prime);
  ctx.report["h_bar"] = entry(ops.h_bar);
  ctx.report["h_bar_prime"] = entry(ops.h_bar_prime);
  ctx.report["hopf"] = is_invertible(ops.h) && is_invertible(ops.h_prime);
  ctx.report["op_hopf"] = is_invertible(ops.h_bar) && is_invertible(ops.h_bar_prime);
}

void cmd_antipode(Context& ctx) {
  ctx.arity(1, 1);
  const auto b = as_bialgebra(ctx.load(0));
  const auto h = find_antipode(b);
  if (!h) {
    ctx.report["antipode"] = "absent";
    return;
  }
  ctx.report["antipode"] = matrix_json(h->antipode);
  ctx.emit({*h, std::nullopt});
}

void cmd_opantipode(Context& ctx) {
  ctx.arity(1, 1);
  const auto s = find_opantipode(as_bialgebra(ctx.load(0)));
  ctx.report["opantipode"] = s ? matrix_json(*s) : json("absent");
}

void cmd_grouplikes(Context& ctx) {
  ctx.arity(1, 1);
  const auto c = as_coalgebra(ctx.load(0));
  std::vector<LinMap> found;
  if (ctx.request.candidates.empty()) {
    if (!c.field.is_prime()) throw UsageError("grouplikes over Q needs --candidates");
    found = grouplikes(c, ctx.request.budget);
    ctx.report["search"] = "exhaustive";
  } else {
    GrouplikeCandidates box;
    for (std::size_t i = 0; i < c.dim; ++i) box.axes.push_back(i);
    json values = json::array();
    for (const auto& text : ctx.request.candidates) {
      try {
        box.values.push_back(Scalar::parse(c.field, text));
      } catch (const std::exception& e) {
        throw UsageError("bad candidate value '" + text + "': " + e.what());
      }
      values.push_back(text);
    }
    found = grouplikes(c, box, ctx.request.budget);
    ctx.report["search"] = {{"candidate_values", std::move(values)}};
  }
  ctx.report["count"] = found.size();
  json list = json::array();
  for (const auto& g : found) list.push_back(vector_json(g));
  ctx.report["grouplikes"] = std::move(list);
}

void cmd_morphisms(Context& ctx) {
  ctx.arity(2, 2);
  const Document da = ctx.load(0), db = ctx.load(1);
  std::vector<LinMap> found;
  // an algebra without degrees is concentrated in degree 0
  const bool graded = da.degrees || db.degrees;
  if (graded) {
    const auto a = da.degrees ? as_graded_algebra(da) : include_degree0(as_algebra(da));
    const auto b = db.degrees ? as_graded_algebra(db) : include_degree0(as_algebra(db));
    found = graded_algebra_morphisms(a, b, ctx.request.budget);
    ctx.report["source_connected"] = is_connected(a.space);
    ctx.report["target_connected"] = is_connected(b.space);
  } else {
    found = algebra_morphisms(as_algebra(da), as_algebra(db), ctx.request.budget);
  }
  ctx.report["graded"] = graded;
  ctx.report["count"] = found.size();
  json list = json::array();
  for (const auto& f : found) list.push_back(matrix_json(f));
  ctx.report["morphisms"] = std::move(list);
}

void cmd_enumerate(Context& ctx) {
  ctx.arity(2, 2);
  const auto a = as_algebra(ctx.load(0)), b = as_algebra(ctx.load(1));
  const std::size_t n = ctx.dim();
  const auto r = enumerate_measurings(a, b, n, ctx.request.budget);
  ctx.report["dim"] = n;
  ctx.report["total"] = r.total_count;
  json orbits = json::array();
  for (const auto& o : r.orbits)
    orbits.push_back({{"size", o.size}, {"psi", matrix_json(o.representative.psi)}});
  ctx.report["orbit_count"] = r.orbits.size();
  ctx.report["orbits"] = std::move(orbits);
}

void cmd_reconstruct(Context& ctx) {
  if (ctx.request.inputs.empty()) throw UsageError("reconstruct needs at least one measuring document");
  std::vector<Measuring> ms;
  for (std::size_t i = 0; i < ctx.request.inputs.size(); ++i) ms.push_back(as_measuring(ctx.load(i)));
  const auto g = reconstruct(ms, ctx.request.auto_intertwiners);
  ctx.report["auto_intertwiners"] = ctx.request.auto_intertwiners;
  ctx.report["dim"] = g.d.dim;
  ctx.report["basis"] = g.d.basis;
  json factorization = json::array();
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    factorization.push_back(verify_universal_factorization(g, i));
  ctx.report["universal_factorization"] = std::move(factorization);
  ctx.report["cocommutative"] = is_cocommutative(g.d);
  if (g.b.dim == 1) {
    const LinMap to_dual = pairing_map_to_dual(g);
    ctx.report["pairing_to_dual"] = {{"rank", rank(to_dual)},
                                     {"isomorphism", is_invertible(to_dual)},
                                     {"matrix", matrix_json(to_dual)}};
  }
  ctx.emit({g, std::nullopt});
}

void emit_measuring(Context& ctx, const Measuring& m) {
  const auto r = validate_measuring(m);
  ctx.report["xdim"] = m.xdim;
  ctx.report["valid"] = r.ok();
  ctx.report["failures"] = failures_json(r);
  ctx.emit({m, std::nullopt});
}

void cmd_tensor(Context& ctx) {
  ctx.arity(2, 3);
  const auto m1 = as_measuring(ctx.load(0)), m2 = as_measuring(ctx.load(1));
  if (ctx.request.inputs.size() == 3) {
    ctx.report["mode"] = "bialgebra";
    emit_measuring(ctx, tensor_measuring_bialgebra(m1, m2, as_bialgebra(ctx.load(2))));
  } else {
    ctx.report["mode"] = "endomorphism";
    emit_measuring(ctx, tensor_measuring_endo(m1, m2));
  }
}

void cmd_compose(Context& ctx) {
  ctx.arity(2, 2);
  emit_measuring(ctx, compose_measuring(as_measuring(ctx.load(0)), as_measuring(ctx.load(1))));
}

void cmd_graded_check(Context& ctx) {
  ctx.arity(1, 1);
  const Document doc = ctx.load(0, false);
  if (!doc.degrees) throw UsageError("graded-check needs a document with degrees");
  const auto r = validate_document(doc);
  ctx.report.update(validation_json(doc, r));
  const GradedSpace space{structure_field(doc), *doc.degrees};
  bool nonnegative = true;
  for (long d : space.degrees) nonnegative = nonnegative && d >= 0;
  ctx.report["nonnegative"] = nonnegative;
  ctx.report["connected"] = nonnegative && is_connected(space);
  if (!r.ok()) ctx.status = exit_code::validation;
}

void cmd_degree0(Context& ctx) {
  ctx.arity(1, 1);
  const auto a = degree0_part(as_graded_algebra(ctx.load(0)));
  ctx.report["dim"] = a.dim;
  ctx.emit({a, std::nullopt});
}

void cmd_tambara_presentation(Context& ctx) {
  ctx.arity(2, 2);
  const auto p = tambara_presentation(as_algebra(ctx.load(0)), as_algebra(ctx.load(1)));
  ctx.report["generator_count"] = p.algebra.generators.size();
  ctx.report["relation_count"] = p.algebra.relations.size();
  ctx.emit({p.algebra, std::nullopt});
}

void cmd_tambara_check(Context& ctx) {
  ctx.arity(2, 2);
  const auto r = correspondence_check(as_algebra(ctx.load(0)), as_algebra(ctx.load(1)), ctx.dim(),
                                      ctx.request.budget);
  ctx.report["dim"] = r.n;
  ctx.report["module_count"] = r.module_count;
  ctx.report["morphism_count"] = r.morphism_count;
  ctx.report["bijective"] = r.bijective;
  ctx.report["module_orbits"] = r.module_orbits;
  ctx.report["morphism_orbits"] = r.morphism_orbits;
  ctx.report["orbits_match"] = r.orbits_match;
  ctx.report["intertwiners_match"] = r.intertwiners_match;
  ctx.report["ok"] = r.ok();
}

json error_json(const std::string& type, const std::string& message) {
  return {{"type", type}, {"message", message}};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "validate",  "dual",       "convolution", "fusion",
      "antipode",  "opantipode", "grouplikes",  "morphisms",
      "enumerate-measurings", "reconstruct", "tensor", "compose",
      "graded-check", "degree0", "tambara-presentation", "tambara-check"};
  return names;
}

std::optional<Command> parse_command(const std::string& name) {
  const auto& names = command_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<Command>(i);
  return std::nullopt;
}

CommandResult run(const CommandRequest& request) {
  Context ctx{request, json::object(), std::nullopt, exit_code::ok};
  ctx.report["command"] = command_names().at(static_cast<std::size_t>(request.command));
  json inputs = json::array();
  for (const auto& p : request.inputs) inputs.push_back(p.generic_string());
  ctx.report["inputs"] = std::move(inputs);
  if (request.seed) ctx.report["seed"] = *request.seed;
  ctx.report["budget"] = request.budget;

  try {
    switch (request.command) {
      case Command::validate: cmd_validate(ctx); break;
      case Command::dual: cmd_dual(ctx); break;
      case Command::convolution: cmd_convolution(ctx); break;
      case Command::fusion: cmd_fusion(ctx); break;
      case Command::antipode: cmd_antipode(ctx); break;
      case Command::opantipode: cmd_opantipode(ctx); break;
      case Command::grouplikes: cmd_grouplikes(ctx); break;
      case Command::morphisms: cmd_morphisms(ctx); break;
      case Command::enumerate_measurings: cmd_enumerate(ctx); break;
      case Command::reconstruct: cmd_reconstruct(ctx); break;
      case Command::tensor: cmd_tensor(ctx); break;
      case Command::compose: cmd_compose(ctx); break;
      case Command::graded_check: cmd_graded_check(ctx); break;
      case Command::degree0: cmd_degree0(ctx); break;
      case Command::tambara_presentation: cmd_tambara_presentation(ctx); break;
      case Command::tambara_check: cmd_tambara_check(ctx); break;
    }
    if (request.format == OutputFormat::document && ctx.status == exit_code::ok) {
      if (ctx.document) return {ctx.status, *ctx.document};
      if (!ctx.report.contains("antipode"))
        throw UsageError("this command does not produce a document");
    }
  } catch (const UsageError& e) {
    ctx.report["error"] = error_json("usage", e.what());
    ctx.status = exit_code::usage;
  } catch (const IoError& e) {
    ctx.report["error"] = error_json("io", e.what());
    ctx.status = exit_code::io;
  } catch (const ParseError& e) {
    ctx.report["error"] = error_json("parse", e.what());
    ctx.report["error"]["line"] = e.line();
    ctx.report["error"]["column"] = e.column();
    ctx.status = exit_code::parse;
  } catch (const ValidationError& e) {
    ctx.report["error"] = error_json("validation", e.what());
    ctx.report["error"]["failures"] = failures_json(e.report());
    ctx.status = exit_code::validation;
  } catch (const BudgetExceeded& e) {
    ctx.report["error"] = error_json("budget", e.what());
    ctx.status = exit_code::budget;
  } catch (const std::exception& e) {
    ctx.report["error"] = error_json("library", e.what());
    ctx.status = exit_code::library;
  }
  ctx.report.erase("document");
  if (ctx.document && ctx.status == exit_code::ok) ctx.report["document"] = *ctx.document;
  return {ctx.status, ctx.report.dump(2) + "\n"};
}

}  // namespace sweedler
