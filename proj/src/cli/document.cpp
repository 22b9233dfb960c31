#include "sweedler/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sweedler/graded.hpp"
#include "sweedler/hopfcore.hpp"

namespace sweedler {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number = 0;
  std::size_t end_column = 1;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    Line line;
    line.number = number;
    line.end_column = raw.size() + 1;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      if (static_cast<unsigned char>(raw[i]) < 0x20)
        throw ParseError(number, i + 1, "control character in document");
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
      i = j;
    }
    if (!line.tokens.empty() && line.tokens.front().text[0] != '#') lines.push_back(std::move(line));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

[[noreturn]] void fail_at(const Line& line, std::size_t token, const std::string& message) {
  const std::size_t column = token < line.tokens.size() ? line.tokens[token].column : line.end_column;
  throw ParseError(line.number, column, message);
}

std::size_t parse_index(const Line& line, std::size_t token) {
  if (token >= line.tokens.size()) fail_at(line, token, "expected a nonnegative integer");
  const std::string& t = line.tokens[token].text;
  const bool digits = !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (!digits || (t.size() > 1 && t[0] == '0') || t.size() > 9)
    fail_at(line, token, "expected a nonnegative integer in canonical form, got '" + t + "'");
  return std::stoul(t);
}

long parse_degree(const Line& line, std::size_t token) {
  const std::string& t = line.tokens.at(token).text;
  const bool negative = !t.empty() && t[0] == '-';
  const std::string body = negative ? t.substr(1) : t;
  const bool digits = !body.empty() && std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (!digits || (body.size() > 1 && body[0] == '0') || body.size() > 9 || (negative && body == "0"))
    fail_at(line, token, "expected an integer degree in canonical form, got '" + t + "'");
  return std::stol(t);
}

Scalar parse_scalar(FieldSpec field, const Line& line, std::size_t token) {
  if (token >= line.tokens.size()) fail_at(line, token, "expected a scalar");
  try {
    return Scalar::parse(field, line.tokens[token].text);
  } catch (const std::exception& e) {
    fail_at(line, token, e.what());
  }
}

// Scalars from `first` to the end of the line; exactly `count` of them.
std::vector<Scalar> parse_vector(FieldSpec field, const Line& line, std::size_t first,
                                 std::size_t count) {
  if (line.tokens.size() != first + count)
    fail_at(line, std::min(line.tokens.size(), first + count),
            "expected " + std::to_string(count) + " coefficients");
  std::vector<Scalar> v;
  for (std::size_t t = first; t < line.tokens.size(); ++t) v.push_back(parse_scalar(field, line, t));
  return v;
}

void expect_colon(const Line& line, std::size_t token) {
  if (token >= line.tokens.size() || line.tokens[token].text != ":") fail_at(line, token, "expected ':'");
}

struct Section {
  const Line* header;
  std::vector<Line> body;
};

// Directives of one block, grouped by keyword, with `begin`/`end` sections.
struct Fields {
  std::map<std::string, std::vector<const Line*>> directives;
  std::map<std::string, std::vector<Section>> sections;
  const Line* anchor;  // for errors about missing fields

  const Line* single(const std::string& key, bool required) const {
    const auto it = directives.find(key);
    if (it == directives.end() || it->second.empty()) {
      if (required) fail_at(*anchor, 0, "missing '" + key + "' line");
      return nullptr;
    }
    if (it->second.size() > 1) fail_at(*it->second[1], 0, "duplicate '" + key + "' line");
    return it->second.front();
  }
  std::vector<const Line*> all(const std::string& key) const {
    const auto it = directives.find(key);
    return it == directives.end() ? std::vector<const Line*>{} : it->second;
  }
};

Fields collect(const std::vector<Line>& lines, const Line* anchor,
               const std::set<std::string>& keywords, const std::set<std::string>& section_names) {
  Fields f{{}, {}, anchor};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& key = line.tokens[0].text;
    if (key == "begin") {
      if (line.tokens.size() != 2) fail_at(line, 1, "expected 'begin <section>'");
      const std::string& name = line.tokens[1].text;
      if (!section_names.count(name)) fail_at(line, 1, "unknown section '" + name + "'");
      Section s{&line, {}};
      std::size_t j = i + 1;
      for (; j < lines.size(); ++j) {
        const auto& t = lines[j].tokens;
        if (t[0].text == "end" && t.size() == 2 && t[1].text == name) break;
        s.body.push_back(lines[j]);
      }
      if (j == lines.size()) fail_at(line, 0, "section '" + name + "' is not closed");
      f.sections[name].push_back(std::move(s));
      i = j;
      continue;
    }
    if (key == "end") fail_at(line, 0, "'end' without 'begin'");
    if (!keywords.count(key)) fail_at(line, 0, "unexpected '" + key + "'");
    f.directives[key].push_back(&line);
  }
  return f;
}

FieldSpec parse_field(const Fields& f) {
  const Line* line = f.single("field", true);
  if (line->tokens.size() != 2) fail_at(*line, 2, "expected 'field Q' or 'field F<p>'");
  try {
    return FieldSpec::parse(line->tokens[1].text);
  } catch (const std::exception& e) {
    fail_at(*line, 1, e.what());
  }
}

std::size_t parse_count(const Fields& f, const std::string& key) {
  const Line* line = f.single(key, true);
  if (line->tokens.size() != 2) fail_at(*line, 2, "expected '" + key + " <n>'");
  return parse_index(*line, 1);
}

std::vector<std::string> parse_labels(const Fields& f, std::size_t dim) {
  const Line* line = f.single("basis", false);
  if (!line) return default_labels(dim);
  if (line->tokens.size() != dim + 1)
    fail_at(*line, std::min(line->tokens.size(), dim + 1), "expected " + std::to_string(dim) + " labels");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t t = 1; t < line->tokens.size(); ++t) {
    if (!seen.insert(line->tokens[t].text).second) fail_at(*line, t, "repeated basis label");
    labels.push_back(line->tokens[t].text);
  }
  return labels;
}

std::optional<std::vector<long>> parse_degrees(const Fields& f, std::size_t dim) {
  const Line* line = f.single("degrees", false);
  if (!line) return std::nullopt;
  if (line->tokens.size() != dim + 1)
    fail_at(*line, std::min(line->tokens.size(), dim + 1), "expected " + std::to_string(dim) + " degrees");
  std::vector<long> d;
  for (std::size_t t = 1; t < line->tokens.size(); ++t) d.push_back(parse_degree(*line, t));
  return d;
}

// Columns given as "<key> i : v" lines; duplicates rejected.
LinMap parse_columns(const Fields& f, const std::string& key, FieldSpec field, std::size_t cod,
                     std::size_t dom) {
  LinMap m(field, cod, dom);
  std::set<std::size_t> seen;
  for (const Line* line : f.all(key)) {
    const std::size_t c = parse_index(*line, 1);
    if (c >= dom) fail_at(*line, 1, "index out of range");
    if (!seen.insert(c).second) fail_at(*line, 1, "repeated '" + key + "' entry");
    expect_colon(*line, 2);
    const auto v = parse_vector(field, *line, 3, cod);
    for (std::size_t r = 0; r < cod; ++r) m.set(r, c, v[r]);
  }
  return m;
}

std::optional<std::size_t> unit_index(const LinMap& unit) {
  std::optional<std::size_t> found;
  for (std::size_t r = 0; r < unit.cod(); ++r) {
    const Scalar c = unit.at(r, 0);
    if (c.is_zero()) continue;
    if (!c.is_one() || found) return std::nullopt;
    found = r;
  }
  return found;
}

// The product table forced by the unit axiom when 1 is a basis vector.
LinMap implied_mult(const LinMap& unit) {
  const std::size_t d = unit.cod();
  LinMap m(unit.field(), d, d * d);
  if (const auto u = unit_index(unit))
    for (std::size_t i = 0; i < d; ++i) {
      m.set(i, *u * d + i, Scalar::one(unit.field()));
      m.set(i, i * d + *u, Scalar::one(unit.field()));
    }
  return m;
}

AlgebraData parse_algebra_part(const Fields& f, FieldSpec field, std::size_t dim,
                               std::vector<std::string> labels) {
  const Line* unit_line = f.single("unit", true);
  if (dim == 0) fail_at(*f.single("dim", true), 1, "an algebra needs dimension >= 1");
  LinMap unit = LinMap::column_vector(field, parse_vector(field, *unit_line, 1, dim));
  LinMap mult = implied_mult(unit);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Line* line : f.all("mult")) {
    const std::size_t i = parse_index(*line, 1);
    if (i >= dim) fail_at(*line, 1, "index out of range");
    const std::size_t j = parse_index(*line, 2);
    if (j >= dim) fail_at(*line, 2, "index out of range");
    if (!seen.insert({i, j}).second) fail_at(*line, 1, "repeated 'mult' entry");
    expect_colon(*line, 3);
    const auto v = parse_vector(field, *line, 4, dim);
    for (std::size_t r = 0; r < dim; ++r) mult.set(r, i * dim + j, v[r]);
  }
  return make_algebra(std::move(unit), std::move(mult), std::move(labels));
}

CoalgebraData parse_coalgebra_part(const Fields& f, FieldSpec field, std::size_t dim,
                                   std::vector<std::string> labels) {
  const Line* counit_line = f.single("counit", true);
  LinMap counit = LinMap::from_scalars(field, 1, dim, parse_vector(field, *counit_line, 1, dim));
  LinMap comult = parse_columns(f, "comult", field, dim * dim, dim);
  return make_coalgebra(std::move(counit), std::move(comult), std::move(labels));
}

const std::set<std::string> kAlgebraKeys{"field", "dim", "basis", "degrees", "unit", "mult"};
const std::set<std::string> kCoalgebraKeys{"field", "dim", "basis", "degrees", "counit", "comult"};
const std::set<std::string> kBialgebraKeys{"field",  "dim",  "basis",  "degrees",
                                           "unit",   "mult", "counit", "comult"};
const std::set<std::string> kHopfKeys{"field", "dim",    "basis",  "degrees", "unit",
                                      "mult",  "counit", "comult", "antipode"};

Document parse_structure(const std::string& kind, const Fields& f) {
  const FieldSpec field = parse_field(f);
  const std::size_t dim = parse_count(f, "dim");
  auto labels = parse_labels(f, dim);
  auto degrees = parse_degrees(f, dim);
  if (kind == "algebra") return {parse_algebra_part(f, field, dim, labels), degrees};
  if (kind == "coalgebra") return {parse_coalgebra_part(f, field, dim, labels), degrees};
  auto b = make_bialgebra(parse_algebra_part(f, field, dim, labels),
                          parse_coalgebra_part(f, field, dim, labels));
  if (kind == "bialgebra") return {std::move(b), degrees};
  return {make_hopf(std::move(b), parse_columns(f, "antipode", field, dim, dim)), degrees};
}

Document parse_lines(const std::vector<Line>& lines, const ParseOptions& options);

// An algebra from an embedded section or a referenced file.
AlgebraData algebra_from(const Fields& f, const std::string& name, const ParseOptions& options) {
  const auto sec = f.sections.find(name);
  const Line* ref = f.single(name, false);
  const bool embedded = sec != f.sections.end();
  if (embedded && (ref || sec->second.size() > 1))
    fail_at(*sec->second.back().header, 0, "'" + name + "' given more than once");
  if (!embedded && !ref) fail_at(*f.anchor, 0, "missing '" + name + "'");
  if (embedded) {
    const Section& s = sec->second.front();
    if (s.body.empty()) fail_at(*s.header, 0, "empty section");
    Document inner = parse_structure("algebra", collect(s.body, s.header, kAlgebraKeys, {}));
    if (options.validate) {
      const auto report = validate_document(inner);
      if (!report.ok()) throw ValidationError(report);
    }
    return std::get<AlgebraData>(inner.value);
  }
  if (ref->tokens.size() != 2) fail_at(*ref, 2, "expected '" + name + " <path>'");
  std::optional<Document> loaded;
  try {
    loaded = load_document(options.base_dir / ref->tokens[1].text, options.validate);
  } catch (const ParseError& e) {
    fail_at(*ref, 1, std::string("in referenced document: ") + e.what());
  }
  const Document& doc = *loaded;
  if (auto* a = std::get_if<AlgebraData>(&doc.value)) return *a;
  if (auto* b = std::get_if<BialgebraData>(&doc.value)) return b->alg;
  if (auto* h = std::get_if<HopfData>(&doc.value)) return h->bialg.alg;
  fail_at(*ref, 1, "referenced document has no algebra");
}

LinMap parse_psi(const Fields& f, FieldSpec field, std::size_t da, std::size_t xdim, std::size_t db) {
  LinMap psi(field, xdim * db, da * xdim);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Line* line : f.all("psi")) {
    const std::size_t a = parse_index(*line, 1);
    if (a >= da) fail_at(*line, 1, "index out of range");
    const std::size_t x = parse_index(*line, 2);
    if (x >= xdim) fail_at(*line, 2, "index out of range");
    if (!seen.insert({a, x}).second) fail_at(*line, 1, "repeated 'psi' entry");
    expect_colon(*line, 3);
    const auto v = parse_vector(field, *line, 4, xdim * db);
    for (std::size_t r = 0; r < xdim * db; ++r) psi.set(r, a * xdim + x, v[r]);
  }
  return psi;
}

Measuring parse_measuring_body(const Fields& f, const AlgebraData& a, const AlgebraData& b) {
  const std::size_t xdim = parse_count(f, "xdim");
  return make_measuring(a, b, xdim, parse_psi(f, a.field, a.dim, xdim, b.dim));
}

PresentedAlgebra parse_presentation(const Fields& f) {
  PresentedAlgebra p{parse_field(f), {}, {}};
  const Line* gens = f.single("generators", true);
  std::map<std::string, std::size_t> index;
  for (std::size_t t = 1; t < gens->tokens.size(); ++t) {
    const std::string& g = gens->tokens[t].text;
    if (g == ";" || g == ":") fail_at(*gens, t, "reserved token used as a generator");
    if (!index.emplace(g, p.generators.size()).second) fail_at(*gens, t, "repeated generator");
    p.generators.push_back(g);
  }
  for (const Line* line : f.all("relation")) {
    Polynomial rel;
    std::size_t t = 1;
    if (line->tokens.size() == 2 && line->tokens[1].text == "0") {
      p.relations.push_back(rel);
      continue;
    }
    while (true) {
      const Scalar c = parse_scalar(p.field, *line, t);
      if (c.is_zero()) fail_at(*line, t, "zero coefficient");
      const std::size_t at = t;
      Word w;
      for (++t; t < line->tokens.size() && line->tokens[t].text != ";"; ++t) {
        const auto it = index.find(line->tokens[t].text);
        if (it == index.end()) fail_at(*line, t, "undeclared generator '" + line->tokens[t].text + "'");
        w.push_back(it->second);
      }
      if (rel.terms.count(w)) fail_at(*line, at, "repeated monomial");
      rel.terms.emplace(std::move(w), c);
      if (t == line->tokens.size()) break;
      ++t;  // skip ';'
    }
    p.relations.push_back(std::move(rel));
  }
  return p;
}

GeneratedSubcoalgebra parse_subcoalgebra(const Fields& f, const ParseOptions& options) {
  const AlgebraData a = algebra_from(f, "source", options);
  const AlgebraData b = algebra_from(f, "target", options);
  if (a.field != b.field) fail_at(*f.anchor, 0, "source and target over different fields");
  const FieldSpec field = a.field;
  const std::size_t dd = parse_count(f, "dim");
  const auto labels = parse_labels(f, dd);
  CoalgebraData d = parse_coalgebra_part(f, field, dd, labels);

  GeneratedSubcoalgebra g{a, b, std::move(d), LinMap(field, b.dim, a.dim * dd), {}, {}, {}};
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Line* line : f.all("pairing")) {
    const std::size_t x = parse_index(*line, 1);
    if (x >= a.dim) fail_at(*line, 1, "index out of range");
    const std::size_t y = parse_index(*line, 2);
    if (y >= dd) fail_at(*line, 2, "index out of range");
    if (!seen.insert({x, y}).second) fail_at(*line, 1, "repeated 'pairing' entry");
    expect_colon(*line, 3);
    const auto v = parse_vector(field, *line, 4, b.dim);
    for (std::size_t r = 0; r < b.dim; ++r) g.pairing.set(r, x * dd + y, v[r]);
  }
  if (const auto it = f.sections.find("generator"); it != f.sections.end())
    for (const auto& s : it->second)
      g.generators.push_back(parse_measuring_body(collect(s.body, s.header, {"xdim", "psi"}, {}), a, b));
  for (const auto& m : g.generators) g.projections.emplace_back(field, dd, m.xdim * m.xdim);
  std::set<std::pair<std::size_t, std::size_t>> seen_proj;
  for (const Line* line : f.all("projection")) {
    const std::size_t i = parse_index(*line, 1);
    if (i >= g.generators.size()) fail_at(*line, 1, "no such generator");
    const std::size_t c = parse_index(*line, 2);
    if (c >= g.projections[i].dom()) fail_at(*line, 2, "index out of range");
    if (!seen_proj.insert({i, c}).second) fail_at(*line, 1, "repeated 'projection' entry");
    expect_colon(*line, 3);
    const auto v = parse_vector(field, *line, 4, dd);
    for (std::size_t r = 0; r < dd; ++r) g.projections[i].set(r, c, v[r]);
  }
  const Line* q = f.single("quotient", true);
  for (std::size_t t = 1; t < q->tokens.size(); ++t) g.quotient_basis.push_back(parse_index(*q, t));
  if (g.quotient_basis.size() != dd) fail_at(*q, q->tokens.size(), "expected one position per basis vector");
  return g;
}

Document parse_lines(const std::vector<Line>& lines, const ParseOptions& options) {
  if (lines.empty()) throw ParseError(1, 1, "empty document");
  const Line& head = lines.front();
  if (head.tokens[0].text != "kind" || head.tokens.size() != 2)
    fail_at(head, 0, "a document starts with 'kind <kind>'");
  const std::string kind = head.tokens[1].text;
  const std::vector<Line> rest(lines.begin() + 1, lines.end());
  std::optional<Document> parsed;
  try {
    if (kind == "algebra") {
      parsed = parse_structure(kind, collect(rest, &head, kAlgebraKeys, {}));
    } else if (kind == "coalgebra") {
      parsed = parse_structure(kind, collect(rest, &head, kCoalgebraKeys, {}));
    } else if (kind == "bialgebra") {
      parsed = parse_structure(kind, collect(rest, &head, kBialgebraKeys, {}));
    } else if (kind == "hopf") {
      parsed = parse_structure(kind, collect(rest, &head, kHopfKeys, {}));
    } else if (kind == "measuring") {
      const auto f = collect(rest, &head, {"source", "target", "xdim", "psi"}, {"source", "target"});
      const AlgebraData a = algebra_from(f, "source", options);
      const AlgebraData b = algebra_from(f, "target", options);
      if (a.field != b.field) fail_at(head, 0, "source and target over different fields");
      parsed = Document{parse_measuring_body(f, a, b), std::nullopt};
    } else if (kind == "presentation") {
      parsed = Document{parse_presentation(collect(rest, &head, {"field", "generators", "relation"}, {})), std::nullopt};
    } else if (kind == "subcoalgebra") {
      const auto f = collect(rest, &head,
                             {"source", "target", "dim", "basis", "counit", "comult", "pairing",
                              "projection", "quotient"},
                             {"source", "target", "generator"});
      parsed = Document{parse_subcoalgebra(f, options), std::nullopt};
    } else {
      fail_at(head, 1, "unknown kind '" + kind + "'");
    }
  } catch (const DimensionMismatch& e) {
    fail_at(head, 0, e.what());
  }
  if (options.validate) {
    const auto report = validate_document(*parsed);
    if (!report.ok()) throw ValidationError(report);
  }
  return std::move(*parsed);
}

// Serialization.

void write_vector(std::ostream& os, const std::vector<Scalar>& v) {
  for (const auto& s : v) os << ' ' << s.to_string();
}

void check_label(const std::string& l) {
  if (l.empty() || l.find_first_of(" \t\r\n") != std::string::npos || l == ":" || l == ";")
    throw Error("label '" + l + "' cannot be written to a document");
}

void write_header(std::ostream& os, const std::string& indent, FieldSpec field, std::size_t dim,
                  const std::vector<std::string>& basis, const std::optional<std::vector<long>>& degrees,
                  bool with_field = true) {
  if (with_field) os << indent << "field " << field.name() << '\n';
  os << indent << "dim " << dim << '\n';
  os << indent << "basis";
  for (const auto& l : basis) {
    check_label(l);
    os << ' ' << l;
  }
  os << '\n';
  if (degrees) {
    os << indent << "degrees";
    for (auto d : *degrees) os << ' ' << d;
    os << '\n';
  }
}

void write_algebra_part(std::ostream& os, const std::string& indent, const AlgebraData& a) {
  os << indent << "unit";
  write_vector(os, a.unit.column(0));
  os << '\n';
  const LinMap implied = implied_mult(a.unit);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      const auto col = a.mult.column(i * a.dim + j);
      if (col == implied.column(i * a.dim + j)) continue;
      os << indent << "mult " << i << ' ' << j << " :";
      write_vector(os, col);
      os << '\n';
    }
}

void write_columns(std::ostream& os, const std::string& indent, const std::string& key, const LinMap& m) {
  for (std::size_t c = 0; c < m.dom(); ++c) {
    if (m.is_zero_column(c)) continue;
    os << indent << key << ' ' << c << " :";
    write_vector(os, m.column(c));
    os << '\n';
  }
}

void write_coalgebra_part(std::ostream& os, const std::string& indent, const CoalgebraData& c) {
  os << indent << "counit";
  for (std::size_t i = 0; i < c.dim; ++i) os << ' ' << c.counit.at(0, i).to_string();
  os << '\n';
  write_columns(os, indent, "comult", c.comult);
}

void write_algebra_section(std::ostream& os, const std::string& name, const AlgebraData& a) {
  os << "begin " << name << '\n';
  write_header(os, "  ", a.field, a.dim, a.basis, std::nullopt);
  write_algebra_part(os, "  ", a);
  os << "end " << name << '\n';
}

void write_psi(std::ostream& os, const std::string& indent, const Measuring& m) {
  os << indent << "xdim " << m.xdim << '\n';
  for (std::size_t a = 0; a < m.a.dim; ++a)
    for (std::size_t x = 0; x < m.xdim; ++x) {
      const std::size_t c = a * m.xdim + x;
      if (m.psi.is_zero_column(c)) continue;
      os << indent << "psi " << a << ' ' << x << " :";
      write_vector(os, m.psi.column(c));
      os << '\n';
    }
}

std::string term_text(const PresentedAlgebra& p, const Word& w, const Scalar& c) {
  std::string s = c.to_string();
  for (auto g : w) s += " " + p.generators.at(g);
  return s;
}

}  // namespace

Document parse_document(std::string_view text, const ParseOptions& options) {
  return parse_lines(tokenize(text), options);
}

Document load_document(const std::filesystem::path& path, bool validate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), ParseOptions{validate, path.parent_path()});
}

std::string kind_name(const Document& doc) {
  static const char* names[] = {"algebra", "coalgebra",    "bialgebra",   "hopf",
                                "measuring", "presentation", "subcoalgebra"};
  return names[doc.value.index()];
}

ValidationReport validate_document(const Document& doc) {
  return std::visit(
      [&](const auto& v) -> ValidationReport {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AlgebraData>) {
          return doc.degrees ? validate_graded(make_graded(v, *doc.degrees)) : validate_algebra(v);
        } else if constexpr (std::is_same_v<T, CoalgebraData>) {
          return doc.degrees ? validate_graded(make_graded(v, *doc.degrees)) : validate_coalgebra(v);
        } else if constexpr (std::is_same_v<T, BialgebraData>) {
          return doc.degrees ? validate_graded(make_graded(v, *doc.degrees)) : validate_bialgebra(v);
        } else if constexpr (std::is_same_v<T, HopfData>) {
          return doc.degrees ? validate_graded(make_graded(v, *doc.degrees)) : validate_hopf(v);
        } else if constexpr (std::is_same_v<T, Measuring>) {
          return validate_measuring(v);
        } else if constexpr (std::is_same_v<T, PresentedAlgebra>) {
          return {};
        } else {
          ValidationReport r = verify_generated(v);
          for (const auto& m : v.generators) r.merge(validate_measuring(m));
          return r;
        }
      },
      doc.value);
}

std::string serialize(const Document& doc) {
  std::ostringstream os;
  os << "kind " << kind_name(doc) << '\n';
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AlgebraData>) {
          write_header(os, "", v.field, v.dim, v.basis, doc.degrees);
          write_algebra_part(os, "", v);
        } else if constexpr (std::is_same_v<T, CoalgebraData>) {
          write_header(os, "", v.field, v.dim, v.basis, doc.degrees);
          write_coalgebra_part(os, "", v);
        } else if constexpr (std::is_same_v<T, BialgebraData>) {
          write_header(os, "", v.field(), v.dim(), v.alg.basis, doc.degrees);
          write_algebra_part(os, "", v.alg);
          write_coalgebra_part(os, "", v.coalg);
        } else if constexpr (std::is_same_v<T, HopfData>) {
          write_header(os, "", v.bialg.field(), v.bialg.dim(), v.bialg.alg.basis, doc.degrees);
          write_algebra_part(os, "", v.bialg.alg);
          write_coalgebra_part(os, "", v.bialg.coalg);
          write_columns(os, "", "antipode", v.antipode);
        } else if constexpr (std::is_same_v<T, Measuring>) {
          write_algebra_section(os, "source", v.a);
          write_algebra_section(os, "target", v.b);
          write_psi(os, "", v);
        } else if constexpr (std::is_same_v<T, PresentedAlgebra>) {
          os << "field " << v.field.name() << '\n' << "generators";
          for (const auto& g : v.generators) {
            check_label(g);
            os << ' ' << g;
          }
          os << '\n';
          for (const auto& rel : v.relations) {
            os << "relation";
            if (rel.is_zero()) os << " 0";
            bool first = true;
            for (const auto& [w, c] : rel.terms) {
              os << (first ? " " : " ; ") << term_text(v, w, c);
              first = false;
            }
            os << '\n';
          }
        } else {
          write_algebra_section(os, "source", v.a);
          write_algebra_section(os, "target", v.b);
          write_header(os, "", v.d.field, v.d.dim, v.d.basis, std::nullopt, false);
          write_coalgebra_part(os, "", v.d);
          const std::size_t dd = v.d.dim;
          for (std::size_t x = 0; x < v.a.dim; ++x)
            for (std::size_t y = 0; y < dd; ++y) {
              const auto col = v.pairing.column(x * dd + y);
              if (std::all_of(col.begin(), col.end(), [](const Scalar& s) { return s.is_zero(); }))
                continue;
              os << "pairing " << x << ' ' << y << " :";
              write_vector(os, col);
              os << '\n';
            }
          for (const auto& m : v.generators) {
            os << "begin generator\n";
            write_psi(os, "  ", m);
            os << "end generator\n";
          }
          for (std::size_t i = 0; i < v.projections.size(); ++i)
            for (std::size_t c = 0; c < v.projections[i].dom(); ++c) {
              if (v.projections[i].is_zero_column(c)) continue;
              os << "projection " << i << ' ' << c << " :";
              write_vector(os, v.projections[i].column(c));
              os << '\n';
            }
          os << "quotient";
          for (auto w : v.quotient_basis) os << ' ' << w;
          os << '\n';
        }
      },
      doc.value);
  return os.str();
}

}  // namespace sweedler
