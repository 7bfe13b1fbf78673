#include "linfty/document.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "linfty/errors.hpp"

namespace linfty {

namespace {

const char* const kReserved[] = {"name",   "provenance", "ring", "type", "basis",
                                 "brackets", "products", "entries", "end"};

bool is_label(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '*' && c != '\'')
      return false;
  }
  for (const char* r : kReserved)
    if (s == r) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Line {
  int number = 0;
  std::string text;  // comment-stripped, trimmed
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    ++number;
    size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) lines.push_back({number, std::string(raw)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) words.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

[[noreturn]] void fail(const Line& line, const std::string& msg, int col = 1) {
  throw SyntaxError(msg, line.number, col);
}

std::string require_label(const Line& line, std::string_view word) {
  if (!is_label(word)) fail(line, "expected a label, got '" + std::string(word) + "'");
  return std::string(word);
}

// "{ lab: scalar, lab: scalar }" or "{}"
VectorLiteral parse_vector_literal(const Line& line, std::string_view body, Ring ring) {
  body = trim(body);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    fail(line, "expected a vector literal '{ ... }'");
  body = trim(body.substr(1, body.size() - 2));
  VectorLiteral out;
  if (body.empty()) return out;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string_view item =
        comma == std::string_view::npos ? body.substr(pos) : body.substr(pos, comma - pos);
    size_t colon = item.find(':');
    if (colon == std::string_view::npos) fail(line, "vector entry needs 'label: scalar'");
    std::string label = require_label(line, trim(item.substr(0, colon)));
    std::string_view literal = trim(item.substr(colon + 1));
    Scalar s;
    try {
      s = Scalar::parse(literal, ring);
    } catch (const Error& e) {
      fail(line, e.what());
    }
    for (const auto& [seen, unused] : out)
      if (seen == label) fail(line, "label '" + label + "' repeated in vector literal");
    out.emplace_back(std::move(label), std::move(s));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

// "(a b c)" from the front of `s`; returns the rest.
std::vector<std::string> parse_tuple(const Line& line, std::string_view& s) {
  s = trim(s);
  if (s.empty() || s.front() != '(') fail(line, "expected '(' starting a tuple");
  size_t close = s.find(')');
  if (close == std::string_view::npos) fail(line, "unterminated tuple");
  std::vector<std::string> tuple;
  for (const auto& w : split_words(s.substr(1, close - 1))) tuple.push_back(require_label(line, w));
  if (tuple.empty()) fail(line, "empty tuple");
  s = trim(s.substr(close + 1));
  return tuple;
}

void expect_arrow(const Line& line, std::string_view& s) {
  s = trim(s);
  if (s.substr(0, 2) != "->") fail(line, "expected '->'");
  s = trim(s.substr(2));
}

std::string vector_literal_str(const VectorLiteral& v) {
  if (v.empty()) return "{}";
  std::string s = "{ ";
  for (size_t p = 0; p < v.size(); ++p) {
    if (p) s += ", ";
    s += v[p].first + ": " + v[p].second.str();
  }
  return s + " }";
}

}  // namespace

Document parse_document(std::string_view text) {
  std::vector<Line> lines = split_lines(text);
  Document doc;
  bool have_ring = false, have_type = false;
  size_t p = 0;
  auto section_lines = [&](const Line& header) {
    std::vector<Line> body;
    while (p < lines.size() && lines[p].text != "end") body.push_back(lines[p++]);
    if (p >= lines.size()) fail(header, "section without matching 'end'");
    ++p;  // consume 'end'
    return body;
  };

  bool saw_basis = false, saw_payload = false;
  while (p < lines.size()) {
    Line line = lines[p++];
    auto words = split_words(line.text);
    const std::string& key = words[0];
    if (key == "name" || key == "provenance") {
      if (have_ring || have_type) fail(line, "metadata must precede ring and type");
      std::string value(trim(std::string_view(line.text).substr(key.size())));
      if (value.empty()) fail(line, "empty " + key);
      (key == "name" ? doc.name : doc.provenance) = value;
    } else if (key == "ring") {
      if (words.size() != 2) fail(line, "usage: ring Q|Qi|QiLaurent");
      auto r = ring_from_name(words[1]);
      if (!r) fail(line, "unknown ring '" + words[1] + "'");
      doc.ring = *r;
      have_ring = true;
    } else if (key == "type") {
      if (!have_ring) fail(line, "'ring' must come before 'type'");
      if (words.size() != 2) fail(line, "usage: type <kind>");
      const std::string& t = words[1];
      if (t == "linfty" || t == "ainfty") {
        doc.kind = DocKind::algebra;
        doc.algebra_kind = t == "linfty" ? AlgebraKind::linfty : AlgebraKind::ainfty;
      } else if (t == "star")
        doc.kind = DocKind::star;
      else if (t == "dmap")
        doc.kind = DocKind::dmap;
      else if (t == "fmap")
        doc.kind = DocKind::fmap;
      else if (t == "actionmap")
        doc.kind = DocKind::actionmap;
      else if (t == "weights")
        doc.kind = DocKind::weights;
      else
        fail(line, "unknown document type '" + t + "'");
      have_type = true;
    } else if (key == "basis") {
      if (!have_type || (doc.kind != DocKind::algebra && doc.kind != DocKind::star))
        fail(line, "'basis' section is only valid in algebra and star documents");
      if (saw_basis) fail(line, "duplicate basis section");
      saw_basis = true;
      for (const Line& b : section_lines(line)) {
        size_t colon = b.text.find(':');
        if (colon == std::string::npos) fail(b, "basis entry needs 'label : degree'");
        std::string label = require_label(b, trim(std::string_view(b.text).substr(0, colon)));
        std::string deg(trim(std::string_view(b.text).substr(colon + 1)));
        try {
          size_t used = 0;
          int d = std::stoi(deg, &used);
          if (used != deg.size()) throw std::invalid_argument(deg);
          doc.basis.emplace_back(std::move(label), d);
        } catch (const std::exception&) {
          fail(b, "bad degree '" + deg + "'");
        }
      }
    } else if (key == "brackets" || key == "products" || key == "entries") {
      if (!have_type) fail(line, "'type' must come before content sections");
      if (saw_payload) fail(line, "duplicate content section");
      saw_payload = true;
      std::vector<Line> body = section_lines(line);
      if (key == "brackets") {
        if (doc.kind != DocKind::algebra) fail(line, "'brackets' needs an algebra document");
        for (const Line& e : body) {
          std::string_view rest(e.text);
          auto head = split_words(rest.substr(0, rest.find('(')));
          if (head.size() != 1) fail(e, "bracket entry needs 'l<k> (tuple) -> value'");
          const std::string& op = head[0];
          char expected = doc.algebra_kind == AlgebraKind::linfty ? 'l' : 'm';
          if (op.size() < 2 || op[0] != expected)
            fail(e, std::string("bracket key must start with '") + expected + "' for this type");
          int arity = 0;
          try {
            size_t used = 0;
            arity = std::stoi(op.substr(1), &used);
            if (used + 1 != op.size() || arity < 1) throw std::invalid_argument(op);
          } catch (const std::exception&) {
            fail(e, "bad bracket key '" + op + "'");
          }
          rest.remove_prefix(op.size());
          auto tuple = parse_tuple(e, rest);
          if (static_cast<int>(tuple.size()) != arity)
            fail(e, "tuple length does not match the bracket key");
          expect_arrow(e, rest);
          doc.brackets.push_back({arity, std::move(tuple),
                                  parse_vector_literal(e, rest, doc.ring)});
        }
      } else if (key == "products") {
        if (doc.kind != DocKind::star) fail(line, "'products' needs a star document");
        for (const Line& e : body) {
          std::string_view rest(e.text);
          auto tuple = parse_tuple(e, rest);
          if (tuple.size() != 2) fail(e, "product entries are binary");
          expect_arrow(e, rest);
          doc.products.push_back({std::move(tuple), parse_vector_literal(e, rest, doc.ring)});
        }
      } else {  // entries
        switch (doc.kind) {
          case DocKind::dmap:
            for (const Line& e : body) {
              std::string_view rest(e.text);
              size_t arrow = rest.find("->");
              if (arrow == std::string_view::npos) fail(e, "map entry needs 'label -> value'");
              std::string label = require_label(e, trim(rest.substr(0, arrow)));
              rest = trim(rest.substr(arrow + 2));
              doc.map_entries.push_back({std::move(label),
                                         parse_vector_literal(e, rest, doc.ring)});
            }
            break;
          case DocKind::fmap:
          case DocKind::actionmap: {
            size_t want = doc.kind == DocKind::fmap ? 3 : 2;
            for (const Line& e : body) {
              std::string_view rest(e.text);
              auto tuple = parse_tuple(e, rest);
              if (tuple.size() != want)
                fail(e, "entry tuple must have " + std::to_string(want) + " labels");
              expect_arrow(e, rest);
              doc.table_entries.push_back({std::move(tuple),
                                           parse_vector_literal(e, rest, doc.ring)});
            }
            break;
          }
          case DocKind::weights:
            for (const Line& e : body) {
              std::string_view rest(e.text);
              size_t arrow = rest.find("->");
              if (arrow == std::string_view::npos)
                fail(e, "weight entry needs 'old -> new : (prefactor)*mu^k'");
              std::string old_label = require_label(e, trim(rest.substr(0, arrow)));
              rest = trim(rest.substr(arrow + 2));
              size_t colon = rest.find(':');
              if (colon == std::string_view::npos) fail(e, "weight entry needs ':'");
              std::string new_label = require_label(e, trim(rest.substr(0, colon)));
              std::string_view literal = trim(rest.substr(colon + 1));
              Scalar s;
              try {
                s = Scalar::parse(literal, Ring::QiLaurent);
              } catch (const Error& err) {
                fail(e, err.what());
              }
              Laurent l = s.as_laurent();
              if (l.terms().size() != 1) fail(e, "weight must be a single (prefactor)*mu^k term");
              doc.weight_entries.push_back({std::move(old_label), std::move(new_label),
                                            l.terms().begin()->second,
                                            l.terms().begin()->first});
            }
            break;
          default:
            fail(line, "'entries' section is not valid in this document type");
        }
      }
    } else {
      fail(line, "unexpected line '" + line.text + "'");
    }
  }
  if (!have_ring) throw ValidationError("document is missing the 'ring' line");
  if (!have_type) throw ValidationError("document is missing the 'type' line");
  if ((doc.kind == DocKind::algebra || doc.kind == DocKind::star) && !saw_basis)
    throw ValidationError("algebra and star documents need a basis section");
  return doc;
}

std::string serialize(const Document& doc) {
  std::ostringstream out;
  if (!doc.name.empty()) out << "name " << doc.name << "\n";
  if (!doc.provenance.empty()) out << "provenance " << doc.provenance << "\n";
  out << "ring " << ring_name(doc.ring) << "\n";
  switch (doc.kind) {
    case DocKind::algebra:
      out << "type " << algebra_kind_name(doc.algebra_kind) << "\n";
      break;
    case DocKind::star: out << "type star\n"; break;
    case DocKind::dmap: out << "type dmap\n"; break;
    case DocKind::fmap: out << "type fmap\n"; break;
    case DocKind::actionmap: out << "type actionmap\n"; break;
    case DocKind::weights: out << "type weights\n"; break;
  }
  if (doc.kind == DocKind::algebra || doc.kind == DocKind::star) {
    out << "basis\n";
    for (const auto& [label, degree] : doc.basis) out << "  " << label << " : " << degree << "\n";
    out << "end\n";
  }
  switch (doc.kind) {
    case DocKind::algebra: {
      out << "brackets\n";
      char key = doc.algebra_kind == AlgebraKind::linfty ? 'l' : 'm';
      for (const auto& e : doc.brackets) {
        out << "  " << key << e.arity << " (";
        for (size_t p = 0; p < e.tuple.size(); ++p) out << (p ? " " : "") << e.tuple[p];
        out << ") -> " << vector_literal_str(e.value) << "\n";
      }
      out << "end\n";
      break;
    }
    case DocKind::star:
      out << "products\n";
      for (const auto& e : doc.products) {
        out << "  (" << e.tuple[0] << " " << e.tuple[1] << ") -> " << vector_literal_str(e.value)
            << "\n";
      }
      out << "end\n";
      break;
    case DocKind::dmap:
      out << "entries\n";
      for (const auto& e : doc.map_entries)
        out << "  " << e.label << " -> " << vector_literal_str(e.value) << "\n";
      out << "end\n";
      break;
    case DocKind::fmap:
    case DocKind::actionmap:
      out << "entries\n";
      for (const auto& e : doc.table_entries) {
        out << "  (";
        for (size_t p = 0; p < e.tuple.size(); ++p) out << (p ? " " : "") << e.tuple[p];
        out << ") -> " << vector_literal_str(e.value) << "\n";
      }
      out << "end\n";
      break;
    case DocKind::weights:
      out << "entries\n";
      for (const auto& e : doc.weight_entries) {
        out << "  " << e.old_label << " -> " << e.new_label << " : ("
            << Scalar(e.prefactor).str() << ")*mu^" << e.mu_exponent << "\n";
      }
      out << "end\n";
      break;
  }
  return out.str();
}

namespace {

GradedBasis basis_from_doc(const Document& doc) {
  GradedBasis basis;
  for (const auto& [label, degree] : doc.basis) basis.add(label, degree);
  return basis;
}

Vec vec_from_literal(const VectorLiteral& lit, const GradedBasis& basis) {
  Vec v;
  for (const auto& [label, scalar] : lit) v.add_term(basis.require(label), scalar);
  return v;
}

VectorLiteral literal_from_vec(const Vec& v, const GradedBasis& basis) {
  VectorLiteral lit;
  for (const auto& [idx, s] : v.coeffs()) lit.emplace_back(basis.label(idx), s);
  return lit;
}

}  // namespace

HomotopyAlgebra algebra_from_doc(const Document& doc) {
  if (doc.kind != DocKind::algebra)
    throw ValidationError("expected an algebra document (type linfty or ainfty)");
  HomotopyAlgebra a{doc.ring, basis_from_doc(doc),
                    BracketSet{doc.algebra_kind, {}}};
  bool graded = doc.algebra_kind == AlgebraKind::linfty;
  for (const auto& e : doc.brackets) {
    auto [it, unused] = a.brackets.ops.try_emplace(e.arity, a.basis, e.arity, graded);
    std::vector<int> tuple;
    for (const auto& label : e.tuple) tuple.push_back(a.basis.require(label));
    if (graded) {
      auto [canon, sign] = canonical_form(a.basis, tuple);
      if (canon != tuple)
        throw ValidationError("bracket tuple is not in canonical (basis) order");
      (void)sign;  // forced zeros are rejected by MultiBracket::set
    }
    it->second.set(std::move(tuple), vec_from_literal(e.value, a.basis));
  }
  for (auto it = a.brackets.ops.begin(); it != a.brackets.ops.end();)
    it = it->second.empty() ? a.brackets.ops.erase(it) : std::next(it);
  a.validate();
  return a;
}

Document doc_from_algebra(const HomotopyAlgebra& algebra) {
  Document doc;
  doc.kind = DocKind::algebra;
  doc.ring = algebra.ring;
  doc.algebra_kind = algebra.brackets.kind;
  doc.basis = algebra.basis.items();
  for (const auto& [arity, op] : algebra.brackets.ops) {
    for (const auto& [tuple, value] : op.table()) {
      BracketEntry e;
      e.arity = arity;
      for (int idx : tuple) e.tuple.push_back(algebra.basis.label(idx));
      e.value = literal_from_vec(value, algebra.basis);
      doc.brackets.push_back(std::move(e));
    }
  }
  return doc;
}

StarProduct star_from_doc(const Document& doc) {
  if (doc.kind != DocKind::star) throw ValidationError("expected a star-product document");
  StarProduct p;
  p.ring = doc.ring;
  p.basis = basis_from_doc(doc);
  for (int i = 0; i < p.basis.size(); ++i) {
    if (p.basis.degree(i) != 0)
      throw ValidationError("star-product bases live in degree 0");
  }
  for (const auto& e : doc.products) {
    int a = p.basis.require(e.tuple[0]);
    int b = p.basis.require(e.tuple[1]);
    p.set(a, b, vec_from_literal(e.value, p.basis));
  }
  return p;
}

Document doc_from_star(const StarProduct& p) {
  Document doc;
  doc.kind = DocKind::star;
  doc.ring = p.ring;
  doc.basis = p.basis.items();
  for (const auto& [key, value] : p.table) {
    PairEntry e;
    e.tuple = {p.basis.label(key.first), p.basis.label(key.second)};
    e.value = literal_from_vec(value, p.basis);
    doc.products.push_back(std::move(e));
  }
  return doc;
}

Document doc_from_weights(const ScalingWeights& w) {
  Document doc;
  doc.kind = DocKind::weights;
  doc.ring = Ring::Qi;
  for (const auto& [old_label, entry] : w.by_old_label)
    doc.weight_entries.push_back({old_label, entry.new_label, entry.prefactor,
                                  entry.mu_exponent});
  return doc;
}

ScalingWeights weights_from_doc(const Document& doc) {
  if (doc.kind != DocKind::weights) throw ValidationError("expected a weights document");
  ScalingWeights w;
  for (const auto& e : doc.weight_entries) {
    if (e.prefactor.is_zero()) throw ValidationError("weight prefactors must be nonzero");
    auto [it, inserted] =
        w.by_old_label.emplace(e.old_label,
                               ScalingWeights::Entry{e.new_label, e.prefactor, e.mu_exponent});
    if (!inserted) throw ValidationError("duplicate weight for '" + e.old_label + "'");
  }
  return w;
}

LinearMap linear_map_from_doc(const Document& doc, const GradedBasis& target) {
  if (doc.kind != DocKind::dmap) throw ValidationError("expected a dmap document");
  GradedBasis source;
  std::vector<Vec> columns;
  for (const auto& e : doc.map_entries) {
    source.add(e.label, 1);
    columns.push_back(vec_from_literal(e.value, target));
  }
  LinearMap m{std::move(source), target, -1, std::move(columns)};
  m.validate();
  return m;
}

FOverrides f_overrides_from_doc(const Document& doc, const GradedBasis& V, const GradedBasis& U) {
  if (doc.kind != DocKind::fmap) throw ValidationError("expected an fmap document");
  FOverrides out;
  for (const auto& e : doc.table_entries) {
    std::vector<int> tuple;
    for (const auto& label : e.tuple) tuple.push_back(V.require(label));
    auto [canon, sign] = canonical_form(V, tuple);
    if (sign == 0) throw ValidationError("override tuple has a repeated element");
    Vec value = vec_from_literal(e.value, U);
    if (sign == -1) value = -value;
    auto [it, inserted] = out.emplace(std::move(canon), std::move(value));
    if (!inserted) throw ValidationError("duplicate section override");
  }
  return out;
}

ActionOverrides action_overrides_from_doc(const Document& doc, const GradedBasis& V,
                                          const GradedBasis& U) {
  if (doc.kind != DocKind::actionmap) throw ValidationError("expected an actionmap document");
  ActionOverrides out;
  for (const auto& e : doc.table_entries) {
    int v = V.require(e.tuple[0]);
    int u = U.require(e.tuple[1]);
    auto [it, inserted] = out.emplace(std::make_pair(v, u), vec_from_literal(e.value, U));
    if (!inserted) throw ValidationError("duplicate action override");
  }
  return out;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "octonions",   "octonions-star", "octonions-theorem1", "rflux",        "rflux-linfty",
      "rflux-no-l3", "rflux-theorem2", "monopole",           "rflux-weights"};
  return names;
}

std::optional<Document> builtin_document(const std::string& name) {
  if (name == "octonions") return doc_from_algebra(imaginary_octonions());
  if (name == "octonions-star") return doc_from_star(octonion_star());
  if (name == "octonions-theorem1") return doc_from_algebra(octonions_two_term());
  if (name == "rflux") return doc_from_algebra(rflux_algebra());
  if (name == "rflux-linfty") return doc_from_algebra(rflux_linfty());
  if (name == "rflux-no-l3") return doc_from_algebra(rflux_without_l3());
  if (name == "rflux-theorem2") return doc_from_algebra(rflux_three_term());
  if (name == "monopole") return doc_from_algebra(monopole_algebra());
  if (name == "rflux-weights") return doc_from_weights(rflux_weights());
  return std::nullopt;
}

}  // namespace linfty
