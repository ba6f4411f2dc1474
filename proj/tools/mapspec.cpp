// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mapspec.hpp"

#include <cctype>
#include <optional>

namespace plconj::cli {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

enum class Tok { rational, ident, colon, lparen, rparen, comma, end, bad };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t{Tok::end, "", line_, column_};
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      t.kind = k;
      t.text = std::string(1, c);
      advance();
      return t;
    };
    switch (c) {
      case ':': return single(Tok::colon);
      case '(': return single(Tok::lparen);
      case ')': return single(Tok::rparen);
      case ',': return single(Tok::comma);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      t.kind = Tok::rational;
      t.text += c;
      advance();
      take_digits(t.text);
      if (pos_ < text_.size() && text_[pos_] == '/') {
        t.text += '/';
        advance();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          t.kind = Tok::bad;
          return t;
        }
        take_digits(t.text);
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      t.kind = Tok::ident;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '-' || text_[pos_] == '_')) {
        t.text += text_[pos_];
        advance();
      }
      return t;
    }
    t.kind = Tok::bad;
    t.text = std::string(1, c);
    advance();
    return t;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  void take_digits(std::string& out) {
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_];
      advance();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

const std::vector<std::string> kMapStart{"rational", "conjugate", "tent", "scaled-tent",
                                         "identity", "constant"};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { cur_ = lexer_.next(); }

  MapSpec parse_all() {
    MapSpec spec = parse_map();
    if (cur_.kind != Tok::end) fail({"end of input"});
    return spec;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(cur_.line, cur_.column, std::move(expected),
                     cur_.kind == Tok::end ? "end of input" : "'" + cur_.text + "'");
  }

  Token take() {
    Token t = cur_;
    cur_ = lexer_.next();
    return t;
  }

  void expect(Tok kind, const char* name) {
    if (cur_.kind != kind) fail({name});
    take();
  }

  Rational rational() {
    if (cur_.kind != Tok::rational) fail({"rational"});
    const Token t = take();
    try {
      return Rational::parse(t.text);
    } catch (const DomainError& e) {
      throw SemanticError(t.line, t.column, e.what());
    }
  }

  Rational call_argument() {
    expect(Tok::lparen, "'('");
    Rational r = rational();
    expect(Tok::rparen, "')'");
    return r;
  }

  MapSpec parse_map() {
    const Token start = cur_;
    if (cur_.kind == Tok::rational) return check(parse_points(), start);
    if (cur_.kind != Tok::ident) fail(kMapStart);
    const std::string name = cur_.text;
    if (name == "conjugate") {
      take();
      expect(Tok::lparen, "'('");
      MapSpec inner = parse_map();
      expect(Tok::comma, "','");
      const Token homeo_start = cur_;
      MapSpec homeo = parse_map();
      try {
        PLHomeo::from_map(elaborate(homeo));
      } catch (const Error& e) {
        throw SemanticError(homeo_start.line, homeo_start.column,
                            std::string("conjugating map is not a homeomorphism: ") + e.what());
      }
      expect(Tok::rparen, "')'");
      return MapSpec{ConjugateSpec{std::make_shared<const MapSpec>(std::move(inner)),
                                   std::make_shared<const MapSpec>(std::move(homeo))}};
    }
    if (name == "identity") {
      take();
      return MapSpec{FamilySpec{Family::identity, Rational(0)}};
    }
    std::optional<Family> family;
    if (name == "tent") family = Family::tent;
    if (name == "scaled-tent") family = Family::scaled_tent;
    if (name == "constant") family = Family::constant;
    if (!family) fail(kMapStart);
    take();
    const Token arg = cur_;
    const Rational p = call_argument();
    const Rational zero(0), one(1), two(2);
    bool ok = true;
    switch (*family) {
      case Family::tent: ok = zero < p && p <= two; break;
      case Family::scaled_tent: ok = zero < p && p <= one; break;
      case Family::constant: ok = zero <= p && p <= one; break;
      case Family::identity: break;
    }
    if (!ok) {
      const char* range = *family == Family::tent
                              ? "(0,2]"
                              : (*family == Family::scaled_tent ? "(0,1]" : "[0,1]");
      throw SemanticError(arg.line, arg.column,
                          name + " parameter " + p.to_string() + " outside " + range);
    }
    return MapSpec{FamilySpec{*family, p}};
  }

  MapSpec parse_points() {
    PointsSpec pts;
    while (cur_.kind == Tok::rational) {
      const Token at = cur_;
      Rational x = rational();
      expect(Tok::colon, "':'");
      Rational y = rational();
      if (!pts.points.empty() && !(pts.points.back().x < x)) {
        throw SemanticError(at.line, at.column,
                            "breakpoints not increasing: " + x.to_string() + " after " +
                                pts.points.back().x.to_string());
      }
      pts.points.push_back({std::move(x), std::move(y)});
    }
    return MapSpec{std::move(pts)};
  }

  static MapSpec check(MapSpec spec, const Token& start) {
    try {
      elaborate(spec);
    } catch (const Error& e) {
      throw SemanticError(start.line, start.column, e.what());
    }
    return spec;
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       const std::string& found)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
            ": expected " + join(expected) + "; found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

SemanticError::SemanticError(std::size_t line, std::size_t column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

bool operator==(const ConjugateSpec& a, const ConjugateSpec& b) {
  return *a.map == *b.map && *a.homeo == *b.homeo;
}

MapSpec parse_mapspec(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const MapSpec& spec) {
  if (const auto* p = std::get_if<PointsSpec>(&spec.node)) {
    std::string out;
    for (const auto& b : p->points) {
      if (!out.empty()) out += ' ';
      out += b.x.to_string() + ":" + b.y.to_string();
    }
    return out;
  }
  if (const auto* f = std::get_if<FamilySpec>(&spec.node)) {
    switch (f->family) {
      case Family::tent: return "tent(" + f->parameter.to_string() + ")";
      case Family::scaled_tent: return "scaled-tent(" + f->parameter.to_string() + ")";
      case Family::identity: return "identity";
      case Family::constant: return "constant(" + f->parameter.to_string() + ")";
    }
  }
  const auto& c = std::get<ConjugateSpec>(spec.node);
  return "conjugate(" + print(*c.map) + ", " + print(*c.homeo) + ")";
}

PLMap elaborate(const MapSpec& spec, std::size_t piece_budget) {
  if (const auto* p = std::get_if<PointsSpec>(&spec.node)) return PLMap::from_points(p->points);
  if (const auto* f = std::get_if<FamilySpec>(&spec.node)) {
    switch (f->family) {
      case Family::tent: return PLMap::from_points({{0, 0}, {Rational(1, 2), f->parameter / 2}, {1, 0}});
      case Family::scaled_tent: return PLMap::from_points({{0, 0}, {Rational(1, 2), f->parameter}, {1, 0}});
      case Family::identity: return PLMap::identity();
      case Family::constant: return PLMap::constant(f->parameter);
    }
  }
  const auto& c = std::get<ConjugateSpec>(spec.node);
  const PLHomeo h = PLHomeo::from_map(elaborate(*c.homeo, piece_budget));
  return conjugate_map(h, elaborate(*c.map, piece_budget), piece_budget);
}

}  // namespace plconj::cli
