// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "plconj/errors.hpp"
#include "plconj/pl_map.hpp"

namespace plconj::cli {

/// Syntax error with a 1-based position and the tokens that would have been
/// accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             const std::string& found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// Well-formed text that describes an invalid map (order, range, ...).
class SemanticError : public Error {
 public:
  SemanticError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct MapSpec;

struct PointsSpec {
  std::vector<Breakpoint> points;
  friend bool operator==(const PointsSpec&, const PointsSpec&) = default;
};

enum class Family { tent, scaled_tent, identity, constant };

struct FamilySpec {
  Family family;
  Rational parameter;  // unused for identity
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

struct ConjugateSpec {
  std::shared_ptr<const MapSpec> map;
  std::shared_ptr<const MapSpec> homeo;
  friend bool operator==(const ConjugateSpec& a, const ConjugateSpec& b);
};

/// Parsed map description.
///
///   map    := points | family | "conjugate" "(" map "," map ")"
///   points := (rat ":" rat)+
///   family := "tent" "(" rat ")" | "scaled-tent" "(" rat ")"
///           | "identity" | "constant" "(" rat ")"
///   rat    := integer | integer "/" integer
///
/// tent(s) has peak s/2 at 1/2 with s in (0,2]; scaled-tent(c) is c times the
/// full tent, c in (0,1]; constant(c) needs c in [0,1]. The second argument of
/// conjugate must be a PL homeomorphism h; the result is h ∘ f ∘ h^-1.
struct MapSpec {
  std::variant<PointsSpec, FamilySpec, ConjugateSpec> node;
  friend bool operator==(const MapSpec&, const MapSpec&) = default;
};

/// Throws ParseError or SemanticError.
MapSpec parse_mapspec(std::string_view text);

/// Canonical text; parse_mapspec(print(s)) == s.
std::string print(const MapSpec& spec);

PLMap elaborate(const MapSpec& spec, std::size_t piece_budget = kDefaultPieceBudget);

inline PLMap parse_map(std::string_view text, std::size_t piece_budget = kDefaultPieceBudget) {
  return elaborate(parse_mapspec(text), piece_budget);
}

}  // namespace plconj::cli
