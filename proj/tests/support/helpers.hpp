// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "plconj/closed_set.hpp"
#include "plconj/pl_map.hpp"
#include "support/oracles.hpp"

namespace testing {

inline plconj::Rational q(std::string_view text) { return plconj::Rational::parse(text); }
inline plconj::PLMap pl(std::string_view text) { return plconj::PLMap::parse(text); }

inline plconj::RationalSet set_of(std::string_view text) {
  std::vector<plconj::Rational> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t next = text.find(' ', pos);
    const auto token = text.substr(pos, next == std::string_view::npos ? next : next - pos);
    if (!token.empty()) out.push_back(q(token));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return plconj::RationalSet(std::move(out));
}

inline plconj::RationalSet set_of(const oracle::Values& v) { return plconj::RationalSet(v); }

inline plconj::PLMap tent() { return pl("0:0 1/2:1 1:0"); }
inline plconj::PLMap quarter_tent() { return pl("0:0 1/2:1/4 1:0"); }
inline plconj::PLMap below_diagonal() { return pl("0:0 1/2:1/4 1:1"); }
inline plconj::PLMap above_diagonal() { return pl("0:0 1/2:3/4 1:1"); }

}  // namespace testing
