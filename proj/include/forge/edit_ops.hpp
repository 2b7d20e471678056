#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forge/token.hpp"

// The token-list operations used by the splitting rules. Indices are 1-based.
// Every result is marked stale: surviving tokens keep their annotations but
// heads no longer index into the list.
namespace forge::ops {

inline constexpr std::array<std::string_view, 6> kTrimPunctuation = {".", ",", ";", ":", "!", "?"};

inline bool is_trim_punctuation(std::string_view text) {
  for (auto p : kTrimPunctuation) {
    if (p == text) return true;
  }
  return false;
}

// Removes tokens i..i+n-1.
inline TokenList erase(const TokenList& x, std::size_t i, std::size_t n) {
  if (i < 1 || i - 1 + n > x.size()) {
    throw BoundsError("erase(" + std::to_string(i) + ", " + std::to_string(n) +
                      ") on list of size " + std::to_string(x.size()));
  }
  std::vector<Token> out;
  out.reserve(x.size() - n);
  for (std::size_t k = 1; k <= x.size(); ++k) {
    if (k < i || k >= i + n) out.push_back(x[k - 1]);
  }
  return TokenList(std::move(out), true);
}

// y ++ x
inline TokenList prepend(const TokenList& x, const TokenList& y) {
  std::vector<Token> out;
  out.reserve(x.size() + y.size());
  out.insert(out.end(), y.begin(), y.end());
  out.insert(out.end(), x.begin(), x.end());
  return TokenList(std::move(out), true);
}

// Replaces each occurrence of y's text in x by z, scanning left to right
// without overlap.
inline TokenList replace(const TokenList& x, const TokenList& y, const TokenList& z) {
  if (y.empty()) throw BoundsError("replace with an empty pattern");
  std::vector<Token> out;
  out.reserve(x.size());
  std::size_t k = 0;
  while (k < x.size()) {
    bool hit = k + y.size() <= x.size();
    for (std::size_t m = 0; hit && m < y.size(); ++m) hit = x[k + m].text == y[m].text;
    if (hit) {
      out.insert(out.end(), z.begin(), z.end());
      k += y.size();
    } else {
      out.push_back(x[k++]);
    }
  }
  return TokenList(std::move(out), true);
}

// (x_1..x_{i-1}, x_i..x_n)
inline std::pair<TokenList, TokenList> split(const TokenList& x, std::size_t i) {
  if (i <= 1 || i > x.size()) {
    throw BoundsError("split at " + std::to_string(i) + " on list of size " +
                      std::to_string(x.size()));
  }
  const auto mid = x.begin() + static_cast<std::ptrdiff_t>(i - 1);
  return {TokenList(std::vector<Token>(x.begin(), mid), true),
          TokenList(std::vector<Token>(mid, x.end()), true)};
}

// Drops everything after the first punctuation token, which is kept.
inline TokenList trim(const TokenList& x) {
  std::vector<Token> out;
  for (const auto& t : x) {
    out.push_back(t);
    if (is_trim_punctuation(t.text)) break;
  }
  return TokenList(std::move(out), true);
}

}  // namespace forge::ops
