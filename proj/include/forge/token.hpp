#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace forge {

// Errors ---------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid annotated input, lexicon contents, or example contents.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Unreadable or malformed data file. `line()` is 1-based, 0 when unknown.
class LoadError : public Error {
 public:
  LoadError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An edit operation was called with an index outside the token list.
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Text helpers ---------------------------------------------------------------

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

inline bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
           return std::tolower(x) == std::tolower(y);
         });
}

inline std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

inline std::string join(const std::vector<std::string>& words, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += sep;
    out += words[i];
  }
  return out;
}

inline bool is_ascii(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return c < 0x80; });
}

// True for tokens made only of punctuation characters ("," "." "--" "'").
inline bool is_punctuation(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::ispunct(c) != 0;
  });
}

inline bool has_whitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

// Token ----------------------------------------------------------------------

// Head value of the dependency root.
inline constexpr std::size_t kRoot = 0;

// Where a token came from in its document: 0-based sentence, 1-based position.
struct Origin {
  std::size_t sentence = 0;
  std::size_t position = 0;
  friend auto operator<=>(const Origin&, const Origin&) = default;
};

struct Token {
  std::string text;
  std::string pos;
  std::string deprel;
  std::size_t head = kRoot;  // 1-based index into the owning sentence
  std::string lemma;
  // Unset for tokens inserted by the rule engine.
  std::optional<Origin> origin;

  friend bool operator==(const Token&, const Token&) = default;
};

// A bare token carrying only surface text (insertions, test inputs).
inline Token word(std::string text, std::string pos = {}) {
  Token t;
  t.text = std::move(text);
  t.pos = std::move(pos);
  return t;
}

// TokenList ------------------------------------------------------------------

// Ordered tokens with 1-based access. Annotations survive edits but are stale
// afterwards: heads still refer to positions in the original sentence.
class TokenList {
 public:
  using value_type = Token;
  using const_iterator = std::vector<Token>::const_iterator;

  TokenList() = default;
  explicit TokenList(std::vector<Token> tokens, bool stale = false)
      : tokens_(std::move(tokens)), stale_(stale) {}
  TokenList(std::initializer_list<std::string_view> words) {
    for (auto w : words) tokens_.push_back(word(std::string(w)));
  }

  static TokenList from_text(std::string_view text) {
    std::vector<Token> out;
    for (auto& w : split_words(text)) out.push_back(word(std::move(w)));
    return TokenList(std::move(out));
  }

  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }
  const_iterator begin() const noexcept { return tokens_.begin(); }
  const_iterator end() const noexcept { return tokens_.end(); }

  // 0-based, like std containers.
  const Token& operator[](std::size_t i) const { return tokens_[i]; }
  // 1-based, like the rule tables.
  const Token& nth(std::size_t i) const {
    if (i == 0 || i > tokens_.size()) {
      throw BoundsError("token index " + std::to_string(i) + " outside 1.." +
                        std::to_string(tokens_.size()));
    }
    return tokens_[i - 1];
  }
  const Token& front() const { return tokens_.front(); }
  const Token& back() const { return tokens_.back(); }

  const std::vector<Token>& tokens() const noexcept { return tokens_; }
  bool stale() const noexcept { return stale_; }

  std::vector<std::string> texts() const {
    std::vector<std::string> out;
    out.reserve(tokens_.size());
    for (const auto& t : tokens_) out.push_back(t.text);
    return out;
  }
  std::string str() const { return join(texts()); }

  // Text-only equality; annotations and staleness are ignored.
  bool same_text(const TokenList& other) const { return texts() == other.texts(); }

  friend bool operator==(const TokenList&, const TokenList&) = default;

 private:
  std::vector<Token> tokens_;
  bool stale_ = false;
};

// AnnotatedSentence ----------------------------------------------------------

class AnnotatedSentence {
 public:
  AnnotatedSentence() = default;

  // Validates token invariants and stamps each token's origin with `index`.
  // A sentence that does not have exactly one root must be passed as a fragment.
  AnnotatedSentence(std::vector<Token> tokens, std::size_t index = 0, bool fragment = false)
      : tokens_(std::move(tokens)), index_(index), fragment_(fragment) {
    if (tokens_.empty()) throw ValidationError("sentence has no tokens");
    std::size_t roots = 0;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      auto& t = tokens_[i];
      const std::size_t pos = i + 1;
      if (t.text.empty()) {
        throw ValidationError("token " + std::to_string(pos) + " has empty text");
      }
      if (has_whitespace(t.text)) {
        throw ValidationError("token " + std::to_string(pos) + " contains whitespace");
      }
      if (t.head > tokens_.size()) {
        throw ValidationError("token " + std::to_string(pos) + " has head " +
                              std::to_string(t.head) + " outside the sentence");
      }
      if (t.head == pos) {
        throw ValidationError("token " + std::to_string(pos) + " is its own head");
      }
      if (t.deprel == "root") ++roots;
      t.origin = Origin{index, pos};
    }
    if (!fragment_ && roots != 1) {
      throw ValidationError("sentence has " + std::to_string(roots) +
                            " root tokens and is not marked as a fragment");
    }
  }

  std::size_t size() const noexcept { return tokens_.size(); }
  std::size_t index() const noexcept { return index_; }
  bool fragment() const noexcept { return fragment_; }
  const std::vector<Token>& tokens() const noexcept { return tokens_; }

  // 1-based accessors.
  const Token& token(std::size_t i) const {
    if (i == 0 || i > tokens_.size()) {
      throw BoundsError("token index " + std::to_string(i) + " outside 1.." +
                        std::to_string(tokens_.size()));
    }
    return tokens_[i - 1];
  }
  const std::string& text(std::size_t i) const { return token(i).text; }
  const std::string& pos(std::size_t i) const { return token(i).pos; }
  const std::string& label(std::size_t i) const { return token(i).deprel; }
  std::size_t head(std::size_t i) const { return token(i).head; }

  // Root position, if any.
  std::optional<std::size_t> root() const {
    for (std::size_t i = 1; i <= size(); ++i) {
      if (label(i) == "root") return i;
    }
    return std::nullopt;
  }

  // True when `ancestor` dominates `i` (or equals it).
  bool dominates(std::size_t ancestor, std::size_t i) const {
    for (std::size_t steps = 0; i != kRoot && steps <= size(); ++steps) {
      if (i == ancestor) return true;
      i = head(i);
    }
    return false;
  }

  // Leftmost and rightmost positions of the dependency subtree rooted at i.
  std::pair<std::size_t, std::size_t> subtree_bounds(std::size_t i) const {
    std::size_t lo = i, hi = i;
    for (std::size_t k = 1; k <= size(); ++k) {
      if (dominates(i, k)) {
        lo = std::min(lo, k);
        hi = std::max(hi, k);
      }
    }
    return {lo, hi};
  }

  TokenList to_list() const { return TokenList(tokens_); }
  std::string str() const { return to_list().str(); }

 private:
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  bool fragment_ = false;
};

}  // namespace forge
