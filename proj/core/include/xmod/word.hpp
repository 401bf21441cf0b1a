#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xmod {

/// A generator raised to a nonzero power. Inside a FreeWord every exponent is
/// +1 or -1; raw input may carry any exponent and is expanded on reduction.
struct Letter {
  std::string generator;
  int exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// True for ids matching [A-Za-z_][A-Za-z0-9_.']*.
bool is_identifier(std::string_view id);

/// Freely reduced word in a free group on string-named generators.
class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord generator(std::string id) { return reduce({{std::move(id), 1}}); }
  /// Expands exponents into unit letters, then cancels adjacent inverse pairs.
  /// The result does not depend on cancellation order.
  static FreeWord reduce(std::span<const Letter> raw);
  static FreeWord reduce(std::initializer_list<Letter> raw) {
    return reduce(std::span<const Letter>(raw.begin(), raw.size()));
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  FreeWord inverse() const;
  /// w * this * w^-1.
  FreeWord conjugated_by(const FreeWord& w) const;

  /// Space-separated letters with a `^-1` suffix on inverses; "1" when empty.
  std::string to_string() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Reduction of a raw letter sequence.
inline FreeWord reduce_free_word(std::span<const Letter> raw) { return FreeWord::reduce(raw); }

/// As above, but throws PreconditionError when a letter is outside `alphabet`.
FreeWord reduce_free_word(std::span<const Letter> raw, std::span<const std::string> alphabet);

/// Parses space-separated letters such as `X Y^-1 Z^2`; `1` or an empty
/// string is the identity. Throws ParseError tagged with `line` and `field`.
FreeWord parse_free_word(std::string_view text, std::size_t line = 0, const std::string& field = "word");

/// One factor (conjugator ▷ cell)^sign of a crossed word.
struct CrossedTerm {
  FreeWord conjugator;
  std::string cell;
  int sign = 1;

  friend bool operator==(const CrossedTerm&, const CrossedTerm&) = default;
  friend auto operator<=>(const CrossedTerm&, const CrossedTerm&) = default;
};

/// Formal product of conjugated cell generators, an element of the free
/// pre-crossed module. No Peiffer normal form is computed.
class CrossedWord {
 public:
  CrossedWord() = default;
  /// Throws PreconditionError on a sign other than +1/-1.
  explicit CrossedWord(std::vector<CrossedTerm> terms);

  /// The one-term word (1 ; cell ; +).
  static CrossedWord cell(std::string id);

  const std::vector<CrossedTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  CrossedWord inverse() const;
  /// w ▷ this: every conjugator is left-multiplied by w.
  CrossedWord acted_on_by(const FreeWord& w) const;

  /// `(w ; cell ; +) ...`, or "1" when empty.
  std::string to_string() const;

  friend CrossedWord operator*(const CrossedWord& a, const CrossedWord& b);
  friend bool operator==(const CrossedWord&, const CrossedWord&) = default;

 private:
  std::vector<CrossedTerm> terms_;
};

}  // namespace xmod
