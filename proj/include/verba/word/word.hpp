#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace verba {

struct Letter {
  unsigned var = 0;
  long long exp = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced element of the free group on x_1..x_n.
class Word {
 public:
  Word() = default;
  explicit Word(unsigned arity) : arity_(arity) {}
  /// Freely reduces the letters (merging equal adjacent variables and
  /// dropping zero exponents).
  Word(unsigned arity, const std::vector<Letter>& letters);

  static Word variable(unsigned arity, unsigned var, long long exp = 1);

  [[nodiscard]] unsigned arity() const noexcept { return arity_; }
  [[nodiscard]] const std::vector<Letter>& letters() const noexcept { return letters_; }
  [[nodiscard]] bool is_identity() const noexcept { return letters_.empty(); }
  [[nodiscard]] std::vector<long long> exponent_sums() const;
  /// Total number of unit letters, sum of |exponents|.
  [[nodiscard]] unsigned long long length() const noexcept;

  [[nodiscard]] Word inverse() const;
  [[nodiscard]] Word pow(long long e) const;
  /// Same letters over a larger variable set.
  [[nodiscard]] Word with_arity(unsigned arity) const;
  /// Renumbers variable i to offset + i.
  [[nodiscard]] Word shifted(unsigned offset, unsigned arity) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;

  /// Canonical text: x1^-1x2^-1x1x2; "1" for the empty word.
  [[nodiscard]] std::string to_string() const;

 private:
  unsigned arity_ = 0;
  std::vector<Letter> letters_;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

/// [a,b] = a^-1 b^-1 a b
[[nodiscard]] Word commutator(const Word& a, const Word& b);
/// Left-normed [w_1, ..., w_k]; a single word is returned unchanged.
[[nodiscard]] Word commutator(const std::vector<Word>& ws);

/// Parses the word DSL (see docs/words.md); "gamma<k>" and "delta<k>" name
/// the standard words. Throws SyntaxError (with the
/// offending position) or Error{ZeroExponent}.
[[nodiscard]] Word parse_word(std::string_view text);

enum class StdWordKind { Power, Gamma, Delta, PowerCommutator };

struct StdWord {
  StdWordKind kind = StdWordKind::Power;
  long long m = 1;  ///< exponent for Power / PowerCommutator
  unsigned k = 1;   ///< commutator length or derived depth
  friend bool operator==(const StdWord&, const StdWord&) = default;
};

[[nodiscard]] Word std_word(const StdWord& s);
[[nodiscard]] inline Word gamma_word(unsigned k) { return std_word({StdWordKind::Gamma, 1, k}); }
[[nodiscard]] inline Word delta_word(unsigned k) { return std_word({StdWordKind::Delta, 1, k}); }
[[nodiscard]] inline Word power_word(long long m) { return std_word({StdWordKind::Power, m, 1}); }
/// x^m [y_1, ..., y_k]
[[nodiscard]] inline Word power_commutator_word(long long m, unsigned k) {
  return std_word({StdWordKind::PowerCommutator, m, k});
}

/// Identifies words that are literally one of the standard shapes (with the
/// variable numbering used by std_word).
[[nodiscard]] std::optional<StdWord> recognize(const Word& w);

[[nodiscard]] bool is_commutator_word(const Word& w);

struct WordClass {
  enum Kind { CommutatorWord, FullModP, LevelK } kind = CommutatorWord;
  unsigned long long p = 0;
  unsigned k = 0;
  friend bool operator==(const WordClass&, const WordClass&) = default;
};

/// Classifies by e = gcd of the exponent sums: e = 0 commutator word,
/// p ∤ e full mod p, p^k || e level k.
[[nodiscard]] WordClass classify_word(const Word& w, unsigned long long p);
[[nodiscard]] std::string to_string(const WordClass& c);

void to_json(nlohmann::json& j, const Word& w);
void from_json(const nlohmann::json& j, Word& w);

}  // namespace verba
