#include "verba/word/word.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>

#include "verba/error.hpp"

namespace verba {

Word::Word(unsigned arity, const std::vector<Letter>& letters) : arity_(arity) {
  for (const Letter& l : letters) {
    if (l.var >= arity) throw Error(ErrorKind::InvalidArgument, "letter variable out of range");
    if (l.exp == 0) continue;
    if (!letters_.empty() && letters_.back().var == l.var) {
      letters_.back().exp += l.exp;
      if (letters_.back().exp == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::variable(unsigned arity, unsigned var, long long exp) { return Word(arity, {{var, exp}}); }

std::vector<long long> Word::exponent_sums() const {
  std::vector<long long> s(arity_, 0);
  for (const Letter& l : letters_) s[l.var] += l.exp;
  return s;
}

unsigned long long Word::length() const noexcept {
  unsigned long long n = 0;
  for (const Letter& l : letters_) n += static_cast<unsigned long long>(l.exp < 0 ? -l.exp : l.exp);
  return n;
}

Word Word::inverse() const {
  std::vector<Letter> r(letters_.rbegin(), letters_.rend());
  for (Letter& l : r) l.exp = -l.exp;
  return Word(arity_, r);
}

Word Word::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Word out(arity_);
  for (long long i = 0; i < e; ++i) out = out * *this;
  return out;
}

Word Word::with_arity(unsigned arity) const {
  if (arity < arity_) {
    for (const Letter& l : letters_)
      if (l.var >= arity) throw Error(ErrorKind::InvalidArgument, "cannot shrink arity below a used variable");
  }
  Word w(arity);
  w.letters_ = letters_;
  return w;
}

Word Word::shifted(unsigned offset, unsigned arity) const {
  std::vector<Letter> r = letters_;
  for (Letter& l : r) l.var += offset;
  return Word(arity, r);
}

Word operator*(const Word& a, const Word& b) {
  const unsigned n = std::max(a.arity_, b.arity_);
  std::vector<Letter> all = a.letters_;
  all.insert(all.end(), b.letters_.begin(), b.letters_.end());
  return Word(n, all);
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const Letter& l : letters_) {
    s += "x" + std::to_string(l.var + 1);
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

Word commutator(const std::vector<Word>& ws) {
  if (ws.empty()) throw Error(ErrorKind::InvalidArgument, "empty commutator");
  Word acc = ws[0];
  for (std::size_t i = 1; i < ws.size(); ++i) acc = commutator(acc, ws[i]);
  return acc;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) { assign_variables(); }

  Word parse() {
    skip_ws();
    if (pos_ == s_.size()) throw SyntaxError(pos_, "empty word (write 1 for the identity)");
    Word w = product();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return w;
  }

 private:
  // Identifiers x1, x2, ... written exclusively fix their own index; any
  // other identifiers are numbered by first appearance.
  void assign_variables() {
    std::vector<std::string> order;
    bool indexed = true;
    for (std::size_t i = 0; i < s_.size();) {
      if (is_ident_start(s_[i])) {
        std::size_t j = i + 1;
        while (j < s_.size() && is_digit(s_[j])) ++j;
        std::string id(s_.substr(i, j - i));
        if (std::find(order.begin(), order.end(), id) == order.end()) order.push_back(id);
        const bool xk = id.size() >= 2 && id[0] == 'x' && id[1] != '0';
        if (!xk) indexed = false;
        i = j;
      } else {
        ++i;
      }
    }
    if (indexed && !order.empty()) {
      unsigned max = 0;
      for (const auto& id : order) {
        const auto digits = id.substr(1);
        if (digits.size() > 4) throw SyntaxError(0, "variable index too large in " + id);
        const auto k = static_cast<unsigned>(std::stoul(digits));
        vars_[id] = k - 1;
        max = std::max(max, k);
      }
      arity_ = max;
    } else {
      for (const auto& id : order) vars_[id] = static_cast<unsigned>(vars_.size());
      arity_ = static_cast<unsigned>(order.size());
    }
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_factor_start() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return is_ident_start(c) || c == '(' || c == '[' || c == '1';
  }

  Word product() {
    Word w = factor();
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        if (!at_factor_start()) throw SyntaxError(pos_, "expected a factor after '*'");
        w = w * factor();
      } else if (at_factor_start()) {
        w = w * factor();
      } else {
        return w;
      }
    }
  }

  Word factor() {
    Word w = atom();
    while (true) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != '^') return w;
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        neg = s_[pos_] == '-';
        ++pos_;
      }
      if (pos_ >= s_.size() || !is_digit(s_[pos_])) throw SyntaxError(pos_, "expected an integer exponent");
      long long e = 0;
      while (pos_ < s_.size() && is_digit(s_[pos_])) {
        if (e > std::numeric_limits<long long>::max() / 10 - 10) throw SyntaxError(start, "exponent too large");
        e = e * 10 + (s_[pos_] - '0');
        ++pos_;
      }
      if (e == 0)
        throw Error(ErrorKind::ZeroExponent,
                    "zero exponent at position " + std::to_string(start) + " (write 1 for the identity)");
      w = w.pow(neg ? -e : e);
    }
  }

  Word atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of word");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = product();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      std::vector<Word> parts{product()};
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ',') throw SyntaxError(pos_, "a commutator needs at least two entries");
      while (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        parts.push_back(product());
        skip_ws();
      }
      expect(']');
      return commutator(parts);
    }
    if (c == '1') {
      ++pos_;
      if (pos_ < s_.size() && is_digit(s_[pos_])) throw SyntaxError(pos_ - 1, "integers are only allowed as exponents");
      return Word(arity_);
    }
    if (is_ident_start(c)) {
      std::size_t j = pos_ + 1;
      while (j < s_.size() && is_digit(s_[j])) ++j;
      const std::string id(s_.substr(pos_, j - pos_));
      pos_ = j;
      return Word::variable(arity_, vars_.at(id));
    }
    if (is_digit(c)) throw SyntaxError(pos_, "integers are only allowed as exponents");
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) throw SyntaxError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::map<std::string, unsigned> vars_;
  unsigned arity_ = 0;
};

}  // namespace

namespace {

/// gamma<k> and delta<k> stand for the standard words.
std::optional<Word> named_word(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  for (const auto& [name, kind] : {std::pair{std::string_view("gamma"), StdWordKind::Gamma},
                                   std::pair{std::string_view("delta"), StdWordKind::Delta}}) {
    if (!text.starts_with(name)) continue;
    const std::string_view digits = text.substr(name.size());
    if (digits.empty() || digits.size() > 2 || !std::all_of(digits.begin(), digits.end(), is_digit)) return std::nullopt;
    return std_word({kind, 1, static_cast<unsigned>(std::stoul(std::string(digits)))});
  }
  return std::nullopt;
}

}  // namespace

Word parse_word(std::string_view text) {
  if (auto w = named_word(text)) return *w;
  return Parser(text).parse();
}

Word std_word(const StdWord& s) {
  switch (s.kind) {
    case StdWordKind::Power:
      if (s.m == 0) throw Error(ErrorKind::ZeroExponent, "power word needs m != 0");
      return Word::variable(1, 0, s.m);
    case StdWordKind::Gamma: {
      if (s.k == 0) throw Error(ErrorKind::InvalidArgument, "gamma_k needs k >= 1");
      std::vector<Word> ys;
      for (unsigned i = 0; i < s.k; ++i) ys.push_back(Word::variable(s.k, i));
      return commutator(ys);
    }
    case StdWordKind::Delta: {
      if (s.k > 5) throw Error(ErrorKind::InvalidArgument, "delta_k supported for k <= 5");
      Word w = Word::variable(1, 0);
      for (unsigned level = 0; level < s.k; ++level) {
        const unsigned n = w.arity();
        w = commutator(w.with_arity(2 * n), w.shifted(n, 2 * n));
      }
      return w;
    }
    case StdWordKind::PowerCommutator: {
      if (s.m == 0) throw Error(ErrorKind::ZeroExponent, "power word needs m != 0");
      if (s.k == 0) throw Error(ErrorKind::InvalidArgument, "commutator part needs k >= 1");
      const unsigned n = s.k + 1;
      std::vector<Word> ys;
      for (unsigned i = 1; i < n; ++i) ys.push_back(Word::variable(n, i));
      return Word::variable(n, 0, s.m) * commutator(ys);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown standard word");
}

std::optional<StdWord> recognize(const Word& w) {
  const unsigned n = w.arity();
  const auto& ls = w.letters();
  if (n == 1 && ls.size() == 1) return StdWord{StdWordKind::Power, ls[0].exp < 0 ? -ls[0].exp : ls[0].exp, 1};
  if (n >= 2 && w == gamma_word(n)) return StdWord{StdWordKind::Gamma, 1, n};
  if (n >= 2 && std::has_single_bit(n)) {
    const auto k = static_cast<unsigned>(std::countr_zero(n));
    if (w == delta_word(k)) return StdWord{StdWordKind::Delta, 1, k};
  }
  if (n >= 2 && !ls.empty() && ls[0].var == 0 && w == power_commutator_word(ls[0].exp, n - 1))
    return StdWord{StdWordKind::PowerCommutator, ls[0].exp, n - 1};
  return std::nullopt;
}

bool is_commutator_word(const Word& w) {
  const auto sums = w.exponent_sums();
  return std::all_of(sums.begin(), sums.end(), [](long long s) { return s == 0; });
}

WordClass classify_word(const Word& w, unsigned long long p) {
  long long e = 0;
  for (long long s : w.exponent_sums()) e = std::gcd(e, s < 0 ? -s : s);
  if (e == 0) return {WordClass::CommutatorWord, p, 0};
  unsigned k = 0;
  auto u = static_cast<unsigned long long>(e);
  while (u % p == 0) {
    u /= p;
    ++k;
  }
  if (k == 0) return {WordClass::FullModP, p, 0};
  return {WordClass::LevelK, p, k};
}

std::string to_string(const WordClass& c) {
  switch (c.kind) {
    case WordClass::CommutatorWord:
      return "commutator";
    case WordClass::FullModP:
      return "full-mod-" + std::to_string(c.p);
    case WordClass::LevelK:
      return "level-" + std::to_string(c.k) + "-mod-" + std::to_string(c.p);
  }
  return "?";
}

void to_json(nlohmann::json& j, const Word& w) {
  nlohmann::json letters = nlohmann::json::array();
  for (const Letter& l : w.letters()) letters.push_back({l.var, l.exp});
  j = {{"arity", w.arity()}, {"letters", letters}};
}

void from_json(const nlohmann::json& j, Word& w) {
  try {
    std::vector<Letter> ls;
    for (const auto& l : j.at("letters")) ls.push_back({l.at(0).get<unsigned>(), l.at(1).get<long long>()});
    w = Word(j.at("arity").get<unsigned>(), ls);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed word JSON: ") + e.what());
  }
}

}  // namespace verba
