#ifndef SBW_WORDS_HPP_
#define SBW_WORDS_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace sbw {

// A letter is a generator index together with a sign; a word is a plain
// sequence of letters.  The empty word is the identity.
struct Letter {
  std::int32_t gen;
  std::int32_t sign;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Letter pos(int g) { return Letter{g, +1}; }
inline Letter neg(int g) { return Letter{g, -1}; }

/// Ordered set of distinct generator names.  The order is fixed and indexes
/// exponent vectors.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool contains(const std::string& name) const;
  int index(const std::string& name) const;  // throws on unknown name

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

/// Unique freely reduced word representing the same free-group element.
Word free_reduce(const Word& w);

/// Letter-reversed, sign-flipped word (the free-group inverse).
Word invert_word(const Word& w);

Word concat(const Word& u, const Word& v);

/// Signed letter counts per generator; additive under concatenation.
std::vector<long long> exponent_vector(const Word& w, std::size_t n_generators);

bool is_positive_word(const Word& w);

/// Shortlex order: length first, then letters, with x < x^-1 < y < ...
bool shortlex_less(const Word& u, const Word& v);

/// Compact byte encoding used as a hash key in searches.
std::string word_key(const Word& w);

void validate_word(const Word& w, const Alphabet& a);

/// Token syntax: whitespace-separated `g`, `g^k`, `g^-k`; `1` denotes the
/// empty word.  Errors name the offending token.
Word parse_word(const std::string& text, const Alphabet& a);

/// Canonical printing.  Human mode collapses runs (`a^2`, `b^-3`); raw mode
/// prints one token per letter and round-trips bit-exactly.
std::string print_word(const Word& w, const Alphabet& a, bool raw = false);

}  // namespace sbw

#endif  // SBW_WORDS_HPP_
