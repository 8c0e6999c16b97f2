#include "sbw/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace sbw {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (n.empty() || n == "1") {
      throw std::invalid_argument("invalid generator name \"" + n + "\"");
    }
    for (char c : n) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '^') {
        throw std::invalid_argument("invalid generator name \"" + n + "\"");
      }
    }
    if (!index_.emplace(n, static_cast<int>(i)).second) {
      throw std::invalid_argument("duplicate generator name \"" + n + "\"");
    }
  }
}

bool Alphabet::contains(const std::string& name) const {
  return index_.find(name) != index_.end();
}

int Alphabet::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw std::invalid_argument("unknown generator \"" + name + "\"");
  }
  return it->second;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& x : w) {
    if (!out.empty() && out.back().gen == x.gen && out.back().sign == -x.sign) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word invert_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(Letter{it->gen, -it->sign});
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<long long> exponent_vector(const Word& w,
                                       std::size_t n_generators) {
  std::vector<long long> ev(n_generators, 0);
  for (const Letter& x : w) {
    ev.at(static_cast<std::size_t>(x.gen)) += x.sign;
  }
  return ev;
}

bool is_positive_word(const Word& w) {
  return std::all_of(w.begin(), w.end(),
                     [](const Letter& x) { return x.sign > 0; });
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) {
    return u.size() < v.size();
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto ku = std::make_pair(u[i].gen, u[i].sign < 0);
    auto kv = std::make_pair(v[i].gen, v[i].sign < 0);
    if (ku != kv) {
      return ku < kv;
    }
  }
  return false;
}

std::string word_key(const Word& w) {
  std::string k;
  k.reserve(w.size());
  for (const Letter& x : w) {
    k.push_back(static_cast<char>(2 * x.gen + (x.sign < 0 ? 1 : 0)));
  }
  return k;
}

void validate_word(const Word& w, const Alphabet& a) {
  for (const Letter& x : w) {
    if (x.gen < 0 || static_cast<std::size_t>(x.gen) >= a.size()) {
      throw std::invalid_argument("letter index out of range for alphabet");
    }
    if (x.sign != 1 && x.sign != -1) {
      throw std::invalid_argument("letter sign must be +1 or -1");
    }
  }
}

namespace {

void append_power(Word& w, int gen, long long exp) {
  int sign = exp < 0 ? -1 : +1;
  for (long long i = 0; i < std::llabs(exp); ++i) {
    w.push_back(Letter{gen, sign});
  }
}

}  // namespace

Word parse_word(const std::string& text, const Alphabet& a) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i >= text.size()) {
      break;
    }
    std::size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    std::string token = text.substr(i, j - i);
    i = j;
    if (token == "1") {
      continue;  // the empty word
    }
    std::string name = token;
    long long exp = 1;
    auto caret = token.find('^');
    if (caret != std::string::npos) {
      name = token.substr(0, caret);
      std::string digits = token.substr(caret + 1);
      if (name.empty() || digits.empty() ||
          (digits == "-")) {
        throw std::invalid_argument("malformed token \"" + token + "\"");
      }
      std::size_t used = 0;
      try {
        exp = std::stoll(digits, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed exponent in token \"" + token +
                                    "\"");
      }
      if (used != digits.size()) {
        throw std::invalid_argument("malformed exponent in token \"" + token +
                                    "\"");
      }
    }
    if (!a.contains(name)) {
      throw std::invalid_argument("unknown generator \"" + name +
                                  "\" in token \"" + token + "\"");
    }
    append_power(w, a.index(name), exp);
  }
  return w;
}

std::string print_word(const Word& w, const Alphabet& a, bool raw) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  auto emit = [&](int gen, int sign, std::size_t count) {
    if (!out.empty()) {
      out.push_back(' ');
    }
    out += a.name(static_cast<std::size_t>(gen));
    if (sign < 0) {
      out += "^-" + std::to_string(count);
    } else if (count > 1) {
      out += "^" + std::to_string(count);
    }
  };
  if (raw) {
    for (const Letter& x : w) {
      emit(x.gen, x.sign, 1);
    }
    return out;
  }
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) {
      ++j;
    }
    emit(w[i].gen, w[i].sign, j - i);
    i = j;
  }
  return out;
}

}  // namespace sbw
