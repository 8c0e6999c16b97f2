#include "sbw/presentation.hpp"

#include <sstream>
#include <stdexcept>

namespace sbw {

void Presentation::validate() const {
  for (const Relation& r : relations) {
    validate_word(r.lhs, alphabet);
    validate_word(r.rhs, alphabet);
    if (kind == Kind::monoid &&
        (!is_positive_word(r.lhs) || !is_positive_word(r.rhs))) {
      throw std::invalid_argument("monoid presentation has a non-positive "
                                  "relation word in " + r.label);
    }
  }
}

Analysis analyze_presentation(const Presentation& p) {
  Analysis a;
  a.positive = true;
  a.homogeneous = true;
  for (const Relation& r : p.relations) {
    if (!is_positive_word(r.lhs) || !is_positive_word(r.rhs)) {
      a.positive = false;
    }
    if (r.lhs.size() != r.rhs.size()) {
      a.homogeneous = false;
    }
    auto l = exponent_vector(r.lhs, p.alphabet.size());
    auto rr = exponent_vector(r.rhs, p.alphabet.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      l[i] -= rr[i];
    }
    a.abelianization.push_back(std::move(l));
  }
  return a;
}

std::string write_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "kind: " << (p.kind == Kind::group ? "group" : "monoid") << "\n";
  out << "gens:";
  for (const std::string& n : p.alphabet.names()) {
    out << " " << n;
  }
  out << "\n";
  for (const Relation& r : p.relations) {
    out << "rel " << r.label << ": " << print_word(r.lhs, p.alphabet) << " = "
        << print_word(r.rhs, p.alphabet) << "\n";
  }
  return out.str();
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) {
    return "";
  }
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  bool saw_kind = false;
  bool saw_gens = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') {
      continue;
    }
    if (line.rfind("kind:", 0) == 0) {
      std::string k = strip(line.substr(5));
      if (k == "group") {
        p.kind = Kind::group;
      } else if (k == "monoid") {
        p.kind = Kind::monoid;
      } else {
        throw std::invalid_argument("unknown presentation kind \"" + k + "\"");
      }
      saw_kind = true;
    } else if (line.rfind("gens:", 0) == 0) {
      std::istringstream gs(line.substr(5));
      std::vector<std::string> names;
      std::string n;
      while (gs >> n) {
        names.push_back(n);
      }
      p.alphabet = Alphabet(std::move(names));
      saw_gens = true;
    } else if (line.rfind("rel ", 0) == 0) {
      if (!saw_gens) {
        throw std::invalid_argument("rel line before gens line");
      }
      std::size_t colon = line.find(':');
      if (colon == std::string::npos) {
        throw std::invalid_argument("malformed rel line: " + line);
      }
      Relation r;
      r.label = strip(line.substr(4, colon - 4));
      std::string rest = line.substr(colon + 1);
      std::size_t eq = rest.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("rel line missing '=': " + line);
      }
      r.lhs = parse_word(rest.substr(0, eq), p.alphabet);
      r.rhs = parse_word(rest.substr(eq + 1), p.alphabet);
      p.relations.push_back(std::move(r));
    } else {
      throw std::invalid_argument("unrecognized presentation line: " + line);
    }
  }
  if (!saw_kind || !saw_gens) {
    throw std::invalid_argument("presentation text must contain kind: and "
                                "gens: lines");
  }
  p.validate();
  return p;
}

}  // namespace sbw
