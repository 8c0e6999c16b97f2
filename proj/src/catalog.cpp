#include "sbw/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sbw {

namespace {

using Tok = std::pair<std::string, int>;

Tok P(std::string n) { return {std::move(n), +1}; }
Tok N(std::string n) { return {std::move(n), -1}; }

std::string sg(long long i) { return "s" + std::to_string(i); }
std::string dl(long long r) { return "d" + std::to_string(r); }
std::string rho(long long r) { return "r" + std::to_string(r); }
std::string th(long long i) { return "t" + std::to_string(i); }
std::string ag(long long r) { return "a" + std::to_string(r); }
std::string bg(long long r) { return "b" + std::to_string(r); }
std::string zg(long long j) { return "z" + std::to_string(j); }

void require(bool ok, const std::string& constraint) {
  if (!ok) {
    throw std::invalid_argument("parameter out of range: requires " +
                                constraint);
  }
}

// Accumulates relations, silently dropping any template whose instantiation
// mentions a generator outside the alphabet.  Drops go into provenance.
class Builder {
 public:
  Builder(std::vector<std::string> names, Kind kind, std::string provenance) {
    pres_.alphabet = Alphabet(std::move(names));
    pres_.kind = kind;
    pres_.provenance = std::move(provenance);
  }

  void add(const std::string& label, const std::string& note,
           const std::vector<Tok>& lhs, const std::vector<Tok>& rhs) {
    Word l, r;
    if (!make(lhs, l) || !make(rhs, r)) {
      drops_.push_back(note.empty() ? label : label + "[" + note + "]");
      return;
    }
    pres_.relations.push_back(Relation{label, std::move(l), std::move(r)});
  }

  Presentation take() {
    if (!drops_.empty()) {
      pres_.provenance += "; dropped:";
      for (const std::string& d : drops_) {
        pres_.provenance += " " + d;
      }
    }
    pres_.validate();
    return std::move(pres_);
  }

 private:
  bool make(const std::vector<Tok>& toks, Word& out) const {
    out.clear();
    for (const Tok& t : toks) {
      if (!pres_.alphabet.contains(t.first)) {
        return false;
      }
      out.push_back(Letter{pres_.alphabet.index(t.first), t.second});
    }
    return true;
  }

  Presentation pres_;
  std::vector<std::string> drops_;
};

std::vector<Tok> toks(std::initializer_list<std::string> names) {
  std::vector<Tok> out;
  for (const auto& n : names) {
    out.push_back(P(n));
  }
  return out;
}

void add_braid_relations(Builder& b, long long n) {
  for (long long i = 1; i <= n - 1; ++i) {
    for (long long j = i + 2; j <= n - 1; ++j) {
      b.add("BR1", "", toks({sg(i), sg(j)}), toks({sg(j), sg(i)}));
    }
  }
  for (long long i = 1; i <= n - 1; ++i) {
    b.add("BR2", "i=" + std::to_string(i),
          toks({sg(i), sg(i + 1), sg(i)}),
          toks({sg(i + 1), sg(i), sg(i + 1)}));
  }
}

std::vector<Tok> power(const std::string& name, long long k) {
  std::vector<Tok> out;
  for (long long i = 0; i < k; ++i) {
    out.push_back(P(name));
  }
  return out;
}

std::vector<Tok> cat(std::vector<Tok> a, const std::vector<Tok>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Presentation boundary(long long n, long long g, long long p, long long kmax) {
  require(n >= 2, "n >= 2");
  require(p >= 1, "p >= 1");
  require(g >= 0, "g >= 0");
  const long long m = 2 * g + p - 1;
  std::vector<std::string> names;
  for (long long i = 1; i <= n - 1; ++i) names.push_back(sg(i));
  for (long long r = 1; r <= m; ++r) names.push_back(dl(r));
  std::ostringstream prov;
  prov << (kmax >= 1 ? "boundary_star(" : "boundary(") << n << "," << g << ","
       << p;
  if (kmax >= 1) prov << "," << kmax;
  prov << ")";
  Builder b(names, kmax >= 1 ? Kind::monoid : Kind::group, prov.str());

  add_braid_relations(b, n);
  auto excluded = [&](long long r, long long s) {
    for (long long i = 0; i <= g - 1; ++i) {
      if (r == p + 2 * i && s == p + 2 * i + 1) return true;
    }
    return false;
  };
  for (long long r = 1; r <= m; ++r) {
    for (long long i = 2; i <= n - 1; ++i) {
      b.add("CR1", "", toks({dl(r), sg(i)}), toks({sg(i), dl(r)}));
    }
  }
  for (long long r = 1; r <= m; ++r) {
    b.add("CR2", "", toks({dl(r), sg(1), dl(r), sg(1)}),
          toks({sg(1), dl(r), sg(1), dl(r)}));
  }
  for (long long r = 1; r <= m; ++r) {
    for (long long s = r + 1; s <= m; ++s) {
      if (excluded(r, s)) continue;
      b.add("CR3", "", toks({dl(r), sg(1), dl(r), dl(s), sg(1)}),
            toks({sg(1), dl(r), dl(s), sg(1), dl(r)}));
    }
  }
  for (long long i = 0; i <= g - 1; ++i) {
    long long r = p + 2 * i;
    b.add("SCR1", "", toks({sg(1), dl(r + 1), sg(1), dl(r), sg(1)}),
          toks({dl(r), sg(1), dl(r + 1)}));
  }
  if (kmax >= 1) {
    for (long long k = 1; k <= kmax; ++k) {
      for (long long r = 1; r <= m; ++r) {
        for (long long s = r + 1; s <= m; ++s) {
          if (excluded(r, s)) continue;
          b.add("CR3_" + std::to_string(k), "",
                cat(cat(toks({dl(r), sg(1), dl(r)}), power(dl(s), k)),
                    toks({sg(1)})),
                cat(cat(toks({sg(1), dl(r)}), power(dl(s), k)),
                    toks({sg(1), dl(r)})));
        }
      }
    }
    for (long long k = 1; k <= kmax; ++k) {
      for (long long r = 1; r <= m; ++r) {
        for (long long s = r + 1; s <= m; ++s) {
          if (excluded(r, s)) continue;
          b.add("CR3'_" + std::to_string(k), "",
                cat(cat(toks({dl(s), sg(1)}), power(dl(r), k)),
                    toks({dl(s), sg(1)})),
                cat(cat(toks({sg(1)}), power(dl(r), k)),
                    toks({dl(s), sg(1), dl(s)})));
        }
      }
    }
  }
  return b.take();
}

Presentation planar(long long n, long long p, std::vector<long long> I) {
  require(n >= 1, "n >= 1");
  require(p >= 1, "p >= 1");
  require(n >= p - 1, "n >= p - 1");
  require(static_cast<long long>(I.size()) == p - 1, "|I| = p - 1");
  std::sort(I.begin(), I.end());
  for (std::size_t k = 0; k < I.size(); ++k) {
    require(I[k] >= 1 && I[k] <= n, "I subset of {1..n}");
    require(k == 0 || I[k] != I[k - 1], "I has distinct elements");
  }
  std::vector<std::string> names;
  for (long long i = 1; i <= n - 1; ++i) names.push_back(sg(i));
  for (long long r : I) names.push_back(rho(r));
  std::ostringstream prov;
  prov << "planar(" << n << "," << p << ",{";
  for (std::size_t k = 0; k < I.size(); ++k) prov << (k ? "," : "") << I[k];
  prov << "})";
  Builder b(names, Kind::group, prov.str());

  for (long long i = 1; i <= n - 1; ++i) {
    for (long long j = i + 2; j <= n - 1; ++j) {
      b.add("BR1", "", toks({sg(i), sg(j)}), toks({sg(j), sg(i)}));
    }
  }
  for (std::size_t k = 0; k < I.size(); ++k) {
    for (std::size_t l = k + 1; l < I.size(); ++l) {
      b.add("BR1'", "", toks({rho(I[k]), rho(I[l])}),
            toks({rho(I[l]), rho(I[k])}));
    }
  }
  for (long long r : I) {
    for (long long i = 1; i <= n - 1; ++i) {
      if (i == r - 1 || i == r) continue;
      b.add("BR1''", "", toks({rho(r), sg(i)}), toks({sg(i), rho(r)}));
    }
  }
  for (long long i = 1; i <= n - 1; ++i) {
    b.add("BR2", "i=" + std::to_string(i),
          toks({sg(i), sg(i + 1), sg(i)}),
          toks({sg(i + 1), sg(i), sg(i + 1)}));
  }
  for (long long r : I) {
    for (long long i : {r, r - 1}) {
      if (i < 1 || i > n - 1) continue;
      b.add("BR3", "", toks({sg(i), rho(r), sg(i), rho(r)}),
            toks({rho(r), sg(i), rho(r), sg(i)}));
    }
  }
  for (long long r : I) {
    if (r == 1 || r == n) continue;
    b.add("BR3'", "",
          toks({sg(r - 1), sg(r), rho(r), sg(r - 1), rho(r)}),
          toks({rho(r), sg(r - 1), sg(r), rho(r), sg(r - 1)}));
  }
  return b.take();
}

std::vector<Tok> sigma_tent(long long n) {
  // sigma_2 ... sigma_{n-2} sigma_{n-1}^2 sigma_{n-2} ... sigma_2;
  // empty for n = 2.
  std::vector<Tok> out;
  if (n < 3) return out;
  for (long long i = 2; i <= n - 2; ++i) out.push_back(P(sg(i)));
  out.push_back(P(sg(n - 1)));
  out.push_back(P(sg(n - 1)));
  for (long long i = n - 2; i >= 2; --i) out.push_back(P(sg(i)));
  return out;
}

void add_fgr(Builder& b, long long n, long long g) {
  std::vector<Tok> lhs = sigma_tent(n);
  lhs.push_back(P(sg(1)));
  for (long long r = 1; r <= 2 * g; ++r) lhs.push_back(P(dl(r)));
  lhs.push_back(P(sg(1)));
  std::vector<Tok> rhs;
  for (long long r = 2 * g; r >= 1; --r) rhs.push_back(P(dl(r)));
  b.add("FGR", "", lhs, rhs);
}

Presentation closed(long long n, long long g) {
  require(n >= 1, "n >= 1");
  require(g >= 1, "g >= 1");
  std::vector<std::string> names;
  for (long long i = 1; i <= n - 1; ++i) names.push_back(sg(i));
  for (long long r = 1; r <= 2 * g; ++r) names.push_back(dl(r));
  std::ostringstream prov;
  prov << "closed(" << n << "," << g << ")";
  Builder b(names, Kind::group, prov.str());

  add_braid_relations(b, n);
  for (long long i = 3; i <= n - 1; ++i) {
    for (long long r = 1; r <= 2 * g; ++r) {
      b.add("CR1", "", toks({sg(i), dl(r)}), toks({dl(r), sg(i)}));
    }
  }
  for (long long r = 1; r <= 2 * g; ++r) {
    b.add("CR4", "", toks({sg(1), dl(r), dl(r)}), toks({dl(r), dl(r), sg(1)}));
  }
  for (long long r = 1; r <= g; ++r) {
    b.add("CR4", "needs s2", toks({sg(2), dl(2 * r - 1), sg(2)}),
          toks({dl(2 * r - 1), sg(2), sg(1)}));
  }
  for (long long r = 1; r <= g; ++r) {
    b.add("CR4", "needs s2", toks({sg(1), dl(2 * r), sg(2)}),
          toks({sg(2), dl(2 * r), sg(1)}));
  }
  for (long long r = 1; r <= 2 * g; ++r) {
    for (long long s = 1; r + 2 * s <= 2 * g; ++s) {
      b.add("SCR2", "", toks({sg(1), dl(r), dl(r + 2 * s), sg(1)}),
            toks({dl(r + 2 * s), dl(r)}));
    }
  }
  for (long long r = 1; r <= g; ++r) {
    for (long long s = 1; s <= r; ++s) {
      b.add("SCR3", "",
            toks({dl(2 * r), sg(1), dl(2 * s - 1), dl(2 * r), sg(1)}),
            toks({dl(2 * s - 1), dl(2 * r), dl(2 * r)}));
    }
  }
  for (long long r = 1; r <= g; ++r) {
    for (long long s = 1; s < r; ++s) {
      b.add("SCR3", "",
            toks({sg(1), dl(2 * s), dl(2 * r - 1), sg(1), dl(2 * s)}),
            toks({dl(2 * s), dl(2 * s), dl(2 * r - 1)}));
    }
  }
  add_fgr(b, n, g);
  return b.take();
}

Presentation closed_g2(long long n, long long g) {
  require(n >= 1, "n >= 1");
  require(g >= 2, "g >= 2");
  std::vector<std::string> names;
  for (long long i = 1; i <= n - 1; ++i) names.push_back(sg(i));
  for (long long r = 1; r <= 2 * g; ++r) names.push_back(dl(r));
  std::ostringstream prov;
  prov << "closed_g2(" << n << "," << g << ")";
  Builder b(names, Kind::group, prov.str());

  add_braid_relations(b, n);
  for (long long r = 1; r <= 2 * g; ++r) {
    for (long long i = 3; i <= n - 1; ++i) {
      b.add("CR1", "", toks({dl(r), sg(i)}), toks({sg(i), dl(r)}));
    }
  }
  for (long long r = 1; r <= 2 * g; ++r) {
    b.add("CR4", "", toks({dl(r), dl(r), sg(1)}), toks({sg(1), dl(r), dl(r)}));
  }
  for (long long r = 1; r <= g; ++r) {
    b.add("CR4", "needs s2", toks({sg(2), dl(2 * r - 1), sg(2)}),
          toks({dl(2 * r - 1), sg(2), sg(1)}));
  }
  for (long long r = 1; r <= g; ++r) {
    b.add("CR4", "needs s2", toks({sg(1), dl(2 * r), sg(2)}),
          toks({sg(2), dl(2 * r), sg(1)}));
  }
  for (long long r = 1; r <= g; ++r) {
    for (long long s = 1; s < r; ++s) {
      b.add("CR5", "",
            toks({dl(2 * r), sg(1), dl(2 * s - 1), dl(2 * s)}),
            toks({dl(2 * s - 1), dl(2 * s), dl(2 * r), sg(1)}));
    }
  }
  for (long long r = 1; r <= g; ++r) {
    for (long long s = r + 1; s <= g; ++s) {
      b.add("CR5", "",
            toks({sg(1), dl(2 * r), dl(2 * s), dl(2 * s - 1)}),
            toks({dl(2 * s), dl(2 * s - 1), sg(1), dl(2 * r)}));
    }
  }
  for (long long r = 1; r <= g; ++r) {
    for (long long s = 1; s < r; ++s) {
      b.add("CR5", "",
            toks({dl(2 * r), sg(1), dl(2 * r - 1), dl(2 * s)}),
            toks({dl(2 * r - 1), dl(2 * s), dl(2 * r), sg(1)}));
    }
  }
  for (long long r = 1; r <= g; ++r) {
    for (long long s = r + 1; s <= g; ++s) {
      b.add("CR5", "",
            toks({sg(1), dl(2 * r - 1), dl(2 * s - 1), dl(2 * r)}),
            toks({dl(2 * s - 1), dl(2 * r), sg(1), dl(2 * r - 1)}));
    }
  }
  for (long long r = 1; r <= 2 * g; ++r) {
    for (long long s = 1; r + 2 * s <= 2 * g; ++s) {
      b.add("SCR2", "", toks({sg(1), dl(r), dl(r + 2 * s), sg(1)}),
            toks({dl(r + 2 * s), dl(r)}));
    }
  }
  add_fgr(b, n, g);
  return b.take();
}

Presentation torus_n(long long n) {
  require(n >= 2, "n >= 2");
  std::vector<std::string> names;
  for (long long i = 1; i <= n - 1; ++i) names.push_back(sg(i));
  names.push_back(dl(1));
  names.push_back(dl(2));
  std::ostringstream prov;
  prov << "torus_n(" << n << ")";
  Builder b(names, Kind::group, prov.str());

  add_braid_relations(b, n);
  for (long long r = 1; r <= 2; ++r) {
    for (long long i = 3; i <= n - 1; ++i) {
      b.add("CR1", "", toks({dl(r), sg(i)}), toks({sg(i), dl(r)}));
    }
  }
  for (long long r = 1; r <= 2; ++r) {
    b.add("CR4", "", toks({dl(r), dl(r), sg(1)}), toks({sg(1), dl(r), dl(r)}));
  }
  b.add("CR4", "needs s2", toks({sg(2), dl(1), sg(2)}),
        toks({dl(1), sg(2), sg(1)}));
  b.add("CR4", "needs s2", toks({sg(1), dl(2), sg(2)}),
        toks({sg(2), dl(2), sg(1)}));
  b.add("SCR4", "", toks({dl(2), sg(1), dl(1), dl(2), sg(1)}),
        toks({dl(1), dl(2), dl(2)}));
  add_fgr(b, n, 1);
  return b.take();
}

Presentation torus2_v1() {
  Builder b({"s1", "d1", "d2"}, Kind::group, "torus2_v1");
  b.add("CR4", "", toks({"d1", "d1", "s1"}), toks({"s1", "d1", "d1"}));
  b.add("CR4", "", toks({"d2", "d2", "s1"}), toks({"s1", "d2", "d2"}));
  b.add("SQ", "", toks({"d1", "d1", "d2"}), toks({"d2", "d1", "d1"}));
  b.add("SQ", "", toks({"d2", "d2", "d1"}), toks({"d1", "d2", "d2"}));
  b.add("FGR", "", toks({"s1", "d1", "d2", "s1"}), toks({"d2", "d1"}));
  return b.take();
}

Presentation torus2_abc(bool complete_candidate) {
  Builder b({"a", "b", "c"},
            complete_candidate ? Kind::monoid : Kind::group,
            complete_candidate ? "torus2_complete_candidate" : "torus2_v2");
  b.add("SQ", "", toks({"a", "a", "b"}), toks({"b", "a", "a"}));
  b.add("SQ", "", toks({"b", "b", "a"}), toks({"a", "b", "b"}));
  b.add("SQ", "", toks({"a", "a", "c"}), toks({"c", "a", "a"}));
  b.add("SQ", "", toks({"b", "b", "c"}), toks({"c", "b", "b"}));
  b.add("CSQ", "", toks({"a", "a", "b", "b"}), toks({"c", "c"}));
  if (complete_candidate) {
    b.add("CSQ'", "", toks({"b", "b", "a", "a"}), toks({"c", "c"}));
  }
  return b.take();
}

Presentation free_central2() {
  Builder b({"a", "b"}, Kind::monoid, "free_central2");
  b.add("SQ", "", toks({"a", "b", "b"}), toks({"b", "b", "a"}));
  b.add("SQ", "", toks({"b", "a", "a"}), toks({"a", "a", "b"}));
  return b.take();
}

Presentation appendix_boundary(long long n, long long g, long long p) {
  require(n >= 1, "n >= 1");
  require(p >= 1, "p >= 1");
  require(g >= 0, "g >= 0");
  std::vector<std::string> names;
  for (long long i = 1; i <= n - 1; ++i) names.push_back(sg(i));
  for (long long r = 1; r <= g; ++r) names.push_back(ag(r));
  for (long long r = 1; r <= g; ++r) names.push_back(bg(r));
  for (long long j = 1; j <= p - 1; ++j) names.push_back(zg(j));
  std::ostringstream prov;
  prov << "appendix_boundary(" << n << "," << g << "," << p << ")";
  Builder b(names, Kind::group, prov.str());

  add_braid_relations(b, n);
  for (long long r = 1; r <= g; ++r) {
    for (long long i = 2; i <= n - 1; ++i) {
      b.add("R1", "", toks({ag(r), sg(i)}), toks({sg(i), ag(r)}));
    }
  }
  for (long long r = 1; r <= g; ++r) {
    for (long long i = 2; i <= n - 1; ++i) {
      b.add("R1", "", toks({bg(r), sg(i)}), toks({sg(i), bg(r)}));
    }
  }
  for (long long r = 1; r <= g; ++r) {
    b.add("R2", "needs s1", {N(sg(1)), P(ag(r)), N(sg(1)), P(ag(r))},
          {P(ag(r)), N(sg(1)), P(ag(r)), N(sg(1))});
  }
  for (long long r = 1; r <= g; ++r) {
    b.add("R2", "needs s1", {N(sg(1)), P(bg(r)), N(sg(1)), P(bg(r))},
          {P(bg(r)), N(sg(1)), P(bg(r)), N(sg(1))});
  }
  auto add_r3 = [&](const std::string& first, const std::string& second) {
    b.add("R3", "needs s1",
          {N(sg(1)), P(first), P(sg(1)), P(second)},
          {P(second), N(sg(1)), P(first), P(sg(1))});
  };
  for (long long s = 1; s <= g; ++s) {
    for (long long r = s + 1; r <= g; ++r) add_r3(ag(s), ag(r));
  }
  for (long long s = 1; s <= g; ++s) {
    for (long long r = s + 1; r <= g; ++r) add_r3(bg(s), bg(r));
  }
  for (long long s = 1; s <= g; ++s) {
    for (long long r = s + 1; r <= g; ++r) add_r3(ag(s), bg(r));
  }
  for (long long s = 1; s <= g; ++s) {
    for (long long r = s + 1; r <= g; ++r) add_r3(bg(s), ag(r));
  }
  for (long long r = 1; r <= g; ++r) {
    b.add("R4", "needs s1", {N(sg(1)), P(ag(r)), N(sg(1)), P(bg(r))},
          {P(bg(r)), N(sg(1)), P(ag(r)), P(sg(1))});
  }
  for (long long j = 1; j <= p - 1; ++j) {
    for (long long i = 2; i <= n - 1; ++i) {
      b.add("R5", "", toks({zg(j), sg(i)}), toks({sg(i), zg(j)}));
    }
  }
  for (long long r = 1; r <= g; ++r) {
    for (long long i = 1; i <= p - 1; ++i) {
      b.add("R6", "needs s1", {N(sg(1)), P(zg(i)), P(sg(1)), P(ag(r))},
            {P(ag(r)), N(sg(1)), P(zg(i)), P(sg(1))});
    }
  }
  for (long long r = 1; r <= g; ++r) {
    for (long long i = 1; i <= p - 1; ++i) {
      b.add("R6", "needs s1", {N(sg(1)), P(zg(i)), P(sg(1)), P(bg(r))},
            {P(bg(r)), N(sg(1)), P(zg(i)), P(sg(1))});
    }
  }
  for (long long j = 1; j <= p - 1; ++j) {
    for (long long l = j + 1; l <= p - 1; ++l) {
      b.add("R7", "needs s1", {N(sg(1)), P(zg(j)), P(sg(1)), P(zg(l))},
            {P(zg(l)), N(sg(1)), P(zg(j)), P(sg(1))});
    }
  }
  for (long long j = 1; j <= p - 1; ++j) {
    b.add("R8", "needs s1", {N(sg(1)), P(zg(j)), N(sg(1)), P(zg(j))},
          {P(zg(j)), N(sg(1)), P(zg(j)), N(sg(1))});
  }
  return b.take();
}

Presentation appendix_closed(long long n, long long g) {
  require(n >= 1, "n >= 1");
  require(g >= 1, "g >= 1");
  std::vector<std::string> names;
  for (long long i = 1; i <= n - 1; ++i) names.push_back(th(i));
  for (long long r = 1; r <= 2 * g; ++r) names.push_back(bg(r));
  std::ostringstream prov;
  prov << "appendix_closed(" << n << "," << g << ")";
  Builder b(names, Kind::group, prov.str());

  for (long long i = 1; i <= n - 1; ++i) {
    for (long long j = i + 2; j <= n - 1; ++j) {
      b.add("BR1", "", toks({th(i), th(j)}), toks({th(j), th(i)}));
    }
  }
  for (long long i = 1; i <= n - 2; ++i) {
    b.add("BR2", "", toks({th(i), th(i + 1), th(i)}),
          toks({th(i + 1), th(i), th(i + 1)}));
  }
  for (long long r = 1; r <= 2 * g; ++r) {
    for (long long i = 2; i <= n - 1; ++i) {
      b.add("R1", "", toks({bg(r), th(i)}), toks({th(i), bg(r)}));
    }
  }
  for (long long s = 1; s <= 2 * g; ++s) {
    for (long long r = s + 1; r <= 2 * g; ++r) {
      b.add("R2", "needs t1", {P(bg(s)), N(th(1)), P(bg(r)), N(th(1))},
            {P(th(1)), P(bg(r)), N(th(1)), P(bg(s))});
    }
  }
  for (long long r = 1; r <= 2 * g; ++r) {
    b.add("R3", "needs t1", {P(bg(r)), N(th(1)), P(bg(r)), N(th(1))},
          {N(th(1)), P(bg(r)), N(th(1)), P(bg(r))});
  }
  {
    std::vector<Tok> lhs;
    for (long long r = 1; r <= g; ++r) {
      lhs.push_back(P(bg(2 * r - 1)));
      lhs.push_back(N(bg(2 * r)));
    }
    for (long long r = 1; r <= g; ++r) {
      lhs.push_back(N(bg(2 * r - 1)));
      lhs.push_back(P(bg(2 * r)));
    }
    std::vector<Tok> rhs;
    for (long long i = 1; i <= n - 2; ++i) rhs.push_back(P(th(i)));
    rhs.push_back(P(th(n - 1)));
    rhs.push_back(P(th(n - 1)));
    for (long long i = n - 2; i >= 1; --i) rhs.push_back(P(th(i)));
    b.add("TR", "needs t" + std::to_string(n - 1), lhs, rhs);
  }
  return b.take();
}

}  // namespace

Presentation build_presentation(const std::string& family,
                                const std::vector<long long>& params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k) {
      throw std::invalid_argument("family " + family + " expects " +
                                  std::to_string(k) + " parameter(s)");
    }
  };
  if (family == "boundary") {
    want(3);
    return boundary(params[0], params[1], params[2], -1);
  }
  if (family == "boundary_star") {
    want(4);
    require(params[3] >= 1, "kmax >= 1");
    return boundary(params[0], params[1], params[2], params[3]);
  }
  if (family == "planar") {
    if (params.size() < 2) {
      throw std::invalid_argument("planar expects n, p, then the elements "
                                  "of I");
    }
    return planar(params[0], params[1],
                  std::vector<long long>(params.begin() + 2, params.end()));
  }
  if (family == "closed") {
    want(2);
    return closed(params[0], params[1]);
  }
  if (family == "closed_g2") {
    want(2);
    return closed_g2(params[0], params[1]);
  }
  if (family == "torus_n") {
    want(1);
    return torus_n(params[0]);
  }
  if (family == "torus2_v1") {
    want(0);
    return torus2_v1();
  }
  if (family == "torus2_v2") {
    want(0);
    return torus2_abc(false);
  }
  if (family == "torus2_complete_candidate") {
    want(0);
    return torus2_abc(true);
  }
  if (family == "free_central2") {
    want(0);
    return free_central2();
  }
  if (family == "appendix_boundary") {
    want(3);
    return appendix_boundary(params[0], params[1], params[2]);
  }
  if (family == "appendix_closed") {
    want(2);
    return appendix_closed(params[0], params[1]);
  }
  throw std::invalid_argument("unknown presentation family \"" + family +
                              "\"");
}

Presentation build_presentation_spec(const std::string& spec) {
  std::string name = spec;
  std::vector<long long> params;
  auto paren = spec.find('(');
  std::string rest;
  if (paren != std::string::npos) {
    if (spec.back() != ')') {
      throw std::invalid_argument("malformed family spec \"" + spec + "\"");
    }
    name = spec.substr(0, paren);
    rest = spec.substr(paren + 1, spec.size() - paren - 2);
  } else {
    auto space = spec.find_first_of(" \t");
    if (space != std::string::npos) {
      name = spec.substr(0, space);
      rest = spec.substr(space + 1);
    }
  }
  for (char& c : rest) {
    if (c == ',' || c == '{' || c == '}') c = ' ';
  }
  std::istringstream in(rest);
  long long v = 0;
  while (in >> v) {
    params.push_back(v);
  }
  return build_presentation(name, params);
}

std::vector<std::string> catalog_families() {
  return {"boundary",  "boundary_star",
          "planar",    "closed",
          "closed_g2", "torus_n",
          "torus2_v1", "torus2_v2",
          "torus2_complete_candidate", "free_central2",
          "appendix_boundary", "appendix_closed"};
}

}  // namespace sbw
