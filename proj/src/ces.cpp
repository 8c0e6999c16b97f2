#include "sbw/ces.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "sbw/lattice.hpp"

namespace sbw {

SolverInstance::SolverInstance(
    Alphabet alphabet, std::vector<std::vector<long long>> lattice_relations,
    std::vector<std::string> central_basis)
    : alphabet_(std::move(alphabet)) {
  std::vector<bool> in_basis(alphabet_.size(), false);
  for (const std::string& n : central_basis) {
    int i = alphabet_.index(n);
    if (in_basis[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("duplicate basis generator " + n);
    }
    in_basis[static_cast<std::size_t>(i)] = true;
    basis_.push_back(i);
  }
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (!in_basis[i]) {
      nonbasis_.push_back(static_cast<int>(i));
    }
  }
  // Permute coordinates non-basis first and echelonize the lattice there.
  // The quotient is free on the basis exactly when the echelon has a unit
  // pivot on every non-basis coordinate and nothing else.
  std::vector<int> perm = nonbasis_;
  perm.insert(perm.end(), basis_.begin(), basis_.end());
  std::vector<std::vector<long long>> cols;
  for (const auto& r : lattice_relations) {
    if (r.size() != alphabet_.size()) {
      throw std::invalid_argument("lattice relation has wrong dimension");
    }
    std::vector<long long> c(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      c[i] = r[static_cast<std::size_t>(perm[i])];
    }
    cols.push_back(std::move(c));
  }
  IntegerLattice lat(perm.size(), std::move(cols));
  if (lat.rank() != nonbasis_.size()) {
    throw std::invalid_argument(
        "central lattice is not free on the given basis");
  }
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    if (lat.pivot_row(i) != i || lat.column(i)[i] != 1) {
      throw std::invalid_argument(
          "central lattice is not free on the given basis");
    }
    elim_.push_back(lat.column(i));
  }
  // Weight homomorphisms l-hat_y (y in basis) must kill every lattice
  // relation: sum_x r[x] * l-hat_y(x) = 0.
  weights_valid_ = !basis_.empty();
  for (const auto& r : lattice_relations) {
    for (int y : basis_) {
      long long s = 0;
      for (std::size_t x = 0; x < r.size(); ++x) {
        s += r[x] * (static_cast<int>(x) == y ? 0 : 1);
      }
      if (s != 0) {
        weights_valid_ = false;
      }
    }
  }
}

std::vector<long long> SolverInstance::canon_central(
    const std::vector<long long>& full) const {
  if (full.size() != alphabet_.size()) {
    throw std::invalid_argument("central vector has wrong dimension");
  }
  std::vector<long long> v(nonbasis_.size() + basis_.size());
  for (std::size_t i = 0; i < nonbasis_.size(); ++i) {
    v[i] = full[static_cast<std::size_t>(nonbasis_[i])];
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    v[nonbasis_.size() + i] = full[static_cast<std::size_t>(basis_[i])];
  }
  for (std::size_t i = 0; i < elim_.size(); ++i) {
    long long t = v[i];
    if (t == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) {
      v[k] -= t * elim_[i][k];
    }
  }
  return std::vector<long long>(
      v.begin() + static_cast<std::ptrdiff_t>(nonbasis_.size()), v.end());
}

const SolverInstance& SolverInstance::torus3() {
  static const SolverInstance inst = [] {
    SolverInstance s(Alphabet({"a", "b", "c"}), {{-1, -1, 1}}, {"a", "b"});
    s.name_ = "torus3";
    return s;
  }();
  return inst;
}

const SolverInstance& SolverInstance::free2() {
  static const SolverInstance inst = [] {
    SolverInstance s(Alphabet({"a", "b"}), {}, {"a", "b"});
    s.name_ = "free2";
    return s;
  }();
  return inst;
}

const SolverInstance& SolverInstance::by_name(const std::string& name) {
  if (name == "torus3") return torus3();
  if (name == "free2") return free2();
  throw std::invalid_argument("unknown solver instance \"" + name + "\"");
}

bool normal_form_less(const NormalForm& a, const NormalForm& b) {
  if (a.central != b.central) return a.central < b.central;
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  return a.word < b.word;
}

NormalForm nf_identity(const SolverInstance& inst) {
  return NormalForm{std::vector<long long>(inst.basis_size(), 0), {}};
}

namespace {

// Appends positive letters onto a reduction stack, collecting one full
// square per deleted adjacent pair.
void push_reduce(std::vector<int>& stack, std::vector<long long>& sq,
                 const std::vector<int>& letters) {
  for (int x : letters) {
    if (!stack.empty() && stack.back() == x) {
      stack.pop_back();
      sq[static_cast<std::size_t>(x)] += 1;
    } else {
      stack.push_back(x);
    }
  }
}

void add_into(std::vector<long long>& x, const std::vector<long long>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] += y[i];
  }
}

}  // namespace

NormalForm normal_form(const SolverInstance& inst, const Word& w) {
  validate_word(w, inst.alphabet());
  std::vector<long long> sq(inst.alphabet().size(), 0);
  std::vector<int> stack;
  for (const Letter& x : w) {
    if (x.sign < 0) {
      sq[static_cast<std::size_t>(x.gen)] -= 1;  // x^-1 = x^-2 x
    }
    push_reduce(stack, sq, {x.gen});
  }
  return NormalForm{inst.canon_central(sq), std::move(stack)};
}

NormalForm multiply(const SolverInstance& inst, const NormalForm& g,
                    const NormalForm& h) {
  if (g.central.size() != inst.basis_size() ||
      h.central.size() != inst.basis_size()) {
    throw std::invalid_argument("normal form does not match instance");
  }
  std::vector<long long> sq(inst.alphabet().size(), 0);
  std::vector<int> stack = g.word;
  push_reduce(stack, sq, h.word);
  std::vector<long long> central = inst.canon_central(sq);
  add_into(central, g.central);
  add_into(central, h.central);
  return NormalForm{std::move(central), std::move(stack)};
}

NormalForm invert(const SolverInstance& inst, const NormalForm& g) {
  // Letter by letter x^-1 = x^-2 x, so the word part reverses and each
  // letter contributes one negative square.
  std::vector<long long> sq(inst.alphabet().size(), 0);
  for (int x : g.word) {
    sq[static_cast<std::size_t>(x)] -= 1;
  }
  std::vector<long long> central = inst.canon_central(sq);
  for (std::size_t i = 0; i < central.size(); ++i) {
    central[i] -= g.central[i];
  }
  std::vector<int> word(g.word.rbegin(), g.word.rend());
  return NormalForm{std::move(central), std::move(word)};
}

Word to_word(const SolverInstance& inst, const NormalForm& g) {
  Word w;
  for (std::size_t i = 0; i < inst.basis_size(); ++i) {
    long long k = g.central[i];
    int sign = k < 0 ? -1 : +1;
    for (long long t = 0; t < 2 * std::llabs(k); ++t) {
      w.push_back(Letter{inst.basis_gen(i), sign});
    }
  }
  for (int x : g.word) {
    w.push_back(pos(x));
  }
  return w;
}

WeightMap weights(const SolverInstance& inst, const NormalForm& g) {
  if (!inst.weights_valid()) {
    throw std::invalid_argument(
        "weight homomorphisms are not defined for this instance");
  }
  WeightMap wm;
  wm.by_basis.resize(inst.basis_size(), 0);
  for (std::size_t y = 0; y < inst.basis_size(); ++y) {
    long long v = 0;
    for (std::size_t x = 0; x < inst.basis_size(); ++x) {
      if (x != y) {
        v += 2 * g.central[x];
      }
    }
    for (int letter : g.word) {
      if (letter != inst.basis_gen(y)) {
        v += 1;
      }
    }
    wm.by_basis[y] = v;
  }
  if (inst.basis_size() == 2) {
    // L(g) = first^(l-hat_second) second^(l-hat_first)
    auto app = [&](int gen, long long e) {
      int sign = e < 0 ? -1 : +1;
      for (long long t = 0; t < std::llabs(e); ++t) {
        wm.l_word.push_back(Letter{gen, sign});
      }
    };
    app(inst.basis_gen(0), wm.by_basis[1]);
    app(inst.basis_gen(1), wm.by_basis[0]);
  }
  return wm;
}

std::vector<int> coxeter_reduce(const std::vector<int>& letters) {
  std::vector<int> stack;
  for (int x : letters) {
    if (!stack.empty() && stack.back() == x) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return stack;
}

namespace {

// Strips equal first/last letters, returning the cyclically reduced core
// and the conjugator q with q u q^-1 = core (last stripped letter first).
std::pair<std::vector<int>, std::vector<int>> cyclic_reduce(
    std::vector<int> w) {
  std::vector<int> conj;
  while (w.size() >= 2 && w.front() == w.back()) {
    conj.insert(conj.begin(), w.front());
    w.erase(w.begin());
    w.pop_back();
  }
  return {std::move(w), std::move(conj)};
}

}  // namespace

std::optional<std::vector<int>> coxeter_conjugate(const std::vector<int>& u,
                                                  const std::vector<int>& v) {
  auto [u0, q] = cyclic_reduce(u);
  auto [v0, s] = cyclic_reduce(v);
  if (u0.size() != v0.size()) {
    return std::nullopt;
  }
  const std::size_t n = u0.size();
  std::optional<std::size_t> rot;
  if (n == 0) {
    rot = 0;
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      bool match = true;
      for (std::size_t i = 0; i < n && match; ++i) {
        match = u0[(k + i) % n] == v0[i];
      }
      if (match) {
        rot = k;
        break;
      }
    }
  }
  if (!rot) {
    return std::nullopt;
  }
  // v0 = beta u0 beta^-1 with beta the rotated-off suffix; the witness is
  // s^-1 beta q reduced (inverses are reversals in W).
  std::vector<int> w(s.rbegin(), s.rend());
  if (*rot != 0) {
    w.insert(w.end(), u0.begin() + static_cast<std::ptrdiff_t>(*rot),
             u0.end());
  }
  w.insert(w.end(), q.begin(), q.end());
  return coxeter_reduce(w);
}

std::optional<NormalForm> conjugacy(const SolverInstance& inst,
                                    const NormalForm& g,
                                    const NormalForm& h) {
  if (weights(inst, g).by_basis != weights(inst, h).by_basis) {
    return std::nullopt;
  }
  auto w = coxeter_conjugate(g.word, h.word);
  if (!w) {
    return std::nullopt;
  }
  return NormalForm{std::vector<long long>(inst.basis_size(), 0),
                    std::move(*w)};
}

bool is_positive(const SolverInstance& inst, const NormalForm& g) {
  (void)inst;
  return std::all_of(g.central.begin(), g.central.end(),
                     [](long long k) { return k >= 0; });
}

bool divides(const SolverInstance& inst, const NormalForm& d,
             const NormalForm& g, Side side) {
  if (!is_positive(inst, d) || !is_positive(inst, g)) {
    throw std::invalid_argument("divides requires positive arguments");
  }
  if (side == Side::left) {
    return is_positive(inst, multiply(inst, invert(inst, d), g));
  }
  return is_positive(inst, multiply(inst, g, invert(inst, d)));
}

GarsideDecomposition garside_decompose(const SolverInstance& inst,
                                       const NormalForm& g) {
  if (inst.basis_size() == 0) {
    throw std::invalid_argument("instance has no central basis");
  }
  long long m = *std::min_element(g.central.begin(), g.central.end());
  GarsideDecomposition out;
  out.j = -m;
  out.positive_part = g;
  for (auto& k : out.positive_part.central) {
    k += out.j;
  }
  return out;
}

namespace {

struct Enumerator {
  const SolverInstance& inst;
  std::vector<long long> per_eff;  // effective per-coordinate bounds
  long long total_eff;
  bool has_total;
  std::vector<NormalForm> out;
  std::vector<long long> central;
  std::vector<long long> cur;  // current l-hat values
  std::vector<int> word;

  bool within(long long extra_per_coord_ok) const {
    (void)extra_per_coord_ok;
    long long total = 0;
    for (std::size_t y = 0; y < cur.size(); ++y) {
      if (cur[y] > per_eff[y]) return false;
      total += cur[y];
    }
    return !has_total || total <= total_eff;
  }

  void words() {
    out.push_back(NormalForm{central, word});
    for (std::size_t x = 0; x < inst.alphabet().size(); ++x) {
      if (!word.empty() && word.back() == static_cast<int>(x)) {
        continue;  // stay reduced
      }
      for (std::size_t y = 0; y < cur.size(); ++y) {
        cur[y] += (static_cast<int>(x) == inst.basis_gen(y)) ? 0 : 1;
      }
      if (within(0)) {
        word.push_back(static_cast<int>(x));
        words();
        word.pop_back();
      }
      for (std::size_t y = 0; y < cur.size(); ++y) {
        cur[y] -= (static_cast<int>(x) == inst.basis_gen(y)) ? 0 : 1;
      }
    }
  }

  void centrals(std::size_t i) {
    if (i == inst.basis_size()) {
      words();
      return;
    }
    for (long long k = 0;; ++k) {
      central[i] = k;
      for (std::size_t y = 0; y < cur.size(); ++y) {
        if (y != i) cur[y] += 2 * k;
      }
      bool ok = within(0);
      if (ok) {
        centrals(i + 1);
      }
      for (std::size_t y = 0; y < cur.size(); ++y) {
        if (y != i) cur[y] -= 2 * k;
      }
      central[i] = 0;
      if (!ok) {
        break;
      }
    }
  }
};

}  // namespace

std::vector<NormalForm> enumerate_positive(const SolverInstance& inst,
                                           const WeightBounds& bounds) {
  if (inst.basis_size() < 2) {
    throw std::invalid_argument(
        "enumeration needs at least two basis generators to be finite");
  }
  bool all_per = bounds.per_basis.size() >= inst.basis_size();
  for (std::size_t y = 0; all_per && y < inst.basis_size(); ++y) {
    all_per = bounds.per_basis[y].has_value();
  }
  if (!all_per && !bounds.total) {
    throw std::invalid_argument(
        "enumeration needs a total bound or a bound per basis generator");
  }
  for (std::size_t y = 0; y < bounds.per_basis.size(); ++y) {
    if (bounds.per_basis[y] && *bounds.per_basis[y] < 0) {
      throw std::invalid_argument("weight bounds must be nonnegative");
    }
  }
  if (bounds.total && *bounds.total < 0) {
    throw std::invalid_argument("weight bounds must be nonnegative");
  }

  Enumerator e{inst, {}, 0, false, {}, {}, {}, {}};
  long long per_sum = 0;
  for (std::size_t y = 0; y < inst.basis_size(); ++y) {
    long long b = bounds.total ? *bounds.total
                               : std::numeric_limits<long long>::max();
    if (bounds.per_basis.size() > y && bounds.per_basis[y]) {
      b = std::min(b, *bounds.per_basis[y]);
    }
    e.per_eff.push_back(b);
    per_sum += b;
  }
  e.has_total = bounds.total.has_value() || all_per;
  e.total_eff = bounds.total ? *bounds.total : per_sum;
  e.central.assign(inst.basis_size(), 0);
  e.cur.assign(inst.basis_size(), 0);
  e.centrals(0);
  std::sort(e.out.begin(), e.out.end(), normal_form_less);
  return e.out;
}

std::vector<NormalForm> divisor_set(const SolverInstance& inst,
                                    const NormalForm& g, Side side) {
  if (!is_positive(inst, g)) {
    throw std::invalid_argument("divisor_set requires a positive element");
  }
  WeightBounds b;
  auto wg = weights(inst, g);
  for (long long v : wg.by_basis) {
    b.per_basis.push_back(v);
  }
  std::vector<NormalForm> out;
  for (const NormalForm& d : enumerate_positive(inst, b)) {
    if (divides(inst, d, g, side)) {
      out.push_back(d);
    }
  }
  return out;
}

}  // namespace sbw
