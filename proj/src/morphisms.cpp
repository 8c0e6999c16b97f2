#include "sbw/morphisms.hpp"

#include <sstream>
#include <stdexcept>

#include "sbw/catalog.hpp"

namespace sbw {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw std::invalid_argument("invalid parameters: " + what);
  }
}

void want(const std::vector<long long>& params, std::size_t k,
          const std::string& name) {
  if (params.size() != k) {
    throw std::invalid_argument("map " + name + " expects " +
                                std::to_string(k) + " parameter(s)");
  }
}

Word image(const Alphabet& target, const std::string& text) {
  return parse_word(text, target);
}

std::string param_suffix(const std::vector<long long>& params) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    s << (i ? "," : "") << params[i];
  }
  s << ")";
  return s.str();
}

}  // namespace

GeneratorMap builtin_map(const std::string& name,
                         const std::vector<long long>& params) {
  GeneratorMap m;
  m.provenance = name + param_suffix(params);
  if (name == "psi") {
    want(params, 3, name);
    long long n = params[0], g = params[1], p = params[2];
    m.source = build_presentation("appendix_boundary", {n, g, p}).alphabet;
    m.target = build_presentation("boundary", {n, g, p}).alphabet;
    for (long long i = 1; i <= n - 1; ++i) {
      m.images.push_back(image(m.target, "s" + std::to_string(i)));
    }
    for (long long r = 1; r <= g; ++r) {
      m.images.push_back(
          image(m.target, "d" + std::to_string(p + 2 * (r - 1)) + "^-1"));
    }
    for (long long r = 1; r <= g; ++r) {
      m.images.push_back(
          image(m.target, "d" + std::to_string(p + 2 * (r - 1) + 1) + "^-1"));
    }
    for (long long j = 1; j <= p - 1; ++j) {
      m.images.push_back(image(m.target, "d" + std::to_string(j) + "^-1"));
    }
    return m;
  }
  if (name == "psibar") {
    want(params, 3, name);
    long long n = params[0], g = params[1], p = params[2];
    m.source = build_presentation("boundary", {n, g, p}).alphabet;
    m.target = build_presentation("appendix_boundary", {n, g, p}).alphabet;
    for (long long i = 1; i <= n - 1; ++i) {
      m.images.push_back(image(m.target, "s" + std::to_string(i)));
    }
    // delta_j for j < p maps to z_j^-1; the handle deltas map to a^-1, b^-1.
    for (long long j = 1; j <= 2 * g + p - 1; ++j) {
      if (j <= p - 1) {
        m.images.push_back(image(m.target, "z" + std::to_string(j) + "^-1"));
      } else {
        long long off = j - p;  // 2(r-1) or 2(r-1)+1
        long long r = off / 2 + 1;
        if (off % 2 == 0) {
          m.images.push_back(
              image(m.target, "a" + std::to_string(r) + "^-1"));
        } else {
          m.images.push_back(
              image(m.target, "b" + std::to_string(r) + "^-1"));
        }
      }
    }
    return m;
  }
  if (name == "closed_theta") {
    want(params, 2, name);
    long long n = params[0], g = params[1];
    m.source = build_presentation("appendix_closed", {n, g}).alphabet;
    m.target = build_presentation("closed", {n, g}).alphabet;
    for (long long i = 1; i <= n - 1; ++i) {
      m.images.push_back(image(m.target, "s" + std::to_string(i) + "^-1"));
    }
    // From sigma_i = theta_i^-1, delta_2r = b_2r theta_1^-1 and
    // delta_{2r-1} = theta_1 b_{2r-1}^-1, solved for the b generators.
    for (long long r = 1; r <= 2 * g; ++r) {
      if (r % 2 == 0) {
        m.images.push_back(
            image(m.target, "d" + std::to_string(r) + " s1^-1"));
      } else {
        m.images.push_back(
            image(m.target, "d" + std::to_string(r) + "^-1 s1^-1"));
      }
    }
    return m;
  }
  if (name == "torus_abc") {
    want(params, 0, name);
    m.source = Alphabet({"a", "b", "c"});
    m.target = build_presentation("torus_n", {2}).alphabet;
    m.images.push_back(image(m.target, "d2"));
    m.images.push_back(image(m.target, "d1"));
    m.images.push_back(image(m.target, "d2 d1 s1^-1"));
    return m;
  }
  if (name == "torus_abc_inv") {
    want(params, 0, name);
    m.source = build_presentation("torus_n", {2}).alphabet;
    m.target = Alphabet({"a", "b", "c"});
    m.images.push_back(image(m.target, "c^-1 a b"));  // s1
    m.images.push_back(image(m.target, "b"));         // d1
    m.images.push_back(image(m.target, "a"));         // d2
    return m;
  }
  if (name == "planar_rho") {
    require(params.size() >= 2, "planar_rho expects n, p, then I");
    long long n = params[0], p = params[1];
    std::vector<long long> I(params.begin() + 2, params.end());
    m.source = build_presentation("planar", params).alphabet;
    m.target = build_presentation("boundary", {n, 0, p}).alphabet;
    for (long long i = 1; i <= n - 1; ++i) {
      m.images.push_back(image(m.target, "s" + std::to_string(i)));
    }
    std::sort(I.begin(), I.end());
    // rho_{r_j} = (s_{r-1} ... s_1) d_{p-j} (s_{r-1} ... s_1)^-1 with the
    // index read as r = r_j.
    for (std::size_t j = 0; j < I.size(); ++j) {
      long long r = I[j];
      Word w;
      for (long long i = r - 1; i >= 1; --i) {
        w.push_back(pos(m.target.index("s" + std::to_string(i))));
      }
      Word mid = {pos(m.target.index(
          "d" + std::to_string(p - static_cast<long long>(j) - 1)))};
      Word out = concat(concat(w, mid), invert_word(w));
      m.images.push_back(out);
    }
    return m;
  }
  throw std::invalid_argument("unknown built-in map \"" + name + "\"");
}

Word apply_map(const GeneratorMap& m, const Word& w) {
  validate_word(w, m.source);
  Word out;
  for (const Letter& x : w) {
    const Word& img = m.images.at(static_cast<std::size_t>(x.gen));
    if (x.sign > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      Word inv = invert_word(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

GeneratorMap compose(const GeneratorMap& outer, const GeneratorMap& inner) {
  if (!(inner.target == outer.source)) {
    throw std::invalid_argument(
        "compose: inner target alphabet must equal outer source alphabet");
  }
  GeneratorMap m;
  m.source = inner.source;
  m.target = outer.target;
  m.provenance = outer.provenance + " . " + inner.provenance;
  for (const Word& img : inner.images) {
    m.images.push_back(apply_map(outer, img));
  }
  return m;
}

Presentation source_presentation_for(const std::string& name,
                                     const std::vector<long long>& params) {
  if (name == "psi") return build_presentation("appendix_boundary", params);
  if (name == "psibar") return build_presentation("boundary", params);
  if (name == "closed_theta") {
    return build_presentation("appendix_closed", params);
  }
  if (name == "torus_abc") return build_presentation("torus2_v2", {});
  if (name == "torus_abc_inv") return build_presentation("torus_n", {2});
  if (name == "planar_rho") return build_presentation("planar", params);
  throw std::invalid_argument("unknown built-in map \"" + name + "\"");
}

Presentation target_presentation_for(const std::string& name,
                                     const std::vector<long long>& params) {
  if (name == "psi") return build_presentation("boundary", params);
  if (name == "psibar") {
    return build_presentation("appendix_boundary", params);
  }
  if (name == "closed_theta") return build_presentation("closed", params);
  if (name == "torus_abc") return build_presentation("torus_n", {2});
  if (name == "torus_abc_inv") return build_presentation("torus2_v2", {});
  if (name == "planar_rho") {
    require(params.size() >= 2, "planar_rho expects n, p, then I");
    return build_presentation("boundary", {params[0], 0, params[1]});
  }
  throw std::invalid_argument("unknown built-in map \"" + name + "\"");
}

std::vector<RelatorReport> verify_map(const GeneratorMap& m,
                                      const Presentation& source,
                                      const SolverInstance& prover) {
  if (!(m.target == prover.alphabet())) {
    throw std::invalid_argument(
        "prover instance alphabet does not match the map target");
  }
  std::vector<RelatorReport> out;
  for (const Relation& r : source.relations) {
    RelatorReport rep;
    rep.label = r.label;
    rep.lhs_image = apply_map(m, r.lhs);
    rep.rhs_image = apply_map(m, r.rhs);
    rep.status = normal_form(prover, rep.lhs_image) ==
                         normal_form(prover, rep.rhs_image)
                     ? RelatorStatus::verified
                     : RelatorStatus::unknown;
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<RelatorReport> verify_map(const GeneratorMap& m,
                                      const Presentation& source,
                                      const Presentation& target,
                                      const SearchLimits& limits) {
  if (!(m.target == target.alphabet)) {
    throw std::invalid_argument(
        "target presentation alphabet does not match the map target");
  }
  std::vector<RelatorReport> out;
  for (const Relation& r : source.relations) {
    RelatorReport rep;
    rep.label = r.label;
    rep.lhs_image = apply_map(m, r.lhs);
    rep.rhs_image = apply_map(m, r.rhs);
    EqualityVerdict v = bfs_equal(target, rep.lhs_image, rep.rhs_image,
                                  Mode::group, limits);
    // Verified requires a path that replays.
    rep.status = v.equal && replay_path(target, rep.lhs_image, v.path) ==
                                rep.rhs_image
                     ? RelatorStatus::verified
                     : RelatorStatus::unknown;
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace sbw
