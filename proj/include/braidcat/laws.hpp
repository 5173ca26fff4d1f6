#ifndef BRAIDCAT_LAWS_HPP
#define BRAIDCAT_LAWS_HPP

#include <sstream>
#include <string>
#include <vector>

#include "braidcat/ucat.hpp"

namespace braidcat {

// Instance-agnostic law checkers. Each checker decides a single diagram for
// concrete inputs; the suite runners sample seeded inputs and aggregate
// failures with replayable counterexample text.

struct LawReport {
  std::string law;
  std::string instance;
  int cases = 0;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
};

std::string law_report_text(const std::vector<LawReport>& reports);
std::string law_report_json(const std::vector<LawReport>& reports);

template <typename C>
bool check_pentagon(const C& cat, const typename C::Obj& a, const typename C::Obj& b,
                    const typename C::Obj& c, const typename C::Obj& d) {
  auto ab = cat.tensor_obj(a, b);
  auto cd = cat.tensor_obj(c, d);
  auto bc = cat.tensor_obj(b, c);
  auto route1 = cat.compose(cat.tensor_mor(cat.assoc(a, b, c), cat.id(d)),
                            cat.compose(cat.assoc(a, bc, d),
                                        cat.tensor_mor(cat.id(a), cat.assoc(b, c, d))));
  auto route2 = cat.compose(cat.assoc(ab, c, d), cat.assoc(a, b, cd));
  return cat.mor_equal(route1, route2);
}

template <typename C>
bool check_triangle(const C& cat, const typename C::Obj& a, const typename C::Obj& b) {
  auto route1 = cat.compose(cat.assoc(a, cat.unit_obj(), b),
                            cat.tensor_mor(cat.id(a), cat.lunit(b)));
  auto route2 = cat.tensor_mor(cat.runit(a), cat.id(b));
  return cat.mor_equal(route1, route2);
}

template <typename C>
bool check_hexagons(const C& cat, const typename C::Obj& a, const typename C::Obj& b,
                    const typename C::Obj& c) {
  auto bc = cat.tensor_obj(b, c);
  auto ab = cat.tensor_obj(a, b);
  // sigma(a, b (x) c) factors through the one-step braidings.
  auto h1_lhs = cat.compose(cat.assoc(a, b, c),
                            cat.compose(cat.braiding(a, bc), cat.assoc(b, c, a)));
  auto h1_rhs = cat.compose(cat.tensor_mor(cat.braiding(a, b), cat.id(c)),
                            cat.compose(cat.assoc(b, a, c),
                                        cat.tensor_mor(cat.id(b), cat.braiding(a, c))));
  if (!cat.mor_equal(h1_lhs, h1_rhs)) return false;
  // sigma(a (x) b, c) likewise.
  auto h2_lhs = cat.compose(cat.assoc_inv(a, b, c),
                            cat.compose(cat.braiding(ab, c), cat.assoc_inv(c, a, b)));
  auto h2_rhs = cat.compose(cat.tensor_mor(cat.id(a), cat.braiding(b, c)),
                            cat.compose(cat.assoc_inv(a, c, b),
                                        cat.tensor_mor(cat.braiding(a, c), cat.id(b))));
  return cat.mor_equal(h2_lhs, h2_rhs);
}

template <typename C>
bool check_braiding_natural(const C& cat, const typename C::Mor& f, const typename C::Mor& g) {
  auto lhs = cat.compose(cat.tensor_mor(f, g), cat.braiding(cat.tgt(f), cat.tgt(g)));
  auto rhs = cat.compose(cat.braiding(cat.src(f), cat.src(g)), cat.tensor_mor(g, f));
  return cat.mor_equal(lhs, rhs);
}

template <typename C>
bool check_structural_natural(const C& cat, const typename C::Mor& f, const typename C::Mor& g,
                              const typename C::Mor& h) {
  auto assoc_lhs = cat.compose(cat.tensor_mor(cat.tensor_mor(f, g), h),
                               cat.assoc(cat.tgt(f), cat.tgt(g), cat.tgt(h)));
  auto assoc_rhs = cat.compose(cat.assoc(cat.src(f), cat.src(g), cat.src(h)),
                               cat.tensor_mor(f, cat.tensor_mor(g, h)));
  if (!cat.mor_equal(assoc_lhs, assoc_rhs)) return false;
  auto unit_id = cat.id(cat.unit_obj());
  auto l_lhs = cat.compose(cat.tensor_mor(unit_id, f), cat.lunit(cat.tgt(f)));
  auto l_rhs = cat.compose(cat.lunit(cat.src(f)), f);
  if (!cat.mor_equal(l_lhs, l_rhs)) return false;
  auto r_lhs = cat.compose(cat.tensor_mor(f, unit_id), cat.runit(cat.tgt(f)));
  auto r_rhs = cat.compose(cat.runit(cat.src(f)), f);
  return cat.mor_equal(r_lhs, r_rhs);
}

// The full braided-monoidal law suite on seeded random inputs.
template <typename C>
std::vector<LawReport> run_bmc_laws(const C& cat, std::uint64_t seed, int cases) {
  Rng rng(seed);
  LawReport pentagon{"pentagon", cat.name()};
  LawReport triangle{"triangle", cat.name()};
  LawReport hexagons{"hexagons", cat.name()};
  LawReport naturality{"naturality", cat.name()};

  for (int k = 0; k < cases; ++k) {
    auto a = cat.random_object(rng);
    auto b = cat.random_object(rng);
    auto c = cat.random_object(rng);
    auto d = cat.random_object(rng);
    pentagon.cases++;
    if (!check_pentagon(cat, a, b, c, d))
      pentagon.failures.push_back("case " + std::to_string(k));
    triangle.cases++;
    if (!check_triangle(cat, a, b)) triangle.failures.push_back("case " + std::to_string(k));
    hexagons.cases++;
    if (!check_hexagons(cat, a, b, c))
      hexagons.failures.push_back("case " + std::to_string(k));

    auto f = cat.random_morphism(rng);
    auto g = cat.random_morphism(rng);
    auto h = cat.random_morphism(rng);
    naturality.cases++;
    if (!check_braiding_natural(cat, f, g) || !check_structural_natural(cat, f, g, h))
      naturality.failures.push_back("case " + std::to_string(k));
  }
  return {pentagon, triangle, hexagons, naturality};
}

// The two-tensor structure of the Sigma construction: horizontal strictness
// on objects and representatives, vertical coherence as clique maps, and
// strict interchange.
template <typename C>
std::vector<LawReport> check_two_monoidal(const C& base, std::uint64_t seed, int cases) {
  UCat<C> u(base);
  Rng rng(seed);
  std::string inst = "sigma(" + base.name() + ")";
  LawReport horiz{"horizontal-strictness", inst};
  LawReport vert{"vertical-coherence", inst};
  LawReport inter{"interchange", inst};

  for (int k = 0; k < cases; ++k) {
    auto tag = [&](const char* what) {
      return "case " + std::to_string(k) + " (" + what + ")";
    };

    SigmaObj X = u.random_object(rng);
    SigmaObj Y = u.random_object(rng);
    SigmaObj Z = u.random_object(rng);

    horiz.cases++;
    {
      Configuration xy_z = hstack(hstack(X.witness, Y.witness), Z.witness);
      Configuration x_yz = hstack(X.witness, hstack(Y.witness, Z.witness));
      if (slide_key(xy_z) != slide_key(x_yz)) horiz.failures.push_back(tag("object assoc"));
      Configuration e = Configuration::empty();
      if (slide_key(hstack(X.witness, e)) != X.key ||
          slide_key(hstack(e, X.witness)) != X.key)
        horiz.failures.push_back(tag("object units"));
      auto ha = hassoc(base, X, Y, Z);
      if (!base.mor_equal(ha.f, base.id(ha.src_rep.word)))
        horiz.failures.push_back(tag("assoc representative"));
      auto hl = hlunit(base, X);
      auto hr = hrunit(base, X);
      if (!base.mor_equal(hl.f, base.id(hl.src_rep.word)) ||
          !base.mor_equal(hr.f, base.id(hr.src_rep.word)))
        horiz.failures.push_back(tag("unit representatives"));
      auto f = u.random_morphism(rng);
      auto g = u.random_morphism(rng);
      auto h = u.random_morphism(rng);
      if (!sigma_equal(base, htensor(base, htensor(base, f, g), h),
                       htensor(base, f, htensor(base, g, h))))
        horiz.failures.push_back(tag("morphism assoc"));
      auto e_id = sigma_id(base, sigma_obj(Configuration::empty()));
      if (!sigma_equal(base, htensor(base, f, e_id), f) ||
          !sigma_equal(base, htensor(base, e_id, f), f))
        horiz.failures.push_back(tag("morphism units"));
    }

    vert.cases++;
    {
      SigmaObj D = u.random_object(rng);
      if (!check_pentagon(u, X, Y, Z, D)) vert.failures.push_back(tag("pentagon"));
      if (!check_triangle(u, X, Y)) vert.failures.push_back(tag("triangle"));
    }

    inter.cases++;
    {
      auto f = u.random_morphism(rng);
      auto g = u.random_morphism(rng);
      auto h = u.random_morphism(rng);
      auto j = u.random_morphism(rng);
      if (!interchange_holds(base, f, g, h, j)) {
        inter.failures.push_back(tag(("interchange; f source " +
                                      config_to_json(f.source.witness))
                                         .c_str()));
      }
    }
  }
  return {horiz, vert, inter};
}

}  // namespace braidcat

#endif
