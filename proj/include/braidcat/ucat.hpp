#ifndef BRAIDCAT_UCAT_HPP
#define BRAIDCAT_UCAT_HPP

#include <random>
#include <vector>

#include "braidcat/bmc.hpp"
#include "braidcat/equiv.hpp"
#include "braidcat/sigma.hpp"

namespace braidcat {

// The braided monoidal category underlying Sigma of a base instance: the
// vertical tensor with its unit constraints and the Eckmann-Hilton braiding.
// Models the same interface as the base instances, so every generic law
// checker runs against the derived structure unchanged.
template <typename C>
class UCat {
public:
  using Obj = SigmaObj;
  using Mor = SigmaMor<C>;

  explicit UCat(C base) : base_(std::move(base)) {}
  const C& base() const { return base_; }

  std::string name() const { return "U-sigma(" + base_.name() + ")"; }

  Obj unit_obj() const { return sigma_obj(Configuration::empty()); }
  Obj tensor_obj(const Obj& a, const Obj& b) const {
    return sigma_obj(vstack(a.witness, b.witness));
  }
  bool obj_equal(const Obj& a, const Obj& b) const { return a.key == b.key; }

  Obj src(const Mor& f) const { return f.source; }
  Obj tgt(const Mor& f) const { return f.target; }

  Mor id(const Obj& a) const { return sigma_id(base_, a); }
  Mor compose(const Mor& f, const Mor& g) const { return sigma_compose(base_, f, g); }
  Mor tensor_mor(const Mor& f, const Mor& g) const { return vtensor(base_, f, g); }
  Mor inverse(const Mor& f) const { return sigma_invert(base_, f); }

  Mor assoc(const Obj& a, const Obj& b, const Obj& c) const {
    return vassoc(base_, a, b, c);
  }
  Mor assoc_inv(const Obj& a, const Obj& b, const Obj& c) const {
    return vassoc_inv(base_, a, b, c);
  }
  Mor lunit(const Obj& a) const { return vlunit(base_, a); }
  Mor lunit_inv(const Obj& a) const { return vlunit_inv(base_, a); }
  Mor runit(const Obj& a) const { return vrunit(base_, a); }
  Mor runit_inv(const Obj& a) const { return vrunit_inv(base_, a); }

  Mor braiding(const Obj& a, const Obj& b) const { return eh_braiding(base_, a, b); }
  Mor braiding_inv(const Obj& a, const Obj& b) const {
    return sigma_invert(base_, eh_braiding(base_, a, b));
  }

  bool mor_equal(const Mor& f, const Mor& g) const { return sigma_equal(base_, f, g); }

  // Random configurations on a fixed dyadic grid; grid spots are sampled
  // without replacement so points stay pairwise distinct.
  Obj random_object(Rng& rng, int max_points = 3) const {
    std::uniform_int_distribution<int> nd(0, max_points);
    return sigma_obj(random_config(rng, random_labels(rng, nd(rng))));
  }

  Mor random_morphism(Rng& rng) const {
    std::uniform_int_distribution<int> nd(0, 3);
    std::vector<Word> labels = random_labels(rng, nd(rng));
    Configuration src = random_config(rng, labels);
    int n = static_cast<int>(labels.size());
    BraidWord braid = FreeCat::random_braid(rng, n, 3);
    Permutation p = underlying_permutation(braid);
    std::vector<Word> permuted(labels.size(), Word::unit());
    for (int i = 1; i <= n; ++i) permuted[p.apply(i) - 1] = labels[i - 1];
    Configuration tgt = random_config(rng, permuted);
    auto f = eval_strand_braid(base_, labels, braid);
    return Mor{sigma_obj(src), sigma_obj(tgt), canonical_rep(src), canonical_rep(tgt),
               std::move(f)};
  }

  std::string mor_to_string(const Mor& f) const { return sigma_mor_to_string(base_, f); }

private:
  std::vector<Word> random_labels(Rng& rng, int count) const {
    std::vector<Word> out;
    for (int i = 0; i < count; ++i) {
      Word w = base_.random_object(rng, 1);
      out.push_back(w.is_unit() ? base_.random_object(rng, 1) : w);
    }
    return out;
  }

  Configuration random_config(Rng& rng, const std::vector<Word>& labels) const {
    // Coordinates are odd multiples of 1/16 so the grid has 8 distinct spots
    // per axis; labels are assigned in canonical order of the chosen spots.
    std::uniform_int_distribution<int> cd(0, 7);
    std::vector<LPoint> pts;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (;;) {
        Dyadic x(2 * cd(rng) + 1, 4);
        Dyadic y(2 * cd(rng) + 1, 4);
        bool clash = false;
        for (const LPoint& p : pts)
          if (p.x == x && p.y == y) clash = true;
        if (clash) continue;
        pts.push_back(LPoint{x, y, Word::unit()});
        break;
      }
    }
    std::sort(pts.begin(), pts.end(), [](const LPoint& a, const LPoint& b) {
      if (a.y != b.y) return b.y < a.y;
      return a.x < b.x;
    });
    for (std::size_t i = 0; i < labels.size(); ++i) pts[i].label = labels[i];
    return Configuration(std::move(pts));
  }

  C base_;
};

}  // namespace braidcat

#endif
