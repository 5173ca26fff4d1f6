#include "braidcat/sigma.hpp"

#include <algorithm>

namespace braidcat {

namespace sigma_testing {

namespace {
bool g_mirrored = false;
}

void set_mirrored_crossing_convention(bool mirrored) { g_mirrored = mirrored; }
bool mirrored_crossing_convention() { return g_mirrored; }

}  // namespace sigma_testing

MediatingBraid mediating_braid(const LinearRep& rep0, const LinearRep& rep1) {
  if (rep0.gamma.source_labels != rep1.gamma.source_labels)
    throw std::invalid_argument(
        "mediating_braid: representatives do not linearise slide-equivalent configurations");
  return MediatingBraid{compose_labelled(invert_labelled(rep0.gamma), rep1.gamma)};
}

namespace {

PointBraid stack_gammas(const LinearRep& r1, const LinearRep& r2) {
  int n1 = r1.gamma.braid.strands();
  int n2 = r2.gamma.braid.strands();
  PointBraid out;
  out.braid = compose(shift(r1.gamma.braid, 0, n1 + n2), shift(r2.gamma.braid, n1, n1 + n2));
  out.source_labels = r1.gamma.source_labels;
  out.source_labels.insert(out.source_labels.end(), r2.gamma.source_labels.begin(),
                           r2.gamma.source_labels.end());
  out.target_labels = r1.gamma.target_labels;
  out.target_labels.insert(out.target_labels.end(), r2.gamma.target_labels.begin(),
                           r2.gamma.target_labels.end());
  return out;
}

void check_rep(const Configuration& X, const LinearRep& r, const char* which) {
  if (r.gamma.source_labels != canonical_labels(X))
    throw std::invalid_argument(std::string("stack_rep: ") + which +
                                " rep does not linearise its configuration");
}

}  // namespace

std::pair<Configuration, LinearRep> vstack_rep(const Configuration& X1, const LinearRep& r1,
                                               const Configuration& X2, const LinearRep& r2) {
  check_rep(X1, r1, "upper");
  check_rep(X2, r2, "lower");
  Configuration stacked = vstack(X1, X2);
  // The top half lies entirely above the bottom half, so the canonical order
  // of the stack is the two canonical orders concatenated.
  LinearRep rep;
  rep.word = Word::tensor(r1.word, r2.word);
  rep.gamma = stack_gammas(r1, r2);
  return {std::move(stacked), std::move(rep)};
}

std::pair<Configuration, LinearRep> hstack_rep(const Configuration& X1, const LinearRep& r1,
                                               const Configuration& X2, const LinearRep& r2) {
  check_rep(X1, r1, "left");
  check_rep(X2, r2, "right");

  // Tag each transformed point with (half, index within its half's canonical
  // order); the halves keep their internal canonical orders.
  struct Tagged {
    LPoint p;
    int half;  // 0 = left, 1 = right
    int idx;
  };
  std::vector<Tagged> pts;
  const auto& l = X1.points();
  const auto& r = X2.points();
  pts.reserve(l.size() + r.size());
  for (std::size_t i = 0; i < l.size(); ++i)
    pts.push_back(Tagged{LPoint{l[i].x.halved(), l[i].y, l[i].label}, 0, static_cast<int>(i)});
  for (std::size_t i = 0; i < r.size(); ++i)
    pts.push_back(Tagged{LPoint{r[i].x.halved_up(), r[i].y, r[i].label}, 1, static_cast<int>(i)});

  std::sort(pts.begin(), pts.end(), [](const Tagged& a, const Tagged& b) {
    if (a.p.y != b.p.y) return b.p.y < a.p.y;
    return a.p.x < b.p.x;
  });

  int n1 = static_cast<int>(l.size());
  int n = static_cast<int>(pts.size());

  // Order change from the interleaved canonical order to the block order
  // (left half first). Only left-past-right crossings occur; the rising
  // strand comes from the left half and passes in front, so every crossing
  // is positive.
  std::vector<int> images(n);
  std::vector<LPoint> merged;
  std::vector<Word> src_labels;
  merged.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Tagged& t = pts[i];
    images[i] = t.half == 0 ? t.idx + 1 : n1 + t.idx + 1;
    merged.push_back(t.p);
    src_labels.push_back(t.p.label);
  }

  BraidWord unshuffle = permutation_braid_word(Permutation::from_images(images));
  if (sigma_testing::mirrored_crossing_convention()) {
    std::vector<BraidGen> gens = unshuffle.gens();
    for (BraidGen& g : gens) g.sign = -g.sign;
    unshuffle = BraidWord(unshuffle.strands(), std::move(gens));
  }

  PointBraid order_change;
  order_change.braid = std::move(unshuffle);
  order_change.source_labels = std::move(src_labels);
  order_change.target_labels = r1.gamma.source_labels;
  order_change.target_labels.insert(order_change.target_labels.end(),
                                    r2.gamma.source_labels.begin(),
                                    r2.gamma.source_labels.end());

  LinearRep rep;
  rep.word = Word::tensor(r1.word, r2.word);
  rep.gamma = compose_labelled(order_change, stack_gammas(r1, r2));
  return {Configuration(std::move(merged)), std::move(rep)};
}

}  // namespace braidcat
