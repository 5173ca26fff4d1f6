#ifndef BRAIDCAT_EVAL_HPP
#define BRAIDCAT_EVAL_HPP

#include <stdexcept>
#include <vector>

#include "braidcat/braid.hpp"
#include "braidcat/words.hpp"

namespace braidcat {

// Generic evaluation of coherence and braids into any braided monoidal
// instance whose objects are Words. Every route is funnelled through the
// right-nested form, so coherence guarantees route-independence.

// The canonical coherence morphism w -> right-nested(w), built from
// associators and unitors.
template <typename C>
typename C::Mor to_right_nest(const C& cat, const Word& w);

namespace detail {

// Merge map for right-nested p, q: eval(p (x) q) -> eval(right-nested
// concatenation).
template <typename C>
typename C::Mor rn_merge(const C& cat, const Word& p, const Word& q) {
  if (p.is_unit()) return cat.lunit(q);
  if (q.is_unit()) return cat.runit(p);
  if (p.is_leaf()) return cat.id(Word::tensor(p, q));
  // p = a (x) p' with a a leaf
  Word a = p.left();
  Word rest = p.right();
  auto step = cat.assoc(a, rest, q);
  auto inner = rn_merge(cat, rest, q);
  return cat.compose(step, cat.tensor_mor(cat.id(a), inner));
}

}  // namespace detail

template <typename C>
typename C::Mor to_right_nest(const C& cat, const Word& w) {
  switch (w.kind()) {
    case Word::Kind::Unit:
    case Word::Kind::Leaf:
      return cat.id(w);
    case Word::Kind::Tensor: {
      auto ml = to_right_nest(cat, w.left());
      auto mr = to_right_nest(cat, w.right());
      auto both = cat.tensor_mor(ml, mr);
      auto merged = detail::rn_merge(cat, cat.tgt(ml), cat.tgt(mr));
      return cat.compose(both, merged);
    }
  }
  throw std::logic_error("unreachable");
}

// The canonical coherence isomorphism eval(w1) -> eval(w2); requires equal
// leaf sequences. transport(w, w) is the identity morphism.
template <typename C>
typename C::Mor transport(const C& cat, const Word& w1, const Word& w2) {
  if (flatten(w1) != flatten(w2))
    throw std::invalid_argument("transport: leaf sequences differ");
  return cat.compose(to_right_nest(cat, w1), cat.inverse(to_right_nest(cat, w2)));
}

namespace detail {

// One signed crossing of strands i, i+1 on the right-nested tensor of the
// given strand labels (labels may be compound words).
template <typename C>
typename C::Mor strand_crossing(const C& cat, const std::vector<Word>& labels, int i,
                                int sign) {
  if (i < 1 || static_cast<std::size_t>(i) >= labels.size())
    throw std::invalid_argument("crossing index out of range");
  if (i == 1) {
    const Word& u = labels[0];
    const Word& v = labels[1];
    auto cross = sign > 0 ? cat.braiding(u, v) : cat.braiding_inv(v, u);
    if (labels.size() == 2) return cross;
    Word rest = right_nest_words(std::vector<Word>(labels.begin() + 2, labels.end()));
    auto in = cat.assoc_inv(u, v, rest);
    auto mid = cat.tensor_mor(cross, cat.id(rest));
    auto out = cat.assoc(v, u, rest);
    return cat.compose(cat.compose(in, mid), out);
  }
  std::vector<Word> tail(labels.begin() + 1, labels.end());
  return cat.tensor_mor(cat.id(labels[0]), strand_crossing(cat, tail, i - 1, sign));
}

}  // namespace detail

// Functorial evaluation of a braid whose strands carry the given labels:
// a morphism from the right-nested tensor of src_labels to the right-nested
// tensor of the permuted labels.
template <typename C>
typename C::Mor eval_strand_braid(const C& cat, const std::vector<Word >& src_labels,
                                  const BraidWord& braid) {
  if (static_cast<std::size_t>(braid.strands()) != src_labels.size())
    throw std::invalid_argument("eval_strand_braid: label count != strand count");
  std::vector<Word> cur = src_labels;
  auto m = cat.id(right_nest_words(cur));
  for (const BraidGen& g : braid.gens()) {
    m = cat.compose(m, detail::strand_crossing(cat, cur, g.index, g.sign));
    std::swap(cur[g.index - 1], cur[g.index]);
  }
  return m;
}

// Evaluation of a labelled braid between chosen parenthesisations. src and
// tgt may parenthesise the strand labels arbitrarily (their leaf sequences
// must match the concatenated label leaves); an identity braid evaluates to
// transport(src, tgt).
template <typename C>
typename C::Mor eval_braid(const C& cat, const Word& src, const Word& tgt,
                           const LabelledBraid<Word>& braid) {
  auto m = eval_strand_braid(cat, braid.source_labels, braid.braid);
  auto in = transport(cat, src, cat.src(m));
  Word rn_tgt = right_nest_words(braid.target_labels);
  if (!(cat.tgt(m) == rn_tgt))
    throw std::invalid_argument("eval_braid: braid endpoints inconsistent with target labels");
  auto out = transport(cat, rn_tgt, tgt);
  return cat.compose(cat.compose(in, m), out);
}

}  // namespace braidcat

#endif
