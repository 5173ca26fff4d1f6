#ifndef BRAIDCAT_EQUIV_HPP
#define BRAIDCAT_EQUIV_HPP

#include <vector>

#include "braidcat/sigma.hpp"

namespace braidcat {

// The comparison functor W from the ambient category into the braided
// monoidal category underlying the Sigma construction, plus executable
// checks that it is a braided monoidal equivalence.

inline SigmaObj W_obj(const Word& b) { return sigma_obj(Configuration::singleton(b)); }

template <typename C>
SigmaMor<C> W_mor(const C& cat, const typename C::Mor& f) {
  SigmaObj src = W_obj(cat.src(f));
  SigmaObj tgt = W_obj(cat.tgt(f));
  return make_sigma_mor(cat, src, tgt, canonical_rep(src.witness), canonical_rep(tgt.witness),
                        f);
}

// Monoidal constraint W(a) / W(b) -> W(a (x) b), represented by the identity
// of a (x) b: the canonical words of the two objects coincide.
template <typename C>
SigmaMor<C> phi(const C& cat, const Word& a, const Word& b) {
  Configuration pair = vstack(Configuration::singleton(a), Configuration::singleton(b));
  SigmaObj src = sigma_obj(pair);
  SigmaObj tgt = W_obj(Word::tensor(a, b));
  LinearRep rs = canonical_rep(pair);
  LinearRep rt = canonical_rep(tgt.witness);
  auto f = cat.id(rs.word);
  return SigmaMor<C>{src, tgt, std::move(rs), std::move(rt), std::move(f)};
}

// Unit constraint: the empty box -> W(I), represented by the identity of I.
template <typename C>
SigmaMor<C> phi_unit(const C& cat) {
  Configuration e = Configuration::empty();
  SigmaObj src = sigma_obj(e);
  SigmaObj tgt = W_obj(Word::unit());
  LinearRep rs = canonical_rep(e);
  LinearRep rt = canonical_rep(tgt.witness);
  auto f = cat.id(Word::unit());
  return SigmaMor<C>{src, tgt, std::move(rs), std::move(rt), std::move(f)};
}

template <typename C>
struct Witness {
  Word object;          // <X>, the canonical parenthesisation
  SigmaMor<C> iso;      // X -> W(object), represented by the identity
  SigmaMor<C> iso_inv;  // W(object) -> X
};

// Essential surjectivity: any slide clique is isomorphic to the image of its
// canonical parenthesisation, via a clique map represented by an identity.
template <typename C>
Witness<C> ess_surj_witness(const C& cat, const SigmaObj& X) {
  LinearRep rx = canonical_rep(X.witness);
  Word b = rx.word;
  SigmaObj wb = W_obj(b);
  LinearRep rw = canonical_rep(wb.witness);
  auto f = cat.id(b);
  SigmaMor<C> iso{X, wb, rx, rw, f};
  SigmaMor<C> inv{wb, X, rw, rx, f};
  return Witness<C>{std::move(b), std::move(iso), std::move(inv)};
}

// Faithfulness and fullness, sampled: distinct morphisms stay distinct, and
// any representative round-trips through normalization and W.
template <typename C>
bool check_faithful_full(const C& cat, const std::vector<typename C::Mor>& sample) {
  for (std::size_t i = 0; i < sample.size(); ++i) {
    SigmaMor<C> wi = W_mor(cat, sample[i]);
    if (!cat.mor_equal(normalize(cat, wi).f, sample[i])) return false;  // W f recovers f
    if (!sigma_equal(cat, W_mor(cat, normalize(cat, wi).f), wi)) return false;
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      if (!(cat.src(sample[i]) == cat.src(sample[j]))) continue;
      if (!(cat.tgt(sample[i]) == cat.tgt(sample[j]))) continue;
      bool in_b = cat.mor_equal(sample[i], sample[j]);
      bool in_sigma = sigma_equal(cat, wi, W_mor(cat, sample[j]));
      if (in_b != in_sigma) return false;
    }
  }
  return true;
}

// The braided-functor square: eh posted against phi equals phi posted
// against W(sigma).
template <typename C>
bool check_braided(const C& cat, const Word& a, const Word& b) {
  SigmaMor<C> lhs =
      sigma_compose(cat, eh_braiding(cat, W_obj(a), W_obj(b)), phi(cat, b, a));
  SigmaMor<C> rhs = sigma_compose(cat, phi(cat, a, b), W_mor(cat, cat.braiding(a, b)));
  return sigma_equal(cat, lhs, rhs);
}

// Naturality of phi: phi . vtensor(Wf, Wg) = W(f (x) g) . phi.
template <typename C>
bool check_phi_natural(const C& cat, const typename C::Mor& f, const typename C::Mor& g) {
  SigmaMor<C> lhs = sigma_compose(
      cat, vtensor(cat, W_mor(cat, f), W_mor(cat, g)), phi(cat, cat.tgt(f), cat.tgt(g)));
  SigmaMor<C> rhs = sigma_compose(cat, phi(cat, cat.src(f), cat.src(g)),
                                  W_mor(cat, cat.tensor_mor(f, g)));
  return sigma_equal(cat, lhs, rhs);
}

// The associativity coherence hexagonal prism for the monoidal functor:
// around one face via vassoc and phi, around the other via W(assoc).
template <typename C>
bool check_phi_assoc(const C& cat, const Word& a, const Word& b, const Word& c) {
  SigmaObj wa = W_obj(a), wb = W_obj(b), wc = W_obj(c);
  SigmaMor<C> lhs = sigma_compose(
      cat,
      sigma_compose(cat, vassoc(cat, wa, wb, wc),
                    vtensor(cat, sigma_id(cat, wa), phi(cat, b, c))),
      phi(cat, a, Word::tensor(b, c)));
  SigmaMor<C> rhs = sigma_compose(
      cat,
      sigma_compose(cat, vtensor(cat, phi(cat, a, b), sigma_id(cat, wc)),
                    phi(cat, Word::tensor(a, b), c)),
      W_mor(cat, cat.assoc(a, b, c)));
  return sigma_equal(cat, lhs, rhs);
}

// Unit coherence: vlunit equals the composite through phi_unit, phi and
// W(lunit); likewise on the right.
template <typename C>
bool check_phi_units(const C& cat, const Word& a) {
  SigmaObj wa = W_obj(a);
  SigmaMor<C> lhs_l = vlunit(cat, wa);
  SigmaMor<C> rhs_l = sigma_compose(
      cat,
      sigma_compose(cat, vtensor(cat, phi_unit(cat), sigma_id(cat, wa)),
                    phi(cat, Word::unit(), a)),
      W_mor(cat, cat.lunit(a)));
  if (!sigma_equal(cat, lhs_l, rhs_l)) return false;
  SigmaMor<C> lhs_r = vrunit(cat, wa);
  SigmaMor<C> rhs_r = sigma_compose(
      cat,
      sigma_compose(cat, vtensor(cat, sigma_id(cat, wa), phi_unit(cat)),
                    phi(cat, a, Word::unit())),
      W_mor(cat, cat.runit(a)));
  return sigma_equal(cat, lhs_r, rhs_r);
}

}  // namespace braidcat

#endif
