#ifndef BRAIDCAT_BMC_HPP
#define BRAIDCAT_BMC_HPP

#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidcat/braid.hpp"
#include "braidcat/words.hpp"

namespace braidcat {

// The braided-monoidal-category interface is a compile-time concept: an
// instance provides object and morphism types with decidable equality, the
// structural isomorphisms, and seeded sampling for the law suites.
// Composition is diagrammatic throughout: compose(f, g) is f-then-g.
//
// All shipped instances use Word as the object type; they differ in what a
// morphism is and how the braiding evaluates.

using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// FreeBMC: the free weak braided monoidal category on a set of generators.
// A morphism is a braid on the leaf sequence of the source word; equality
// delegates to the Garside normal form.

struct FreeMor {
  Word src = Word::unit();
  Word tgt = Word::unit();
  BraidWord braid;  // strands = leaf count of src

  LabelledBraid<Label> labelled() const {
    LabelledBraid<Label> lb;
    lb.braid = braid;
    lb.source_labels = flatten(src);
    lb.target_labels = flatten(tgt);
    return lb;
  }
};

class FreeCat {
public:
  using Obj = Word;
  using Mor = FreeMor;

  explicit FreeCat(std::vector<Label> generators = {})
      : generators_(std::move(generators)) {
    if (generators_.empty()) {
      generators_ = {Label::intern("a"), Label::intern("b"), Label::intern("c")};
    }
  }

  std::string name() const { return "free"; }
  const std::vector<Label>& generators() const { return generators_; }

  Obj unit_obj() const { return Word::unit(); }
  Obj tensor_obj(const Obj& a, const Obj& b) const { return Word::tensor(a, b); }
  bool obj_equal(const Obj& a, const Obj& b) const { return a == b; }

  Obj src(const Mor& f) const { return f.src; }
  Obj tgt(const Mor& f) const { return f.tgt; }

  Mor id(const Obj& a) const {
    return Mor{a, a, BraidWord(static_cast<int>(a.leaf_count()))};
  }

  Mor compose(const Mor& f, const Mor& g) const {
    if (!(f.tgt == g.src)) throw std::invalid_argument("free compose: objects do not match");
    return Mor{f.src, g.tgt, braidcat::compose(f.braid, g.braid)};
  }

  Mor tensor_mor(const Mor& f, const Mor& g) const {
    int nf = f.braid.strands(), ng = g.braid.strands();
    BraidWord b = braidcat::compose(shift(f.braid, 0, nf + ng), shift(g.braid, nf, nf + ng));
    return Mor{Word::tensor(f.src, g.src), Word::tensor(f.tgt, g.tgt), std::move(b)};
  }

  Mor inverse(const Mor& f) const { return Mor{f.tgt, f.src, invert(f.braid)}; }

  // Coherence constraints are identity braids between reparenthesised words.
  Mor assoc(const Obj& a, const Obj& b, const Obj& c) const {
    return coherence(Word::tensor(Word::tensor(a, b), c), Word::tensor(a, Word::tensor(b, c)));
  }
  Mor assoc_inv(const Obj& a, const Obj& b, const Obj& c) const {
    return coherence(Word::tensor(a, Word::tensor(b, c)), Word::tensor(Word::tensor(a, b), c));
  }
  Mor lunit(const Obj& a) const { return coherence(Word::tensor(Word::unit(), a), a); }
  Mor lunit_inv(const Obj& a) const { return coherence(a, Word::tensor(Word::unit(), a)); }
  Mor runit(const Obj& a) const { return coherence(Word::tensor(a, Word::unit()), a); }
  Mor runit_inv(const Obj& a) const { return coherence(a, Word::tensor(a, Word::unit())); }

  Mor braiding(const Obj& a, const Obj& b) const {
    auto na = static_cast<int>(a.leaf_count());
    auto nb = static_cast<int>(b.leaf_count());
    return Mor{Word::tensor(a, b), Word::tensor(b, a), block_braiding(na, nb)};
  }
  Mor braiding_inv(const Obj& a, const Obj& b) const { return inverse(braiding(a, b)); }

  bool mor_equal(const Mor& f, const Mor& g) const {
    return f.src == g.src && f.tgt == g.tgt && braid_equal(f.braid, g.braid);
  }

  Obj random_object(Rng& rng, int max_leaves = 3) const {
    std::uniform_int_distribution<int> nd(0, max_leaves);
    int n = nd(rng);
    std::vector<Label> leaves;
    std::uniform_int_distribution<std::size_t> gd(0, generators_.size() - 1);
    for (int i = 0; i < n; ++i) leaves.push_back(generators_[gd(rng)]);
    return random_shape(leaves, 0, leaves.size(), rng);
  }

  Mor random_morphism(Rng& rng) const {
    Obj a = random_object(rng);
    int n = static_cast<int>(a.leaf_count());
    BraidWord b = random_braid(rng, n, 4);
    Permutation p = underlying_permutation(b);
    std::vector<Label> ls = flatten(a);
    std::vector<Label> permuted;
    permuted.reserve(ls.size());
    for (int i = 1; i <= n; ++i) permuted.push_back(ls[p.apply(i) - 1]);
    return Mor{a, right_nest(permuted), std::move(b)};
  }

  static BraidWord random_braid(Rng& rng, int strands, int max_len) {
    if (strands < 2) return BraidWord(strands);
    std::uniform_int_distribution<int> ld(0, max_len);
    std::uniform_int_distribution<int> id(1, strands - 1);
    std::uniform_int_distribution<int> sd(0, 1);
    std::vector<BraidGen> gens;
    int len = ld(rng);
    for (int i = 0; i < len; ++i) gens.push_back(BraidGen{id(rng), sd(rng) ? +1 : -1});
    return BraidWord(strands, std::move(gens));
  }

  std::string mor_to_string(const Mor& f) const {
    return print_word(f.src) + " -> " + print_word(f.tgt) + " [" + print_braid(f.braid) + "]";
  }

private:
  Mor coherence(const Word& from, const Word& to) const {
    if (flatten(from) != flatten(to))
      throw std::invalid_argument("free coherence: leaf sequences differ");
    return Mor{from, to, BraidWord(static_cast<int>(from.leaf_count()))};
  }

  static Word random_shape(const std::vector<Label>& leaves, std::size_t lo, std::size_t hi,
                           Rng& rng) {
    if (hi == lo) return Word::unit();
    if (hi - lo == 1) return Word::leaf(leaves[lo]);
    std::uniform_int_distribution<std::size_t> sd(lo + 1, hi - 1);
    std::size_t mid = sd(rng);
    return Word::tensor(random_shape(leaves, lo, mid, rng), random_shape(leaves, mid, hi, rng));
  }

  std::vector<Label> generators_;
};

// ---------------------------------------------------------------------------
// PermBMC: the degenerate symmetric instance. Morphisms are label-consistent
// permutations of the leaves; the braiding is an involution.

struct PermMor {
  Word src = Word::unit();
  Word tgt = Word::unit();
  Permutation perm;
};

class PermCat {
public:
  using Obj = Word;
  using Mor = PermMor;

  explicit PermCat(std::vector<Label> generators = {})
      : generators_(std::move(generators)) {
    if (generators_.empty()) {
      generators_ = {Label::intern("a"), Label::intern("b"), Label::intern("c")};
    }
  }

  std::string name() const { return "perm"; }

  Obj unit_obj() const { return Word::unit(); }
  Obj tensor_obj(const Obj& a, const Obj& b) const { return Word::tensor(a, b); }
  bool obj_equal(const Obj& a, const Obj& b) const { return a == b; }

  Obj src(const Mor& f) const { return f.src; }
  Obj tgt(const Mor& f) const { return f.tgt; }

  Mor id(const Obj& a) const {
    return Mor{a, a, Permutation::identity(static_cast<int>(a.leaf_count()))};
  }

  Mor compose(const Mor& f, const Mor& g) const {
    if (!(f.tgt == g.src)) throw std::invalid_argument("perm compose: objects do not match");
    return Mor{f.src, g.tgt, f.perm.then(g.perm)};
  }

  Mor tensor_mor(const Mor& f, const Mor& g) const {
    int nf = f.perm.size(), ng = g.perm.size();
    std::vector<int> img(nf + ng);
    for (int i = 1; i <= nf; ++i) img[i - 1] = f.perm.apply(i);
    for (int j = 1; j <= ng; ++j) img[nf + j - 1] = nf + g.perm.apply(j);
    return Mor{Word::tensor(f.src, g.src), Word::tensor(f.tgt, g.tgt),
               Permutation::from_images(img)};
  }

  Mor inverse(const Mor& f) const { return Mor{f.tgt, f.src, f.perm.inverse()}; }

  Mor assoc(const Obj& a, const Obj& b, const Obj& c) const {
    return coherence(Word::tensor(Word::tensor(a, b), c), Word::tensor(a, Word::tensor(b, c)));
  }
  Mor assoc_inv(const Obj& a, const Obj& b, const Obj& c) const {
    return coherence(Word::tensor(a, Word::tensor(b, c)), Word::tensor(Word::tensor(a, b), c));
  }
  Mor lunit(const Obj& a) const { return coherence(Word::tensor(Word::unit(), a), a); }
  Mor lunit_inv(const Obj& a) const { return coherence(a, Word::tensor(Word::unit(), a)); }
  Mor runit(const Obj& a) const { return coherence(Word::tensor(a, Word::unit()), a); }
  Mor runit_inv(const Obj& a) const { return coherence(a, Word::tensor(a, Word::unit())); }

  Mor braiding(const Obj& a, const Obj& b) const {
    auto na = static_cast<int>(a.leaf_count());
    auto nb = static_cast<int>(b.leaf_count());
    return Mor{Word::tensor(a, b), Word::tensor(b, a),
               underlying_permutation(block_braiding(na, nb))};
  }
  Mor braiding_inv(const Obj& a, const Obj& b) const { return inverse(braiding(a, b)); }

  bool mor_equal(const Mor& f, const Mor& g) const {
    return f.src == g.src && f.tgt == g.tgt && f.perm == g.perm;
  }

  Obj random_object(Rng& rng, int max_leaves = 3) const {
    std::uniform_int_distribution<int> nd(0, max_leaves);
    std::uniform_int_distribution<std::size_t> gd(0, generators_.size() - 1);
    int n = nd(rng);
    std::vector<Label> leaves;
    for (int i = 0; i < n; ++i) leaves.push_back(generators_[gd(rng)]);
    return right_nest(leaves);
  }

  Mor random_morphism(Rng& rng) const {
    Obj a = random_object(rng);
    int n = static_cast<int>(a.leaf_count());
    Permutation p = underlying_permutation(FreeCat::random_braid(rng, n, 4));
    std::vector<Label> ls = flatten(a);
    std::vector<Label> permuted(ls.size(), Label::intern(""));
    for (int i = 1; i <= n; ++i) permuted[p.apply(i) - 1] = ls[i - 1];
    return Mor{a, right_nest(permuted), std::move(p)};
  }

  std::string mor_to_string(const Mor& f) const {
    std::ostringstream os;
    os << print_word(f.src) << " -> " << print_word(f.tgt) << " perm(";
    for (int i = 1; i <= f.perm.size(); ++i) os << (i > 1 ? " " : "") << f.perm.apply(i);
    os << ")";
    return os.str();
  }

private:
  Mor coherence(const Word& from, const Word& to) const {
    if (flatten(from) != flatten(to))
      throw std::invalid_argument("perm coherence: leaf sequences differ");
    return Mor{from, to, Permutation::identity(static_cast<int>(from.leaf_count()))};
  }

  std::vector<Label> generators_;
};

// ---------------------------------------------------------------------------
// BicharBMC: labels are residues mod n; a morphism carries a permutation and
// an integer phase exponent mod n. The braiding of degrees a, b contributes
// phase a*b, so it differs from its own inverse and pins the global mirror
// convention.

struct BicharMor {
  Word src = Word::unit();
  Word tgt = Word::unit();
  Permutation perm;
  int phase = 0;  // exponent mod modulus
};

class BicharCat {
public:
  using Obj = Word;
  using Mor = BicharMor;

  explicit BicharCat(int modulus) : modulus_(modulus) {
    if (modulus < 2) throw std::invalid_argument("bichar modulus must be >= 2");
  }

  std::string name() const { return "bichar:" + std::to_string(modulus_); }
  int modulus() const { return modulus_; }

  Obj make_label(int residue) const {
    int r = ((residue % modulus_) + modulus_) % modulus_;
    return Word::leaf(Label::intern(std::to_string(r)));
  }

  int degree(const Obj& w) const {
    int d = 0;
    for (Label l : flatten(w)) d = (d + residue(l)) % modulus_;
    return d;
  }

  Obj unit_obj() const { return Word::unit(); }
  Obj tensor_obj(const Obj& a, const Obj& b) const { return Word::tensor(a, b); }
  bool obj_equal(const Obj& a, const Obj& b) const { return a == b; }

  Obj src(const Mor& f) const { return f.src; }
  Obj tgt(const Mor& f) const { return f.tgt; }

  Mor id(const Obj& a) const {
    return Mor{a, a, Permutation::identity(static_cast<int>(a.leaf_count())), 0};
  }

  Mor compose(const Mor& f, const Mor& g) const {
    if (!(f.tgt == g.src)) throw std::invalid_argument("bichar compose: objects do not match");
    return Mor{f.src, g.tgt, f.perm.then(g.perm), (f.phase + g.phase) % modulus_};
  }

  Mor tensor_mor(const Mor& f, const Mor& g) const {
    int nf = f.perm.size(), ng = g.perm.size();
    std::vector<int> img(nf + ng);
    for (int i = 1; i <= nf; ++i) img[i - 1] = f.perm.apply(i);
    for (int j = 1; j <= ng; ++j) img[nf + j - 1] = nf + g.perm.apply(j);
    return Mor{Word::tensor(f.src, g.src), Word::tensor(f.tgt, g.tgt),
               Permutation::from_images(img), (f.phase + g.phase) % modulus_};
  }

  Mor inverse(const Mor& f) const {
    return Mor{f.tgt, f.src, f.perm.inverse(), (modulus_ - f.phase) % modulus_};
  }

  Mor assoc(const Obj& a, const Obj& b, const Obj& c) const {
    return coherence(Word::tensor(Word::tensor(a, b), c), Word::tensor(a, Word::tensor(b, c)));
  }
  Mor assoc_inv(const Obj& a, const Obj& b, const Obj& c) const {
    return coherence(Word::tensor(a, Word::tensor(b, c)), Word::tensor(Word::tensor(a, b), c));
  }
  Mor lunit(const Obj& a) const { return coherence(Word::tensor(Word::unit(), a), a); }
  Mor lunit_inv(const Obj& a) const { return coherence(a, Word::tensor(Word::unit(), a)); }
  Mor runit(const Obj& a) const { return coherence(Word::tensor(a, Word::unit()), a); }
  Mor runit_inv(const Obj& a) const { return coherence(a, Word::tensor(a, Word::unit())); }

  Mor braiding(const Obj& a, const Obj& b) const {
    auto na = static_cast<int>(a.leaf_count());
    auto nb = static_cast<int>(b.leaf_count());
    return Mor{Word::tensor(a, b), Word::tensor(b, a),
               underlying_permutation(block_braiding(na, nb)),
               (degree(a) * degree(b)) % modulus_};
  }
  Mor braiding_inv(const Obj& a, const Obj& b) const { return inverse(braiding(a, b)); }

  bool mor_equal(const Mor& f, const Mor& g) const {
    return f.src == g.src && f.tgt == g.tgt && f.perm == g.perm && f.phase == g.phase;
  }

  Obj random_object(Rng& rng, int max_leaves = 3) const {
    std::uniform_int_distribution<int> nd(0, max_leaves);
    std::uniform_int_distribution<int> rd(0, modulus_ - 1);
    int n = nd(rng);
    std::vector<Label> leaves;
    for (int i = 0; i < n; ++i) leaves.push_back(Label::intern(std::to_string(rd(rng))));
    return right_nest(leaves);
  }

  Mor random_morphism(Rng& rng) const {
    Obj a = random_object(rng);
    int n = static_cast<int>(a.leaf_count());
    Permutation p = underlying_permutation(FreeCat::random_braid(rng, n, 4));
    std::uniform_int_distribution<int> pd(0, modulus_ - 1);
    std::vector<Label> ls = flatten(a);
    std::vector<Label> permuted(ls.size(), Label::intern(""));
    for (int i = 1; i <= n; ++i) permuted[p.apply(i) - 1] = ls[i - 1];
    return Mor{a, right_nest(permuted), std::move(p), pd(rng)};
  }

  std::string mor_to_string(const Mor& f) const {
    std::ostringstream os;
    os << print_word(f.src) << " -> " << print_word(f.tgt) << " perm(";
    for (int i = 1; i <= f.perm.size(); ++i) os << (i > 1 ? " " : "") << f.perm.apply(i);
    os << ") phase " << (f.phase <= modulus_ / 2 ? "+" : "") << phase_signed(f.phase);
    return os.str();
  }

  // Phase reported in the symmetric range, e.g. +1 vs -1 for sigma vs its
  // inverse when modulus is 4.
  int phase_signed(int phase) const {
    int p = ((phase % modulus_) + modulus_) % modulus_;
    return p <= modulus_ / 2 ? p : p - modulus_;
  }

private:
  int residue(Label l) const {
    const std::string& s = l.name();
    try {
      return std::stoi(s) % modulus_;
    } catch (...) {
      throw std::invalid_argument("bichar label '" + s + "' is not a residue");
    }
  }

  Mor coherence(const Word& from, const Word& to) const {
    if (flatten(from) != flatten(to))
      throw std::invalid_argument("bichar coherence: leaf sequences differ");
    return Mor{from, to, Permutation::identity(static_cast<int>(from.leaf_count())), 0};
  }

  int modulus_;
};

}  // namespace braidcat

#endif
