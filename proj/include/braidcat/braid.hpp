#ifndef BRAIDCAT_BRAID_HPP
#define BRAIDCAT_BRAID_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidcat {

// One Artin generator: crossing of strands index, index+1 (1-based, strand 1
// is the topmost). Positive sign means the lower strand passes in front.
struct BraidGen {
  int index;  // 1 <= index <= strands-1
  int sign;   // +1 or -1

  friend bool operator==(const BraidGen& a, const BraidGen& b) {
    return a.index == b.index && a.sign == b.sign;
  }
};

// A bijection on {1..n}, stored as images (1-based in the API, 0-based
// internally). Products compose left-to-right: (p * q)(i) = q(p(i)).
class Permutation {
public:
  Permutation() = default;
  static Permutation identity(int n);
  static Permutation transposition(int n, int i);  // swaps i, i+1
  static Permutation from_images(const std::vector<int>& images_1based);

  int size() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[i - 1] + 1; }
  bool is_identity() const;

  Permutation then(const Permutation& q) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

private:
  std::vector<int> img_;  // 0-based images
};

// Left-greedy normal form Delta^k s_1 ... s_l, each s_i a permutation braid,
// adjacent pairs left-weighted, no factor trivial or equal to Delta. Equal
// braids have identical normal forms.
struct GarsideNF {
  int strands = 0;
  int delta_power = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const GarsideNF& a, const GarsideNF& b) {
    return a.strands == b.strands && a.delta_power == b.delta_power &&
           a.factors == b.factors;
  }
  friend bool operator!=(const GarsideNF& a, const GarsideNF& b) { return !(a == b); }
};

// A word in Artin generators on a fixed number of strands. Kept freely
// reduced. The normal form is computed lazily and shared across copies.
class BraidWord {
public:
  BraidWord() : strands_(0) {}
  explicit BraidWord(int strands) : strands_(check_strands(strands)) {}
  BraidWord(int strands, std::vector<BraidGen> gens);

  int strands() const { return strands_; }
  const std::vector<BraidGen>& gens() const { return gens_; }
  bool empty() const { return gens_.empty(); }

  const GarsideNF& normal_form() const;

private:
  static int check_strands(int n) {
    if (n < 0) throw std::invalid_argument("negative strand count");
    return n;
  }
  int strands_;
  std::vector<BraidGen> gens_;
  struct NfBox;
  mutable std::shared_ptr<NfBox> nf_;
};

// Adjacent inverse pairs removed until none remain.
BraidWord free_reduce(const BraidWord& w);

// Concatenation u then v; throws on strand-count mismatch.
BraidWord compose(const BraidWord& u, const BraidWord& v);

// Reversed word with flipped signs.
BraidWord invert(const BraidWord& w);

// Reindex generators by +offset on new_n strands.
BraidWord shift(const BraidWord& w, int offset, int new_n);

// Positive braid on m+k strands moving the top block of m strands past the
// bottom block of k strands (block braiding orientation of the ambient
// category: the rising block passes in front).
BraidWord block_braiding(int m, int k);

Permutation underlying_permutation(const BraidWord& w);

GarsideNF garside_nf(const BraidWord& w);

bool braid_equal(const BraidWord& u, const BraidWord& v);

// Canonical positive word for a permutation braid: the strands cross exactly
// at the inversions of the permutation, all crossings positive.
BraidWord permutation_braid_word(const Permutation& p);

// Rebuild a plain word Delta^k s_1..s_l from a normal form.
BraidWord word_of_nf(const GarsideNF& nf);

// The half twist permutation i -> n+1-i.
Permutation half_twist(int n);

// Text grammar: header `n=<strands>` then whitespace-separated `s<i>` /
// `s<i>^-1` tokens, e.g. "n=3 s1 s2 s1^-1".
std::string print_braid(const BraidWord& w);
BraidWord parse_braid(const std::string& text);  // throws std::invalid_argument

// A braid with labels threaded along strands, top-to-bottom at each end.
// target_labels is source_labels permuted by the underlying permutation.
template <typename L>
struct LabelledBraid {
  BraidWord braid;
  std::vector<L> source_labels;
  std::vector<L> target_labels;

  static LabelledBraid identity(std::vector<L> labels) {
    LabelledBraid out;
    out.braid = BraidWord(static_cast<int>(labels.size()));
    out.source_labels = labels;
    out.target_labels = std::move(labels);
    return out;
  }

  void check() const {
    auto n = static_cast<std::size_t>(braid.strands());
    if (source_labels.size() != n || target_labels.size() != n)
      throw std::invalid_argument("labelled braid: label count != strand count");
    Permutation p = underlying_permutation(braid);
    for (int i = 1; i <= braid.strands(); ++i)
      if (!(target_labels[i - 1] == source_labels[p.apply(i) - 1]))
        throw std::invalid_argument("labelled braid: labels inconsistent with permutation");
  }
};

template <typename L>
LabelledBraid<L> compose_labelled(const LabelledBraid<L>& a, const LabelledBraid<L>& b) {
  if (a.target_labels != b.source_labels)
    throw std::invalid_argument("compose_labelled: label mismatch");
  LabelledBraid<L> out;
  out.braid = compose(a.braid, b.braid);
  out.source_labels = a.source_labels;
  out.target_labels = b.target_labels;
  return out;
}

template <typename L>
LabelledBraid<L> invert_labelled(const LabelledBraid<L>& a) {
  LabelledBraid<L> out;
  out.braid = invert(a.braid);
  out.source_labels = a.target_labels;
  out.target_labels = a.source_labels;
  return out;
}

}  // namespace braidcat

#endif
