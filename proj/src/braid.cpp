#include "braidcat/braid.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>

namespace braidcat {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img_.resize(n);
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::from_images(const std::vector<int>& images_1based) {
  Permutation p;
  p.img_.reserve(images_1based.size());
  std::vector<bool> seen(images_1based.size(), false);
  for (int v : images_1based) {
    if (v < 1 || v > static_cast<int>(images_1based.size()) || seen[v - 1])
      throw std::invalid_argument("images do not form a bijection");
    seen[v - 1] = true;
    p.img_.push_back(v - 1);
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& q) const {
  if (size() != q.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = q.img_[img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<int>(i);
  return r;
}

struct BraidWord::NfBox {
  std::once_flag once;
  GarsideNF nf;
};

BraidWord::BraidWord(int strands, std::vector<BraidGen> gens)
    : strands_(check_strands(strands)) {
  for (const BraidGen& g : gens) {
    if (g.index < 1 || g.index >= strands_)
      throw std::invalid_argument("generator index out of strand bounds");
    if (g.sign != 1 && g.sign != -1)
      throw std::invalid_argument("generator sign must be +1 or -1");
    if (!gens_.empty() && gens_.back().index == g.index &&
        gens_.back().sign == -g.sign) {
      gens_.pop_back();  // eager free reduction
    } else {
      gens_.push_back(g);
    }
  }
}

const GarsideNF& BraidWord::normal_form() const {
  if (!nf_) nf_ = std::make_shared<NfBox>();
  std::call_once(nf_->once, [this] { nf_->nf = garside_nf(*this); });
  return nf_->nf;
}

BraidWord free_reduce(const BraidWord& w) {
  return BraidWord(w.strands(), w.gens());  // constructor reduces
}

BraidWord compose(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("compose: strand-count mismatch");
  std::vector<BraidGen> gens = u.gens();
  gens.insert(gens.end(), v.gens().begin(), v.gens().end());
  return BraidWord(u.strands(), std::move(gens));
}

BraidWord invert(const BraidWord& w) {
  std::vector<BraidGen> gens;
  gens.reserve(w.gens().size());
  for (auto it = w.gens().rbegin(); it != w.gens().rend(); ++it)
    gens.push_back(BraidGen{it->index, -it->sign});
  return BraidWord(w.strands(), std::move(gens));
}

BraidWord shift(const BraidWord& w, int offset, int new_n) {
  if (offset < 0) throw std::invalid_argument("shift: negative offset");
  if (new_n < w.strands() + offset)
    throw std::invalid_argument("shift: new strand count too small");
  std::vector<BraidGen> gens;
  gens.reserve(w.gens().size());
  for (const BraidGen& g : w.gens()) gens.push_back(BraidGen{g.index + offset, g.sign});
  return BraidWord(new_n, std::move(gens));
}

// Occupancy convention: image[i] is the source position of the strand that
// ends at position i, so target label sequences read as source labels
// permuted by the result.
Permutation underlying_permutation(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands());
  for (auto it = w.gens().rbegin(); it != w.gens().rend(); ++it)
    p = p.then(Permutation::transposition(w.strands(), it->index));
  return p;
}

Permutation half_twist(int n) {
  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = n + 1 - i;
  return Permutation::from_images(img);
}

BraidWord permutation_braid_word(const Permutation& p) {
  // Bubble-sort the image sequence; every emitted swap is an inversion, so
  // the word is reduced and the crossings are exactly the inversion pairs.
  int n = p.size();
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = p.apply(i);
  std::vector<BraidGen> gens;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        gens.push_back(BraidGen{i + 1, +1});
        moved = true;
      }
    }
  }
  return BraidWord(n, std::move(gens));
}

BraidWord block_braiding(int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("block_braiding: negative block size");
  int n = m + k;
  if (m == 0 || k == 0) return BraidWord(n);
  std::vector<int> img(n);
  for (int i = 1; i <= m; ++i) img[i - 1] = k + i;
  for (int j = 1; j <= k; ++j) img[m + j - 1] = j;
  return permutation_braid_word(Permutation::from_images(img));
}

namespace {

// Starting set of a permutation braid: descents of the permutation.
std::vector<bool> starting_set(const Permutation& p) {
  std::vector<bool> s(p.size() + 1, false);
  for (int i = 1; i < p.size(); ++i) s[i] = p.apply(i) > p.apply(i + 1);
  return s;
}

// Finishing set: descents of the inverse.
std::vector<bool> finishing_set(const Permutation& p) {
  return starting_set(p.inverse());
}

// Make the adjacent pair (a, b) left-weighted by moving crossings from the
// front of b to the back of a. Returns true if anything changed.
bool left_weight_pair(Permutation& a, Permutation& b) {
  bool changed = false;
  int n = a.size();
  for (;;) {
    std::vector<bool> fa = finishing_set(a);
    std::vector<bool> sb = starting_set(b);
    int i = 0;
    for (int j = 1; j < n; ++j) {
      if (sb[j] && !fa[j]) {
        i = j;
        break;
      }
    }
    if (i == 0) return changed;
    Permutation t = Permutation::transposition(n, i);
    a = a.then(t);
    b = t.then(b);
    changed = true;
  }
}

}  // namespace

GarsideNF garside_nf(const BraidWord& w) {
  const int n = w.strands();
  GarsideNF nf;
  nf.strands = n;
  if (n <= 1 || w.gens().empty()) return nf;

  const Permutation omega = half_twist(n);
  int k = 0;
  std::vector<Permutation> factors;

  // Convert to Delta^k * (positive permutation-braid letters). A negative
  // generator s_i^-1 equals Delta^-1 * P with P = the permutation braid of
  // omega followed by the transposition; pushing Delta^-1 to the front
  // conjugates everything before it by the half twist.
  for (const BraidGen& g : w.gens()) {
    Permutation t = Permutation::transposition(n, g.index);
    if (g.sign > 0) {
      factors.push_back(t);
    } else {
      k -= 1;
      for (Permutation& f : factors) f = omega.then(f).then(omega);
      factors.push_back(omega.then(t));
    }
  }

  // Left-weight sweeps until stable, absorbing trivial factors and full
  // twists as they appear.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
      if (left_weight_pair(factors[i], factors[i + 1])) changed = true;

    std::vector<Permutation> next;
    next.reserve(factors.size());
    for (const Permutation& f : factors) {
      if (f.is_identity()) {
        changed = true;
        continue;
      }
      if (f == omega) {
        k += 1;
        for (Permutation& g : next) g = omega.then(g).then(omega);
        changed = true;
        continue;
      }
      next.push_back(f);
    }
    factors = std::move(next);
  }

  nf.delta_power = k;
  nf.factors = std::move(factors);
  return nf;
}

bool braid_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("braid_equal: strand-count mismatch");
  return u.normal_form() == v.normal_form();
}

BraidWord word_of_nf(const GarsideNF& nf) {
  const int n = nf.strands;
  BraidWord delta = n >= 2 ? permutation_braid_word(half_twist(n)) : BraidWord(n);
  BraidWord w(n);
  int k = nf.delta_power;
  for (; k > 0; --k) w = compose(w, delta);
  for (; k < 0; ++k) w = compose(w, invert(delta));
  for (const Permutation& f : nf.factors) w = compose(w, permutation_braid_word(f));
  return w;
}

std::string print_braid(const BraidWord& w) {
  std::ostringstream os;
  os << "n=" << w.strands();
  for (const BraidGen& g : w.gens()) {
    os << " s" << g.index;
    if (g.sign < 0) os << "^-1";
  }
  return os.str();
}

BraidWord parse_braid(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  if (!(is >> tok) || tok.rfind("n=", 0) != 0)
    throw std::invalid_argument("braid parse error: expected leading n=<strands>");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(tok.substr(2), &used);
    if (used != tok.size() - 2) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("braid parse error: bad strand count in '" + tok + "'");
  }
  if (n < 0) throw std::invalid_argument("braid parse error: negative strand count");
  std::vector<BraidGen> gens;
  while (is >> tok) {
    if (tok.empty() || tok[0] != 's')
      throw std::invalid_argument("braid parse error: bad token '" + tok + "'");
    int sign = +1;
    std::string num = tok.substr(1);
    auto caret = num.find('^');
    if (caret != std::string::npos) {
      if (num.substr(caret) != "^-1")
        throw std::invalid_argument("braid parse error: bad exponent in '" + tok + "'");
      sign = -1;
      num = num.substr(0, caret);
    }
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(num, &used);
      if (used != num.size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("braid parse error: bad generator index in '" + tok + "'");
    }
    if (idx < 1 || idx >= n)
      throw std::invalid_argument("braid parse error: generator s" + std::to_string(idx) +
                                  " out of range for n=" + std::to_string(n));
    gens.push_back(BraidGen{idx, sign});
  }
  return BraidWord(n, std::move(gens));
}

}  // namespace braidcat
