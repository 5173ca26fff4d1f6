#ifndef BRAIDCAT_TESTS_ARTIN_ORACLE_HPP
#define BRAIDCAT_TESTS_ARTIN_ORACLE_HPP

// Brute-force braid equality oracle, independent of the Garside path: breadth
// first search over words connected by free cancellation / insertion, far
// commutation and the braid relation, bounded by a maximum word length.
// Intended for small strand counts (n <= 4) and short words.

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <vector>

#include "braidcat/braid.hpp"

namespace artin_oracle {

// Symbols 1..2*(n-1): generator i positive -> 2i-1, negative -> 2i.
// A word is packed into a u64: 4-bit length, then 4 bits per symbol.
using State = std::uint64_t;

inline State pack(const std::vector<int>& syms) {
  State s = static_cast<State>(syms.size());
  for (std::size_t k = 0; k < syms.size(); ++k)
    s |= static_cast<State>(syms[k]) << (4 + 4 * k);
  return s;
}

inline std::vector<int> unpack(State s) {
  std::size_t len = s & 0xF;
  std::vector<int> syms(len);
  for (std::size_t k = 0; k < len; ++k) syms[k] = (s >> (4 + 4 * k)) & 0xF;
  return syms;
}

inline int sym_index(int sym) { return (sym + 1) / 2; }
inline bool sym_positive(int sym) { return sym % 2 == 1; }
inline int sym_inverse(int sym) { return sym_positive(sym) ? sym + 1 : sym - 1; }

inline State pack_braid(const braidcat::BraidWord& w) {
  std::vector<int> syms;
  syms.reserve(w.gens().size());
  for (const braidcat::BraidGen& g : w.gens())
    syms.push_back(2 * g.index - (g.sign > 0 ? 1 : 0));
  return pack(syms);
}

class Oracle {
public:
  Oracle(int strands, std::size_t max_len, std::size_t state_budget = 40'000'000)
      : strands_(strands), max_len_(max_len), budget_(state_budget) {}

  bool equal(const braidcat::BraidWord& u, const braidcat::BraidWord& v) {
    State a = pack_braid(free_reduce(u));
    State b = pack_braid(free_reduce(v));
    if (a == b) return true;
    int ca = component(a);
    return ca == component_if_known(b);
  }

  std::size_t states_explored() const { return comp_.size(); }

private:
  int component(State s) {
    auto it = comp_.find(s);
    if (it != comp_.end()) return it->second;
    int id = next_id_++;
    std::deque<State> queue{s};
    comp_[s] = id;
    while (!queue.empty()) {
      State cur = queue.front();
      queue.pop_front();
      neighbors(cur, scratch_);
      for (State nb : scratch_) {
        auto [pos, inserted] = comp_.emplace(nb, id);
        if (inserted) {
          if (comp_.size() > budget_)
            throw std::runtime_error("artin oracle: state budget exceeded");
          queue.push_back(nb);
        }
      }
    }
    return id;
  }

  int component_if_known(State s) {
    auto it = comp_.find(s);
    return it == comp_.end() ? -1 : it->second;
  }

  void neighbors(State s, std::vector<State>& out) const {
    out.clear();
    std::vector<int> w = unpack(s);
    const std::size_t len = w.size();
    const int nsyms = 2 * (strands_ - 1);

    // free cancellation
    for (std::size_t i = 0; i + 1 < len; ++i) {
      if (w[i + 1] == sym_inverse(w[i])) {
        std::vector<int> nw;
        nw.reserve(len - 2);
        nw.insert(nw.end(), w.begin(), w.begin() + i);
        nw.insert(nw.end(), w.begin() + i + 2, w.end());
        out.push_back(pack(nw));
      }
    }
    // free insertion
    if (len + 2 <= max_len_) {
      for (std::size_t i = 0; i <= len; ++i) {
        for (int g = 1; g <= nsyms; ++g) {
          std::vector<int> nw;
          nw.reserve(len + 2);
          nw.insert(nw.end(), w.begin(), w.begin() + i);
          nw.push_back(g);
          nw.push_back(sym_inverse(g));
          nw.insert(nw.end(), w.begin() + i, w.end());
          out.push_back(pack(nw));
        }
      }
    }
    // far commutation, any signs
    for (std::size_t i = 0; i + 1 < len; ++i) {
      if (std::abs(sym_index(w[i]) - sym_index(w[i + 1])) >= 2) {
        std::vector<int> nw = w;
        std::swap(nw[i], nw[i + 1]);
        out.push_back(pack(nw));
      }
    }
    // braid relation on uniformly signed triples
    for (std::size_t i = 0; i + 2 < len; ++i) {
      int a = w[i], b = w[i + 1], c = w[i + 2];
      if (a == c && sym_positive(a) == sym_positive(b) &&
          std::abs(sym_index(a) - sym_index(b)) == 1) {
        std::vector<int> nw = w;
        nw[i] = b;
        nw[i + 1] = a;
        nw[i + 2] = b;
        out.push_back(pack(nw));
      }
    }
  }

  int strands_;
  std::size_t max_len_;
  std::size_t budget_;
  int next_id_ = 0;
  std::unordered_map<State, int> comp_;
  mutable std::vector<State> scratch_;
};

}  // namespace artin_oracle

#endif
