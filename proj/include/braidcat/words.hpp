#ifndef BRAIDCAT_WORDS_HPP
#define BRAIDCAT_WORDS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace braidcat {

// An interned atom. Equality and ordering are by intern id; the id -> name
// table is process-global and append-only.
class Label {
public:
  static Label intern(const std::string& name);

  const std::string& name() const;
  std::uint32_t id() const { return id_; }

  friend bool operator==(Label a, Label b) { return a.id_ == b.id_; }
  friend bool operator!=(Label a, Label b) { return a.id_ != b.id_; }
  friend bool operator<(Label a, Label b) { return a.id_ < b.id_; }

private:
  explicit Label(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
};

// A parenthesised tensor word: unit leaf, label leaf, or a binary tensor
// node. Immutable; copies share structure.
class Word {
public:
  enum class Kind { Unit, Leaf, Tensor };

  static Word unit();
  static Word leaf(Label l);
  static Word tensor(const Word& left, const Word& right);

  Kind kind() const;
  bool is_unit() const { return kind() == Kind::Unit; }
  bool is_leaf() const { return kind() == Kind::Leaf; }
  bool is_tensor() const { return kind() == Kind::Tensor; }

  Label label() const;  // Leaf only
  Word left() const;    // Tensor only
  Word right() const;   // Tensor only

  std::size_t hash() const;
  // Number of label leaves (units excluded).
  std::size_t leaf_count() const;

  friend bool operator==(const Word& a, const Word& b);
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  // Total order (structural); used for deterministic output only.
  friend bool operator<(const Word& a, const Word& b);

private:
  struct Node;
  explicit Word(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// In-order sequence of label leaves, unit leaves dropped.
std::vector<Label> flatten(const Word& w);

// Right-nested canonical parenthesisation: [] -> unit, [a] -> a,
// [a,b,..] -> a (x) (rest right-nested).
Word right_nest(const std::vector<Label>& labels);

// Right-nested word over a sequence of subwords (each subword kept intact
// as a subtree). Empty -> unit, singleton -> the word itself.
Word right_nest_words(const std::vector<Word>& parts);

// Text grammar: `I` for unit, identifiers for labels, `(w * w)` for tensor.
std::string print_word(const Word& w);
Word parse_word(const std::string& text);  // throws std::invalid_argument

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

}  // namespace braidcat

#endif
