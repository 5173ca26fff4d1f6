#include "braidcat/words.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace braidcat {

namespace {

struct Interner {
  std::mutex mu;
  std::vector<std::string> names;
  std::unordered_map<std::string, std::uint32_t> ids;
};

Interner& interner() {
  static Interner* t = new Interner;
  return *t;
}

}  // namespace

Label Label::intern(const std::string& name) {
  Interner& t = interner();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.ids.find(name);
  if (it != t.ids.end()) return Label(it->second);
  auto id = static_cast<std::uint32_t>(t.names.size());
  t.names.push_back(name);
  t.ids.emplace(name, id);
  return Label(id);
}

const std::string& Label::name() const {
  Interner& t = interner();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.names[id_];
}

struct Word::Node {
  Kind kind;
  Label lab;  // Leaf only
  std::shared_ptr<const Node> left, right;
  std::size_t hash;
  std::size_t leaves;
};

namespace {

std::size_t mix(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

}  // namespace

Word Word::unit() {
  static auto n = std::make_shared<const Node>(
      Node{Kind::Unit, Label::intern(""), nullptr, nullptr, 0x51dEULL, 0});
  return Word(n);
}

Word Word::leaf(Label l) {
  auto n = std::make_shared<const Node>(
      Node{Kind::Leaf, l, nullptr, nullptr, mix(0x1ea1ULL, l.id() + 1), 1});
  return Word(std::move(n));
}

Word Word::tensor(const Word& left, const Word& right) {
  auto n = std::make_shared<const Node>(
      Node{Kind::Tensor, Label::intern(""), left.node_, right.node_,
           mix(mix(0x7e50ULL, left.hash()), right.hash()),
           left.leaf_count() + right.leaf_count()});
  return Word(std::move(n));
}

Word::Kind Word::kind() const { return node_->kind; }

Label Word::label() const {
  if (node_->kind != Kind::Leaf) throw std::logic_error("label() on non-leaf word");
  return node_->lab;
}

Word Word::left() const {
  if (node_->kind != Kind::Tensor) throw std::logic_error("left() on non-tensor word");
  return Word(node_->left);
}

Word Word::right() const {
  if (node_->kind != Kind::Tensor) throw std::logic_error("right() on non-tensor word");
  return Word(node_->right);
}

std::size_t Word::hash() const { return node_->hash; }
std::size_t Word::leaf_count() const { return node_->leaves; }

bool operator==(const Word& a, const Word& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  if (a.node_->hash != b.node_->hash) return false;
  switch (a.node_->kind) {
    case Word::Kind::Unit: return true;
    case Word::Kind::Leaf: return a.node_->lab == b.node_->lab;
    case Word::Kind::Tensor:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

bool operator<(const Word& a, const Word& b) {
  if (a.node_ == b.node_) return false;
  if (a.node_->kind != b.node_->kind) return static_cast<int>(a.node_->kind) < static_cast<int>(b.node_->kind);
  switch (a.node_->kind) {
    case Word::Kind::Unit: return false;
    case Word::Kind::Leaf: return a.node_->lab < b.node_->lab;
    case Word::Kind::Tensor:
      if (a.left() < b.left()) return true;
      if (b.left() < a.left()) return false;
      return a.right() < b.right();
  }
  return false;
}

namespace {

void flatten_into(const Word& w, std::vector<Label>& out) {
  switch (w.kind()) {
    case Word::Kind::Unit: return;
    case Word::Kind::Leaf: out.push_back(w.label()); return;
    case Word::Kind::Tensor:
      flatten_into(w.left(), out);
      flatten_into(w.right(), out);
      return;
  }
}

}  // namespace

std::vector<Label> flatten(const Word& w) {
  std::vector<Label> out;
  out.reserve(w.leaf_count());
  flatten_into(w, out);
  return out;
}

Word right_nest(const std::vector<Label>& labels) {
  if (labels.empty()) return Word::unit();
  Word w = Word::leaf(labels.back());
  for (std::size_t i = labels.size() - 1; i-- > 0;)
    w = Word::tensor(Word::leaf(labels[i]), w);
  return w;
}

Word right_nest_words(const std::vector<Word>& parts) {
  if (parts.empty()) return Word::unit();
  Word w = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;)
    w = Word::tensor(parts[i], w);
  return w;
}

std::string print_word(const Word& w) {
  switch (w.kind()) {
    case Word::Kind::Unit: return "I";
    case Word::Kind::Leaf: return w.label().name();
    case Word::Kind::Tensor:
      return "(" + print_word(w.left()) + " * " + print_word(w.right()) + ")";
  }
  return "";
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("word parse error at offset " + std::to_string(pos) + ": " + msg);
  }

  Word parse() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      pos++;
      Word l = parse();
      skip_ws();
      if (pos >= s.size() || s[pos] != '*') fail("expected '*'");
      pos++;
      Word r = parse();
      skip_ws();
      if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
      pos++;
      return Word::tensor(l, r);
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        pos++;
      std::string tok = s.substr(start, pos - start);
      if (tok == "I") return Word::unit();
      return Word::leaf(Label::intern(tok));
    }
    fail("unexpected character");
  }
};

}  // namespace

Word parse_word(const std::string& text) {
  Parser p{text};
  Word w = p.parse();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return w;
}

}  // namespace braidcat
